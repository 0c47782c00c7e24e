#include "vdual/ideal.hpp"

#include <algorithm>
#include <cstdint>

namespace vdual {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators, bool declared_radical,
             bool declared_pure_dimensional)
    : ring_(std::move(ring)), radical_(declared_radical), pure_(declared_pure_dimensional) {
    if (!ring_) fail("InvalidRing", "ideal without a ring");
    for (auto& g : generators) {
        if (g.is_zero()) continue;  // zero generators carry no information
        require_same_ring(ring_, g.ring());
        gens_.push_back(std::move(g));
    }
}

const GroebnerBasis& Ideal::groebner() const {
    if (!ring_) fail("InvalidRing", "ideal without a ring");
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->gb) {
        cache_->gb = buchberger(gens_, MonomialOrder::weighted_grevlex());
        if (!cache_->gb->ring) cache_->gb->ring = ring_;
    }
    return *cache_->gb;
}

GroebnerBasis Ideal::groebner(const MonomialOrder& ord) const {
    auto gb = buchberger(gens_, ord);
    if (!gb.ring) gb.ring = ring_;
    return gb;
}

bool membership(const Polynomial& g, const Ideal& I) {
    if (g.is_zero()) return true;
    require_same_ring(g.ring(), I.ring());
    return normal_form(g, I.groebner()).is_zero();
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    std::vector<Polynomial> gens;
    for (const auto& a : I.generators())
        for (const auto& b : J.generators()) gens.push_back(a * b);
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, int k) {
    if (k < 0) fail("OutOfRange", "negative ideal power");
    if (k == 0) return Ideal(I.ring(), {Polynomial::constant(I.ring(), 1)});
    // all k-fold products of generators, indices nondecreasing
    std::vector<Polynomial> gens;
    std::vector<size_t> idx(static_cast<size_t>(k), 0);
    const auto& g = I.generators();
    if (g.empty()) return Ideal(I.ring(), {});
    for (;;) {
        Polynomial prod = Polynomial::constant(I.ring(), 1);
        for (size_t i : idx) prod = prod * g[i];
        gens.push_back(std::move(prod));
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == g.size() - 1) --pos;
        if (pos < 0) break;
        size_t next = idx[static_cast<size_t>(pos)] + 1;
        for (size_t i = static_cast<size_t>(pos); i < idx.size(); ++i) idx[i] = next;
    }
    return Ideal(I.ring(), std::move(gens));
}

Ideal combine(const Ideal& I, const Ideal& J, IdealCombine op, int power_k) {
    switch (op) {
        case IdealCombine::Sum: return ideal_sum(I, J);
        case IdealCombine::Product: return ideal_product(I, J);
        case IdealCombine::Power: return ideal_power(I, power_k);
    }
    fail("Internal", "unknown ideal combination");
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra_vars,
                    long weight) {
    auto vars = ring->variables();
    auto weights = ring->weights();
    for (const auto& v : extra_vars) {
        vars.push_back(v);
        weights.push_back(weight);
    }
    return RingSpec::make(std::move(vars), std::move(weights));
}

Polynomial transport_to_ring(const RingPtr& target, const Polynomial& p) {
    if (p.is_zero()) return Polynomial(target);
    const RingSpec& src = *p.ring();
    std::vector<int> map(static_cast<size_t>(src.n()), -1);
    for (int i = 0; i < src.n(); ++i) map[static_cast<size_t>(i)] = target->variable_index(src.variable(i));
    std::vector<Term> terms;
    for (const Term& t : p.terms()) {
        Monomial m = monomial_one(target->n());
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            int j = map[i];
            if (j < 0)
                fail("RingMismatch", "variable " + src.variable(static_cast<int>(i)) +
                                         " does not exist in the target ring");
            m.e[static_cast<size_t>(j)] = t.m.e[i];
        }
        terms.push_back({std::move(m), t.c});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

Ideal restrict_to_subring(const Ideal& I, const RingPtr& sub) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(transport_to_ring(sub, g));
    return Ideal(sub, std::move(gens), I.declared_radical(), I.declared_pure_dimensional());
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    if (I.is_zero() || J.is_zero()) return Ideal(I.ring(), {});
    if (I.is_unit()) return J;
    if (J.is_unit()) return I;
    // t*I + (1-t)*J, then eliminate t
    RingPtr big = extend_ring(I.ring(), {"@t"});
    int t_index = big->n() - 1;
    Polynomial t = Polynomial::variable(big, t_index);
    Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(t * transport_to_ring(big, g));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t * transport_to_ring(big, g));
    auto gb = buchberger(gens, MonomialOrder::elimination({t_index}));
    std::vector<Polynomial> kept;
    for (const auto& g : gb.generators) {
        bool uses_t = false;
        for (const Term& term : g.terms())
            if (term.m.e[static_cast<size_t>(t_index)] != 0) uses_t = true;
        if (!uses_t) kept.push_back(transport_to_ring(I.ring(), g));
    }
    return Ideal(I.ring(), std::move(kept));
}

Ideal colon(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) fail("DivisionByZero", "colon by the zero polynomial");
    require_same_ring(I.ring(), f.ring());
    if (f.is_constant()) return I;  // (I : unit) = I
    Ideal principal(I.ring(), {f});
    Ideal meet = intersect(I, principal);
    std::vector<Polynomial> gens;
    for (const auto& h : meet.generators()) {
        auto q = exact_divide(h, f);
        if (!q) fail("Internal", "generator of I ∩ (f) not divisible by f");
        gens.push_back(std::move(*q));
    }
    return Ideal(I.ring(), std::move(gens));
}

Ideal colon(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    if (J.is_zero()) fail("DivisionByZero", "colon by the zero ideal");
    bool first = true;
    Ideal acc;
    for (const auto& g : J.generators()) {
        Ideal c = colon(I, g);
        acc = first ? c : intersect(acc, c);
        first = false;
    }
    return acc;
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
    for (const auto& g : J.generators())
        if (!membership(g, I)) return false;
    return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    return ideal_contains(I, J) && ideal_contains(J, I);
}

SaturationResult saturate(const Ideal& I, const Ideal& J) {
    if (J.is_zero()) fail("DivisionByZero", "saturation by the zero ideal");
    Ideal current = I;
    for (int k = 0; k < 256; ++k) {
        Ideal next = colon(current, J);
        if (ideal_contains(current, next)) return {current, k};
        current = std::move(next);
    }
    fail("Internal", "saturation chain did not stabilize");
}

Ideal eliminate(const Ideal& I, const std::vector<int>& vars) {
    if (vars.empty()) return I;
    for (int v : vars)
        if (v < 0 || v >= I.ring()->n()) fail("OutOfRange", "eliminated variable out of range");
    auto gb = I.groebner(MonomialOrder::elimination(vars));
    std::vector<bool> elim(static_cast<size_t>(I.ring()->n()), false);
    for (int v : vars) elim[static_cast<size_t>(v)] = true;
    std::vector<Polynomial> kept;
    for (const auto& g : gb.generators) {
        bool uses = false;
        for (const Term& t : g.terms())
            for (size_t i = 0; i < t.m.e.size() && !uses; ++i)
                if (elim[i] && t.m.e[i] != 0) uses = true;
        if (!uses) kept.push_back(g);
    }
    return Ideal(I.ring(), std::move(kept));
}

bool radical_membership(const Polynomial& g, const Ideal& I) {
    if (g.is_zero()) return true;
    require_same_ring(g.ring(), I.ring());
    // Rabinowitsch: g ∈ √I iff 1 ∈ I + (1 - y g) in the extended ring
    RingPtr big = extend_ring(I.ring(), {"@y"});
    Polynomial y = Polynomial::variable(big, big->n() - 1);
    std::vector<Polynomial> gens;
    for (const auto& h : I.generators()) gens.push_back(transport_to_ring(big, h));
    gens.push_back(Polynomial::constant(big, 1) - y * transport_to_ring(big, g));
    return buchberger(gens, MonomialOrder::weighted_grevlex()).is_trivial_unit();
}

DimensionInfo dimension(const Ideal& I) {
    int n = I.ring()->n();
    if (I.is_zero()) return {n, 0};
    const auto& gb = I.groebner();
    if (gb.is_trivial_unit()) return {-1, n + 1};
    // supports of the leading monomials
    std::vector<uint64_t> masks;
    for (const auto& g : gb.generators) {
        Term lt = leading_term(g, gb.order);
        uint64_t m = 0;
        for (size_t i = 0; i < lt.m.e.size(); ++i)
            if (lt.m.e[i] > 0) m |= (uint64_t{1} << i);
        masks.push_back(m);
    }
    // maximum independent set: largest S with no leading support inside S
    int best = 0;
    auto independent = [&](uint64_t s) {
        for (uint64_t m : masks)
            if ((m & ~s) == 0) return false;
        return true;
    };
    std::vector<std::pair<int, uint64_t>> stack{{0, 0}};
    std::vector<int> sizes{0};
    while (!stack.empty()) {
        auto [v, s] = stack.back();
        int size = sizes.back();
        stack.pop_back();
        sizes.pop_back();
        best = std::max(best, size);
        if (v >= n || size + (n - v) <= best) continue;
        for (int u = v; u < n; ++u) {
            uint64_t s2 = s | (uint64_t{1} << u);
            if (independent(s2)) {
                stack.push_back({u + 1, s2});
                sizes.push_back(size + 1);
            }
        }
    }
    return {best, n - best};
}

int power_containment_index(const Ideal& J, const Ideal& I) {
    require_same_ring(J.ring(), I.ring());
    for (const auto& g : J.generators())
        if (!radical_membership(g, I))
            fail("NotNilpotentModI",
                 "generator " + to_string(g) + " is not in the radical of the target ideal");
    for (int m = 1; m <= 64; ++m) {
        Ideal Jm = ideal_power(J, m);
        if (ideal_contains(I, Jm)) return m;
    }
    fail("PowerIndexOverflow", "J^m ⊆ I does not hold for any m ≤ 64");
}

} // namespace vdual
