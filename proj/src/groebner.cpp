#include "vdual/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

namespace vdual {

ModuleElement module_zero(const RingPtr& ring, int rank) {
    ModuleElement z;
    z.coords.assign(static_cast<size_t>(rank), Polynomial(ring));
    return z;
}

ModuleOrderPtr ModuleOrder::pot(MonomialOrder base_order) {
    auto o = std::make_shared<ModuleOrder>();
    o->base = std::move(base_order);
    return o;
}

ModuleOrderPtr ModuleOrder::schreyer_over(ModuleOrderPtr previous,
                                          std::vector<std::pair<int, Monomial>> assigned,
                                          MonomialOrder base_order) {
    auto o = std::make_shared<ModuleOrder>();
    o->base = std::move(base_order);
    o->schreyer = ModuleOrder::SchreyerData{std::move(assigned), std::move(previous)};
    return o;
}

Cmp module_term_compare(int pos_a, const Monomial& ma, int pos_b, const Monomial& mb,
                        const ModuleOrder& ord, const RingSpec& ring) {
    if (ord.schreyer) {
        const auto& s = *ord.schreyer;
        const auto& [qa, Ma] = s.assigned.at(static_cast<size_t>(pos_a));
        const auto& [qb, Mb] = s.assigned.at(static_cast<size_t>(pos_b));
        Cmp c = module_term_compare(qa, monomial_mul(ma, Ma), qb, monomial_mul(mb, Mb),
                                    *s.previous, ring);
        if (c != Cmp::Equal) return c;
        if (pos_a != pos_b) return pos_a < pos_b ? Cmp::Greater : Cmp::Less;
        return Cmp::Equal;
    }
    if (pos_a != pos_b) return pos_a < pos_b ? Cmp::Greater : Cmp::Less;
    return monomial_compare(ma, mb, ord.base, ring);
}

namespace {

// ---- internal engine representation ------------------------------------

struct MTerm {
    int pos;
    Monomial m;
    mpq_class c;
};

struct MPoly {
    std::vector<MTerm> t;  // sorted strictly descending under the active order
    bool is_zero() const { return t.empty(); }
    const MTerm& lead() const { return t.front(); }
};

struct Engine {
    const RingSpec& ring;
    const ModuleOrder& ord;

    Cmp cmp(int pa, const Monomial& ma, int pb, const Monomial& mb) const {
        return module_term_compare(pa, ma, pb, mb, ord, ring);
    }
    Cmp cmp(const MTerm& a, const MTerm& b) const { return cmp(a.pos, a.m, b.pos, b.m); }

    MPoly normalize(std::vector<MTerm> terms) const {
        std::sort(terms.begin(), terms.end(),
                  [&](const MTerm& a, const MTerm& b) { return cmp(a, b) == Cmp::Greater; });
        MPoly p;
        for (auto& t : terms) {
            if (t.c == 0) continue;
            if (!p.t.empty() && p.t.back().pos == t.pos && p.t.back().m == t.m) {
                p.t.back().c += t.c;
                if (p.t.back().c == 0) p.t.pop_back();
            } else {
                p.t.push_back(std::move(t));
            }
        }
        return p;
    }

    MPoly from_element(const ModuleElement& g) const {
        std::vector<MTerm> terms;
        for (size_t i = 0; i < g.coords.size(); ++i)
            for (const Term& t : g.coords[i].terms())
                terms.push_back({static_cast<int>(i), t.m, t.c});
        return normalize(std::move(terms));
    }

    ModuleElement to_element(const MPoly& p, const RingPtr& ring_ptr, int rank) const {
        std::vector<std::vector<Term>> coords(static_cast<size_t>(rank));
        for (const MTerm& t : p.t) coords[static_cast<size_t>(t.pos)].push_back({t.m, t.c});
        ModuleElement g;
        g.coords.reserve(static_cast<size_t>(rank));
        for (auto& ts : coords) g.coords.push_back(Polynomial::from_terms(ring_ptr, std::move(ts)));
        return g;
    }

    // a - (c * x^u) * g, both inputs sorted; result sorted.
    MPoly subtract_multiple(const MPoly& a, const MPoly& g, const Monomial& u,
                            const mpq_class& c) const {
        MPoly r;
        r.t.reserve(a.t.size() + g.t.size());
        size_t i = 0, j = 0;
        while (i < a.t.size() || j < g.t.size()) {
            if (j == g.t.size()) {
                r.t.push_back(a.t[i++]);
                continue;
            }
            MTerm shifted{g.t[j].pos, monomial_mul(g.t[j].m, u), g.t[j].c * c};
            if (i == a.t.size()) {
                shifted.c = -shifted.c;
                if (shifted.c != 0) r.t.push_back(std::move(shifted));
                ++j;
                continue;
            }
            Cmp cm = cmp(a.t[i].pos, a.t[i].m, shifted.pos, shifted.m);
            if (cm == Cmp::Greater) {
                r.t.push_back(a.t[i++]);
            } else if (cm == Cmp::Less) {
                shifted.c = -shifted.c;
                r.t.push_back(std::move(shifted));
                ++j;
            } else {
                mpq_class v = a.t[i].c - shifted.c;
                if (v != 0) r.t.push_back({a.t[i].pos, a.t[i].m, std::move(v)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    void make_monic(MPoly& p) const {
        if (p.is_zero()) return;
        mpq_class lc = p.t.front().c;
        if (lc == 1) return;
        for (MTerm& t : p.t) t.c /= lc;
    }

    // Division with the first-divisor rule; quotients (per basis index) are
    // collected as raw term lists when requested.
    MPoly divide(MPoly h, const std::vector<MPoly>& basis,
                 std::vector<std::vector<Term>>* quotients) const {
        if (quotients) quotients->assign(basis.size(), {});
        std::vector<MTerm> remainder;
        while (!h.is_zero()) {
            const MTerm lead = h.lead();
            bool reduced = false;
            for (size_t k = 0; k < basis.size(); ++k) {
                const MPoly& g = basis[k];
                if (g.is_zero()) continue;
                const MTerm& gl = g.lead();
                if (gl.pos != lead.pos || !monomial_divides(gl.m, lead.m)) continue;
                Monomial u = monomial_div(lead.m, gl.m);
                mpq_class c = lead.c / gl.c;
                h = subtract_multiple(h, g, u, c);
                if (quotients) (*quotients)[k].push_back({std::move(u), std::move(c)});
                reduced = true;
                break;
            }
            if (!reduced) {
                remainder.push_back(h.t.front());
                h.t.erase(h.t.begin());
            }
        }
        MPoly r;
        r.t = std::move(remainder);  // emitted in descending order already
        return r;
    }

    // Deterministic canonical comparison of whole elements (used to sort and
    // dedup Buchberger input).
    bool element_before(const MPoly& a, const MPoly& b) const {
        size_t n = std::min(a.t.size(), b.t.size());
        for (size_t i = 0; i < n; ++i) {
            Cmp c = cmp(a.t[i], b.t[i]);
            if (c != Cmp::Equal) return c == Cmp::Less;
            int s = ::cmp(a.t[i].c, b.t[i].c);
            if (s != 0) return s < 0;
        }
        return a.t.size() < b.t.size();
    }
};

struct SPair {
    int i, j;  // i < j, same leading position
    Monomial lcm;
};

uint64_t pair_key(int i, int j) {
    return (static_cast<uint64_t>(i) << 32) | static_cast<uint64_t>(j);
}

struct BuchbergerRun {
    Engine eng;
    std::vector<MPoly> elems;
    std::vector<SPair> pending;
    std::unordered_set<uint64_t> done;
    bool rank_one = false;

    void push_pairs_for(int idx) {
        for (int k = 0; k < idx; ++k) {
            if (elems[static_cast<size_t>(k)].is_zero()) continue;
            const MTerm& a = elems[static_cast<size_t>(k)].lead();
            const MTerm& b = elems[static_cast<size_t>(idx)].lead();
            if (a.pos != b.pos) continue;
            pending.push_back({k, idx, monomial_lcm(a.m, b.m)});
        }
    }

    size_t select_pair() const {
        size_t best = 0;
        for (size_t k = 1; k < pending.size(); ++k) {
            const SPair& a = pending[k];
            const SPair& b = pending[best];
            Cmp c = eng.cmp(elems[static_cast<size_t>(a.i)].lead().pos, a.lcm,
                            elems[static_cast<size_t>(b.i)].lead().pos, b.lcm);
            if (c == Cmp::Less ||
                (c == Cmp::Equal && std::tie(a.i, a.j) < std::tie(b.i, b.j)))
                best = k;
        }
        return best;
    }

    bool chain_criterion(const SPair& p) const {
        for (int k = 0; k < static_cast<int>(elems.size()); ++k) {
            if (k == p.i || k == p.j || elems[static_cast<size_t>(k)].is_zero()) continue;
            const MTerm& lk = elems[static_cast<size_t>(k)].lead();
            if (lk.pos != elems[static_cast<size_t>(p.i)].lead().pos) continue;
            if (!monomial_divides(lk.m, p.lcm)) continue;
            int a = std::min(p.i, k), b = std::max(p.i, k);
            int c = std::min(p.j, k), d = std::max(p.j, k);
            if (done.count(pair_key(a, b)) && done.count(pair_key(c, d))) return true;
        }
        return false;
    }

    MPoly s_pair(const SPair& p) const {
        const MPoly& gi = elems[static_cast<size_t>(p.i)];
        const MPoly& gj = elems[static_cast<size_t>(p.j)];
        Monomial ui = monomial_div(p.lcm, gi.lead().m);
        Monomial uj = monomial_div(p.lcm, gj.lead().m);
        MPoly zero;
        MPoly a = eng.subtract_multiple(zero, gi, ui, mpq_class(-1) / gi.lead().c);
        return eng.subtract_multiple(a, gj, uj, mpq_class(1) / gj.lead().c);
    }

    void run(bool use_criteria) {
        for (int idx = 0; idx < static_cast<int>(elems.size()); ++idx) push_pairs_for(idx);
        while (!pending.empty()) {
            size_t at = select_pair();
            SPair p = pending[at];
            pending.erase(pending.begin() + static_cast<long>(at));
            done.insert(pair_key(p.i, p.j));
            if (use_criteria) {
                if (rank_one &&
                    monomials_coprime(elems[static_cast<size_t>(p.i)].lead().m,
                                      elems[static_cast<size_t>(p.j)].lead().m))
                    continue;
                if (chain_criterion(p)) continue;
            }
            MPoly r = eng.divide(s_pair(p), elems, nullptr);
            if (r.is_zero()) continue;
            eng.make_monic(r);
            elems.push_back(std::move(r));
            push_pairs_for(static_cast<int>(elems.size()) - 1);
        }
    }
};

// Minimal + tail-reduced + monic + sorted ascending by leading term.
std::vector<MPoly> reduce_basis(const Engine& eng, std::vector<MPoly> elems) {
    std::vector<MPoly> kept;
    for (auto& e : elems) {
        if (!e.is_zero()) kept.push_back(std::move(e));
    }
    // drop redundant leading terms
    for (size_t i = 0; i < kept.size();) {
        bool redundant = false;
        for (size_t j = 0; j < kept.size(); ++j) {
            if (i == j) continue;
            const MTerm& li = kept[i].lead();
            const MTerm& lj = kept[j].lead();
            if (li.pos != lj.pos || !monomial_divides(lj.m, li.m)) continue;
            if (li.m == lj.m && j > i) continue;  // equal leads: drop the later one
            redundant = true;
            break;
        }
        if (redundant)
            kept.erase(kept.begin() + static_cast<long>(i));
        else
            ++i;
    }
    // tail reduction to a fixpoint
    auto equal = [](const MPoly& a, const MPoly& b) {
        if (a.t.size() != b.t.size()) return false;
        for (size_t k = 0; k < a.t.size(); ++k)
            if (a.t[k].pos != b.t[k].pos || a.t[k].m != b.t[k].m || a.t[k].c != b.t[k].c)
                return false;
        return true;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < kept.size(); ++i) {
            std::vector<MPoly> others;
            others.reserve(kept.size() - 1);
            for (size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            MPoly r = eng.divide(kept[i], others, nullptr);
            eng.make_monic(r);
            if (!equal(r, kept[i])) {
                kept[i] = std::move(r);
                changed = true;
            }
        }
    }
    for (auto& e : kept) eng.make_monic(e);
    std::sort(kept.begin(), kept.end(),
              [&](const MPoly& a, const MPoly& b) { return eng.element_before(a, b); });
    return kept;
}

std::vector<MPoly> engine_buchberger(const Engine& eng, std::vector<MPoly> input,
                                     bool rank_one) {
    std::vector<MPoly> elems;
    for (auto& e : input) {
        if (e.is_zero()) continue;
        eng.make_monic(e);
        elems.push_back(std::move(e));
    }
    std::sort(elems.begin(), elems.end(),
              [&](const MPoly& a, const MPoly& b) { return eng.element_before(a, b); });
    elems.erase(std::unique(elems.begin(), elems.end(),
                            [&](const MPoly& a, const MPoly& b) {
                                return !eng.element_before(a, b) && !eng.element_before(b, a);
                            }),
                elems.end());
    BuchbergerRun run{eng, std::move(elems), {}, {}, rank_one};
    run.run(true);
    return reduce_basis(eng, std::move(run.elems));
}

ModuleOrderPtr rank_one_order(const MonomialOrder& ord) { return ModuleOrder::pot(ord); }

MPoly poly_to_mpoly(const Engine& eng, const Polynomial& p) {
    std::vector<MTerm> terms;
    terms.reserve(p.terms().size());
    for (const Term& t : p.terms()) terms.push_back({0, t.m, t.c});
    return eng.normalize(std::move(terms));
}

Polynomial mpoly_to_poly(const MPoly& p, const RingPtr& ring) {
    std::vector<Term> terms;
    terms.reserve(p.t.size());
    for (const MTerm& t : p.t) terms.push_back({t.m, t.c});
    return Polynomial::from_terms(ring, std::move(terms));
}

} // namespace

bool GroebnerBasis::is_trivial_unit() const {
    return generators.size() == 1 && generators[0].is_constant() && !generators[0].is_zero();
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
    RingPtr ring;
    for (const auto& g : gens) {
        if (!g.ring()) continue;
        if (!ring)
            ring = g.ring();
        else
            require_same_ring(ring, g.ring());
    }
    GroebnerBasis out;
    out.order = ord;
    out.ring = ring;
    if (!ring) return out;  // no nonzero generator carried a ring
    auto order = rank_one_order(ord);
    Engine eng{*ring, *order};
    std::vector<MPoly> input;
    for (const auto& g : gens)
        if (!g.is_zero()) input.push_back(poly_to_mpoly(eng, g));
    auto basis = engine_buchberger(eng, std::move(input), true);
    for (const auto& b : basis) out.generators.push_back(mpoly_to_poly(b, ring));
    return out;
}

Polynomial normal_form(const Polynomial& g, const GroebnerBasis& G) {
    if (g.is_zero() || G.generators.empty()) return g;
    require_same_ring(g.ring(), G.ring);
    auto order = rank_one_order(G.order);
    Engine eng{*G.ring, *order};
    std::vector<MPoly> basis;
    basis.reserve(G.generators.size());
    for (const auto& b : G.generators) basis.push_back(poly_to_mpoly(eng, b));
    MPoly r = eng.divide(poly_to_mpoly(eng, g), basis, nullptr);
    return mpoly_to_poly(r, G.ring);
}

ModuleBasis module_buchberger(const std::vector<ModuleElement>& gens, const RingPtr& ring,
                              int rank, ModuleOrderPtr ord) {
    if (!ring) fail("InvalidRing", "module Buchberger needs a ring");
    ModuleBasis out;
    out.ring = ring;
    out.rank = rank;
    out.order = ord ? ord : ModuleOrder::pot(MonomialOrder::weighted_grevlex());
    Engine eng{*ring, *out.order};
    std::vector<MPoly> input;
    for (const auto& g : gens) {
        if (g.rank() != rank) fail("RankMismatch", "module element of wrong rank");
        if (!g.is_zero()) input.push_back(eng.from_element(g));
    }
    auto basis = engine_buchberger(eng, std::move(input), rank == 1);
    for (const auto& b : basis) out.generators.push_back(eng.to_element(b, ring, rank));
    return out;
}

ModuleElement normal_form(const ModuleElement& g, const ModuleBasis& G) {
    if (G.generators.empty() || g.is_zero()) return g;
    if (g.rank() != G.rank) fail("RankMismatch", "module element of wrong rank");
    Engine eng{*G.ring, *G.order};
    std::vector<MPoly> basis;
    basis.reserve(G.generators.size());
    for (const auto& b : G.generators) basis.push_back(eng.from_element(b));
    MPoly r = eng.divide(eng.from_element(g), basis, nullptr);
    return eng.to_element(r, G.ring, G.rank);
}

Term leading_term(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) fail("ZeroPolynomial", "leading term of zero polynomial");
    const RingSpec& ring = *p.ring();
    const Term* best = &p.terms()[0];
    for (const Term& t : p.terms())
        if (monomial_compare(t.m, best->m, ord, ring) == Cmp::Greater) best = &t;
    return *best;
}

ModuleLead leading_term(const ModuleElement& g, const ModuleOrder& ord) {
    const RingSpec* ring = nullptr;
    for (const auto& c : g.coords)
        if (c.ring()) ring = c.ring().get();
    if (!ring || g.is_zero()) fail("ZeroPolynomial", "leading term of zero module element");
    bool have = false;
    ModuleLead best{0, {}, 0};
    for (size_t i = 0; i < g.coords.size(); ++i) {
        for (const Term& t : g.coords[i].terms()) {
            if (!have || module_term_compare(static_cast<int>(i), t.m, best.pos, best.m, ord,
                                             *ring) == Cmp::Greater) {
                best = {static_cast<int>(i), t.m, t.c};
                have = true;
            }
        }
    }
    return best;
}

std::optional<Polynomial> exact_divide(const Polynomial& h, const Polynomial& f) {
    if (f.is_zero()) fail("DivisionByZero", "exact division by zero polynomial");
    if (h.is_zero()) return Polynomial(f.ring());
    require_same_ring(h.ring(), f.ring());
    auto order = rank_one_order(MonomialOrder::weighted_grevlex());
    Engine eng{*h.ring(), *order};
    std::vector<MPoly> basis{poly_to_mpoly(eng, f)};
    std::vector<std::vector<Term>> quotients;
    MPoly r = eng.divide(poly_to_mpoly(eng, h), basis, &quotients);
    if (!r.is_zero()) return std::nullopt;
    return Polynomial::from_terms(h.ring(), std::move(quotients[0]));
}

namespace {

std::vector<ModuleElement> graph_syzygies(const std::vector<ModuleElement>& gens,
                                          const RingPtr& ring, int rank) {
    int m = static_cast<int>(gens.size());
    for (const auto& g : gens)
        if (g.is_zero()) fail("ZeroGenerator", "syzygies of a zero generator are the free module");
    int big = rank + m;
    std::vector<ModuleElement> graphs;
    graphs.reserve(gens.size());
    for (int i = 0; i < m; ++i) {
        ModuleElement e = module_zero(ring, big);
        for (int r = 0; r < rank; ++r) e.coords[static_cast<size_t>(r)] = gens[static_cast<size_t>(i)].coords[static_cast<size_t>(r)];
        e.coords[static_cast<size_t>(rank + i)] = Polynomial::constant(ring, 1);
        graphs.push_back(std::move(e));
    }
    // POT makes the function block dominate; basis elements whose function
    // block vanished are exactly a Gröbner basis of the syzygy module.
    auto gb = module_buchberger(graphs, ring, big, ModuleOrder::pot(MonomialOrder::weighted_grevlex()));
    std::vector<ModuleElement> out;
    for (const auto& b : gb.generators) {
        bool zero_head = true;
        for (int r = 0; r < rank && zero_head; ++r)
            if (!b.coords[static_cast<size_t>(r)].is_zero()) zero_head = false;
        if (!zero_head) continue;
        ModuleElement s = module_zero(ring, m);
        for (int i = 0; i < m; ++i) s.coords[static_cast<size_t>(i)] = b.coords[static_cast<size_t>(rank + i)];
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

std::vector<ModuleElement> syzygies(const std::vector<Polynomial>& gens) {
    RingPtr ring;
    for (const auto& g : gens) {
        if (g.is_zero()) fail("ZeroGenerator", "syzygies require nonzero generators");
        if (!ring)
            ring = g.ring();
        else
            require_same_ring(ring, g.ring());
    }
    if (!ring) return {};
    std::vector<ModuleElement> wrapped;
    wrapped.reserve(gens.size());
    for (const auto& g : gens) wrapped.push_back(ModuleElement{{g}});
    return graph_syzygies(wrapped, ring, 1);
}

std::vector<ModuleElement> module_syzygies(const std::vector<ModuleElement>& gens,
                                           const RingPtr& ring, int rank) {
    if (gens.empty()) return {};
    return graph_syzygies(gens, ring, rank);
}

SchreyerStep schreyer_syzygies(const ModuleBasis& gb) {
    SchreyerStep out;
    int s = static_cast<int>(gb.generators.size());
    if (s == 0) {
        out.order = ModuleOrder::pot(gb.order ? gb.order->base : MonomialOrder::weighted_grevlex());
        return out;
    }
    Engine eng{*gb.ring, *gb.order};
    std::vector<MPoly> elems;
    elems.reserve(gb.generators.size());
    std::vector<std::pair<int, Monomial>> assigned;
    for (const auto& g : gb.generators) {
        MPoly p = eng.from_element(g);
        if (p.is_zero()) fail("ZeroGenerator", "Schreyer step on a zero generator");
        assigned.emplace_back(p.lead().pos, p.lead().m);
        elems.push_back(std::move(p));
    }
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) {
            const MPoly& gi = elems[static_cast<size_t>(i)];
            const MPoly& gj = elems[static_cast<size_t>(j)];
            if (gi.lead().pos != gj.lead().pos) continue;
            Monomial L = monomial_lcm(gi.lead().m, gj.lead().m);
            Monomial ui = monomial_div(L, gi.lead().m);
            Monomial uj = monomial_div(L, gj.lead().m);
            MPoly zero;
            MPoly sp = eng.subtract_multiple(zero, gi, ui, mpq_class(-1) / gi.lead().c);
            sp = eng.subtract_multiple(sp, gj, uj, mpq_class(1) / gj.lead().c);
            std::vector<std::vector<Term>> quot;
            MPoly r = eng.divide(std::move(sp), elems, &quot);
            if (!r.is_zero())
                fail("NotGroebner", "Schreyer step requires a Gröbner basis input");
            // sigma = ui/ci E_i - uj/cj E_j - sum q_k E_k
            std::vector<std::vector<Term>> coords(static_cast<size_t>(s));
            coords[static_cast<size_t>(i)].push_back({ui, mpq_class(1) / gi.lead().c});
            coords[static_cast<size_t>(j)].push_back({uj, mpq_class(-1) / gj.lead().c});
            for (int k = 0; k < s; ++k)
                for (const Term& q : quot[static_cast<size_t>(k)])
                    coords[static_cast<size_t>(k)].push_back({q.m, -q.c});
            ModuleElement sig;
            sig.coords.reserve(static_cast<size_t>(s));
            for (auto& ts : coords)
                sig.coords.push_back(Polynomial::from_terms(gb.ring, std::move(ts)));
            if (!sig.is_zero()) out.syzygies.push_back(std::move(sig));
        }
    }
    out.order = ModuleOrder::schreyer_over(gb.order, std::move(assigned), gb.order->base);
    return out;
}

} // namespace vdual
