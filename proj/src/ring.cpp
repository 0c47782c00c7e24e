#include "vdual/ring.hpp"

#include <algorithm>
#include <set>

namespace vdual {

RingSpec::RingSpec(std::vector<std::string> variables, std::vector<long> weights)
    : vars_(std::move(variables)), weights_(std::move(weights)) {
    if (vars_.empty()) fail("InvalidRing", "a ring needs at least one variable");
    if (weights_.empty()) weights_.assign(vars_.size(), 1);
    if (weights_.size() != vars_.size())
        fail("InvalidRing", "weight count does not match variable count");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty()) fail("InvalidRing", "empty variable name");
        if (!seen.insert(v).second) fail("InvalidRing", "duplicate variable name: " + v);
    }
    for (long w : weights_)
        if (w <= 0) fail("InvalidRing", "weights must be strictly positive");
}

RingPtr RingSpec::make(std::vector<std::string> variables, std::vector<long> weights) {
    return std::make_shared<const RingSpec>(std::move(variables), std::move(weights));
}

int RingSpec::variable_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

bool RingSpec::same_as(const RingSpec& other) const {
    return vars_ == other.vars_ && weights_ == other.weights_;
}

Monomial monomial_one(int n) { return Monomial{std::vector<int>(static_cast<size_t>(n), 0)}; }

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial monomial_div(const Monomial& b, const Monomial& a) {
    Monomial r = b;
    for (size_t i = 0; i < r.e.size(); ++i) {
        r.e[i] -= a.e[i];
        if (r.e[i] < 0) fail("InexactDivision", "monomial division is not exact");
    }
    return r;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
    return r;
}

bool monomials_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

long weighted_degree(const Monomial& m, const RingSpec& ring) {
    long d = 0;
    for (size_t i = 0; i < m.e.size(); ++i) d += ring.weights()[i] * m.e[i];
    return d;
}

MonomialOrder MonomialOrder::elimination(std::vector<int> eliminated_vars) {
    std::sort(eliminated_vars.begin(), eliminated_vars.end());
    eliminated_vars.erase(std::unique(eliminated_vars.begin(), eliminated_vars.end()),
                          eliminated_vars.end());
    return {Kind::Elimination, std::move(eliminated_vars)};
}

namespace {

Cmp cmp_long(long a, long b) {
    if (a < b) return Cmp::Less;
    if (a > b) return Cmp::Greater;
    return Cmp::Equal;
}

// Reverse lexicographic tie-break: a > b iff the last nonzero entry of a-b is
// negative.  Only valid beneath a degree comparison.
Cmp revlex_tiebreak(const Monomial& a, const Monomial& b) {
    for (size_t i = a.e.size(); i-- > 0;) {
        int d = a.e[i] - b.e[i];
        if (d != 0) return d < 0 ? Cmp::Greater : Cmp::Less;
    }
    return Cmp::Equal;
}

Cmp lex_compare(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? Cmp::Greater : Cmp::Less;
    }
    return Cmp::Equal;
}

} // namespace

Cmp monomial_compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord,
                     const RingSpec& ring) {
    if (a.e.size() != b.e.size() || static_cast<int>(a.e.size()) != ring.n())
        fail("RingMismatch", "monomials of mismatched length");
    switch (ord.kind) {
        case MonomialOrder::Kind::Lex:
            return lex_compare(a, b);
        case MonomialOrder::Kind::Grevlex: {
            Cmp d = cmp_long(a.total_degree(), b.total_degree());
            if (d != Cmp::Equal) return d;
            return revlex_tiebreak(a, b);
        }
        case MonomialOrder::Kind::WeightedGrevlex: {
            Cmp d = cmp_long(weighted_degree(a, ring), weighted_degree(b, ring));
            if (d != Cmp::Equal) return d;
            return revlex_tiebreak(a, b);
        }
        case MonomialOrder::Kind::Elimination: {
            long da = 0, db = 0;
            for (int i : ord.eliminated) {
                da += a.e[static_cast<size_t>(i)];
                db += b.e[static_cast<size_t>(i)];
            }
            Cmp d = cmp_long(da, db);
            if (d != Cmp::Equal) return d;
            // grevlex within the eliminated block
            for (size_t j = ord.eliminated.size(); j-- > 0;) {
                size_t i = static_cast<size_t>(ord.eliminated[j]);
                int diff = a.e[i] - b.e[i];
                if (diff != 0) return diff < 0 ? Cmp::Greater : Cmp::Less;
            }
            // weighted grevlex on the remaining variables
            std::vector<bool> elim(a.e.size(), false);
            for (int i : ord.eliminated) elim[static_cast<size_t>(i)] = true;
            long wa = 0, wb = 0;
            for (size_t i = 0; i < a.e.size(); ++i) {
                if (elim[i]) continue;
                wa += ring.weights()[i] * a.e[i];
                wb += ring.weights()[i] * b.e[i];
            }
            d = cmp_long(wa, wb);
            if (d != Cmp::Equal) return d;
            for (size_t i = a.e.size(); i-- > 0;) {
                if (elim[i]) continue;
                int diff = a.e[i] - b.e[i];
                if (diff != 0) return diff < 0 ? Cmp::Greater : Cmp::Less;
            }
            return Cmp::Equal;
        }
    }
    return Cmp::Equal;
}

} // namespace vdual
