#ifndef VDUAL_RING_HPP
#define VDUAL_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "vdual/errors.hpp"

namespace vdual {

// Ambient polynomial ring Q[x_1..x_n] with a positive weight per variable.
// Weights drive the weighted-grevlex default order and the quasi-homogeneous
// grading used by resolution minimalization.
class RingSpec {
public:
    RingSpec(std::vector<std::string> variables, std::vector<long> weights);

    static std::shared_ptr<const RingSpec> make(std::vector<std::string> variables,
                                                std::vector<long> weights = {});

    int n() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<long>& weights() const { return weights_; }
    const std::string& variable(int i) const { return vars_.at(static_cast<size_t>(i)); }

    // -1 when the name is not a ring variable.
    int variable_index(const std::string& name) const;

    bool same_as(const RingSpec& other) const;

private:
    std::vector<std::string> vars_;
    std::vector<long> weights_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (a && b && a->same_as(*b)) return;
    fail("RingMismatch", "operands live in different rings");
}

// Exponent vector of length n().  Kept dumb on purpose; all semantics live in
// free functions so the Gröbner engine can reuse them on module terms.
struct Monomial {
    std::vector<int> e;

    bool is_one() const {
        for (int v : e)
            if (v != 0) return false;
        return true;
    }
    long total_degree() const {
        long d = 0;
        for (int v : e) d += v;
        return d;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

Monomial monomial_one(int n);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial monomial_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
bool monomials_coprime(const Monomial& a, const Monomial& b);
long weighted_degree(const Monomial& m, const RingSpec& ring);

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

// Monomial orders.  All are total, multiplicative well-orders:
//   Lex              plain lexicographic, x_1 > x_2 > ...
//   Grevlex          total degree, ties by reverse lexicographic
//   WeightedGrevlex  ring weights, ties by reverse lexicographic (default)
//   Elimination      block order: eliminated block first by grevlex, then
//                    weighted grevlex on the remaining variables
struct MonomialOrder {
    enum class Kind { Lex, Grevlex, WeightedGrevlex, Elimination };

    Kind kind = Kind::WeightedGrevlex;
    std::vector<int> eliminated;  // sorted variable indices, Elimination only

    static MonomialOrder lex() { return {Kind::Lex, {}}; }
    static MonomialOrder grevlex() { return {Kind::Grevlex, {}}; }
    static MonomialOrder weighted_grevlex() { return {Kind::WeightedGrevlex, {}}; }
    static MonomialOrder elimination(std::vector<int> eliminated_vars);

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind && a.eliminated == b.eliminated;
    }
};

Cmp monomial_compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord,
                     const RingSpec& ring);

} // namespace vdual

#endif
