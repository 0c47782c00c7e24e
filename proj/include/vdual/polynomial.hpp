#ifndef VDUAL_POLYNOMIAL_HPP
#define VDUAL_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vdual/ring.hpp"

namespace vdual {

struct Term {
    Monomial m;
    mpq_class c;  // never zero inside a normalized polynomial
};

// Immutable exact polynomial over Q.  Terms are kept sorted descending under
// the ring's weighted-grevlex order, with no zero coefficients; that sorted
// form doubles as the canonical serialization order.
class Polynomial {
public:
    Polynomial() = default;  // zero over a null ring; usable only as placeholder
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
    static Polynomial constant(RingPtr ring, const mpq_class& c);
    static Polynomial variable(RingPtr ring, int index, int power = 1);
    static Polynomial monomial_term(RingPtr ring, Monomial m, const mpq_class& c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant coefficient (the coefficient of the monomial 1).
    mpq_class constant_coefficient() const;
    size_t term_count() const { return terms_.size(); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial scaled(const mpq_class& c) const;
    Polynomial times_term(const Monomial& m, const mpq_class& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

enum class PolyOp { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

// Weighted-degree report: a polynomial is either weighted-homogeneous of some
// degree, inhomogeneous, or identically zero (degree undefined).
struct WeightedDegree {
    enum class Status { Homogeneous, NotHomogeneous, ZeroPolynomial };
    Status status = Status::ZeroPolynomial;
    long degree = 0;

    bool homogeneous() const { return status == Status::Homogeneous; }
};

WeightedDegree weighted_degree(const Polynomial& p);

Polynomial derivative(const Polynomial& p, int var);

// Canonical text form, e.g. "3/2*z1^2*z3 - z4".  parse_polynomial accepts the
// same grammar (sum of terms; '*' explicit, '^' powers, rational coefficients)
// and throws AlgebraError("ParseError", ...) with a position hint.
std::string to_string(const Polynomial& p);
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

std::string to_string(const mpq_class& q);

} // namespace vdual

#endif
