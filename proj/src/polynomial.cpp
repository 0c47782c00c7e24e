#include "vdual/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vdual {

namespace {

const MonomialOrder& canonical_order() {
    static const MonomialOrder ord = MonomialOrder::weighted_grevlex();
    return ord;
}

bool term_before(const Term& a, const Term& b, const RingSpec& ring) {
    return monomial_compare(a.m, b.m, canonical_order(), ring) == Cmp::Greater;
}

} // namespace

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    if (!ring) fail("InvalidRing", "polynomial without a ring");
    for (const Term& t : terms)
        if (static_cast<int>(t.m.e.size()) != ring->n())
            fail("RingMismatch", "term exponent length does not match ring");
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return term_before(a, b, *ring); });
    Polynomial p(ring);
    for (auto& t : terms) {
        if (t.c == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().m == t.m) {
            p.terms_.back().c += t.c;
            if (p.terms_.back().c == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, const mpq_class& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({monomial_one(ring->n()), c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int index, int power) {
    if (index < 0 || index >= ring->n()) fail("InvalidRing", "variable index out of range");
    Monomial m = monomial_one(ring->n());
    m.e[static_cast<size_t>(index)] = power;
    Polynomial p(ring);
    if (power < 0) fail("ParseError", "negative exponent");
    p.terms_.push_back({std::move(m), mpq_class(1)});
    return p;
}

Polynomial Polynomial::monomial_term(RingPtr ring, Monomial m, const mpq_class& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

mpq_class Polynomial::constant_coefficient() const {
    for (const Term& t : terms_)
        if (t.m.is_one()) return t.c;
    return mpq_class(0);
}

namespace {

// Merge two canonically sorted term lists; bs enters scaled by sign.
std::vector<Term> merge_terms(const std::vector<Term>& as, const std::vector<Term>& bs,
                              int sign, const RingSpec& ring) {
    std::vector<Term> out;
    out.reserve(as.size() + bs.size());
    size_t i = 0, j = 0;
    while (i < as.size() || j < bs.size()) {
        if (j == bs.size()) {
            out.push_back(as[i++]);
            continue;
        }
        if (i == as.size()) {
            Term t = bs[j++];
            if (sign < 0) t.c = -t.c;
            out.push_back(std::move(t));
            continue;
        }
        Cmp c = monomial_compare(as[i].m, bs[j].m, canonical_order(), ring);
        if (c == Cmp::Greater) {
            out.push_back(as[i++]);
        } else if (c == Cmp::Less) {
            Term t = bs[j++];
            if (sign < 0) t.c = -t.c;
            out.push_back(std::move(t));
        } else {
            mpq_class v = sign < 0 ? mpq_class(as[i].c - bs[j].c) : mpq_class(as[i].c + bs[j].c);
            if (v != 0) out.push_back({as[i].m, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    Polynomial r(a.ring_ ? a.ring_ : b.ring_);
    r.terms_ = merge_terms(a.terms_, b.terms_, +1, *r.ring_);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    Polynomial r(a.ring_ ? a.ring_ : b.ring_);
    r.terms_ = merge_terms(a.terms_, b.terms_, -1, *r.ring_);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.c *= c;
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const mpq_class& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({monomial_mul(t.m, m), t.c * c});
    // multiplying by a fixed monomial preserves the term order
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    RingPtr ring = a.ring_ ? a.ring_ : b.ring_;
    if (a.is_zero() || b.is_zero()) return Polynomial(ring);
    Polynomial acc(ring);
    // accumulate b * (each term of a); merge keeps everything canonical
    for (const Term& t : a.terms_) acc = acc + b.times_term(t.m, t.c);
    return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return a + b;
        case PolyOp::Sub: return a - b;
        case PolyOp::Mul: return a * b;
    }
    fail("Internal", "unknown polynomial operation");
}

WeightedDegree weighted_degree(const Polynomial& p) {
    WeightedDegree r;
    if (p.is_zero()) return r;
    const RingSpec& ring = *p.ring();
    r.degree = weighted_degree(p.terms().front().m, ring);
    r.status = WeightedDegree::Status::Homogeneous;
    for (const Term& t : p.terms()) {
        if (weighted_degree(t.m, ring) != r.degree) {
            r.status = WeightedDegree::Status::NotHomogeneous;
            r.degree = 0;
            break;
        }
    }
    return r;
}

Polynomial derivative(const Polynomial& p, int var) {
    if (!p.ring()) fail("InvalidRing", "derivative of ring-less polynomial");
    if (var < 0 || var >= p.ring()->n()) fail("InvalidRing", "variable index out of range");
    std::vector<Term> out;
    for (const Term& t : p.terms()) {
        int k = t.m.e[static_cast<size_t>(var)];
        if (k == 0) continue;
        Term d = t;
        d.c *= k;
        d.m.e[static_cast<size_t>(var)] -= 1;
        out.push_back(std::move(d));
    }
    return Polynomial::from_terms(p.ring(), std::move(out));
}

std::string to_string(const mpq_class& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const RingSpec& ring = *p.ring();
    std::ostringstream os;
    bool first = true;
    for (const Term& t : p.terms()) {
        mpq_class c = t.c;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool printed_coeff = false;
        if (c != 1 || t.m.is_one()) {
            os << to_string(c);
            printed_coeff = true;
        }
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            int e = t.m.e[i];
            if (e == 0) continue;
            if (printed_coeff) os << "*";
            printed_coeff = true;
            os << ring.variable(static_cast<int>(i));
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const RingPtr& ring;
    std::string_view s;
    size_t pos = 0;

    [[noreturn]] void err(const std::string& msg) {
        fail("ParseError", msg + " at position " + std::to_string(pos) + " in '" +
                               std::string(s) + "'");
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    mpz_class parse_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) err("expected integer");
        return mpz_class(std::string(s.substr(start, pos - start)));
    }

    std::string parse_name() {
        skip_ws();
        size_t start = pos;
        if (pos >= s.size() ||
            !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            err("expected variable name");
        ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return std::string(s.substr(start, pos - start));
    }

    // term := [rational] ('*'? factor)*, factor := name ['^' int]
    Term parse_term() {
        Term t{monomial_one(ring->n()), mpq_class(1)};
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num = parse_integer();
            mpz_class den = 1;
            if (peek() == '/') {
                ++pos;
                den = parse_integer();
                if (den == 0) err("zero denominator");
            }
            t.c = mpq_class(num, den);
            t.c.canonicalize();
            saw_factor = true;
        }
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos;
                skip_ws();
            } else if (!(pos < s.size() &&
                         (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))) {
                break;
            } else if (saw_factor) {
                err("missing '*' between factors");
            }
            std::string name = parse_name();
            int idx = ring->variable_index(name);
            if (idx < 0) err("unknown variable '" + name + "'");
            long e = 1;
            if (peek() == '^') {
                ++pos;
                mpz_class ez = parse_integer();
                if (ez > 4096) err("exponent too large");
                e = ez.get_si();
            }
            t.m.e[static_cast<size_t>(idx)] += static_cast<int>(e);
            saw_factor = true;
        }
        if (!saw_factor) err("expected term");
        return t;
    }

    Polynomial parse() {
        std::vector<Term> terms;
        skip_ws();
        if (eof()) err("empty polynomial");
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos;
        } else if (peek() == '+') {
            ++pos;
        }
        for (;;) {
            Term t = parse_term();
            if (sign < 0) t.c = -t.c;
            terms.push_back(std::move(t));
            if (eof()) break;
            char c = peek();
            if (c == '+') {
                sign = 1;
                ++pos;
            } else if (c == '-') {
                sign = -1;
                ++pos;
            } else {
                err("unexpected character '" + std::string(1, c) + "'");
            }
        }
        return Polynomial::from_terms(ring, std::move(terms));
    }
};

} // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
    Parser p{ring, text};
    return p.parse();
}

} // namespace vdual
