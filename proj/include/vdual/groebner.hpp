#ifndef VDUAL_GROEBNER_HPP
#define VDUAL_GROEBNER_HPP

#include <memory>
#include <optional>
#include <vector>

#include "vdual/polynomial.hpp"

namespace vdual {

// Element of a free module O^r, stored as one polynomial per coordinate.
struct ModuleElement {
    std::vector<Polynomial> coords;

    int rank() const { return static_cast<int>(coords.size()); }
    bool is_zero() const {
        for (const auto& p : coords)
            if (!p.is_zero()) return false;
        return true;
    }
    friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
        return a.coords == b.coords;
    }
};

ModuleElement module_zero(const RingPtr& ring, int rank);

struct ModuleOrder;
using ModuleOrderPtr = std::shared_ptr<const ModuleOrder>;

// Order on module monomials (position, monomial).  Plain mode is
// position-over-term extending a ring order (e_0 > e_1 > ...).  Schreyer mode
// compares through assigned leading terms of the previous level's generators,
// with ties broken by position; `previous` chains down to a POT root.
struct ModuleOrder {
    MonomialOrder base = MonomialOrder::weighted_grevlex();

    struct SchreyerData {
        std::vector<std::pair<int, Monomial>> assigned;
        ModuleOrderPtr previous;
    };
    std::optional<SchreyerData> schreyer;

    static ModuleOrderPtr pot(MonomialOrder base_order);
    static ModuleOrderPtr schreyer_over(ModuleOrderPtr previous,
                                        std::vector<std::pair<int, Monomial>> assigned,
                                        MonomialOrder base_order);
};

Cmp module_term_compare(int pos_a, const Monomial& ma, int pos_b, const Monomial& mb,
                        const ModuleOrder& ord, const RingSpec& ring);

// Reduced Gröbner basis of an ideal: monic generators, no leading term divides
// another, tails fully reduced, sorted ascending by leading monomial.
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> generators;
    bool reduced = true;

    bool is_trivial_unit() const;  // basis == {1}
};

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord);
Polynomial normal_form(const Polynomial& g, const GroebnerBasis& G);

// Reduced Gröbner basis of a submodule of O^rank under a module order.
struct ModuleBasis {
    RingPtr ring;
    int rank = 0;
    ModuleOrderPtr order;
    std::vector<ModuleElement> generators;
};

ModuleBasis module_buchberger(const std::vector<ModuleElement>& gens, const RingPtr& ring,
                              int rank, ModuleOrderPtr ord);
ModuleElement normal_form(const ModuleElement& g, const ModuleBasis& G);

// Leading term of a nonzero polynomial under an arbitrary order.
Term leading_term(const Polynomial& p, const MonomialOrder& ord);
// Leading (position, monomial, coefficient) of a nonzero module element.
struct ModuleLead {
    int pos;
    Monomial m;
    mpq_class c;
};
ModuleLead leading_term(const ModuleElement& g, const ModuleOrder& ord);

// Exact division h / f in the full term sense; nullopt when the division
// algorithm of h by {f} leaves a remainder.
std::optional<Polynomial> exact_divide(const Polynomial& h, const Polynomial& f);

// Generators of the kernel of O^m -> ideal, e_i -> gens_i.  Computed from a
// Gröbner basis of the graph module {(gens_i, e_i)} under a POT order that
// makes the function coordinate dominant; each returned vector satisfies
// sum s_i * gens_i = 0 exactly.
std::vector<ModuleElement> syzygies(const std::vector<Polynomial>& gens);
// Same for module generators: kernel of O^m -> O^rank.
std::vector<ModuleElement> module_syzygies(const std::vector<ModuleElement>& gens,
                                           const RingPtr& ring, int rank);

// Schreyer step: syzygies of a Gröbner basis from its S-pair reductions,
// which form a Gröbner basis of the syzygy module under the induced order.
struct SchreyerStep {
    std::vector<ModuleElement> syzygies;  // elements of O^{#gb generators}
    ModuleOrderPtr order;
};
SchreyerStep schreyer_syzygies(const ModuleBasis& gb);

} // namespace vdual

#endif
