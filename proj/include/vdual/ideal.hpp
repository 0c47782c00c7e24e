#ifndef VDUAL_IDEAL_HPP
#define VDUAL_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "vdual/groebner.hpp"

namespace vdual {

// Ideal of the ambient ring, with a lazily computed (and then shared,
// read-only) reduced Gröbner basis under the ring's default order.
// declared_radical / declared_pure_dimensional are user assertions consumed
// by the locus machinery; they are checked only opportunistically.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> generators, bool declared_radical = false,
          bool declared_pure_dimensional = false);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool declared_radical() const { return radical_; }
    bool declared_pure_dimensional() const { return pure_; }

    const GroebnerBasis& groebner() const;                    // default order, cached
    GroebnerBasis groebner(const MonomialOrder& ord) const;   // uncached

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return groebner().is_trivial_unit(); }

private:
    struct Cache {
        std::mutex mutex;
        std::optional<GroebnerBasis> gb;
    };

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    bool radical_ = false;
    bool pure_ = false;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

struct DimensionInfo {
    int dim = 0;    // Krull dimension of V(I); -1 for the unit ideal
    int codim = 0;  // n - dim
};

bool membership(const Polynomial& g, const Ideal& I);

enum class IdealCombine { Sum, Product, Power };
// Sum and Product are generator-level; Power iterates Product on I itself
// (J is ignored) with exponent power_k >= 0.
Ideal combine(const Ideal& I, const Ideal& J, IdealCombine op, int power_k = 0);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, int k);

Ideal intersect(const Ideal& I, const Ideal& J);
Ideal colon(const Ideal& I, const Polynomial& f);
Ideal colon(const Ideal& I, const Ideal& J);

struct SaturationResult {
    Ideal ideal;
    int index = 0;  // first k with I : J^k == I : J^(k+1)
};
SaturationResult saturate(const Ideal& I, const Ideal& J);

// Generators of I ∩ Q[vars not in `vars`], still expressed in the same ring.
Ideal eliminate(const Ideal& I, const std::vector<int>& vars);

bool radical_membership(const Polynomial& g, const Ideal& I);
DimensionInfo dimension(const Ideal& I);

// Minimal m >= 1 with J^m ⊆ I; requires every generator of J to lie in √I.
// Capped at 64 with a diagnostic error.
int power_containment_index(const Ideal& J, const Ideal& I);

bool ideal_contains(const Ideal& I, const Ideal& J);  // J ⊆ I
bool ideal_equal(const Ideal& I, const Ideal& J);

// Ring plumbing for auxiliary-variable constructions.
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra_vars,
                    long weight = 1);
Polynomial transport_to_ring(const RingPtr& target, const Polynomial& p);
Ideal restrict_to_subring(const Ideal& I, const RingPtr& sub);

} // namespace vdual

#endif
