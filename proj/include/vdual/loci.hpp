#ifndef VDUAL_LOCI_HPP
#define VDUAL_LOCI_HPP

#include "vdual/resolution.hpp"

namespace vdual {

struct LocusEntry {
    int k = 0;
    Ideal ideal;        // cuts the locus set-theoretically (compared up to radical)
    bool empty = false; // V(ideal) = ∅
    int codim = 0;      // ambient codim for Z_k entries, codim in Z for Z^k; meaningless when empty
    int dim = 0;        // dim V(ideal); -1 when empty
};

// Rank-degeneracy data of the minimal free resolution of O/J_Z:
//   ambient_chain: Z_k for k = 1..N with ambient codimensions,
//   intrinsic: Z^0 = Z_sing and Z^k = Z_{p+k} with codimensions in Z;
// the intrinsic list carries one explicit empty entry past the resolution
// length (all later loci are empty as well).
struct LocusReport {
    int p = 0;  // codim Z in the ambient space
    std::vector<LocusEntry> ambient_chain;
    std::vector<LocusEntry> intrinsic;

    // codim_Z Z^k for bound checks; empties count as +infinity.
    bool intrinsic_codim_at_least(int k, int bound) const;
    const LocusEntry* intrinsic_entry(int k) const;  // null beyond the stored list
};

// Ideal of r_k x r_k minors of f_k, whose variety is where rank f_k < r_k.
Ideal rank_drop_locus(const FreeComplex& res, int k);

// Jacobian criterion: J_Z + (codim x codim minors of Jac of the reduced
// basis).  Requires the declared_radical / declared_pure_dimensional flags.
Ideal singular_locus(const Ideal& J_Z);

struct LociComputation {
    FreeComplex minimal_resolution;
    LocusReport report;
};

LocusReport intrinsic_loci(const Ideal& J_Z);
LociComputation compute_loci(const Ideal& J_Z);

} // namespace vdual

#endif
