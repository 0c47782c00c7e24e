#ifndef VDUAL_RESOLUTION_HPP
#define VDUAL_RESOLUTION_HPP

#include "vdual/complexes.hpp"
#include "vdual/ideal.hpp"

namespace vdual {

// Free resolution of O/I by iterated Schreyer syzygies of the reduced Gröbner
// basis.  With minimal=true the ideal must be weighted-homogeneous and the
// result is the graded-minimal resolution (no differential entry has a
// nonzero constant term).
FreeComplex free_resolution(const Ideal& I, bool minimal);

// Split off unit entries of a graded resolution until none remain.
FreeComplex minimalize(FreeComplex c);

struct ResolutionSummary {
    std::vector<int> betti;        // ranks of the minimal resolution
    int projective_dimension = 0;  // hd = length of the minimal resolution
    int depth = 0;                 // n - hd  (Auslander–Buchsbaum)
    bool is_cohen_macaulay = false;
};

// Summary invariants of a minimal resolution of O/I.
ResolutionSummary summarize(const FreeComplex& res, const Ideal& I);

} // namespace vdual

#endif
