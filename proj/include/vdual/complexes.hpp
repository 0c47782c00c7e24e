#ifndef VDUAL_COMPLEXES_HPP
#define VDUAL_COMPLEXES_HPP

#include <optional>
#include <string>
#include <vector>

#include "vdual/kernels.hpp"

namespace vdual {

// Bounded complex of free modules 0 -> E_N -> ... -> E_1 -> E_0.
// differentials[k-1] is the matrix of f_k : E_k -> E_{k-1}
// (rank E_{k-1} rows, rank E_k columns).  Optional grading data assigns a
// weighted degree to every basis element of every level.
struct FreeComplex {
    RingPtr ring;
    std::vector<int> ranks;
    std::vector<PolyMatrix> differentials;
    std::optional<std::vector<std::vector<long>>> degrees;

    int length() const { return static_cast<int>(ranks.size()) - 1; }
    int rank(int k) const { return ranks.at(static_cast<size_t>(k)); }
    const PolyMatrix& diff(int k) const { return differentials.at(static_cast<size_t>(k) - 1); }
};

// Koszul complex of a tuple; a free resolution of O/(f) when f is a regular
// sequence.  Level-k basis elements are the k-subsets of the tuple indices in
// lexicographic order.
FreeComplex koszul_complex(const std::vector<Polynomial>& f);

// Rank-one complex concentrated in level 0; tensor identity.
FreeComplex unit_complex(const RingPtr& ring);

// (E ⊗ F)_k = ⊕_{i+j=k} E_i ⊗ F_j with d(x⊗y) = dx⊗y + (-1)^i x⊗dy.
FreeComplex tensor_complexes(const FreeComplex& e, const FreeComplex& f);

struct ComplexVerification {
    bool ok = true;
    std::string message;
    int failed_level = -1;  // smallest k with f_k ∘ f_{k+1} != 0, when relevant

    explicit operator bool() const { return ok; }
};

ComplexVerification verify_complex(const FreeComplex& c,
                                   kernels::Exec exec = kernels::default_exec());

// Buchsbaum–Eisenbud expected ranks r_k = sum_{i>=k} (-1)^{i-k} rank E_i,
// indexed 0..N.  Requires verify_complex to pass and all r_k >= 0.
std::vector<int> expected_ranks(const FreeComplex& c);

} // namespace vdual

#endif
