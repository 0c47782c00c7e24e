#ifndef VDUAL_MATRIX_HPP
#define VDUAL_MATRIX_HPP

#include <vector>

#include "vdual/polynomial.hpp"

namespace vdual {

// Dense row-major matrix of polynomials.
struct PolyMatrix {
    RingPtr ring;
    int rows = 0;
    int cols = 0;
    std::vector<Polynomial> entries;

    static PolyMatrix zero(RingPtr ring, int rows, int cols);

    const Polynomial& at(int r, int c) const {
        return entries[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)];
    }
    Polynomial& at(int r, int c) {
        return entries[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)];
    }
    bool is_zero() const {
        for (const auto& p : entries)
            if (!p.is_zero()) return false;
        return true;
    }
};

// Rows indexed by the polynomials, columns by the ring variables.
PolyMatrix jacobian_matrix(const std::vector<Polynomial>& polys, const RingPtr& ring);

// Determinant of the square submatrix picked by `row_ids` x `col_ids`,
// Laplace expansion memoized on column subsets.
Polynomial submatrix_determinant(const PolyMatrix& m, const std::vector<int>& row_ids,
                                 const std::vector<int>& col_ids);

Polynomial determinant(const PolyMatrix& m);

// All size-k subsets of 0..n-1 in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

} // namespace vdual

#endif
