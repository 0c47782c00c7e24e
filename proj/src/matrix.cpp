#include "vdual/matrix.hpp"

#include <cstdint>
#include <unordered_map>

namespace vdual {

PolyMatrix PolyMatrix::zero(RingPtr ring, int rows, int cols) {
    PolyMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.entries.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Polynomial(ring));
    m.ring = std::move(ring);
    return m;
}

PolyMatrix jacobian_matrix(const std::vector<Polynomial>& polys, const RingPtr& ring) {
    PolyMatrix m = PolyMatrix::zero(ring, static_cast<int>(polys.size()), ring->n());
    for (size_t r = 0; r < polys.size(); ++r) {
        require_same_ring(ring, polys[r].ring());
        for (int c = 0; c < ring->n(); ++c)
            m.at(static_cast<int>(r), c) = derivative(polys[r], c);
    }
    return m;
}

namespace {

Polynomial det_rec(const PolyMatrix& m, const std::vector<int>& row_ids,
                   const std::vector<int>& col_ids, size_t depth, uint64_t col_mask,
                   std::unordered_map<uint64_t, Polynomial>& memo) {
    if (depth == row_ids.size()) return Polynomial::constant(m.ring, 1);
    auto it = memo.find(col_mask);
    if (it != memo.end()) return it->second;
    Polynomial acc(m.ring);
    int sign = 1;
    for (size_t c = 0; c < col_ids.size(); ++c) {
        if (!(col_mask & (uint64_t{1} << c))) continue;
        const Polynomial& entry = m.at(row_ids[depth], col_ids[c]);
        if (!entry.is_zero()) {
            Polynomial sub =
                det_rec(m, row_ids, col_ids, depth + 1, col_mask & ~(uint64_t{1} << c), memo);
            Polynomial piece = entry * sub;
            acc = sign > 0 ? acc + piece : acc - piece;
        }
        sign = -sign;
    }
    memo.emplace(col_mask, acc);
    return acc;
}

} // namespace

Polynomial submatrix_determinant(const PolyMatrix& m, const std::vector<int>& row_ids,
                                 const std::vector<int>& col_ids) {
    if (row_ids.size() != col_ids.size()) fail("Internal", "determinant of non-square selection");
    if (col_ids.size() > 63) fail("Internal", "determinant selection too large");
    std::unordered_map<uint64_t, Polynomial> memo;
    uint64_t full = col_ids.empty() ? 0 : ((uint64_t{1} << col_ids.size()) - 1);
    return det_rec(m, row_ids, col_ids, 0, full, memo);
}

Polynomial determinant(const PolyMatrix& m) {
    if (m.rows != m.cols) fail("Internal", "determinant of non-square matrix");
    std::vector<int> ids(static_cast<size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i) ids[static_cast<size_t>(i)] = i;
    return submatrix_determinant(m, ids, ids);
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

} // namespace vdual
