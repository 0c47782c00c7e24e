#include "vdual/complexes.hpp"

#include <map>

namespace vdual {

FreeComplex koszul_complex(const std::vector<Polynomial>& f) {
    if (f.empty()) fail("InvalidInput", "Koszul complex of an empty tuple");
    RingPtr ring;
    for (const auto& p : f) {
        if (p.is_zero()) fail("InvalidInput", "Koszul complex entry is zero");
        if (!ring)
            ring = p.ring();
        else
            require_same_ring(ring, p.ring());
    }
    int p = static_cast<int>(f.size());

    std::vector<WeightedDegree> degs;
    bool graded = true;
    for (const auto& g : f) {
        degs.push_back(weighted_degree(g));
        if (!degs.back().homogeneous()) graded = false;
    }

    FreeComplex c;
    c.ring = ring;
    std::vector<std::vector<std::vector<int>>> levels;
    for (int k = 0; k <= p; ++k) levels.push_back(subsets_of_size(p, k));
    for (int k = 0; k <= p; ++k) c.ranks.push_back(static_cast<int>(levels[static_cast<size_t>(k)].size()));

    for (int k = 1; k <= p; ++k) {
        const auto& cols = levels[static_cast<size_t>(k)];
        const auto& rows = levels[static_cast<size_t>(k - 1)];
        std::map<std::vector<int>, int> row_index;
        for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);
        PolyMatrix d = PolyMatrix::zero(ring, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t cidx = 0; cidx < cols.size(); ++cidx) {
            const auto& s = cols[cidx];
            for (size_t t = 0; t < s.size(); ++t) {
                std::vector<int> without = s;
                without.erase(without.begin() + static_cast<long>(t));
                int r = row_index.at(without);
                Polynomial entry = (t % 2 == 0) ? f[static_cast<size_t>(s[t])] : -f[static_cast<size_t>(s[t])];
                d.at(r, static_cast<int>(cidx)) = d.at(r, static_cast<int>(cidx)) + entry;
            }
        }
        c.differentials.push_back(std::move(d));
    }

    if (graded) {
        std::vector<std::vector<long>> degrees;
        for (int k = 0; k <= p; ++k) {
            std::vector<long> level;
            for (const auto& s : levels[static_cast<size_t>(k)]) {
                long d = 0;
                for (int j : s) d += degs[static_cast<size_t>(j)].degree;
                level.push_back(d);
            }
            degrees.push_back(std::move(level));
        }
        c.degrees = std::move(degrees);
    }
    return c;
}

FreeComplex unit_complex(const RingPtr& ring) {
    FreeComplex c;
    c.ring = ring;
    c.ranks = {1};
    c.degrees = std::vector<std::vector<long>>{{0}};
    return c;
}

FreeComplex tensor_complexes(const FreeComplex& e, const FreeComplex& f) {
    require_same_ring(e.ring, f.ring);
    int ne = e.length(), nf = f.length();
    FreeComplex c;
    c.ring = e.ring;
    int n = ne + nf;

    // basis of level k: blocks (i, j=k-i) with i ascending, row-major (a, b)
    auto block_offset = [&](int k, int i) {
        int off = 0;
        for (int ii = std::max(0, k - nf); ii < i; ++ii)
            off += e.rank(ii) * f.rank(k - ii);
        return off;
    };
    for (int k = 0; k <= n; ++k) {
        int r = 0;
        for (int i = std::max(0, k - nf); i <= std::min(k, ne); ++i) r += e.rank(i) * f.rank(k - i);
        c.ranks.push_back(r);
    }

    for (int k = 1; k <= n; ++k) {
        PolyMatrix d = PolyMatrix::zero(c.ring, c.rank(k - 1), c.rank(k));
        for (int i = std::max(0, k - nf); i <= std::min(k, ne); ++i) {
            int j = k - i;
            int col_off = block_offset(k, i);
            for (int a = 0; a < e.rank(i); ++a) {
                for (int b = 0; b < f.rank(j); ++b) {
                    int col = col_off + a * f.rank(j) + b;
                    if (i >= 1) {
                        int row_off = block_offset(k - 1, i - 1);
                        const PolyMatrix& de = e.diff(i);
                        for (int a2 = 0; a2 < e.rank(i - 1); ++a2) {
                            const Polynomial& v = de.at(a2, a);
                            if (v.is_zero()) continue;
                            int row = row_off + a2 * f.rank(j) + b;
                            d.at(row, col) = d.at(row, col) + v;
                        }
                    }
                    if (j >= 1) {
                        int row_off = block_offset(k - 1, i);
                        const PolyMatrix& df = f.diff(j);
                        for (int b2 = 0; b2 < f.rank(j - 1); ++b2) {
                            const Polynomial& v = df.at(b2, b);
                            if (v.is_zero()) continue;
                            int row = row_off + a * f.rank(j - 1) + b2;
                            Polynomial signed_v = (i % 2 == 0) ? v : -v;
                            d.at(row, col) = d.at(row, col) + signed_v;
                        }
                    }
                }
            }
        }
        c.differentials.push_back(std::move(d));
    }

    if (e.degrees && f.degrees) {
        std::vector<std::vector<long>> degrees;
        for (int k = 0; k <= n; ++k) {
            std::vector<long> level;
            for (int i = std::max(0, k - nf); i <= std::min(k, ne); ++i) {
                int j = k - i;
                for (int a = 0; a < e.rank(i); ++a)
                    for (int b = 0; b < f.rank(j); ++b)
                        level.push_back((*e.degrees)[static_cast<size_t>(i)][static_cast<size_t>(a)] +
                                        (*f.degrees)[static_cast<size_t>(j)][static_cast<size_t>(b)]);
            }
            degrees.push_back(std::move(level));
        }
        c.degrees = std::move(degrees);
    }
    return c;
}

ComplexVerification verify_complex(const FreeComplex& c, kernels::Exec exec) {
    ComplexVerification v;
    int n = c.length();
    if (static_cast<int>(c.differentials.size()) != n) {
        v.ok = false;
        v.message = "differential count does not match rank list";
        return v;
    }
    for (int k = 1; k <= n; ++k) {
        const PolyMatrix& d = c.diff(k);
        if (d.rows != c.rank(k - 1) || d.cols != c.rank(k)) {
            v.ok = false;
            v.message = "differential " + std::to_string(k) + " has the wrong shape";
            v.failed_level = k;
            return v;
        }
    }
    for (int k = 1; k + 1 <= n; ++k) {
        PolyMatrix prod = kernels::matrix_product(c.diff(k), c.diff(k + 1), exec);
        if (!prod.is_zero()) {
            v.ok = false;
            v.failed_level = k;
            for (int r = 0; r < prod.rows && v.message.empty(); ++r)
                for (int col = 0; col < prod.cols && v.message.empty(); ++col)
                    if (!prod.at(r, col).is_zero())
                        v.message = "f_" + std::to_string(k) + " ∘ f_" + std::to_string(k + 1) +
                                    " is nonzero at entry (" + std::to_string(r) + "," +
                                    std::to_string(col) + ")";
            return v;
        }
    }
    // expected ranks must be non-negative
    long r = 0;
    for (int k = n; k >= 0; --k) {
        r = c.rank(k) - r;
        if (r < 0) {
            v.ok = false;
            v.message = "expected rank r_" + std::to_string(k) + " is negative";
            v.failed_level = k;
            return v;
        }
    }
    return v;
}

std::vector<int> expected_ranks(const FreeComplex& c) {
    auto v = verify_complex(c);
    if (!v.ok) fail("InvalidComplex", v.message);
    std::vector<int> r(static_cast<size_t>(c.length()) + 1, 0);
    long acc = 0;
    for (int k = c.length(); k >= 0; --k) {
        acc = c.rank(k) - acc;
        r[static_cast<size_t>(k)] = static_cast<int>(acc);
    }
    return r;
}

} // namespace vdual
