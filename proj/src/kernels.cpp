#include "vdual/kernels.hpp"

#include <atomic>

namespace vdual::kernels {

namespace {
std::atomic<Exec> g_exec{Exec::Parallel};
}

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec e) { g_exec.store(e); }

std::vector<Polynomial> batch_normal_form(const std::vector<Polynomial>& polys,
                                          const GroebnerBasis& G, Exec exec) {
    std::vector<Polynomial> out(polys.size());
    if (exec == Exec::Serial) {
        for (size_t i = 0; i < polys.size(); ++i) out[i] = normal_form(polys[i], G);
        return out;
    }
    const long n = static_cast<long>(polys.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i)
        out[static_cast<size_t>(i)] = normal_form(polys[static_cast<size_t>(i)], G);
    return out;
}

namespace {

Polynomial product_entry(const PolyMatrix& a, const PolyMatrix& b, int r, int c) {
    Polynomial acc(a.ring ? a.ring : b.ring);
    for (int k = 0; k < a.cols; ++k) {
        const Polynomial& x = a.at(r, k);
        const Polynomial& y = b.at(k, c);
        if (x.is_zero() || y.is_zero()) continue;
        acc = acc + x * y;
    }
    return acc;
}

} // namespace

PolyMatrix matrix_product(const PolyMatrix& a, const PolyMatrix& b, Exec exec) {
    if (a.cols != b.rows) fail("Internal", "matrix product shape mismatch");
    RingPtr ring = a.ring ? a.ring : b.ring;
    PolyMatrix out = PolyMatrix::zero(ring, a.rows, b.cols);
    const long total = static_cast<long>(a.rows) * static_cast<long>(b.cols);
    if (exec == Exec::Serial || b.cols == 0) {
        for (long i = 0; i < total; ++i)
            out.entries[static_cast<size_t>(i)] =
                product_entry(a, b, static_cast<int>(i / b.cols), static_cast<int>(i % b.cols));
        return out;
    }
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < total; ++i)
        out.entries[static_cast<size_t>(i)] =
            product_entry(a, b, static_cast<int>(i / b.cols), static_cast<int>(i % b.cols));
    return out;
}

std::vector<Polynomial> all_minors(const PolyMatrix& m, int k, Exec exec) {
    if (k < 0) fail("OutOfRange", "minor size must be non-negative");
    auto row_sets = subsets_of_size(m.rows, k);
    auto col_sets = subsets_of_size(m.cols, k);
    std::vector<Polynomial> out(row_sets.size() * col_sets.size());
    const long total = static_cast<long>(out.size());
    auto compute = [&](long i) {
        size_t r = static_cast<size_t>(i) / col_sets.size();
        size_t c = static_cast<size_t>(i) % col_sets.size();
        out[static_cast<size_t>(i)] = submatrix_determinant(m, row_sets[r], col_sets[c]);
    };
    if (exec == Exec::Serial || col_sets.empty()) {
        for (long i = 0; i < total; ++i) compute(i);
        return out;
    }
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < total; ++i) compute(i);
    return out;
}

} // namespace vdual::kernels
