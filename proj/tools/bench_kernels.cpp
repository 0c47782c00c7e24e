// Timing comparison of the serial reference kernels against the OpenMP
// variants.  The outputs are asserted equal while timing, so a run doubles as
// a smoke check of the determinism contract.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "vdual/kernels.hpp"

using namespace vdual;
using kernels::Exec;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Polynomial random_poly(const RingPtr& ring, std::mt19937_64& rng, int terms, int deg) {
    std::uniform_int_distribution<int> c(-9, 9);
    std::uniform_int_distribution<int> v(0, ring->n() - 1);
    std::uniform_int_distribution<int> d(0, deg);
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
        Monomial m = monomial_one(ring->n());
        int budget = d(rng);
        for (int j = 0; j < budget; ++j) m.e[static_cast<size_t>(v(rng))] += 1;
        ts.push_back({std::move(m), mpq_class(c(rng))});
    }
    return Polynomial::from_terms(ring, std::move(ts));
}

struct Row {
    const char* name;
    size_t items;
    double serial_ms;
    double parallel_ms;
    bool equal;
};

void print_row(const Row& r) {
    std::printf("%-22s %8zu %12.1f %12.1f %9.2fx   %s\n", r.name, r.items, r.serial_ms,
                r.parallel_ms, r.serial_ms / (r.parallel_ms > 0 ? r.parallel_ms : 1e-9),
                r.equal ? "equal" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    int scale = argc > 1 ? std::atoi(argv[1]) : 1;
    if (scale < 1) scale = 1;
    std::mt19937_64 rng(20240815);
    auto ring = RingSpec::make({"x", "y", "z", "w"});

    std::printf("%-22s %8s %12s %12s %10s\n", "kernel", "items", "serial ms", "parallel ms",
                "speedup");

    {
        std::vector<Polynomial> gens = {random_poly(ring, rng, 4, 3), random_poly(ring, rng, 4, 3),
                                        random_poly(ring, rng, 4, 3)};
        auto G = buchberger(gens, MonomialOrder::weighted_grevlex());
        std::vector<Polynomial> batch;
        for (int i = 0; i < 600 * scale; ++i) batch.push_back(random_poly(ring, rng, 8, 7));
        auto t0 = Clock::now();
        auto s = kernels::batch_normal_form(batch, G, Exec::Serial);
        double serial = ms_since(t0);
        t0 = Clock::now();
        auto p = kernels::batch_normal_form(batch, G, Exec::Parallel);
        double parallel = ms_since(t0);
        print_row({"batch_normal_form", batch.size(), serial, parallel, s == p});
    }

    {
        int n = 10 * scale;
        PolyMatrix a = PolyMatrix::zero(ring, n, n);
        PolyMatrix b = PolyMatrix::zero(ring, n, n);
        for (auto& e : a.entries) e = random_poly(ring, rng, 3, 2);
        for (auto& e : b.entries) e = random_poly(ring, rng, 3, 2);
        auto t0 = Clock::now();
        auto s = kernels::matrix_product(a, b, Exec::Serial);
        double serial = ms_since(t0);
        t0 = Clock::now();
        auto p = kernels::matrix_product(a, b, Exec::Parallel);
        double parallel = ms_since(t0);
        print_row({"matrix_product", s.entries.size(), serial, parallel, s.entries == p.entries});
    }

    {
        PolyMatrix m = PolyMatrix::zero(ring, 7, 8);
        for (auto& e : m.entries) e = random_poly(ring, rng, 2, 1);
        auto t0 = Clock::now();
        auto s = kernels::all_minors(m, 4, Exec::Serial);
        double serial = ms_since(t0);
        t0 = Clock::now();
        auto p = kernels::all_minors(m, 4, Exec::Parallel);
        double parallel = ms_since(t0);
        print_row({"all_minors(4x4)", s.size(), serial, parallel, s == p});
    }

    return 0;
}
