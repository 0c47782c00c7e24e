#ifndef VDUAL_KERNELS_HPP
#define VDUAL_KERNELS_HPP

#include <vector>

#include "vdual/groebner.hpp"
#include "vdual/matrix.hpp"

namespace vdual::kernels {

// Data-parallel hot spots of the engine, each with a serial reference
// implementation and an OpenMP variant.  Results are element-wise independent
// of each other, so both variants return identical output; tests assert that
// and the bench tool compares their timings.  Buchberger itself stays
// sequential (the deterministic normal-strategy contract).
enum class Exec { Serial, Parallel };

Exec default_exec();
void set_default_exec(Exec e);

// Normal forms of many polynomials against one fixed basis.
std::vector<Polynomial> batch_normal_form(const std::vector<Polynomial>& polys,
                                          const GroebnerBasis& G, Exec exec = default_exec());

// Entries of A*B.
PolyMatrix matrix_product(const PolyMatrix& a, const PolyMatrix& b, Exec exec = default_exec());

// All k x k minors, rows-major over (row subset, column subset) pairs in
// lexicographic order.
std::vector<Polynomial> all_minors(const PolyMatrix& m, int k, Exec exec = default_exec());

} // namespace vdual::kernels

#endif
