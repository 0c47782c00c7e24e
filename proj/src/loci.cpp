#include "vdual/loci.hpp"

namespace vdual {

bool LocusReport::intrinsic_codim_at_least(int k, int bound) const {
    const LocusEntry* e = intrinsic_entry(k);
    if (!e || e->empty) return true;
    return e->codim >= bound;
}

const LocusEntry* LocusReport::intrinsic_entry(int k) const {
    for (const auto& e : intrinsic)
        if (e.k == k) return &e;
    return nullptr;
}

Ideal rank_drop_locus(const FreeComplex& res, int k) {
    if (k < 1 || k > res.length()) fail("OutOfRange", "rank_drop_locus level out of range");
    auto r = expected_ranks(res);
    auto minors = kernels::all_minors(res.diff(k), r[static_cast<size_t>(k)]);
    std::vector<Polynomial> gens;
    for (auto& m : minors)
        if (!m.is_zero()) gens.push_back(std::move(m));
    if (gens.empty() && !minors.empty())
        return Ideal(res.ring, {});  // rank drops everywhere (degenerate complex)
    return Ideal(res.ring, std::move(gens));
}

Ideal singular_locus(const Ideal& J_Z) {
    if (!J_Z.declared_radical() || !J_Z.declared_pure_dimensional())
        fail("MissingDeclaration",
             "singular locus needs the radical and pure-dimensional declarations");
    int p = dimension(J_Z).codim;
    const auto& gens = J_Z.groebner().generators;
    PolyMatrix jac = jacobian_matrix(gens, J_Z.ring());
    auto minors = kernels::all_minors(jac, p);
    std::vector<Polynomial> out = gens;
    for (auto& m : minors)
        if (!m.is_zero()) out.push_back(std::move(m));
    Ideal sing(J_Z.ring(), std::move(out));
    // opportunistic sanity for the declared flags: the singular locus of a
    // reduced pure-dimensional variety is a proper subvariety
    if (!J_Z.is_zero() && dimension(sing).dim >= dimension(J_Z).dim)
        fail("JacobianDegenerate",
             "Jacobian locus is not a proper subvariety; the ideal is probably not radical "
             "or not pure-dimensional");
    return sing;
}

LociComputation compute_loci(const Ideal& J_Z) {
    LociComputation out;
    out.minimal_resolution = free_resolution(J_Z, true);
    const FreeComplex& res = out.minimal_resolution;
    LocusReport& rep = out.report;

    int n = J_Z.ring()->n();
    rep.p = dimension(J_Z).codim;
    int N = res.length();

    for (int k = 1; k <= N; ++k) {
        LocusEntry e;
        e.k = k;
        e.ideal = rank_drop_locus(res, k);
        auto d = dimension(e.ideal);
        e.dim = d.dim;
        e.empty = (d.dim < 0);
        e.codim = e.empty ? 0 : n - d.dim;
        rep.ambient_chain.push_back(std::move(e));
    }

    {
        LocusEntry z0;
        z0.k = 0;
        z0.ideal = singular_locus(J_Z);
        auto d = dimension(z0.ideal);
        z0.dim = d.dim;
        z0.empty = (d.dim < 0);
        z0.codim = z0.empty ? 0 : (n - d.dim) - rep.p;
        rep.intrinsic.push_back(std::move(z0));
    }
    for (int k = 1; k <= N - rep.p; ++k) {
        const LocusEntry& amb = rep.ambient_chain[static_cast<size_t>(rep.p + k) - 1];
        LocusEntry e;
        e.k = k;
        e.ideal = amb.ideal;
        e.dim = amb.dim;
        e.empty = amb.empty;
        e.codim = amb.empty ? 0 : (n - amb.dim) - rep.p;
        rep.intrinsic.push_back(std::move(e));
    }
    {
        // all loci beyond the resolution length are empty; record one witness entry
        LocusEntry e;
        e.k = std::max(1, N - rep.p + 1);
        e.ideal = Ideal(J_Z.ring(), {Polynomial::constant(J_Z.ring(), 1)});
        e.dim = -1;
        e.empty = true;
        rep.intrinsic.push_back(std::move(e));
    }
    return out;
}

LocusReport intrinsic_loci(const Ideal& J_Z) { return compute_loci(J_Z).report; }

} // namespace vdual
