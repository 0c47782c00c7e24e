#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "vdual/loci.hpp"

using namespace vdual;
using namespace vdual::testutil;

namespace {

Ideal quadric_cone(int k) {
    std::vector<std::string> vars;
    for (int i = 1; i <= k; ++i) vars.push_back("z" + std::to_string(i));
    auto r = ring(vars);
    std::string q;
    for (int i = 1; i <= k; ++i) q += (i > 1 ? " + " : "") + ("z" + std::to_string(i)) + "^2";
    return Ideal(r, {parse_polynomial(r, q)}, true, true);
}

Ideal cusp_curve() {
    auto r = ring({"z", "w"}, {2, 3});
    return Ideal(r, {parse_polynomial(r, "z^3 - w^2")}, true, true);
}

Ideal surface7() {
    auto r = ring({"z1", "z2", "z3", "z4"}, {1, 2, 2, 3});
    return Ideal(r,
                 polys(r, {"z2^2 - z1^2*z3", "z2*z3 - z1*z4", "z2*z4 - z1*z3^2",
                           "z3^3 - z4^2"}),
                 true, true);
}

// V(A) ⊆ V(B)  iff  B ⊆ √A
bool variety_contained(const Ideal& A, const Ideal& B) {
    for (const auto& g : B.generators())
        if (!radical_membership(g, A)) return false;
    return true;
}

} // namespace

TEST_CASE("surface7 generators match the elimination ideal") {
    auto big = ring({"z1", "z2", "z3", "z4", "t1", "t2"}, {1, 2, 2, 3, 1, 1});
    auto I = Ideal(big, polys(big, {"z1 - t1", "z2 - t1*t2", "z3 - t2^2", "z4 - t2^3"}));
    auto elim = eliminate(I, {4, 5});
    auto sub = surface7().ring();
    auto JZ = restrict_to_subring(elim, sub);
    CHECK(ideal_equal(JZ, surface7()));
}

TEST_CASE("rank drop loci of koszul complexes") {
    auto r = ring({"z1", "z2", "z3"});
    auto k = koszul_complex(polys(r, {"z1", "z2"}));
    auto Z1 = rank_drop_locus(k, 1);
    CHECK(ideal_equal(Z1, Ideal(r, polys(r, {"z1", "z2"}))));

    auto hyp = koszul_complex(polys(r, {"z1^2 + z2^2 + z3^2"}));
    auto H1 = rank_drop_locus(hyp, 1);
    CHECK(ideal_equal(H1, Ideal(r, polys(r, {"z1^2 + z2^2 + z3^2"}))));
}

TEST_CASE("singular locus needs declarations") {
    auto r = ring({"z1", "z2", "z3"});
    Ideal undeclared(r, polys(r, {"z1^2 + z2^2 + z3^2"}));
    CHECK_THROWS_WITH_AS(singular_locus(undeclared), doctest::Contains("declaration"),
                         AlgebraError);
}

TEST_CASE("singular loci of the corpus") {
    auto q3 = quadric_cone(3);
    auto s3 = singular_locus(q3);
    CHECK(dimension(s3).dim == 0);  // the origin

    auto cusp = cusp_curve();
    auto sc = singular_locus(cusp);
    CHECK(dimension(sc).dim == 0);

    auto r = ring({"z1", "z2", "z3"});
    Ideal plane(r, polys(r, {"z1"}), true, true);
    auto sp = singular_locus(plane);
    CHECK(dimension(sp).dim == -1);  // smooth
}

TEST_CASE("intrinsic loci of the quadric cone") {
    auto rep = intrinsic_loci(quadric_cone(3));
    CHECK(rep.p == 1);
    const auto* z0 = rep.intrinsic_entry(0);
    REQUIRE(z0);
    CHECK(!z0->empty);
    CHECK(z0->codim == 2);
    const auto* z1 = rep.intrinsic_entry(1);
    REQUIRE(z1);
    CHECK(z1->empty);
}

TEST_CASE("intrinsic loci of the cusp") {
    auto rep = intrinsic_loci(cusp_curve());
    CHECK(rep.p == 1);
    const auto* z0 = rep.intrinsic_entry(0);
    REQUIRE(z0);
    CHECK(!z0->empty);
    CHECK(z0->codim == 1);
    const auto* z1 = rep.intrinsic_entry(1);
    REQUIRE(z1);
    CHECK(z1->empty);
}

TEST_CASE("intrinsic loci and resolution of the surface") {
    auto comp = compute_loci(surface7());
    const auto& rep = comp.report;
    CHECK(rep.p == 2);
    CHECK(comp.minimal_resolution.length() == 3);

    const auto* z0 = rep.intrinsic_entry(0);
    REQUIRE(z0);
    CHECK(!z0->empty);
    CHECK(z0->dim == 0);
    CHECK(z0->codim == 2);

    const auto* z1 = rep.intrinsic_entry(1);
    REQUIRE(z1);
    CHECK(!z1->empty);
    CHECK(z1->dim == 0);
    CHECK(z1->codim == 2);

    const auto* z2 = rep.intrinsic_entry(2);
    REQUIRE(z2);
    CHECK(z2->empty);

    // chain facts: Z_1 = Z_2 = Z up to radical
    for (int k = 1; k <= rep.p; ++k) {
        const auto& e = rep.ambient_chain[static_cast<size_t>(k) - 1];
        CHECK(variety_contained(e.ideal, surface7()));
        CHECK(variety_contained(surface7(), e.ideal));
    }
    // V(Z_{k+1}) ⊆ V(Z_k)
    for (size_t i = 0; i + 1 < rep.ambient_chain.size(); ++i)
        CHECK(variety_contained(rep.ambient_chain[i + 1].ideal, rep.ambient_chain[i].ideal));
    // codim_Z Z^k >= k + 1 for k >= 1
    for (const auto& e : rep.intrinsic)
        if (e.k >= 1 && !e.empty) CHECK(e.codim >= e.k + 1);
}

TEST_CASE("koszul tensor resolution of the surface") {
    auto comp = compute_loci(surface7());
    auto r = surface7().ring();
    auto kos = koszul_complex(polys(r, {"z1", "z3"}));
    auto t = tensor_complexes(kos, comp.minimal_resolution);
    CHECK(t.length() == 2 + comp.minimal_resolution.length());
    CHECK(t.ranks.back() == comp.minimal_resolution.ranks.back());
    CHECK(verify_complex(t).ok);
}

TEST_CASE("resolution tail locus cuts the origin") {
    auto comp = compute_loci(surface7());
    auto tail = rank_drop_locus(comp.minimal_resolution, 3);
    CHECK(dimension(tail).dim == 0);  // V(tail) = {0} = Z^1
    // {0} lies inside Z, so saturating by J_Z removes it entirely
    auto sat = saturate(tail, surface7());
    CHECK(sat.ideal.is_unit());
}

TEST_CASE("intrinsic loci are invariant under generator permutation") {
    auto s = surface7();
    auto r = s.ring();
    auto gens = s.generators();
    std::reverse(gens.begin(), gens.end());
    Ideal permuted(r, gens, true, true);
    auto a = intrinsic_loci(s);
    auto b = intrinsic_loci(permuted);
    REQUIRE(a.intrinsic.size() == b.intrinsic.size());
    for (size_t i = 0; i < a.intrinsic.size(); ++i) {
        CHECK(a.intrinsic[i].empty == b.intrinsic[i].empty);
        if (!a.intrinsic[i].empty) {
            CHECK(a.intrinsic[i].codim == b.intrinsic[i].codim);
            CHECK(variety_contained(a.intrinsic[i].ideal, b.intrinsic[i].ideal));
            CHECK(variety_contained(b.intrinsic[i].ideal, a.intrinsic[i].ideal));
        }
    }
}
