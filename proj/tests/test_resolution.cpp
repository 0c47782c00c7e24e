#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "test_util.hpp"
#include "vdual/resolution.hpp"

using namespace vdual;
using namespace vdual::testutil;

TEST_CASE("koszul complex shapes and d^2 = 0") {
    auto r = ring({"z1", "z2", "z3"});

    auto k2 = koszul_complex(polys(r, {"z1", "z2"}));
    CHECK(k2.ranks == std::vector<int>{1, 2, 1});
    CHECK(k2.diff(1).at(0, 0) == P(r, "z1"));
    CHECK(k2.diff(1).at(0, 1) == P(r, "z2"));
    CHECK(k2.diff(2).at(0, 0) == P(r, "-z2"));
    CHECK(k2.diff(2).at(1, 0) == P(r, "z1"));
    CHECK(verify_complex(k2).ok);

    auto k1 = koszul_complex(polys(r, {"z1^2 + z2^2 + z3^2"}));
    CHECK(k1.ranks == std::vector<int>{1, 1});

    auto k3 = koszul_complex(polys(r, {"z1", "z2", "z3"}));
    CHECK(k3.ranks == std::vector<int>{1, 3, 3, 1});
    CHECK(verify_complex(k3).ok);

    auto er = expected_ranks(k2);
    CHECK(er == std::vector<int>{0, 1, 1});
}

TEST_CASE("verify catches corruption") {
    auto r = ring({"z1", "z2"});
    auto k = koszul_complex(polys(r, {"z1", "z2"}));
    k.differentials[1].at(0, 0) = P(r, "z2");  // breaks d1∘d2 = 0
    auto v = verify_complex(k);
    CHECK(!v.ok);
    CHECK(v.failed_level == 1);
    CHECK_THROWS_AS(expected_ranks(k), AlgebraError);
}

TEST_CASE("tensor of koszul complexes") {
    auto r = ring({"z1", "z2", "z3"});
    auto a = koszul_complex(polys(r, {"z1"}));
    auto b = koszul_complex(polys(r, {"z2"}));
    auto t = tensor_complexes(a, b);
    CHECK(t.ranks == std::vector<int>{1, 2, 1});
    CHECK(verify_complex(t).ok);

    // identity complex is neutral for ranks
    auto u = unit_complex(r);
    auto k = koszul_complex(polys(r, {"z1", "z2", "z3"}));
    auto ku = tensor_complexes(k, u);
    CHECK(ku.ranks == k.ranks);
    CHECK(verify_complex(ku).ok);

    // Koszul multiplicativity of ranks
    auto k12 = koszul_complex(polys(r, {"z1", "z2"}));
    auto t3 = tensor_complexes(k12, koszul_complex(polys(r, {"z3"})));
    CHECK(t3.ranks == k.ranks);
    CHECK(verify_complex(t3).ok);
}

TEST_CASE("tensor of verified complexes stays verified") {
    auto r = ring({"x", "y", "z", "w"});
    auto a = koszul_complex(polys(r, {"x*y - z^2", "w"}));
    auto b = koszul_complex(polys(r, {"x + y", "z*w"}));
    auto t = tensor_complexes(a, b);
    CHECK(verify_complex(t).ok);
    int top = t.ranks.back();
    CHECK(top == a.ranks.back() * b.ranks.back());
}

TEST_CASE("hypersurface resolution") {
    auto r = ring({"z1", "z2", "z3"});
    Ideal I(r, polys(r, {"z1^2 + z2^2 + z3^2"}));
    auto res = free_resolution(I, true);
    CHECK(res.ranks == std::vector<int>{1, 1});
    auto s = summarize(res, I);
    CHECK(s.projective_dimension == 1);
    CHECK(s.depth == 2);
    CHECK(s.is_cohen_macaulay);
}

TEST_CASE("resolution of the squared maximal ideal") {
    auto r = ring({"x", "y"});
    Ideal I(r, polys(r, {"x^2", "x*y", "y^2"}));
    auto res = free_resolution(I, true);
    CHECK(res.ranks == std::vector<int>{1, 3, 2});
    CHECK(verify_complex(res).ok);
    auto s = summarize(res, I);
    CHECK(s.projective_dimension == 2);
    CHECK(s.depth == 0);
    CHECK(s.is_cohen_macaulay);  // Artinian in 2 variables
}

TEST_CASE("koszul and minimal resolution agree on complete intersections") {
    auto r = ring({"x", "y", "z"});
    std::vector<std::vector<std::string>> tuples = {
        {"x", "y"}, {"x^2", "y^3"}, {"x + y", "z^2"}, {"x", "y", "z"}};
    for (const auto& t : tuples) {
        Ideal I(r, polys(r, t));
        auto res = free_resolution(I, true);
        auto kos = koszul_complex(polys(r, t));
        CHECK(res.ranks == kos.ranks);
    }
}

TEST_CASE("minimal resolution refuses inhomogeneous input") {
    auto r = ring({"x", "y"});
    Ideal I(r, polys(r, {"x^2 + y"}));
    CHECK_THROWS_WITH_AS(free_resolution(I, true), doctest::Contains("homogeneous"),
                         AlgebraError);
    // non-minimal resolution still works
    auto res = free_resolution(I, false);
    CHECK(verify_complex(res).ok);
}

TEST_CASE("betti numbers do not depend on generator order") {
    auto r = ring({"x", "y", "z"});
    auto gens = polys(r, {"x*y", "y*z", "x*z"});
    Ideal I1(r, gens);
    std::reverse(gens.begin(), gens.end());
    Ideal I2(r, gens);
    CHECK(free_resolution(I1, true).ranks == free_resolution(I2, true).ranks);
}

TEST_CASE("minimal resolution has no unit entries and resolves the ideal") {
    auto r = ring({"x", "y", "z"});
    // redundant generating set: the extra generator must be split away
    Ideal I(r, polys(r, {"x^2", "x*y", "x^2 + x*y"}));
    auto res = free_resolution(I, true);
    for (int k = 1; k <= res.length(); ++k)
        for (const auto& e : res.diff(k).entries)
            CHECK((e.is_zero() || !e.is_constant()));
    auto s = summarize(res, I);
    CHECK(s.betti == res.ranks);
    // resolution length >= codim always
    CHECK(s.projective_dimension >= dimension(I).codim);
}

TEST_CASE("grading data is carried and consistent") {
    auto cusp = ring({"z", "w"}, {2, 3});
    Ideal I(cusp, polys(cusp, {"z^3 - w^2"}));
    auto res = free_resolution(I, true);
    REQUIRE(res.degrees.has_value());
    CHECK((*res.degrees)[0] == std::vector<long>{0});
    CHECK((*res.degrees)[1] == std::vector<long>{6});
}

TEST_CASE("random homogeneous monomial ideals resolve exactly") {
    auto r = ring({"x", "y", "z"});
    std::mt19937_64 rng(31);
    for (int round = 0; round < 10; ++round) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) {
            Monomial m = random_monomial(r, rng, 3);
            if (!m.is_one()) gens.push_back(Polynomial::monomial_term(r, m, 1));
        }
        if (gens.empty()) continue;
        Ideal I(r, gens);
        auto res = free_resolution(I, true);
        CHECK(verify_complex(res).ok);
        CHECK(res.length() <= r->n());
        auto er = expected_ranks(res);
        for (int k = 0; k + 1 <= res.length(); ++k)
            CHECK(er[static_cast<size_t>(k)] + er[static_cast<size_t>(k) + 1] == res.rank(k));
    }
}
