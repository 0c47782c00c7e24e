#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vdual/duality.hpp"

using namespace vdual;
using namespace vdual::testutil;

namespace {

VarietyContext quadric_context(int k) {
    std::vector<std::string> vars;
    for (int i = 1; i <= k; ++i) vars.push_back("z" + std::to_string(i));
    auto r = ring(vars);
    std::string q;
    for (int i = 1; i <= k; ++i) q += (i > 1 ? " + " : "") + ("z" + std::to_string(i)) + "^2";
    return build_variety_context(Ideal(r, {parse_polynomial(r, q)}, true, true));
}

VarietyContext cusp_context() {
    auto r = ring({"z", "w"}, {2, 3});
    return build_variety_context(Ideal(r, {parse_polynomial(r, "z^3 - w^2")}, true, true));
}

VarietyContext surface_context() {
    auto r = ring({"z1", "z2", "z3", "z4"}, {1, 2, 2, 3});
    return build_variety_context(Ideal(
        r, polys(r, {"z2^2 - z1^2*z3", "z2*z3 - z1*z4", "z2*z4 - z1*z3^2", "z3^3 - z4^2"}),
        true, true));
}

} // namespace

TEST_CASE("context construction validates declarations") {
    auto r = ring({"x", "y"});
    Ideal I(r, polys(r, {"x*y"}));
    CHECK_THROWS_AS(build_variety_context(I), AlgebraError);
}

TEST_CASE("complete intersection tests") {
    auto Z = quadric_context(3);
    auto r = Z.J_Z.ring();
    CHECK(is_complete_intersection_on(Z, make_tuple_on_Z(Z, polys(r, {"z1", "z2"}))));
    CHECK(!is_complete_intersection_on(Z, make_tuple_on_Z(Z, polys(r, {"z1", "z1"}))));

    auto S = surface_context();
    auto rs = S.J_Z.ring();
    CHECK(is_complete_intersection_on(S, make_tuple_on_Z(S, polys(rs, {"z1", "z3"}))));
}

TEST_CASE("tuple entries may not vanish on Z") {
    auto Z = quadric_context(3);
    auto r = Z.J_Z.ring();
    CHECK_THROWS_AS(make_tuple_on_Z(Z, polys(r, {"z1^2 + z2^2 + z3^2"})), AlgebraError);
}

TEST_CASE("duality certificate on the quadric cone") {
    auto Z = quadric_context(3);
    auto r = Z.J_Z.ring();

    auto one = duality_certificate(Z, make_tuple_on_Z(Z, polys(r, {"z1"})));
    CHECK(one.status == VerdictStatus::CertifiedHolds);

    auto two = duality_certificate(Z, make_tuple_on_Z(Z, polys(r, {"z1", "z2"})));
    CHECK(two.status == VerdictStatus::Indeterminate);
    bool found_fail = false;
    for (const auto& row : two.table)
        if (row.k == 0) {
            CHECK(row.codim == 2);
            CHECK(row.bound == 3);
            CHECK(!row.ok);
            found_fail = true;
        }
    CHECK(found_fail);

    CHECK_THROWS_WITH_AS(duality_certificate(Z, make_tuple_on_Z(Z, polys(r, {"z1", "z1"}))),
                         doctest::Contains("complete intersection"), AlgebraError);
}

TEST_CASE("duality certificate on the k=4 quadric cone") {
    auto Z = quadric_context(4);
    auto r = Z.J_Z.ring();
    // codim_Z Z^0 = 3 >= 2 + 0 + 1
    auto v = duality_certificate(Z, make_tuple_on_Z(Z, polys(r, {"z1", "z2"})));
    CHECK(v.status == VerdictStatus::CertifiedHolds);
}

TEST_CASE("q-duality ladder on the k=4 quadric cone") {
    auto Z = quadric_context(4);
    CHECK(p_duality_classification(Z, 1).status == VerdictStatus::CertifiedHolds);
    CHECK(p_duality_classification(Z, 2).status == VerdictStatus::CertifiedHolds);
    auto three = p_duality_classification(Z, 3);
    CHECK(three.status == VerdictStatus::FailsAtNearbyPoint);
    REQUIRE(three.witness.has_value());
    CHECK(three.witness->equality_k == 0);
    CHECK(three.witness->branch == "cohen-macaulay");
    CHECK_THROWS_AS(p_duality_classification(Z, 4), AlgebraError);
}

TEST_CASE("quadric k=3 classification") {
    auto Z = quadric_context(3);
    CHECK(p_duality_classification(Z, 1).status == VerdictStatus::CertifiedHolds);
    auto two = p_duality_classification(Z, 2);
    CHECK(two.status == VerdictStatus::FailsAtNearbyPoint);
    CHECK(two.witness->equality_k == 0);
}

TEST_CASE("cusp: non-normal, p=1 fails nearby") {
    auto Z = cusp_context();
    auto one = p_duality_classification(Z, 1);
    CHECK(one.status == VerdictStatus::FailsAtNearbyPoint);
    CHECK(one.witness->equality_k == 0);

    // the paper's explicit pair (g, h) = (w, z): w ∉ (z) + J_Z, w·(z,w) ⊆ (z) + J_Z
    auto r = Z.J_Z.ring();
    Ideal I = ideal_sum(Z.J_Z, Ideal(r, polys(r, {"z"})));
    CHECK(!membership(P(r, "w"), I));
    CHECK(membership(P(r, "w") * P(r, "z"), I));
    CHECK(membership(P(r, "w") * P(r, "w"), I));
}

TEST_CASE("surface: p=1 fails nearby through the non-CM branch") {
    auto Z = surface_context();
    auto one = p_duality_classification(Z, 1);
    CHECK(one.status == VerdictStatus::FailsAtNearbyPoint);
    REQUIRE(one.witness.has_value());
    CHECK(one.witness->equality_k == 1);
    CHECK(one.witness->branch == "non-cohen-macaulay");

    auto two = p_duality_classification(Z, 2);
    CHECK(two.status == VerdictStatus::Indeterminate);
}

TEST_CASE("regular sequences on the surface") {
    auto Z = surface_context();
    auto r = Z.J_Z.ring();
    auto f = make_tuple_on_Z(Z, polys(r, {"z1", "z3"}));
    CHECK(is_complete_intersection_on(Z, f));
    auto reg = is_regular_sequence_on(Z, f);
    CHECK(!reg.regular);
    CHECK(reg.failing_index == 2);
    REQUIRE(reg.witness.has_value());
    CHECK(*reg.witness == P(r, "z2"));
    for (const auto& line : reg.lines) CHECK(replay_certificate_line(line));
}

TEST_CASE("regular sequences on the quadric cone") {
    auto Z = quadric_context(3);
    auto r = Z.J_Z.ring();
    auto reg = is_regular_sequence_on(Z, make_tuple_on_Z(Z, polys(r, {"z1", "z2"})));
    CHECK(reg.regular);

    auto rep = is_regular_sequence_on(Z, make_tuple_on_Z(Z, polys(r, {"z1", "z1"})));
    CHECK(!rep.regular);
    CHECK(rep.failing_index == 2);

    // regular implies complete intersection
    CHECK(is_complete_intersection_on(Z, make_tuple_on_Z(Z, polys(r, {"z1", "z2"}))));

    auto Z4 = quadric_context(4);
    auto r4 = Z4.J_Z.ring();
    auto t3 = make_tuple_on_Z(Z4, polys(r4, {"z1", "z2", "z3"}));
    CHECK(is_regular_sequence_on(Z4, t3).regular);
    CHECK(is_complete_intersection_on(Z4, t3));
}

TEST_CASE("depth condition via Z^1") {
    auto S = surface_context();
    CHECK(depth_condition_Z1(S, 1).holds);
    CHECK(!depth_condition_Z1(S, 2).holds);

    auto Q = quadric_context(3);
    CHECK(depth_condition_Z1(Q, 1).holds);
    CHECK(depth_condition_Z1(Q, 2).holds);
}

TEST_CASE("tensor condition") {
    auto Q = quadric_context(3);
    auto rq = Q.J_Z.ring();
    CHECK(tensor_condition(Q, make_tuple_on_Z(Q, polys(rq, {"z1", "z2"}))).holds);

    auto S = surface_context();
    auto rs = S.J_Z.ring();
    CHECK(!tensor_condition(S, make_tuple_on_Z(S, polys(rs, {"z1", "z3"}))).holds);
    CHECK(tensor_condition(S, make_tuple_on_Z(S, polys(rs, {"z1"}))).holds);
}

TEST_CASE("socle dimensions against minimal resolutions") {
    auto r = ring({"x", "y"});
    struct Case {
        std::vector<std::string> gens;
        int expected;
    };
    std::vector<Case> cases = {
        {{"x", "y"}, 1},
        {{"x^2", "x*y", "y^2"}, 2},
        {{"x^2", "y^2"}, 1},
        {{"x^2", "x*y", "y^3"}, 2},
    };
    for (const auto& c : cases) {
        Ideal q(r, polys(r, c.gens));
        auto socle = socle_dimension(q);
        CHECK(socle.socle_dim == c.expected);
        auto res = free_resolution(q, true);
        CHECK(res.ranks.back() == c.expected);
        // number of top-level summands >= socle dimension, equality when minimal
        auto raw = free_resolution(q, false);
        CHECK(raw.ranks.back() >= socle.socle_dim);
    }
    CHECK_THROWS_WITH_AS(socle_dimension(Ideal(r, polys(r, {"x"}))),
                         doctest::Contains("radical"), AlgebraError);
}

TEST_CASE("generic complete intersections through a subvariety") {
    auto Z = quadric_context(3);
    auto r = Z.J_Z.ring();
    Ideal V(r, polys(r, {"z1", "z2", "z3"}));
    auto t = generic_ci_through(V, Z, 2, 12345);
    CHECK(t.length() == 2);
    CHECK(is_complete_intersection_on(Z, t));
    // deterministic for a fixed seed
    auto t2 = generic_ci_through(V, Z, 2, 12345);
    CHECK(t.f == t2.f);

    CHECK_THROWS_WITH_AS(generic_ci_through(Z.J_Z, Z, 1, 1), doctest::Contains("all of Z"),
                         AlgebraError);
}

TEST_CASE("CM counterexample on the quadric cone k=3") {
    auto Z = quadric_context(3);
    auto ce = construct_counterexample_CM(Z, 2, 7);
    CHECK(ce.f.length() == 2);
    CHECK(ce.power_index == 2);
    CHECK(!ce.g.is_zero());
    for (const auto& line : ce.lines) CHECK(replay_certificate_line(line));
    // the sufficient condition must not certify this tuple
    auto verdict = duality_certificate(Z, ce.f);
    CHECK(verdict.status == VerdictStatus::Indeterminate);
}

TEST_CASE("CM counterexample on the quadric cone k=4") {
    auto Z = quadric_context(4);
    auto ce = construct_counterexample_CM(Z, 3, 11);
    CHECK(ce.f.length() == 3);
    for (const auto& line : ce.lines) CHECK(replay_certificate_line(line));
}

TEST_CASE("CM counterexample on the cusp") {
    auto Z = cusp_context();
    auto ce = construct_counterexample_CM(Z, 1, 5);
    CHECK(ce.f.length() == 1);
    for (const auto& line : ce.lines) CHECK(replay_certificate_line(line));
}

TEST_CASE("CM constructor rejects the non-CM surface") {
    auto S = surface_context();
    CHECK_THROWS_WITH_AS(construct_counterexample_CM(S, 1, 1),
                         doctest::Contains("Cohen-Macaulay"), AlgebraError);
}

TEST_CASE("non-CM counterexample on the surface") {
    auto S = surface_context();
    auto ce = construct_counterexample_nonCM(S, 1, 3);
    CHECK(ce.f.length() >= 1);
    CHECK(ce.failing_index == static_cast<int>(ce.f.f.size()) + 1);
    for (const auto& line : ce.lines) CHECK(replay_certificate_line(line));

    CHECK_THROWS_WITH_AS(construct_counterexample_nonCM(S, 2, 3), doctest::Contains("equality"),
                         AlgebraError);
}

TEST_CASE("non-CM constructor rejects CM varieties") {
    auto Q = quadric_context(3);
    CHECK_THROWS_WITH_AS(construct_counterexample_nonCM(Q, 1, 1),
                         doctest::Contains("equality"), AlgebraError);
}

TEST_CASE("counterexample tuples are never certified") {
    // soundness against the sufficient condition: a constructed witness tuple
    // must not satisfy the certified bound
    {
        auto Z = quadric_context(3);
        auto ce = construct_counterexample_CM(Z, 2, 21);
        CHECK(duality_certificate(Z, ce.f).status != VerdictStatus::CertifiedHolds);
    }
    {
        auto Z = quadric_context(4);
        auto ce = construct_counterexample_CM(Z, 3, 22);
        CHECK(duality_certificate(Z, ce.f).status != VerdictStatus::CertifiedHolds);
    }
    {
        auto Z = cusp_context();
        auto ce = construct_counterexample_CM(Z, 1, 23);
        CHECK(duality_certificate(Z, ce.f).status != VerdictStatus::CertifiedHolds);
    }
    {
        auto Z = surface_context();
        auto ce = construct_counterexample_nonCM(Z, 1, 24);
        if (ce.f.length() >= 1)
            CHECK(duality_certificate(Z, ce.f).status != VerdictStatus::CertifiedHolds);
    }
}

TEST_CASE("depth equals the length of an exhibited maximal regular sequence") {
    // Auslander-Buchsbaum cross-check on a Cohen-Macaulay example
    auto Z = quadric_context(3);
    auto s = summarize(Z.resolution, Z.J_Z);
    CHECK(s.depth == 2);
    auto r = Z.J_Z.ring();
    auto reg = is_regular_sequence_on(Z, make_tuple_on_Z(Z, polys(r, {"z1", "z2"})));
    CHECK(reg.regular);  // a regular sequence of length 2 = depth exists
}

TEST_CASE("generic tuple through the coordinate ideal of the surface") {
    auto S = surface_context();
    auto r = S.J_Z.ring();
    Ideal coords(r, polys(r, {"z1", "z2", "z3", "z4"}));
    auto t = generic_ci_through(coords, S, 2, 99);
    CHECK(t.length() == 2);
    CHECK(is_complete_intersection_on(S, t));
}

TEST_CASE("classification consistency with sampled certificates") {
    auto Z = quadric_context(4);
    auto r = Z.J_Z.ring();
    Ideal m(r, polys(r, {"z1", "z2", "z3", "z4"}));
    for (int p = 1; p <= 2; ++p) {
        REQUIRE(p_duality_classification(Z, p).status == VerdictStatus::CertifiedHolds);
        for (uint64_t seed = 1; seed <= 3; ++seed) {
            auto f = generic_ci_through(m, Z, p, seed);
            CHECK(duality_certificate(Z, f).status == VerdictStatus::CertifiedHolds);
        }
    }
}
