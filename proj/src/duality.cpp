#include "vdual/duality.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace vdual {

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::CertifiedHolds: return "certified_holds";
        case VerdictStatus::FailsWithWitness: return "fails_with_witness";
        case VerdictStatus::FailsAtNearbyPoint: return "fails_at_nearby_point";
        case VerdictStatus::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

VarietyContext build_variety_context(const Ideal& J_Z) {
    if (!J_Z.declared_radical() || !J_Z.declared_pure_dimensional())
        fail("MissingDeclaration",
             "variety context needs declared_radical and declared_pure_dimensional");
    VarietyContext Z;
    Z.J_Z = J_Z;
    auto d = dimension(J_Z);
    if (d.dim < 0) fail("DegenerateInput", "the unit ideal does not cut a variety");
    Z.p_Z = d.codim;
    Z.dim_Z = d.dim;
    auto loci = compute_loci(J_Z);
    Z.resolution = std::move(loci.minimal_resolution);
    Z.loci = std::move(loci.report);
    return Z;
}

TupleOnZ make_tuple_on_Z(const VarietyContext& Z, std::vector<Polynomial> f) {
    for (const auto& p : f) {
        if (p.is_zero()) fail("InvalidInput", "tuple entry is zero");
        require_same_ring(p.ring(), Z.J_Z.ring());
        if (membership(p, Z.J_Z))
            fail("InvalidInput", "tuple entry " + to_string(p) + " vanishes on Z");
    }
    return TupleOnZ{std::move(f)};
}

bool replay_certificate_line(const CertificateLine& line) {
    Ideal I(line.lhs.ring(), line.ideal_gens);
    return membership(line.lhs, I) == line.expect_member;
}

namespace {

Ideal tuple_ideal(const VarietyContext& Z, const TupleOnZ& f) {
    std::vector<Polynomial> gens = Z.J_Z.generators();
    gens.insert(gens.end(), f.f.begin(), f.f.end());
    return Ideal(Z.J_Z.ring(), std::move(gens));
}

CertificateLine member_line(const Polynomial& lhs, const Ideal& I, std::string note) {
    return CertificateLine{true, lhs, I.generators(), std::move(note)};
}

CertificateLine non_member_line(const Polynomial& lhs, const Ideal& I, std::string note) {
    return CertificateLine{false, lhs, I.generators(), std::move(note)};
}

} // namespace

bool is_complete_intersection_on(const VarietyContext& Z, const TupleOnZ& f) {
    if (f.length() == 0) return true;
    auto d = dimension(tuple_ideal(Z, f));
    return d.codim == Z.p_Z + f.length();
}

DualityVerdict duality_certificate(const VarietyContext& Z, const TupleOnZ& f) {
    if (!is_complete_intersection_on(Z, f))
        fail("NotCompleteIntersection", "the tuple is not a complete intersection on Z");
    int p = f.length();
    int n = Z.J_Z.ring()->n();
    Ideal base = tuple_ideal(Z, f);

    DualityVerdict v;
    bool all_ok = true;
    for (const auto& entry : Z.loci.intrinsic) {
        ConditionRow row;
        row.k = entry.k;
        row.bound = entry.k + p + 1;
        if (entry.empty) {
            row.empty_locus = true;
            row.ok = true;
        } else {
            Ideal meet = ideal_sum(base, entry.ideal);
            auto d = dimension(meet);
            if (d.dim < 0) {
                row.empty_locus = true;
                row.ok = true;
            } else {
                row.codim = (n - d.dim) - Z.p_Z;
                row.ok = row.codim >= row.bound;
            }
        }
        all_ok = all_ok && row.ok;
        v.table.push_back(row);
    }
    if (all_ok) {
        v.status = VerdictStatus::CertifiedHolds;
    } else {
        v.status = VerdictStatus::Indeterminate;
        v.note = "the sufficient codimension bound fails; no refutation is implied";
    }
    return v;
}

DualityVerdict p_duality_classification(const VarietyContext& Z, int p) {
    if (p < 1 || p > Z.dim_Z) fail("OutOfRange", "p must satisfy 1 <= p <= dim Z");
    DualityVerdict v;
    bool certified = true;
    bool weak = true;
    int equality_k = -1;
    for (const auto& entry : Z.loci.intrinsic) {
        ConditionRow row;
        row.k = entry.k;
        row.bound = p + entry.k + 1;
        row.empty_locus = entry.empty;
        if (entry.empty) {
            row.ok = true;
        } else {
            row.codim = entry.codim;
            row.ok = entry.codim >= row.bound;
            if (entry.codim < p + entry.k) weak = false;
            if (entry.codim == p + entry.k) {
                if (entry.k >= 1 && (equality_k < 1 || equality_k == 0))
                    equality_k = entry.k;  // prefer the k >= 1 branch
                else if (equality_k < 0)
                    equality_k = entry.k;
            }
        }
        certified = certified && row.ok;
        v.table.push_back(row);
    }
    if (certified) {
        v.status = VerdictStatus::CertifiedHolds;
        return v;
    }
    if (weak && equality_k >= 0) {
        v.status = VerdictStatus::FailsAtNearbyPoint;
        CounterexampleWitness w;
        w.existence_only = true;
        w.equality_k = equality_k;
        w.branch = equality_k >= 1 ? "non-cohen-macaulay" : "cohen-macaulay";
        v.witness = std::move(w);
        return v;
    }
    v.status = VerdictStatus::Indeterminate;
    v.note = "codimension data is below every counterexample branch; the converse is open";
    return v;
}

RegularSequenceResult is_regular_sequence_on(const VarietyContext& Z, const TupleOnZ& f) {
    RegularSequenceResult r;
    Ideal prev = Z.J_Z;
    for (int idx = 1; idx <= f.length(); ++idx) {
        const Polynomial& fk = f.f[static_cast<size_t>(idx - 1)];
        if (prev.is_unit()) fail("DegenerateInput", "quotient ring already vanished");
        if (membership(fk, prev)) {
            r.regular = false;
            r.failing_index = idx;
            r.witness = Polynomial::constant(fk.ring(), 1);
            r.lines.push_back(member_line(fk, prev, "f_k already lies in the previous ideal"));
            return r;
        }
        Ideal c = colon(prev, fk);
        for (const auto& g : c.groebner().generators) {
            if (!membership(g, prev)) {
                r.regular = false;
                r.failing_index = idx;
                r.witness = g;
                r.lines.push_back(member_line(g * fk, prev, "g * f_k lies in the previous ideal"));
                r.lines.push_back(non_member_line(g, prev, "g itself does not"));
                return r;
            }
        }
        prev = ideal_sum(prev, Ideal(fk.ring(), {fk}));
    }
    return r;
}

DepthConditionResult depth_condition_Z1(const VarietyContext& Z, int q) {
    if (q < 1) fail("OutOfRange", "depth bound must be >= 1");
    DepthConditionResult r;
    for (const auto& entry : Z.loci.intrinsic) {
        if (entry.k < 1) continue;
        ConditionRow row;
        row.k = entry.k;
        row.bound = q + entry.k;
        row.empty_locus = entry.empty;
        row.codim = entry.empty ? 0 : entry.codim;
        row.ok = entry.empty || entry.codim >= row.bound;
        r.holds = r.holds && row.ok;
        r.table.push_back(row);
    }
    return r;
}

TensorConditionResult tensor_condition(const VarietyContext& Z, const TupleOnZ& f) {
    if (!is_complete_intersection_on(Z, f))
        fail("NotCompleteIntersection", "the tuple is not a complete intersection on Z");
    TensorConditionResult r;
    int p = f.length();
    int n = Z.J_Z.ring()->n();
    Ideal base = tuple_ideal(Z, f);
    for (const auto& entry : Z.loci.intrinsic) {
        if (entry.k < 1) continue;
        ConditionRow row;
        row.k = entry.k;
        row.bound = p + entry.k;
        if (entry.empty) {
            row.empty_locus = true;
            row.ok = true;
        } else {
            auto d = dimension(ideal_sum(base, entry.ideal));
            if (d.dim < 0) {
                row.empty_locus = true;
                row.ok = true;
            } else {
                row.codim = (n - d.dim) - Z.p_Z;
                row.ok = row.codim >= row.bound;
            }
        }
        r.holds = r.holds && row.ok;
        r.table.push_back(row);
    }
    return r;
}

namespace {

// Standard monomials of O/I for an Artinian I, sorted ascending in the
// ring's order.
std::vector<Monomial> staircase_basis(const Ideal& I) {
    const auto& gb = I.groebner();
    const RingPtr& ring = I.ring();
    std::vector<Monomial> lts;
    for (const auto& g : gb.generators) lts.push_back(leading_term(g, gb.order).m);
    auto reducible = [&](const Monomial& m) {
        for (const auto& l : lts)
            if (monomial_divides(l, m)) return true;
        return false;
    };
    std::set<std::vector<int>> seen;
    std::vector<Monomial> todo{monomial_one(ring->n())};
    std::vector<Monomial> basis;
    while (!todo.empty()) {
        Monomial m = todo.back();
        todo.pop_back();
        if (seen.count(m.e)) continue;
        seen.insert(m.e);
        if (reducible(m)) continue;
        basis.push_back(m);
        if (basis.size() > 20000) fail("NotArtinian", "staircase basis is not finite");
        for (int i = 0; i < ring->n(); ++i) {
            Monomial next = m;
            next.e[static_cast<size_t>(i)] += 1;
            todo.push_back(std::move(next));
        }
    }
    std::sort(basis.begin(), basis.end(), [&](const Monomial& a, const Monomial& b) {
        return monomial_compare(a, b, gb.order, *ring) == Cmp::Less;
    });
    return basis;
}

// Rank over Q of the span of the normal forms, in staircase coordinates.
int rank_of_normal_forms(const std::vector<Polynomial>& polys, const Ideal& I,
                         const std::vector<Monomial>& basis) {
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& p : polys) {
        Polynomial nf = normal_form(p, I.groebner());
        if (nf.is_zero()) continue;
        std::vector<mpq_class> row(basis.size(), mpq_class(0));
        for (const Term& t : nf.terms()) {
            auto it = std::find_if(basis.begin(), basis.end(),
                                   [&](const Monomial& m) { return m == t.m; });
            if (it == basis.end()) fail("Internal", "normal form left the staircase basis");
            row[static_cast<size_t>(it - basis.begin())] = t.c;
        }
        rows.push_back(std::move(row));
    }
    // Gaussian elimination
    int rank = 0;
    size_t cols = basis.size();
    for (size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        size_t pivot = rows.size();
        for (size_t r = static_cast<size_t>(rank); r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[pivot]);
        const mpq_class lead = rows[static_cast<size_t>(rank)][col];
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<size_t>(rank) || rows[r][col] == 0) continue;
            mpq_class factor = rows[r][col] / lead;
            for (size_t c2 = col; c2 < cols; ++c2)
                rows[r][c2] -= factor * rows[static_cast<size_t>(rank)][c2];
        }
        ++rank;
    }
    return rank;
}

Ideal maximal_ideal(const RingPtr& ring) {
    std::vector<Polynomial> vars;
    for (int i = 0; i < ring->n(); ++i) vars.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(vars), /*declared_radical=*/true, true);
}

} // namespace

SocleData socle_dimension(const Ideal& q) {
    const RingPtr& ring = q.ring();
    for (int i = 0; i < ring->n(); ++i)
        if (!radical_membership(Polynomial::variable(ring, i), q))
            fail("NotArtinian", "variable " + ring->variable(i) + " is not in the radical of q");
    if (q.is_unit()) fail("NotArtinian", "q is the unit ideal");

    SocleData out;
    out.q = q;
    out.staircase = staircase_basis(q);

    Ideal m = maximal_ideal(ring);
    Ideal socle_ideal = colon(q, m);
    out.socle_dim = rank_of_normal_forms(socle_ideal.generators(), q, out.staircase);
    return out;
}

namespace {

Polynomial random_combination(const std::vector<Polynomial>& gens, const RingPtr& ring,
                              std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-10, 10);
    Polynomial acc(ring);
    for (const auto& g : gens) acc = acc + g.scaled(mpq_class(coeff(rng)));
    return acc;
}

// Generators grouped by weighted degree.  Combining within one class keeps
// every candidate quasi-homogeneous, so the cut stays a cone and germ
// questions at the origin remain global ones.  Inhomogeneous input collapses
// to a single class.
std::vector<std::vector<Polynomial>> degree_classes(const std::vector<Polynomial>& gens) {
    std::map<long, std::vector<Polynomial>> by_degree;
    for (const auto& g : gens) {
        auto wd = weighted_degree(g);
        if (!wd.homogeneous()) return {gens};
        by_degree[wd.degree].push_back(g);
    }
    std::vector<std::vector<Polynomial>> out;
    for (auto& [d, v] : by_degree) out.push_back(std::move(v));
    return out;
}

Polynomial generic_candidate(const std::vector<std::vector<Polynomial>>& classes,
                             const RingPtr& ring, std::mt19937_64& rng, int attempt) {
    size_t n_classes = classes.size();
    if (attempt < 24 || n_classes == 1)
        return random_combination(classes[static_cast<size_t>(attempt) % n_classes], ring, rng);
    // cross-degree mix as a last resort
    Polynomial acc(ring);
    for (const auto& cls : classes) acc = acc + random_combination(cls, ring, rng);
    return acc;
}

} // namespace

TupleOnZ generic_ci_through(const Ideal& V, const VarietyContext& Z, int target_codim,
                            uint64_t seed) {
    require_same_ring(V.ring(), Z.J_Z.ring());
    Ideal inside_Z = ideal_sum(V, Z.J_Z);
    int codim_in_Z = dimension(inside_Z).codim - Z.p_Z;
    if (codim_in_Z <= 0) fail("DegenerateInput", "V is all of Z");
    if (target_codim < 1 || target_codim > codim_in_Z)
        fail("CodimOutOfRange", "target codimension must lie in 1..codim_Z(V)");

    std::mt19937_64 rng(seed);
    auto classes = degree_classes(V.generators());
    std::vector<Polynomial> chosen;
    Ideal current = Z.J_Z;
    for (int j = 1; j <= target_codim; ++j) {
        bool found = false;
        for (int attempt = 0; attempt < 32 && !found; ++attempt) {
            Polynomial cand = generic_candidate(classes, V.ring(), rng, attempt);
            if (cand.is_zero() || membership(cand, Z.J_Z)) continue;
            Ideal next = ideal_sum(current, Ideal(V.ring(), {cand}));
            if (dimension(next).codim != Z.p_Z + j) continue;
            chosen.push_back(std::move(cand));
            current = std::move(next);
            found = true;
        }
        if (!found)
            fail("GenericityExhausted",
                 "no generic combination advanced the codimension at step " + std::to_string(j));
    }
    return make_tuple_on_Z(Z, std::move(chosen));
}

namespace {

bool variety_contained_in(const Ideal& inner, const Ideal& outer_cut) {
    // V(inner) ⊆ V(outer_cut)  iff  outer_cut ⊆ √inner
    for (const auto& g : outer_cut.generators())
        if (!radical_membership(g, inner)) return false;
    return true;
}

} // namespace

Counterexample construct_counterexample_CM(const VarietyContext& Z, int q, uint64_t seed) {
    const RingPtr& ring = Z.J_Z.ring();
    if (Z.resolution.length() != Z.p_Z)
        fail("NotCM", "the variety is not Cohen-Macaulay at the origin");
    const LocusEntry* z0 = Z.loci.intrinsic_entry(0);
    if (!z0 || z0->empty)
        fail("CodimOutOfRange", "smooth variety: no singular locus to run through");
    int k_sing = z0->codim;
    if (q < k_sing || q > Z.dim_Z)
        fail("CodimOutOfRange", "q must satisfy codim_Z(Z_sing) <= q <= dim Z");

    std::mt19937_64 rng(seed);
    std::vector<Polynomial> tuple;
    Ideal current = Z.J_Z;
    // first k_sing entries cut exactly the singular locus
    {
        TupleOnZ head = generic_ci_through(z0->ideal, Z, k_sing, rng());
        Ideal head_ideal = tuple_ideal(Z, head);
        if (!variety_contained_in(head_ideal, z0->ideal))
            fail("SingularLocusNotCI",
                 "the generic tuple does not cut the singular locus exactly");
        tuple = head.f;
        current = head_ideal;
    }
    // extend to codimension q with generic coordinate combinations
    std::vector<Polynomial> vars;
    for (int i = 0; i < ring->n(); ++i) vars.push_back(Polynomial::variable(ring, i));
    auto coord_classes = degree_classes(vars);
    for (int j = k_sing + 1; j <= q; ++j) {
        bool found = false;
        for (int attempt = 0; attempt < 32 && !found; ++attempt) {
            Polynomial cand = generic_candidate(coord_classes, ring, rng, attempt);
            if (cand.is_zero() || membership(cand, Z.J_Z)) continue;
            Ideal next = ideal_sum(current, Ideal(ring, {cand}));
            if (dimension(next).codim != Z.p_Z + j) continue;
            tuple.push_back(std::move(cand));
            current = std::move(next);
            found = true;
        }
        if (!found) fail("GenericityExhausted", "could not extend the tuple to codim " +
                                                    std::to_string(j));
    }

    Counterexample out;
    out.f = make_tuple_on_Z(Z, tuple);
    Ideal I = current;  // J(f) + J_Z
    auto dI = dimension(I);

    Ideal J_V;
    if (dI.dim == 0) {
        J_V = maximal_ideal(ring);
    } else {
        // ideal with the right zero set; radicality is not certified here
        std::vector<Polynomial> gens = z0->ideal.generators();
        for (size_t i = static_cast<size_t>(k_sing); i < out.f.f.size(); ++i)
            gens.push_back(out.f.f[i]);
        J_V = Ideal(ring, std::move(gens));
        out.note = "V is positive-dimensional; J_V is a set-theoretic cut, not a certified radical";
    }

    out.power_index = power_containment_index(J_V, I);
    int m = out.power_index;

    // witness: smallest staircase monomial inside J_V^(m-1), falling back to
    // the generators of J_V^(m-1) themselves
    Polynomial g(ring);
    if (dI.dim == 0) {
        Ideal JVm1 = ideal_power(J_V, m - 1);
        for (const auto& mono : staircase_basis(I)) {
            Polynomial cand = Polynomial::monomial_term(ring, mono, 1);
            if (membership(cand, JVm1)) {
                g = cand;
                break;
            }
        }
    }
    if (g.is_zero()) {
        Ideal JVm1 = ideal_power(J_V, m - 1);
        for (const auto& cand : JVm1.generators()) {
            if (!membership(cand, I)) {
                g = cand;
                break;
            }
        }
    }
    if (g.is_zero()) fail("Internal", "no witness in J_V^(m-1) outside I despite minimal m");
    out.g = g;

    out.lines.push_back(non_member_line(g, I, "g is not in J(f) + J_Z"));
    for (const auto& h : J_V.generators())
        out.lines.push_back(member_line(g * h, I, "g * generator of J_V lies in J(f) + J_Z"));
    for (const auto& line : out.lines)
        if (!replay_certificate_line(line)) fail("Internal", "certificate failed to replay");
    return out;
}

Counterexample construct_counterexample_nonCM(const VarietyContext& Z, int p, uint64_t seed) {
    if (p < 1 || p > Z.dim_Z) fail("OutOfRange", "p must satisfy 1 <= p <= dim Z");
    bool weak = true;
    bool equality_high = false;
    for (const auto& entry : Z.loci.intrinsic) {
        if (entry.empty) continue;
        if (entry.codim < entry.k + p) weak = false;
        if (entry.k >= 1 && entry.codim == entry.k + p) equality_high = true;
    }
    if (!weak || !equality_high)
        fail("ConditionNotMet",
             "need codim_Z Z^k >= k + p for all k with equality for some k >= 1");

    const LocusEntry* z1 = Z.loci.intrinsic_entry(1);
    if (!z1 || z1->empty) fail("ConditionNotMet", "Z^1 is empty");

    TupleOnZ tuple = generic_ci_through(z1->ideal, Z, p + 1, seed);
    RegularSequenceResult reg = is_regular_sequence_on(Z, tuple);
    if (reg.regular)
        fail("Internal",
             "a (p+1)-tuple through Z^1 cannot be a regular sequence when the depth bound fails");

    Counterexample out;
    out.failing_index = reg.failing_index;
    std::vector<Polynomial> prefix(tuple.f.begin(),
                                   tuple.f.begin() + (reg.failing_index - 1));
    out.f = TupleOnZ{std::move(prefix)};
    out.g = *reg.witness;
    out.lines = reg.lines;
    out.note = "zero divisor at index " + std::to_string(reg.failing_index) +
               "; strict inclusion holds for the prefix tuple";
    for (const auto& line : out.lines)
        if (!replay_certificate_line(line)) fail("Internal", "certificate failed to replay");
    return out;
}

} // namespace vdual
