#include "vdual/resolution.hpp"

#include <algorithm>

namespace vdual {

namespace {

// Descending lex sort of basis elements by leading monomial keeps the
// Schreyer construction inside the Hilbert length bound.
void sort_for_schreyer(std::vector<ModuleElement>& gens, const ModuleOrder& ord,
                       const RingSpec& ring) {
    std::stable_sort(gens.begin(), gens.end(), [&](const ModuleElement& a, const ModuleElement& b) {
        ModuleLead la = leading_term(a, ord);
        ModuleLead lb = leading_term(b, ord);
        Cmp c = monomial_compare(la.m, lb.m, MonomialOrder::lex(), ring);
        if (c != Cmp::Equal) return c == Cmp::Greater;
        return la.pos < lb.pos;
    });
}

bool entry_is_unit(const Polynomial& p) { return !p.is_zero() && p.is_constant(); }

PolyMatrix drop_row_col(const PolyMatrix& m, int row, int col) {
    PolyMatrix out = PolyMatrix::zero(m.ring, m.rows - (row >= 0 ? 1 : 0),
                                      m.cols - (col >= 0 ? 1 : 0));
    int rr = 0;
    for (int r = 0; r < m.rows; ++r) {
        if (r == row) continue;
        int cc = 0;
        for (int c = 0; c < m.cols; ++c) {
            if (c == col) continue;
            out.at(rr, cc) = m.at(r, c);
            ++cc;
        }
        ++rr;
    }
    return out;
}

} // namespace

FreeComplex free_resolution(const Ideal& I, bool minimal) {
    const RingPtr& ring = I.ring();
    if (!ring) fail("InvalidRing", "resolution of an ideal without a ring");
    if (minimal) {
        for (const auto& g : I.generators())
            if (!weighted_degree(g).homogeneous())
                fail("NotHomogeneous",
                     "minimal resolutions need a weighted-homogeneous ideal; offending "
                     "generator: " + to_string(g));
    }
    if (I.is_unit()) fail("UnitIdeal", "cannot resolve O/(1)");

    FreeComplex c;
    c.ring = ring;
    c.ranks = {1};
    const auto& gb = I.groebner();
    if (gb.generators.empty()) {
        c.degrees = std::vector<std::vector<long>>{{0}};
        return c;  // O/(0) = O is already free
    }

    bool graded = true;
    for (const auto& g : gb.generators)
        if (!weighted_degree(g).homogeneous()) graded = false;

    std::vector<std::vector<long>> degrees{{0}};

    ModuleBasis current;
    current.ring = ring;
    current.rank = 1;
    current.order = ModuleOrder::pot(gb.order);
    for (const auto& g : gb.generators) current.generators.push_back(ModuleElement{{g}});
    sort_for_schreyer(current.generators, *current.order, *ring);

    auto append_level = [&](const std::vector<ModuleElement>& gens, int prev_rank) {
        PolyMatrix d = PolyMatrix::zero(ring, prev_rank, static_cast<int>(gens.size()));
        for (size_t j = 0; j < gens.size(); ++j)
            for (int i = 0; i < prev_rank; ++i)
                d.at(i, static_cast<int>(j)) = gens[j].coords[static_cast<size_t>(i)];
        c.differentials.push_back(std::move(d));
        c.ranks.push_back(static_cast<int>(gens.size()));
        if (graded) {
            const auto& prev = degrees.back();
            std::vector<long> level;
            for (const auto& g : gens) {
                long deg = 0;
                bool found = false;
                for (size_t i = 0; i < g.coords.size() && !found; ++i) {
                    if (g.coords[i].is_zero()) continue;
                    auto wd = weighted_degree(g.coords[i]);
                    if (!wd.homogeneous()) {
                        graded = false;
                        break;
                    }
                    deg = wd.degree + prev[i];
                    found = true;
                }
                level.push_back(deg);
            }
            if (graded) degrees.push_back(std::move(level));
        }
    };

    append_level(current.generators, 1);

    int guard = ring->n() + 3;
    for (int level = 2; level <= guard + 1; ++level) {
        SchreyerStep step = schreyer_syzygies(current);
        if (step.syzygies.empty()) break;
        if (level > guard) fail("Internal", "resolution exceeded the expected length bound");
        ModuleBasis next = module_buchberger(step.syzygies, ring,
                                             static_cast<int>(current.generators.size()),
                                             step.order);
        sort_for_schreyer(next.generators, *next.order, *ring);
        append_level(next.generators, static_cast<int>(current.generators.size()));
        current = std::move(next);
    }

    if (graded) c.degrees = std::move(degrees);
    if (minimal) {
        c = minimalize(std::move(c));
        auto check = verify_complex(c);
        if (!check.ok) fail("Internal", "minimalized resolution broke: " + check.message);
    }
    return c;
}

FreeComplex minimalize(FreeComplex c) {
    for (;;) {
        int kk = -1, i0 = -1, j0 = -1;
        for (int k = 1; k <= c.length() && kk < 0; ++k) {
            const PolyMatrix& d = c.diff(k);
            for (int i = 0; i < d.rows && kk < 0; ++i)
                for (int j = 0; j < d.cols && kk < 0; ++j)
                    if (entry_is_unit(d.at(i, j))) {
                        kk = k;
                        i0 = i;
                        j0 = j;
                    }
        }
        if (kk < 0) break;

        PolyMatrix& d = c.differentials[static_cast<size_t>(kk) - 1];
        mpq_class alpha = d.at(i0, j0).constant_coefficient();
        PolyMatrix reduced = drop_row_col(d, i0, j0);
        {
            int rr = 0;
            for (int r = 0; r < d.rows; ++r) {
                if (r == i0) continue;
                int cc = 0;
                for (int col = 0; col < d.cols; ++col) {
                    if (col == j0) continue;
                    if (!d.at(r, j0).is_zero() && !d.at(i0, col).is_zero()) {
                        Polynomial corr = d.at(r, j0) * d.at(i0, col);
                        reduced.at(rr, cc) = reduced.at(rr, cc) - corr.scaled(mpq_class(1) / alpha);
                    }
                    ++cc;
                }
                ++rr;
            }
        }
        d = std::move(reduced);
        if (kk + 1 <= c.length())
            c.differentials[static_cast<size_t>(kk)] =
                drop_row_col(c.diff(kk + 1), j0, -1);
        if (kk - 1 >= 1)
            c.differentials[static_cast<size_t>(kk) - 2] =
                drop_row_col(c.diff(kk - 1), -1, i0);
        c.ranks[static_cast<size_t>(kk)] -= 1;
        c.ranks[static_cast<size_t>(kk) - 1] -= 1;
        if (c.degrees) {
            auto& degs = *c.degrees;
            degs[static_cast<size_t>(kk)].erase(degs[static_cast<size_t>(kk)].begin() + j0);
            degs[static_cast<size_t>(kk) - 1].erase(degs[static_cast<size_t>(kk) - 1].begin() + i0);
        }
    }
    while (c.ranks.size() > 1 && c.ranks.back() == 0) {
        c.ranks.pop_back();
        c.differentials.pop_back();
        if (c.degrees) c.degrees->pop_back();
    }
    return c;
}

ResolutionSummary summarize(const FreeComplex& res, const Ideal& I) {
    if (!res.ring || !I.ring()) fail("InvalidRing", "summary needs ring data");
    require_same_ring(res.ring, I.ring());
    if (!res.degrees)
        fail("NotHomogeneous", "summary invariants need a graded (weighted-homogeneous) resolution");
    for (int k = 1; k <= res.length(); ++k) {
        const PolyMatrix& d = res.diff(k);
        for (const auto& p : d.entries)
            if (entry_is_unit(p))
                fail("NotMinimal", "resolution has a unit entry in differential " +
                                       std::to_string(k));
    }
    // the first differential must present the same ideal
    std::vector<Polynomial> row;
    if (res.length() >= 1) {
        const PolyMatrix& d1 = res.diff(1);
        if (d1.rows != 1) fail("ResolutionMismatch", "level-0 rank is not 1");
        row.assign(d1.entries.begin(), d1.entries.end());
    }
    Ideal presented(I.ring(), row);
    if (!ideal_equal(presented, I))
        fail("ResolutionMismatch", "resolution does not present the given ideal");

    ResolutionSummary s;
    s.betti = res.ranks;
    s.projective_dimension = res.length();
    s.depth = I.ring()->n() - s.projective_dimension;
    s.is_cohen_macaulay = (s.projective_dimension == dimension(I).codim);
    return s;
}

} // namespace vdual
