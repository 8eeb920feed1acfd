#include <gtest/gtest.h>

#include <functional>

#include "betti/predictor.hpp"

using namespace betti;

namespace {

ResolutionShape lit(std::vector<GradedFreeModule> mods) {
    ResolutionShape r;
    r.modules.push_back(GradedFreeModule{{0, 1}});
    for (auto& m : mods) r.modules.push_back(std::move(m));
    return r;
}

std::vector<DegreeTuple> tuples(int n, int maxd) {
    std::vector<DegreeTuple> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == n + 1) {
            out.emplace_back(n, cur);
            return;
        }
        for (int v = lo; v <= maxd; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

bool has_ghost(const Prediction& p, int pos, int twist, GhostReason r) {
    for (const auto& g : p.ghosts)
        if (g.pos == pos && g.twist == twist && g.reason == r) return true;
    return false;
}

}  // namespace

TEST(GorOnePeak, Tuple5555x10) {
    const DegreeTuple t(4, {5, 5, 5, 5, 10});
    EXPECT_EQ(gor_one_peak(4, 3, t), lit({{{4, 25}}, {{5, 48}}, {{6, 25}}, {{10, 1}}}));
    EXPECT_THROW(gor_one_peak(4, 2, t), ProfileMismatch);
}

TEST(GorOnePeak, Tuple3555x10Twists) {
    const ResolutionShape g = gor_one_peak(4, 2, DegreeTuple(4, {3, 5, 5, 5, 10}));
    std::vector<int> twists;
    for (int i = 1; i <= 4; ++i)
        for (const auto& [j, m] : g.modules[static_cast<std::size_t>(i)].twists()) twists.push_back(j);
    EXPECT_EQ(twists, (std::vector<int>{3, 4, 5, 8}));
}

TEST(GorOnePeak, ThreeVariables) {
    const ResolutionShape g = gor_one_peak(3, 1);
    EXPECT_EQ(g.mult(1, 2), 5);
    EXPECT_TRUE(check_gorenstein_symmetry(to_table(g), 2, 3));
}

TEST(GorTwoPeaks, Examples) {
    EXPECT_EQ(gor_two_peaks_even(4, 4), lit({{{4, 15}}, {{5, 14}, {6, 14}}, {{7, 15}}, {{11, 1}}}));
    EXPECT_EQ(hilbert_from_betti(gor_two_peaks_even(4, 2), 4).values, (std::vector<Int>{1, 4, 4, 1}));
    EXPECT_EQ(gor_two_peaks_even(4, 2), lit({{{2, 6}}, {{3, 5}, {4, 5}}, {{5, 6}}, {{7, 1}}}));
    const ResolutionShape g6 = gor_two_peaks_even(6, 2);
    EXPECT_TRUE(check_gorenstein_symmetry(to_table(g6), 3, 6));
    for (int i = 1; i <= 3; ++i) EXPECT_GT(two_peaks_alpha(6, 2, i), 0);
    EXPECT_THROW(gor_two_peaks_even(5, 2), OddDimension);
}

TEST(GorTwoPeaks, OddBoundsBlocksCancel) {
    const Prediction p = gor_two_peaks_odd_bounds(5, 2);
    EXPECT_FALSE(p.all_exact());
    EXPECT_TRUE(p.shape.rank_identity());
    EXPECT_TRUE(p.shape.chern_identity());
    ASSERT_EQ(p.families.size(), 1u);
    const ResolutionShape low = p.instantiate({p.families[0].lo});
    EXPECT_TRUE(low.rank_identity());
    EXPECT_TRUE(low.chern_identity());
    EXPECT_THROW(gor_two_peaks_odd_bounds(4, 2), EvenDimension);
}

TEST(AciOnePeak, Tuple5555x10) {
    const Prediction p = aci_one_peak(DegreeTuple(4, {5, 5, 5, 5, 10}));
    EXPECT_EQ(p.shape, lit({{{5, 4}, {10, 1}}, {{10, 6}, {14, 25}}, {{15, 52}}, {{16, 25}}}));
    EXPECT_TRUE(p.all_exact());
    EXPECT_EQ(p.source, "Cor3.6");
}

TEST(AciOnePeak, Tuple3555x10Ghosts) {
    const Prediction p = aci_one_peak(DegreeTuple(4, {3, 5, 5, 5, 10}));
    EXPECT_EQ(p.shape.mult(4, 15), 15);
    EXPECT_EQ(p.shape.mult(3, 15), 0);
    EXPECT_TRUE(has_ghost(p, 2, 13, GhostReason::NonSplittingOverlap));
    EXPECT_TRUE(has_ghost(p, 1, 10, GhostReason::KoszulVsGenerator));
    EXPECT_THROW(aci_one_peak(DegreeTuple(4, {4, 4, 4, 4, 5})), HypothesisNotMet);
}

TEST(AciTwoPeaks, RuleB) {
    const DegreeTuple t(4, {2, 2, 4, 4, 5});
    const Prediction p = aci_two_peaks_even(t);
    EXPECT_EQ(gorenstein_profile(t).ell, 1);
    // one R(-8) pair at positions (2, 3) cancels
    const ResolutionShape cone = mapping_cone_aci(gor_two_peaks_even(4, 2), t);
    EXPECT_EQ(cone.mult(3, 8) - p.shape.mult(3, 8), 1);
    EXPECT_EQ(cone.mult(2, 8) - p.shape.mult(2, 8), 1);
    EXPECT_THROW(aci_two_peaks_even(DegreeTuple(3, {2, 3, 3, 3})), HypothesisNotMet);
}

TEST(AciTwoPeaks, Tuple44449) {
    // every d_i > l + 1 and no rule b match
    const DegreeTuple t(4, {4, 4, 4, 4, 9});
    const GorensteinProfile g = gorenstein_profile(t);
    ASSERT_EQ(g.peak_count, 2);
    ASSERT_EQ(g.ell, 1);
    const int l = g.ell, d = 16;
    const Int a = binom(l + 3, 2), b = a - 1;
    ResolutionShape want = lit({{{4, 4}, {9, 1}}, {{8, 6}}, {{12, 4}}, {{d - l - 1, a}}});
    want.modules[2].add(d - l - 4, a);
    want.modules[3].add(d - l - 2, b);
    want.modules[3].add(d - l - 3, b);
    EXPECT_EQ(aci_two_peaks_even(t).shape, want);
}

TEST(AciTwoPeaks, OddDimensionBounds) {
    const DegreeTuple t(5, {2, 2, 2, 2, 3, 3});
    const Prediction p = aci_two_peaks_odd_bounds(t);
    EXPECT_FALSE(p.all_exact());
    EXPECT_EQ(p.source, "Rem3.13");
}

TEST(GorN3, Cases) {
    // Case II, l = 0, delta = 1
    EXPECT_EQ(gor_n3_generic(DegreeTuple(3, {4, 4, 4, 8})), lit({{{1, 2}, {2, 1}}, {{3, 2}, {2, 1}}, {{4, 1}}}));
    // Case I, l = 1
    EXPECT_EQ(gor_n3_generic(DegreeTuple(3, {2, 3, 5, 5})), lit({{{2, 5}}, {{3, 5}}, {{5, 1}}}));
    // (3,6,6,7): Case II, l = 2, delta = 1
    EXPECT_EQ(gor_n3_generic(DegreeTuple(3, {3, 6, 6, 7})), lit({{{3, 4}, {4, 1}}, {{5, 4}, {4, 1}}, {{8, 1}}}));
}

TEST(AciN3, Tuple4448) {
    const Prediction p = aci_n3(DegreeTuple(3, {4, 4, 4, 8}));
    EXPECT_EQ(p.shape, lit({{{4, 3}, {8, 1}}, {{8, 3}, {9, 2}, {10, 1}}, {{10, 1}, {11, 2}}}));
    EXPECT_EQ(p.source, "Thm4.2-CaseII");
    EXPECT_TRUE(has_ghost(p, 2, 10, GhostReason::NonSplittingOverlap));
}

TEST(AciN3, CaseISplit) {
    const DegreeTuple t(3, {2, 3, 5, 5});
    const Prediction p = aci_n3(t);
    const ResolutionShape cone = mapping_cone_aci(gor_n3_generic(t), t);
    EXPECT_EQ(cone.mult(3, 8) - p.shape.mult(3, 8), 1);
    EXPECT_EQ(p.source, "Thm4.2-CaseI");
}

TEST(AciN3, Equal) {
    EXPECT_EQ(aci_n3_equal(4).shape, lit({{{4, 4}}, {{8, 3}, {7, 4}}, {{9, 4}}}));
    EXPECT_EQ(aci_n3_equal(2).shape, lit({{{2, 4}}, {{4, 3}, {3, 2}}, {{5, 2}}}));
    for (int a = 2; a <= 12; ++a) {
        const DegreeTuple t(3, {a, a, a, a});
        ASSERT_EQ(aci_n3_equal(a).shape, aci_n3(t).shape) << a;
        ASSERT_EQ(aci_samedeg(3, a).shape, aci_n3(t).shape) << a;
        ASSERT_TRUE(detect_ghosts(aci_n3(t), t).empty()) << a;
    }
}

TEST(AciN3, CaseTwoRulesExclusive) {
    for (const auto& t : tuples(3, 10)) {
        if (t.classification() != Classification::ProperACI) continue;
        const N3SplitRules r = n3_case2_rules(t);
        ASSERT_FALSE(r.i && r.ii) << t.str();
        ASSERT_FALSE(r.i && r.iii) << t.str();
        if (r.ii) ASSERT_TRUE(r.iii) << t.str();
        const Prediction p = aci_n3(t);
        const ResolutionShape cone = mapping_cone_aci(gor_n3_generic(t), t);
        ASSERT_LE(cone.modules[2].rank() - p.shape.modules[2].rank(), 1) << t.str();
    }
}

TEST(SameDeg, Params) {
    SameDegParams p = samedeg_params(4, 4);
    EXPECT_EQ(p.s, 8);
    EXPECT_EQ(p.ell, 4);
    EXPECT_EQ(p.t, 1);
    EXPECT_EQ(p.alpha[1], 9);
    EXPECT_EQ(p.alpha[2], 23);
    EXPECT_EQ(p.alpha[3], 11);
    p = samedeg_params(4, 5);
    EXPECT_EQ(p.s, 11);
    EXPECT_EQ(p.ell, 5);
    EXPECT_EQ(p.t, 1);
    EXPECT_EQ(p.alpha[1], 16);
    EXPECT_EQ(p.alpha[2], 36);
    EXPECT_EQ(p.alpha[3], 17);
}

TEST(SameDeg, Tuple44444) {
    const Prediction p = aci_samedeg(4, 4);
    EXPECT_EQ(p.shape, lit({{{4, 5}}, {{8, 10}, {9, 20}}, {{10, 46}}, {{11, 20}}}));
    EXPECT_TRUE(p.all_exact());
    EXPECT_EQ(p.source, "Thm5.4-even-even");
}

TEST(SameDeg, Tuple55555Family) {
    const Prediction p = aci_samedeg(4, 5);
    ASSERT_EQ(p.families.size(), 1u);
    EXPECT_EQ(p.families[0].lo, 0);
    EXPECT_EQ(p.families[0].hi, 17);
    EXPECT_EQ(p.at(2, 12), Status::UpperBound);
    EXPECT_EQ(p.at(4, 13), Status::UpperBound);
    EXPECT_EQ(p.at(1, 5), Status::Exact);
    EXPECT_EQ(p.instantiate({0}), lit({{{5, 5}}, {{10, 10}, {11, 16}}, {{13, 19}, {12, 19}}, {{14, 16}}}));
}

TEST(N4Even, Tuple33466) {
    const DegreeTuple t(4, {3, 3, 4, 6, 6});
    EXPECT_EQ(gor_n4_even(t), lit({{{3, 2}, {4, 17}}, {{5, 36}}, {{6, 17}, {7, 2}}, {{10, 1}}}));
    const Prediction p = aci_n4_even(t);
    EXPECT_EQ(p.shape, lit({{{3, 2}, {4, 1}, {6, 2}}, {{6, 1}, {7, 2}, {9, 4}, {10, 18}}, {{10, 1}, {11, 36}}, {{12, 16}}}));
    EXPECT_TRUE(has_ghost(p, 2, 10, GhostReason::NonSplittingOverlap));
    EXPECT_EQ(p.source, "Thm5.6");
}

TEST(N4Even, AgreesWithSameDegree) {
    for (int a : {2, 4, 6}) {
        const DegreeTuple t(4, {a, a, a, a, a});
        EXPECT_EQ(aci_n4_even(t).shape, aci_samedeg(4, a).shape) << a;
    }
}

TEST(N4Even, AgreesWithOnePeakOnOverlap) {
    for (const auto& t : tuples(4, 9)) {
        if (t.classification() != Classification::ProperACI) continue;
        const GorensteinProfile g = gorenstein_profile(t);
        if (g.peak_count != 1 || !g.maximal_growth) continue;
        ASSERT_EQ(aci_n4_even(t).shape, aci_one_peak(t).shape) << t.str();
    }
}

TEST(Deg1, TensorOfTuple4448) {
    const Prediction p = deg1_reduction(DegreeTuple(4, {1, 4, 4, 4, 8}));
    const ResolutionShape want = lit({{{1, 1}, {4, 3}, {8, 1}},
                                      {{5, 3}, {9, 1}, {8, 3}, {9, 2}, {10, 1}},
                                      {{9, 3}, {10, 2}, {11, 1}, {10, 1}, {11, 2}},
                                      {{11, 1}, {12, 2}}});
    EXPECT_EQ(p.shape, want);
    EXPECT_EQ(p.source.rfind("Prop3.1b:", 0), 0u);
}

TEST(Deg1, RepeatedReduction) {
    const DegreeTuple t(4, {1, 1, 3, 3, 4});
    const Prediction p = deg1_reduction(t);
    EXPECT_EQ(hilbert_from_betti(p.shape, 4), aci_hilbert(t));
}

TEST(Predict, Routing) {
    EXPECT_EQ(predict(DegreeTuple(3, {4, 4, 4, 8})).source, "Thm4.2-CaseII");
    EXPECT_EQ(predict(DegreeTuple(4, {5, 5, 5, 5, 10})).source, "Cor3.6");
    EXPECT_EQ(predict(DegreeTuple(4, {3, 4, 7, 9, 9})).source, "Thm5.6");
    EXPECT_EQ(predict(DegreeTuple(3, {2, 2, 2, 4})).source, "Koszul");
    EXPECT_EQ(predict(DegreeTuple(4, {4, 4, 4, 4, 4})).source, "Thm5.4-even-even");
    EXPECT_EQ(predict(DegreeTuple(5, {3, 3, 3, 3, 3, 3})).source, "Thm5.4-odd");
    EXPECT_FALSE(predict(DegreeTuple(5, {3, 3, 3, 3, 3, 3})).all_exact());
    EXPECT_EQ(predict(DegreeTuple(4, {2, 2, 2, 2, 3})).source, "LinkedCI-s1");
    EXPECT_EQ(predict(DegreeTuple(4, {4, 4, 4, 4, 5})).source, "Prop3.10");
    EXPECT_EQ(predict(DegreeTuple(6, {2, 2, 2, 2, 2, 2, 3})).source, "Prop3.10-conjectural");
}

TEST(Predict, BoundRouteIsAllUpperBound) {
    for (const auto& t : tuples(4, 7)) {
        if (t.classification() != Classification::ProperACI) continue;
        const Prediction p = predict(t);
        if (p.source != "Cor3.5-bound") continue;
        for (const auto& [e, s] : p.status)
            if (e.first > 0) ASSERT_EQ(s, Status::UpperBound) << t.str();
        return;
    }
    FAIL() << "no tuple routed to the bound";
}

TEST(Ghosts, Examples) {
    const DegreeTuple t(3, {4, 4, 4, 8});
    const auto g = detect_ghosts(predict(t), t);
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[0], (GhostTerm{1, 8, 1, GhostReason::KoszulVsGenerator}));
    EXPECT_EQ(g[1], (GhostTerm{2, 10, 1, GhostReason::NonSplittingOverlap}));
    EXPECT_THROW(detect_ghosts(aci_samedeg(4, 5), DegreeTuple(4, {5, 5, 5, 5, 5})), BoundsPresent);
}

class ExactPredictions : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(ExactPredictions, HilbertAndInvariants) {
    const auto [n, maxd] = GetParam();
    for (const auto& t : tuples(n, maxd)) {
        const Prediction p = predict(t);
        if (p.all_exact()) {
            ASSERT_TRUE(p.shape.rank_identity()) << t.str();
            ASSERT_TRUE(p.shape.chern_identity()) << t.str();
        }
        std::vector<Int> lo;
        for (const auto& f : p.families) lo.push_back(f.lo);
        for (std::size_t k = 0; k < p.families.size(); ++k) {
            std::vector<Int> v = lo;
            v[k] = p.families[k].hi;
            for (const ResolutionShape& r : {p.instantiate(lo), p.instantiate(v)})
                ASSERT_TRUE(r.rank_identity() && r.chern_identity()) << t.str();
        }
        for (const auto& m : p.shape.modules)
            for (const auto& [j, c] : m.twists()) ASSERT_GT(c, 0) << t.str();
        if (t.classification() == Classification::CompleteIntersection) continue;
        ASSERT_GE(p.shape.mult(1, t.deg(n + 1)), 1) << t.str();
        if (!p.all_exact()) continue;
        ASSERT_EQ(hilbert_from_betti(p.shape, n), aci_hilbert(t)) << t.str();
        GradedFreeModule gens;
        for (int d : t.degrees()) gens.add(d, 1);
        ASSERT_EQ(p.shape.modules[1], gens) << t.str();
    }
}

INSTANTIATE_TEST_SUITE_P(Sweep, ExactPredictions,
                         ::testing::Values(std::pair{2, 9}, std::pair{3, 10}, std::pair{4, 8}, std::pair{5, 6}));

TEST(GorensteinShapes, Symmetric) {
    for (int n = 4; n <= 8; n += 2)
        for (int td = 2; td <= 6; ++td)
            ASSERT_TRUE(check_gorenstein_symmetry(to_table(gor_two_peaks_even(n, td)), 2 * td - 1, n)) << n << " " << td;
    for (int n = 3; n <= 7; ++n)
        for (int l = 0; l <= 6; ++l)
            ASSERT_TRUE(check_gorenstein_symmetry(to_table(gor_one_peak(n, l)), 2 * l, n)) << n << " " << l;
    for (const auto& t : tuples(3, 9)) {
        if (t.classification() != Classification::ProperACI) continue;
        ASSERT_TRUE(check_gorenstein_symmetry(to_table(gor_n3_generic(t)), gorenstein_profile(t).s, 3)) << t.str();
    }
    for (const auto& t : tuples(4, 8)) {
        if (t.classification() != Classification::ProperACI || gorenstein_profile(t).peak_count != 1) continue;
        ASSERT_TRUE(check_gorenstein_symmetry(to_table(gor_n4_even(t)), gorenstein_profile(t).s, 4)) << t.str();
    }
    for (int n = 4; n <= 6; ++n)
        for (int a = 2; a <= 6; ++a) {
            const Prediction g = gor_samedeg(n, a);
            const ResolutionShape s = g.families.empty() ? g.shape : g.instantiate({g.families[0].lo});
            ASSERT_TRUE(check_gorenstein_symmetry(to_table(s), samedeg_params(n, a).s, n)) << n << " " << a;
        }
}
