#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "betti/lexbound.hpp"
#include "betti/oracle.hpp"
#include "betti/predictor.hpp"

using namespace betti;

namespace {

BettiTable table(std::initializer_list<std::tuple<int, int, Int>> e) {
    BettiTable t;
    t.add(0, 0, 1);
    for (auto [i, j, m] : e) t.add(i, j, m);
    return t;
}

bool dominates(const BettiTable& big, const BettiTable& small) {
    for (const auto& [e, m] : small.entries)
        if (big.at(e.first, e.second) < m) return false;
    return true;
}

// Artinian O-sequences in c variables up to the given length
std::vector<HilbertFunction> o_sequences(int c, int maxlen, Int cap) {
    std::vector<HilbertFunction> out;
    std::vector<Int> cur{1};
    std::function<void()> rec = [&] {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == maxlen) return;
        const int t = static_cast<int>(cur.size()) - 1;
        const Int top = t == 0 ? c : std::min(cap, macaulay_growth(cur.back(), t));
        for (Int v = 1; v <= top; ++v) {
            cur.push_back(v);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

}  // namespace

TEST(LexIdeal, SmallExample) {
    const MonomialIdeal m = lex_ideal_from_hilbert(HilbertFunction({1, 2, 1}), 2);
    EXPECT_EQ(m.gens, (std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 3}}));
    EXPECT_TRUE(m.contains({3, 1}));
    EXPECT_FALSE(m.contains({0, 2}));
    EXPECT_EQ(ek_betti(m), table({{1, 2, 2}, {1, 3, 1}, {2, 3, 1}, {2, 4, 1}}));
}

TEST(LexIdeal, MaximalIdealSquared) {
    const MonomialIdeal m = lex_ideal_from_hilbert(HilbertFunction({1, 3}), 3);
    EXPECT_EQ(m.gens.size(), 6u);
    EXPECT_EQ(ek_betti(m), table({{1, 2, 6}, {2, 3, 8}, {3, 4, 3}}));
}

TEST(LexIdeal, Rejects) {
    EXPECT_THROW(lex_ideal_from_hilbert(HilbertFunction({1, 2, 4}), 2), NotOSequence);
    EXPECT_THROW(lex_ideal_from_hilbert(HilbertFunction({1, 4}), 3), NotOSequence);
    MonomialIdeal bad;
    bad.c = 2;
    bad.gens = {{0, 2}};
    EXPECT_THROW(ek_betti(bad), NotStable);
    EXPECT_THROW(gor_betti_bound(HilbertFunction({1, 3, 2, 3, 1}), 3), NotSISequence);
    EXPECT_THROW(aci_betti_bound(DegreeTuple(3, {2, 2, 2, 4})), ClassificationError);
}

TEST(EliahouKervaire, MatchesHilbertFunction) {
    for (int c = 1; c <= 4; ++c) {
        for (const auto& h : o_sequences(c, c <= 2 ? 7 : 5, 8)) {
            const BettiTable b = ek_betti(lex_ideal_from_hilbert(h, c));
            ASSERT_EQ(hilbert_from_betti(to_shape(b), c), h) << c << " " << h.str();
        }
    }
}

TEST(EliahouKervaire, MatchesOracle) {
    std::mt19937_64 rng(11);
    int tried = 0;
    for (const auto& h : o_sequences(3, 5, 7)) {
        if (rng() % 4 != 0) continue;
        const MonomialIdeal m = lex_ideal_from_hilbert(h, 3);
        std::vector<oracle::DenseForm> forms;
        int top = 0;
        for (std::size_t g = 0; g < m.gens.size(); ++g) {
            forms.push_back(oracle::monomial_form(3, m.gens[g]));
            top = std::max(top, m.degree(g));
        }
        const oracle::FormQuotient q = oracle::quotient_from_forms(forms, top, 32003);
        ASSERT_EQ(q.q.hilbert(), h) << h.str();
        ASSERT_EQ(oracle::graded_betti(q.q), ek_betti(m)) << h.str();
        ++tried;
    }
    EXPECT_GT(tried, 10);
}

TEST(GorBound, TwoPeakExample) {
    const HilbertFunction h({1, 4, 10, 20, 20, 10, 4, 1});
    const BettiTable b = gor_betti_bound(h, 4);
    EXPECT_TRUE(check_gorenstein_symmetry(b, 7, 4));
    EXPECT_TRUE(dominates(b, to_table(gor_two_peaks_even(4, 4))));
    EXPECT_EQ(hilbert_from_betti(to_shape(b), 4), h);
}

TEST(GorBound, DominatesPredictions) {
    for (const auto& d : std::vector<std::vector<int>>{{5, 5, 5, 5, 10}, {4, 4, 4, 4, 4}, {3, 3, 4, 6, 6}}) {
        const DegreeTuple t(4, d);
        const BettiTable bound = aci_betti_bound(t);
        const Prediction p = predict(t);
        ASSERT_TRUE(p.all_exact()) << t.str();
        EXPECT_TRUE(dominates(bound, p.table())) << t.str();
    }
}

TEST(GorBound, DominatesOracle) {
    const oracle::FieldConfig cfg{32003, 3};
    for (const auto& [n, d] : std::vector<std::pair<int, std::vector<int>>>{{3, {4, 4, 4, 8}}, {4, {5, 5, 5, 5, 10}}}) {
        const DegreeTuple t(n, d);
        EXPECT_TRUE(dominates(aci_betti_bound(t), oracle::aci_betti(t, cfg))) << t.str();
        EXPECT_TRUE(dominates(gor_betti_bound(linked_gorenstein_hilbert(t), n), oracle::gorenstein_betti(t, cfg)))
            << t.str();
    }
}
