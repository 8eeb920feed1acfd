#include <gtest/gtest.h>

#include "betti/json_io.hpp"
#include "betti/report.hpp"

using namespace betti;

namespace {

ResolutionShape lit(std::vector<GradedFreeModule> mods) {
    ResolutionShape r;
    r.modules.push_back(GradedFreeModule{{0, 1}});
    for (auto& m : mods) r.modules.push_back(std::move(m));
    return r;
}

}  // namespace

TEST(Json, TableRoundTrip) {
    const BettiTable b = to_table(lit({{{4, 3}, {8, 1}}, {{8, 3}, {9, 2}, {10, 1}}, {{10, 1}, {11, 2}}}));
    const Json j = table_json(b, 3, "R/I", "exact");
    EXPECT_EQ(j["n"], 3);
    EXPECT_EQ(j["module"], "R/I");
    EXPECT_EQ(j["entries"].size(), 8u);
    EXPECT_EQ(j["entries"][0]["i"], 0);
    EXPECT_EQ(table_from_json(j), b);
    EXPECT_EQ(table_from_json(Json::parse(j.dump())), b);
}

TEST(Json, Prediction) {
    const Prediction p = predict(DegreeTuple(4, {5, 5, 5, 5, 5}));
    const Json j = prediction_json(p, 4);
    EXPECT_EQ(j["source"], p.source);
    ASSERT_EQ(j["families"].size(), 1u);
    EXPECT_EQ(j["families"][0]["hi"], 17);
    EXPECT_FALSE(j["bound_entries"].empty());
    EXPECT_EQ(hilbert_json(HilbertFunction({1, 3, 1})).dump(), "[1,3,1]");
}

TEST(Diff, ExactAndBounds) {
    const DegreeTuple t(4, {5, 5, 5, 5, 5});
    const Prediction p = predict(t);
    EXPECT_TRUE(diff_tables(p, to_table(p.instantiate({0}))).empty());
    EXPECT_TRUE(diff_tables(p, to_table(p.instantiate({17}))).empty());
    EXPECT_EQ(fit_families(p, to_table(p.instantiate({6}))), (std::vector<Int>{6}));

    BettiTable off = to_table(p.instantiate({0}));
    off.add(2, 10, 1);
    const auto d = diff_tables(p, off);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].i, 2);
    EXPECT_EQ(d[0].j, 10);
    EXPECT_EQ(d[0].measured, 11);
    EXPECT_FALSE(fit_families(p, off).has_value());
}

TEST(Overlaps, Tuple4448) {
    const BettiTable b = to_table(lit({{{4, 3}, {8, 1}}, {{8, 3}, {9, 2}, {10, 1}}, {{10, 1}, {11, 2}}}));
    const auto o = table_overlaps(b);
    ASSERT_EQ(o.size(), 2u);
    EXPECT_EQ(o[0].pos, 1);
    EXPECT_EQ(o[0].twist, 8);
    EXPECT_EQ(o[1].pos, 2);
    EXPECT_EQ(o[1].twist, 10);
    EXPECT_TRUE(table_overlaps(to_table(lit({{{4, 4}}, {{8, 3}, {7, 4}}, {{9, 4}}}))).empty());
}

TEST(Compare, Tuple4448) {
    const DegreeTuple t(3, {4, 4, 4, 8});
    const CompareResult r = compare(t, {32003, 1}, 2);
    EXPECT_TRUE(r.diffs.empty());
    EXPECT_TRUE(r.seeds_agree);
    const Json j = compare_json(t, r);
    EXPECT_EQ(j["tuple"], Json({4, 4, 4, 8}));
    EXPECT_EQ(j["oracle"]["prime"], 32003);
    EXPECT_TRUE(j["diff"].empty());
    EXPECT_EQ(j["measured_overlaps"].size(), 2u);
}
