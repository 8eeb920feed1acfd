#pragma once

#include <optional>
#include <string>
#include <vector>

#include "betti/oracle.hpp"
#include "betti/predictor.hpp"

namespace betti {

struct EntryDiff {
    int i = 0;
    int j = 0;
    Int predicted = 0;
    Int measured = 0;
    Status status = Status::Exact;
};

// Exact entries must match; UpperBound entries must dominate.
std::vector<EntryDiff> diff_tables(const Prediction& p, const BettiTable& measured);

// parameter values under which the prediction equals the table exactly
std::optional<std::vector<Int>> fit_families(const Prediction& p, const BettiTable& measured);

struct CompareResult {
    Prediction prediction;
    BettiTable measured;
    bool seeds_agree = true;
    std::vector<EntryDiff> diffs;
    std::optional<std::vector<Int>> family_values;
    oracle::FieldConfig cfg;
    int seeds = 1;
    double seconds = 0;
};

CompareResult compare(const DegreeTuple& t, const oracle::FieldConfig& cfg, int seeds);

// twists shared by consecutive modules of a table
std::vector<GhostTerm> table_overlaps(const BettiTable& b);

}  // namespace betti
