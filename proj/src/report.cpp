#include "betti/report.hpp"

#include <chrono>
#include <functional>
#include <set>

namespace betti {

std::vector<EntryDiff> diff_tables(const Prediction& p, const BettiTable& measured) {
    const BettiTable pred = p.table();
    std::set<Entry> keys;
    for (const auto& [e, m] : pred.entries) keys.insert(e);
    for (const auto& [e, m] : measured.entries) keys.insert(e);
    std::vector<EntryDiff> out;
    for (const Entry& e : keys) {
        const Int a = pred.at(e.first, e.second);
        const Int b = measured.at(e.first, e.second);
        const Status st = a == 0 ? Status::Exact : p.at(e.first, e.second);
        const bool bad = st == Status::Exact ? a != b : b > a;
        if (bad) out.push_back({e.first, e.second, a, b, st});
    }
    return out;
}

std::optional<std::vector<Int>> fit_families(const Prediction& p, const BettiTable& measured) {
    std::vector<Int> values(p.families.size());
    std::optional<std::vector<Int>> found;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (found) return;
        if (k == p.families.size()) {
            if (to_table(p.instantiate(values)) == measured) found = values;
            return;
        }
        for (Int v = p.families[k].lo; v <= p.families[k].hi; ++v) {
            values[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return found;
}

CompareResult compare(const DegreeTuple& t, const oracle::FieldConfig& cfg, int seeds) {
    const auto start = std::chrono::steady_clock::now();
    CompareResult r;
    r.cfg = cfg;
    r.seeds = seeds;
    r.prediction = predict(t);
    r.measured = oracle::aci_betti_min(t, cfg, seeds, &r.seeds_agree);
    r.diffs = diff_tables(r.prediction, r.measured);
    if (!r.prediction.families.empty()) r.family_values = fit_families(r.prediction, r.measured);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<GhostTerm> table_overlaps(const BettiTable& b) {
    std::vector<GhostTerm> out;
    for (const auto& [e, m] : b.entries) {
        if (e.first < 1) continue;
        const Int next = b.at(e.first + 1, e.second);
        if (next > 0) out.push_back({e.first, e.second, std::min(m, next), GhostReason::NonSplittingOverlap});
    }
    return out;
}

}  // namespace betti
