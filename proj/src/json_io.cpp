#include "betti/json_io.hpp"

namespace betti {

Json table_json(const BettiTable& t, int n, const std::string& module, const std::string& status) {
    Json entries = Json::array();
    for (const auto& [e, m] : t.entries) {
        if (m == 0) continue;
        entries.push_back({{"i", e.first}, {"j", e.second}, {"mult", m}});
    }
    return {{"n", n}, {"module", module}, {"entries", entries}, {"status", status}};
}

BettiTable table_from_json(const Json& j) {
    BettiTable t;
    for (const auto& e : j.at("entries")) t.add(e.at("i").get<int>(), e.at("j").get<int>(), e.at("mult").get<Int>());
    return t;
}

Json prediction_json(const Prediction& p, int n, const std::string& module) {
    Json out = table_json(p.table(), n, module, p.all_exact() ? "exact" : "bound");
    out["source"] = p.source;
    Json bounds = Json::array();
    for (const auto& [e, s] : p.status)
        if (s == Status::UpperBound && p.shape.mult(e.first, e.second) != 0)
            bounds.push_back({{"i", e.first}, {"j", e.second}});
    out["bound_entries"] = bounds;
    Json ghosts = Json::array();
    for (const auto& g : p.ghosts)
        ghosts.push_back({{"pos", g.pos}, {"twist", g.twist}, {"mult", g.multiplicity}, {"reason", to_string(g.reason)}});
    out["ghosts"] = ghosts;
    if (!p.families.empty()) {
        Json fams = Json::array();
        for (const auto& f : p.families) {
            Json terms = Json::array();
            for (const auto& ft : f.terms) terms.push_back({{"i", ft.i}, {"j", ft.j}, {"coeff", ft.coeff}});
            fams.push_back({{"name", f.name}, {"lo", f.lo}, {"hi", f.hi}, {"terms", terms}});
        }
        out["families"] = fams;
    }
    return out;
}

Json hilbert_json(const HilbertFunction& h) { return h.values; }

Json compare_json(const DegreeTuple& t, const CompareResult& r) {
    Json oracle = table_json(r.measured, t.n(), "R/I", "oracle");
    oracle["prime"] = r.cfg.prime;
    oracle["seed"] = r.cfg.seed;
    oracle["seeds"] = r.seeds;
    oracle["seeds_agree"] = r.seeds_agree;
    Json diffs = Json::array();
    for (const auto& d : r.diffs)
        diffs.push_back({{"i", d.i}, {"j", d.j}, {"predicted", d.predicted}, {"measured", d.measured},
                         {"status", to_string(d.status)}});
    Json out = {{"tuple", t.degrees()}, {"prediction", prediction_json(r.prediction, t.n())}, {"oracle", oracle},
                {"diff", diffs}};
    if (r.family_values) out["family_values"] = *r.family_values;
    Json overlaps = Json::array();
    for (const auto& g : table_overlaps(r.measured))
        overlaps.push_back({{"pos", g.pos}, {"twist", g.twist}, {"mult", g.multiplicity}});
    out["measured_overlaps"] = overlaps;
    return out;
}

}  // namespace betti
