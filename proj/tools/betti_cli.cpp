#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "betti/json_io.hpp"
#include "betti/lexbound.hpp"
#include "betti/oracle.hpp"
#include "betti/repro.hpp"

using namespace betti;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiff = 1;
constexpr int kExitInput = 2;

struct Options {
    int n = 0;
    std::vector<int> degrees;
    std::uint32_t prime = 32003;
    std::uint64_t seed = 1;
    int seeds = 1;
    bool json = false;
    int max_d = 0;
    int max_a = 0;
    bool equal_degrees = false;
    bool ghosts = false;
    std::string cursor;
};

oracle::FieldConfig field(const Options& o) {
    if (!modp::is_prime(o.prime) || o.prime >= 65536) throw InvalidInput("--prime must be a prime below 65536");
    return {o.prime, o.seed};
}

DegreeTuple tuple(const Options& o) {
    if (o.n < 1) throw InvalidInput("-n must be positive");
    DegreeTuple t(o.n, o.degrees);
    return t;
}

void echo_sort(const DegreeTuple& t, const Options& o) {
    if (o.degrees != t.degrees() && !o.json) std::cout << "sorted degrees: " << t.str() << "\n";
}

void print_prediction(const Prediction& p) {
    std::cout << "source: " << p.source << "\n";
    std::cout << p.shape.str() << "\n\n" << p.table().staircase();
    bool first = true;
    for (const auto& [e, s] : p.status) {
        if (s != Status::UpperBound || p.shape.mult(e.first, e.second) == 0) continue;
        std::cout << (first ? "upper bounds only:" : "") << " (" << e.first << "," << e.second << ")";
        first = false;
    }
    if (!first) std::cout << "\n";
    for (const auto& f : p.families) std::cout << "family " << f.name << " in [" << f.lo << "," << f.hi << "]\n";
    for (const auto& g : p.ghosts)
        std::cout << "ghost R(-" << g.twist << ")^" << g.multiplicity << " at (" << g.pos << "," << g.pos + 1
                  << ") " << to_string(g.reason) << "\n";
}

int cmd_hilbert(const Options& o) {
    const DegreeTuple t = tuple(o);
    echo_sort(t, o);
    std::vector<int> first = t.first_n();
    const HilbertFunction hj = ci_hilbert(first, t.n());
    const bool ci = t.classification() == Classification::CompleteIntersection;
    if (o.json) {
        Json out = {{"tuple", t.degrees()}, {"classification", to_string(t.classification())}, {"R/J", hj.values}};
        if (!ci) {
            const GorensteinProfile g = gorenstein_profile(t);
            out["R/I"] = aci_hilbert(t).values;
            out["R/G"] = linked_gorenstein_hilbert(t).values;
            out["profile"] = {{"s", g.s}, {"ell", g.ell}, {"peaks", g.peak_count}, {"maximal_growth", g.maximal_growth}};
        } else {
            out["R/I"] = hj.values;
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "classification: " << to_string(t.classification()) << "\n";
    std::cout << "h(R/J): " << hj.str() << "\n";
    if (ci) {
        std::cout << "complete intersection: d_{n+1} > d - n puts the last form in J, so I = J\n";
        std::cout << "h(R/I): " << hj.str() << "\n";
        return kExitOk;
    }
    const GorensteinProfile g = gorenstein_profile(t);
    std::cout << "h(R/I): " << aci_hilbert(t).str() << "\n";
    std::cout << "h(R/G): " << linked_gorenstein_hilbert(t).str() << "\n";
    std::cout << "socle degree " << g.s << ", l = " << g.ell << ", " << g.peak_count << " peak(s), "
              << (g.maximal_growth ? "maximal growth" : "no maximal growth") << "\n";
    return kExitOk;
}

int cmd_predict(const Options& o) {
    const DegreeTuple t = tuple(o);
    echo_sort(t, o);
    const Prediction p = predict(t);
    if (o.json) {
        Json out = prediction_json(p, t.n());
        out["tuple"] = t.degrees();
        std::cout << out.dump(2) << "\n";
    } else {
        print_prediction(p);
    }
    return kExitOk;
}

int cmd_compare(const Options& o) {
    const DegreeTuple t = tuple(o);
    echo_sort(t, o);
    const CompareResult r = compare(t, field(o), o.seeds);
    if (o.json) {
        std::cout << compare_json(t, r).dump(2) << "\n";
    } else {
        print_prediction(r.prediction);
        std::cout << "\noracle (p=" << r.cfg.prime << ", seed=" << r.cfg.seed << ", seeds=" << r.seeds
                  << (r.seeds_agree ? "" : ", seeds disagree") << "):\n"
                  << to_shape(r.measured).str() << "\n\n"
                  << r.measured.staircase();
        if (r.family_values)
            for (std::size_t k = 0; k < r.family_values->size(); ++k)
                std::cout << "measured " << r.prediction.families[k].name << " = " << (*r.family_values)[k] << "\n";
        else if (!r.prediction.families.empty())
            std::cout << "no family value fits the oracle table\n";
        for (const auto& d : r.diffs)
            std::cout << "diff (" << d.i << "," << d.j << ") predicted " << d.predicted << " measured " << d.measured
                      << " [" << to_string(d.status) << "]\n";
        if (r.diffs.empty()) std::cout << "diff: empty\n";
        std::cout << "time " << r.seconds << " s\n";
    }
    return r.diffs.empty() ? kExitOk : kExitDiff;
}

std::vector<std::vector<int>> scan_box(const Options& o) {
    std::vector<std::vector<int>> out;
    if (o.equal_degrees) {
        for (int a = 2; a <= o.max_a; ++a) out.emplace_back(static_cast<std::size_t>(o.n + 1), a);
        return out;
    }
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == o.n + 1) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= o.max_d; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

Json box_json(const Options& o) {
    return {{"n", o.n}, {"equal_degrees", o.equal_degrees}, {"max", o.equal_degrees ? o.max_a : o.max_d}};
}

std::size_t load_cursor(const Options& o) {
    if (o.cursor.empty() || !std::filesystem::exists(o.cursor)) return 0;
    std::ifstream in(o.cursor);
    const Json c = Json::parse(in);
    if (c.at("box") != box_json(o)) throw InvalidInput("cursor file belongs to a different scan");
    return c.at("next").get<std::size_t>();
}

void save_cursor(const Options& o, std::size_t next) {
    if (o.cursor.empty()) return;
    const std::string tmp = o.cursor + ".tmp";
    {
        std::ofstream out(tmp);
        out << Json{{"box", box_json(o)}, {"next", next}}.dump() << "\n";
    }
    std::filesystem::rename(tmp, o.cursor);
}

int cmd_scan(const Options& o) {
    if (o.n < 2) throw InvalidInput("-n must be at least 2");
    const auto box = scan_box(o);
    const oracle::FieldConfig cfg = field(o);
    std::size_t k = load_cursor(o);
    bool overlap_found = false;
    for (; k < box.size(); ++k) {
        const DegreeTuple t(o.n, box[k]);
        if (o.equal_degrees) {
            if (t.classification() != Classification::ProperACI) {
                save_cursor(o, k + 1);
                continue;
            }
            const BettiTable b = oracle::aci_betti_min(t, cfg, o.seeds);
            const auto ov = table_overlaps(b);
            overlap_found = overlap_found || !ov.empty();
            Json overlaps = Json::array();
            for (const auto& g : ov) overlaps.push_back({{"pos", g.pos}, {"twist", g.twist}, {"mult", g.multiplicity}});
            Json line = {{"tuple", t.degrees()}, {"oracle", table_json(b, t.n(), "R/I", "oracle")},
                         {"overlaps", overlaps}};
            std::cout << line.dump() << "\n" << std::flush;
        } else {
            if (t.classification() == Classification::CompleteIntersection) {
                save_cursor(o, k + 1);
                continue;
            }
            const Prediction p = predict(t);
            if (!o.ghosts || !p.ghosts.empty()) {
                Json ghosts = Json::array();
                for (const auto& g : p.ghosts)
                    ghosts.push_back({{"pos", g.pos}, {"twist", g.twist}, {"mult", g.multiplicity},
                                      {"reason", to_string(g.reason)}});
                Json line = {{"tuple", t.degrees()}, {"source", p.source}, {"status", p.all_exact() ? "exact" : "bound"},
                             {"ghosts", ghosts}};
                std::cout << line.dump() << "\n" << std::flush;
            }
        }
        save_cursor(o, k + 1);
    }
    return overlap_found ? kExitDiff : kExitOk;
}

int cmd_repro(const Options& o) {
    const auto checks = run_repro();
    bool all = true;
    Json arr = Json::array();
    for (const auto& c : checks) {
        all = all && c.ok;
        if (o.json) {
            arr.push_back({{"name", c.name}, {"ok", c.ok}, {"expected", c.expected}, {"actual", c.actual}});
        } else {
            std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << "\n";
            if (!c.ok) std::cout << "  expected " << c.expected << "\n  actual   " << c.actual << "\n";
        }
    }
    if (o.json) std::cout << arr.dump(2) << "\n";
    return all ? kExitOk : kExitDiff;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti tables of generic almost complete intersections"};
    app.require_subcommand(1);
    Options o;
    if (const char* env = std::getenv("BETTI_SEED")) {
        try {
            o.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "BETTI_SEED must be a non-negative integer\n";
            return kExitInput;
        }
    }

    auto tuple_opts = [&](CLI::App* sub) {
        sub->add_option("-n", o.n, "number of variables")->required();
        sub->add_option("-d", o.degrees, "n+1 generator degrees, comma separated")->delimiter(',')->required();
        sub->add_flag("--json", o.json, "JSON output");
    };
    auto field_opts = [&](CLI::App* sub) {
        sub->add_option("--prime", o.prime, "field characteristic");
        sub->add_option("--seed", o.seed, "random seed (env BETTI_SEED)");
        sub->add_option("--seeds", o.seeds, "number of seeds")->check(CLI::PositiveNumber);
    };

    auto* hil = app.add_subcommand("hilbert", "Hilbert functions and the linked Gorenstein profile");
    tuple_opts(hil);
    auto* pre = app.add_subcommand("predict", "predicted minimal free resolution");
    tuple_opts(pre);
    auto* cmp = app.add_subcommand("compare", "prediction against the finite field oracle");
    tuple_opts(cmp);
    field_opts(cmp);
    cmp->get_option("--seeds")->default_val(3);
    auto* scan = app.add_subcommand("scan", "sweep a degree box");
    scan->add_option("-n", o.n, "number of variables")->required();
    scan->add_option("--max-d", o.max_d, "largest degree");
    scan->add_option("--max-a", o.max_a, "largest common degree with --equal-degrees");
    scan->add_flag("--equal-degrees", o.equal_degrees, "run the oracle on (a,...,a)");
    scan->add_flag("--ghosts", o.ghosts, "only tuples with predicted ghost terms");
    scan->add_option("--cursor", o.cursor, "resume file");
    field_opts(scan);
    auto* rep = app.add_subcommand("repro", "replay the published examples");
    rep->add_flag("--json", o.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*hil) return cmd_hilbert(o);
        if (*pre) return cmd_predict(o);
        if (*cmp) return cmd_compare(o);
        if (*scan) return cmd_scan(o);
        if (*rep) return cmd_repro(o);
    } catch (const InvalidInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ClassificationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
