#pragma once

#include <string>

#include <json.hpp>

#include "betti/report.hpp"

namespace betti {

using Json = nlohmann::ordered_json;

// {"n","module","entries":[{"i","j","mult"}],"status"}, entries sorted by (i, j)
Json table_json(const BettiTable& t, int n, const std::string& module, const std::string& status);
BettiTable table_from_json(const Json& j);

// adds "source", "ghosts", the UpperBound entries and any families
Json prediction_json(const Prediction& p, int n, const std::string& module = "R/I");
Json hilbert_json(const HilbertFunction& h);
Json compare_json(const DegreeTuple& t, const CompareResult& r);

}  // namespace betti
