#pragma once

#include <string>
#include <vector>

namespace betti {

struct ReproCheck {
    std::string name;
    bool ok = false;
    std::string expected;
    std::string actual;
};

// Replays the published tables and sequences against the predictor.
std::vector<ReproCheck> run_repro();

}  // namespace betti
