#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "betti/common.hpp"
#include "betti/hilbert.hpp"

namespace betti {

// F = sum_j R(-j)^{mult(j)}; keys are the internal degrees j.
class GradedFreeModule {
public:
    GradedFreeModule() = default;
    GradedFreeModule(std::initializer_list<std::pair<const int, Int>> init);

    void add(int j, Int mult);
    // throws InsufficientMultiplicity
    void remove(int j, Int mult);
    Int mult(int j) const;
    Int rank() const;
    Int chern() const;  // sum j * mult
    bool empty() const { return twists_.empty(); }
    const std::map<int, Int>& twists() const { return twists_; }
    std::string str() const;

    bool operator==(const GradedFreeModule& o) const { return twists_ == o.twists_; }
    GradedFreeModule& operator+=(const GradedFreeModule& o);

private:
    std::map<int, Int> twists_;
};

// Resolution of a quotient: modules[0] = R.
struct ResolutionShape {
    std::vector<GradedFreeModule> modules;

    int length() const { return static_cast<int>(modules.size()) - 1; }
    Int mult(int i, int j) const;
    bool rank_identity() const;
    bool chern_identity() const;
    std::string str() const;
    bool operator==(const ResolutionShape& o) const;
};

using Entry = std::pair<int, int>;  // (i, j)

struct BettiTable {
    std::map<Entry, Int> entries;

    Int at(int i, int j) const;
    void add(int i, int j, Int m);
    bool operator==(const BettiTable& o) const { return entries == o.entries; }
    // rows j - i, columns i
    std::string staircase() const;
};

BettiTable to_table(const ResolutionShape& r);
ResolutionShape to_shape(const BettiTable& t);

ResolutionShape koszul_resolution(const std::vector<int>& degrees);
GradedFreeModule dual_twist(const GradedFreeModule& f, int d);

// Unsplit cone: position i holds K_{n-i}^vee(-d) + F_{n-i+1}^vee(-d).
ResolutionShape mapping_cone_aci(const ResolutionShape& gor, const DegreeTuple& t);

HilbertFunction hilbert_from_betti(const ResolutionShape& res, int n);

bool check_gorenstein_symmetry(const BettiTable& table, int s, int n);

struct Cancellation {
    int pos;  // pairs modules pos and pos+1
    int twist;
    Int count;
};

ResolutionShape split_summands(const ResolutionShape& res, const std::vector<Cancellation>& cancel);

}  // namespace betti
