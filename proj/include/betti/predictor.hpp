#pragma once

#include <map>
#include <string>
#include <vector>

#include "betti/betti_core.hpp"
#include "betti/hilbert.hpp"

namespace betti {

enum class Status { Exact, UpperBound };
enum class GhostReason { KoszulVsGenerator, NonSplittingOverlap };

std::string to_string(Status s);
std::string to_string(GhostReason r);

// R(-twist) in modules pos and pos+1 of a minimal resolution
struct GhostTerm {
    int pos = 0;
    int twist = 0;
    Int multiplicity = 0;
    GhostReason reason = GhostReason::NonSplittingOverlap;

    bool operator==(const GhostTerm&) const = default;
};

// One free parameter y in [lo, hi]. The shape stores every entry at y = hi;
// entry (i, j) at other y is mult - coeff * (hi - y).
struct FamilyTerm {
    int i = 0;
    int j = 0;
    Int coeff = 0;
};

struct Family {
    std::string name;
    Int lo = 0;
    Int hi = 0;
    std::vector<FamilyTerm> terms;
};

struct Prediction {
    ResolutionShape shape;
    std::map<Entry, Status> status;
    std::string source;
    std::vector<GhostTerm> ghosts;
    std::vector<Family> families;

    bool all_exact() const;
    Status at(int i, int j) const;
    BettiTable table() const { return to_table(shape); }
    // values[k] is the parameter of families[k]
    ResolutionShape instantiate(const std::vector<Int>& values) const;
};

struct SameDegParams {
    int n = 0;
    int a = 0;
    int s = 0;
    int ell = 0;
    int t = 0;
    std::vector<Int> alpha;  // alpha[j] for 1 <= j <= n-1, alpha[0] unused

    Int beta(int i) const { return binom(n, i); }
};

// Gorenstein shapes. The degree argument checks the tuple's profile.
ResolutionShape gor_one_peak(int n, int ell);
ResolutionShape gor_one_peak(int n, int ell, const DegreeTuple& t);
ResolutionShape gor_two_peaks_even(int n, int tdeg);
Prediction gor_two_peaks_odd_bounds(int n, int tdeg);
ResolutionShape gor_n3_generic(const DegreeTuple& t);
Prediction gor_samedeg(int n, int a);
ResolutionShape gor_n4_even(const DegreeTuple& t);

Int two_peaks_alpha(int n, int tdeg, int i);
Int two_peaks_middle_bound(int n, int tdeg);

// ACI predictions
Prediction aci_one_peak(const DegreeTuple& t);
Prediction aci_two_peaks_even(const DegreeTuple& t);
Prediction aci_two_peaks_odd_bounds(const DegreeTuple& t);
Prediction aci_n3(const DegreeTuple& t);
// which n = 3 Case II end splittings apply; all false outside Case II
struct N3SplitRules {
    bool i = false;
    bool ii = false;
    bool iii = false;
};
N3SplitRules n3_case2_rules(const DegreeTuple& t);
Prediction aci_n3_equal(int a);
Prediction aci_n2(const DegreeTuple& t);
// socle degree one: the linked algebra is a complete intersection
Prediction aci_socle_one(const DegreeTuple& t);
SameDegParams samedeg_params(int n, int a);
Prediction aci_samedeg(int n, int a);
Prediction aci_n4_even(const DegreeTuple& t);
Prediction koszul_prediction(const DegreeTuple& t);
Prediction bound_prediction(const DegreeTuple& t);

// Resolutions of A/LA over k[x_1..x_{n-1}] for the linked algebra A
ResolutionShape ala_samedeg(int n, int a);
ResolutionShape ala_n4_even(const DegreeTuple& t);

struct N4EvenData {
    int ell = 0;
    int f = 0;
    Int a2 = 0;
    std::vector<Int> a1;  // a1[i-1] for generator i = 1..4
    Int b1 = 0;
    Int b2 = 0;
    Int b3 = 0;
};
N4EvenData n4_even_data(const DegreeTuple& t);

// Tor over R of R/I from Tor over R/(L) of the reduced ideal. Minus pairs
// tor_{i-1} in degree j-1, Plus in degree j+1.
enum class Deg1Index { Minus, Plus };
Prediction deg1_reduction(const DegreeTuple& t, Deg1Index index = Deg1Index::Minus);

Prediction predict(const DegreeTuple& t);

// throws BoundsPresent unless every entry is Exact
std::vector<GhostTerm> detect_ghosts(const Prediction& p, const DegreeTuple& t);

}  // namespace betti
