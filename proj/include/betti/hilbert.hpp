#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "betti/common.hpp"

namespace betti {

enum class Classification { CompleteIntersection, Degenerate, ProperACI };

std::string to_string(Classification c);

// n variables, n+1 generator degrees. Input is sorted on construction.
class DegreeTuple {
public:
    DegreeTuple(int n, std::vector<int> degrees);

    int n() const { return n_; }
    const std::vector<int>& degrees() const { return degrees_; }
    // 1-based, d_1 <= ... <= d_{n+1}
    int deg(int i) const { return degrees_.at(static_cast<std::size_t>(i - 1)); }
    // permutation()[k] = input position of sorted entry k
    const std::vector<std::size_t>& permutation() const { return perm_; }
    Classification classification() const { return kind_; }

    Int d() const;      // d_1 + ... + d_n
    Int e() const;      // d - d_{n+1}
    Int total() const;  // all n+1 degrees
    bool equal_degrees() const;
    std::vector<int> first_n() const;
    std::string str() const;

    bool operator==(const DegreeTuple& o) const { return n_ == o.n_ && degrees_ == o.degrees_; }

private:
    int n_;
    std::vector<int> degrees_;
    std::vector<std::size_t> perm_;
    Classification kind_;
};

struct HilbertFunction {
    std::vector<Int> values;

    HilbertFunction() = default;
    explicit HilbertFunction(std::vector<Int> v);

    Int operator()(Int t) const;
    // last nonzero degree, -1 for the zero function
    int last_degree() const { return static_cast<int>(values.size()) - 1; }
    std::size_t size() const { return values.size(); }
    bool symmetric() const;
    std::string str() const;
    bool operator==(const HilbertFunction& o) const { return values == o.values; }
};

struct GorensteinProfile {
    int s = 0;
    int ell = 0;
    int peak_count = 1;
    bool maximal_growth = false;
};

// prod (1 - z^{d_i}) / (1 - z)^n. For fewer forms than variables the series
// is infinite and is cut at maxdeg (default: sum of degrees).
HilbertFunction ci_hilbert(const std::vector<int>& degrees, int n, int maxdeg = -1);
HilbertFunction aci_hilbert(const DegreeTuple& t);
int aci_socle_degree(const DegreeTuple& t);
HilbertFunction linked_gorenstein_hilbert(const DegreeTuple& t);
GorensteinProfile gorenstein_profile(const DegreeTuple& t);

Int macaulay_growth(Int h, int t);
bool is_o_sequence(const std::vector<Int>& h);
bool is_si_sequence(const HilbertFunction& h);

// first difference, h(t) - h(t-1), including the drop past the end
std::vector<Int> first_difference(const HilbertFunction& h);

}  // namespace betti
