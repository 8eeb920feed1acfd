#include "betti/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace betti {

std::string to_string(Classification c) {
    switch (c) {
        case Classification::CompleteIntersection: return "CI";
        case Classification::Degenerate: return "Degenerate";
        case Classification::ProperACI: return "ProperACI";
    }
    return "?";
}

DegreeTuple::DegreeTuple(int n, std::vector<int> degrees) : n_(n) {
    if (n < 2) throw InvalidInput("need at least 2 variables");
    if (degrees.size() != static_cast<std::size_t>(n) + 1)
        throw InvalidInput("expected n+1 = " + std::to_string(n + 1) + " degrees, got " +
                           std::to_string(degrees.size()));
    for (int x : degrees)
        if (x < 1) throw InvalidInput("degrees must be positive");
    perm_.resize(degrees.size());
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    std::stable_sort(perm_.begin(), perm_.end(),
                     [&](std::size_t a, std::size_t b) { return degrees[a] < degrees[b]; });
    degrees_.reserve(degrees.size());
    for (std::size_t k : perm_) degrees_.push_back(degrees[k]);

    if (degrees_.back() > d() - n_)
        kind_ = Classification::CompleteIntersection;
    else if (degrees_.front() == 1)
        kind_ = Classification::Degenerate;
    else
        kind_ = Classification::ProperACI;
}

Int DegreeTuple::d() const { return std::accumulate(degrees_.begin(), degrees_.end() - 1, Int{0}); }
Int DegreeTuple::e() const { return d() - degrees_.back(); }
Int DegreeTuple::total() const { return d() + degrees_.back(); }

bool DegreeTuple::equal_degrees() const {
    return std::all_of(degrees_.begin(), degrees_.end(), [&](int x) { return x == degrees_.front(); });
}

std::vector<int> DegreeTuple::first_n() const { return {degrees_.begin(), degrees_.end() - 1}; }

std::string DegreeTuple::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < degrees_.size(); ++i) os << (i ? "," : "") << degrees_[i];
    os << ')';
    return os.str();
}

HilbertFunction::HilbertFunction(std::vector<Int> v) : values(std::move(v)) {
    while (!values.empty() && values.back() == 0) values.pop_back();
}

Int HilbertFunction::operator()(Int t) const {
    if (t < 0 || t >= static_cast<Int>(values.size())) return 0;
    return values[static_cast<std::size_t>(t)];
}

bool HilbertFunction::symmetric() const {
    return std::equal(values.begin(), values.end(), values.rbegin());
}

std::string HilbertFunction::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " " : "") << values[i];
    return os.str();
}

HilbertFunction ci_hilbert(const std::vector<int>& degrees, int n, int maxdeg) {
    if (degrees.size() > static_cast<std::size_t>(n))
        throw InvalidInput("more forms than variables");
    int sum = 0;
    for (int x : degrees) {
        if (x < 1) throw InvalidInput("degrees must be positive");
        sum += x;
    }
    if (maxdeg < 0) maxdeg = sum;
    std::vector<Int> p(static_cast<std::size_t>(std::max(sum, maxdeg)) + 1, 0);
    p[0] = 1;
    for (int x : degrees)
        for (std::size_t k = p.size(); k-- > static_cast<std::size_t>(x);) p[k] -= p[k - x];
    for (int r = 0; r < n; ++r)
        for (std::size_t k = 1; k < p.size(); ++k) p[k] += p[k - 1];
    if (degrees.size() < static_cast<std::size_t>(n)) p.resize(static_cast<std::size_t>(maxdeg) + 1);
    return HilbertFunction(std::move(p));
}

HilbertFunction aci_hilbert(const DegreeTuple& t) {
    HilbertFunction hj = ci_hilbert(t.first_n(), t.n());
    if (t.classification() == Classification::CompleteIntersection) return hj;
    const int top = t.deg(t.n() + 1);
    std::vector<Int> v(hj.size(), 0);
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = std::max<Int>(hj(static_cast<Int>(k)) - hj(static_cast<Int>(k) - top), 0);
    return HilbertFunction(std::move(v));
}

static void require_proper(const DegreeTuple& t) {
    if (t.classification() != Classification::ProperACI)
        throw ClassificationError(t.str() + " is " + to_string(t.classification()));
}

int aci_socle_degree(const DegreeTuple& t) {
    require_proper(t);
    return static_cast<int>(floor_div(t.total() - t.n() - 1, 2));
}

HilbertFunction linked_gorenstein_hilbert(const DegreeTuple& t) {
    require_proper(t);
    HilbertFunction hj = ci_hilbert(t.first_n(), t.n());
    HilbertFunction hi = aci_hilbert(t);
    const Int top = t.d() - t.n();
    std::vector<Int> v(static_cast<std::size_t>(top) + 1, 0);
    for (Int j = 0; j <= top; ++j) v[static_cast<std::size_t>(j)] = hj(top - j) - hi(top - j);
    return HilbertFunction(std::move(v));
}

GorensteinProfile gorenstein_profile(const DegreeTuple& t) {
    require_proper(t);
    GorensteinProfile p;
    p.s = static_cast<int>(t.e() - t.n());
    p.peak_count = ((t.total() - t.n()) % 2 == 0) ? 1 : 2;
    p.ell = p.peak_count == 1 ? p.s / 2 : (p.s - 1) / 2;
    Int mid = 0;
    for (int i = 2; i <= t.n(); ++i) mid += t.deg(i);
    p.maximal_growth = mid < t.deg(1) + t.deg(t.n() + 1) + t.n();
    return p;
}

Int macaulay_growth(Int h, int t) {
    if (h < 0 || t < 1) throw InvalidInput("macaulay_growth needs h >= 0, t >= 1");
    Int out = 0;
    for (int i = t; i >= 1 && h > 0; --i) {
        Int k = i;
        while (binom(k + 1, i) <= h) ++k;
        h -= binom(k, i);
        out += binom(k + 1, i + 1);
    }
    return out;
}

bool is_o_sequence(const std::vector<Int>& h) {
    if (h.empty()) return true;
    if (h[0] != 1) return false;
    for (Int x : h)
        if (x < 0) return false;
    for (std::size_t t = 1; t + 1 < h.size(); ++t)
        if (h[t + 1] > macaulay_growth(h[t], static_cast<int>(t))) return false;
    return true;
}

bool is_si_sequence(const HilbertFunction& h) {
    if (!h.symmetric()) return false;
    const int s = h.last_degree();
    if (s < 0) return true;
    std::vector<Int> diff;
    for (int t = 0; t <= s / 2; ++t) diff.push_back(h(t) - h(t - 1));
    return is_o_sequence(diff);
}

std::vector<Int> first_difference(const HilbertFunction& h) {
    std::vector<Int> out;
    for (int t = 0; t <= h.last_degree() + 1; ++t) out.push_back(h(t) - h(t - 1));
    return out;
}

}  // namespace betti
