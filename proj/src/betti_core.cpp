#include "betti/betti_core.hpp"

#include <algorithm>
#include <sstream>

namespace betti {

GradedFreeModule::GradedFreeModule(std::initializer_list<std::pair<const int, Int>> init) {
    for (auto& [j, m] : init) add(j, m);
}

void GradedFreeModule::add(int j, Int mult) {
    if (mult < 0) throw InvalidInput("negative multiplicity");
    if (mult == 0) return;
    twists_[j] += mult;
}

void GradedFreeModule::remove(int j, Int mult) {
    auto it = twists_.find(j);
    Int have = it == twists_.end() ? 0 : it->second;
    if (have < mult)
        throw InsufficientMultiplicity("cannot remove " + std::to_string(mult) + " x R(-" +
                                       std::to_string(j) + "), have " + std::to_string(have));
    if (mult == 0) return;
    if ((it->second -= mult) == 0) twists_.erase(it);
}

Int GradedFreeModule::mult(int j) const {
    auto it = twists_.find(j);
    return it == twists_.end() ? 0 : it->second;
}

Int GradedFreeModule::rank() const {
    Int r = 0;
    for (auto& [j, m] : twists_) r += m;
    return r;
}

Int GradedFreeModule::chern() const {
    Int c = 0;
    for (auto& [j, m] : twists_) c += static_cast<Int>(j) * m;
    return c;
}

GradedFreeModule& GradedFreeModule::operator+=(const GradedFreeModule& o) {
    for (auto& [j, m] : o.twists_) add(j, m);
    return *this;
}

std::string GradedFreeModule::str() const {
    if (twists_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [j, m] : twists_) {
        if (!first) os << " + ";
        first = false;
        os << "R(" << -j << ")";
        if (m != 1) os << "^" << m;
    }
    return os.str();
}

Int ResolutionShape::mult(int i, int j) const {
    if (i < 0 || i >= static_cast<int>(modules.size())) return 0;
    return modules[static_cast<std::size_t>(i)].mult(j);
}

bool ResolutionShape::rank_identity() const {
    Int s = 0;
    for (std::size_t i = 0; i < modules.size(); ++i) s += (i % 2 ? -1 : 1) * modules[i].rank();
    return s == 0;
}

bool ResolutionShape::chern_identity() const {
    Int s = 0;
    for (std::size_t i = 0; i < modules.size(); ++i) s += (i % 2 ? -1 : 1) * modules[i].chern();
    return s == 0;
}

std::string ResolutionShape::str() const {
    std::ostringstream os;
    os << "0";
    for (std::size_t i = modules.size(); i-- > 0;) os << " -> " << modules[i].str();
    return os.str();
}

bool ResolutionShape::operator==(const ResolutionShape& o) const {
    // trailing zero modules do not matter
    std::size_t a = modules.size(), b = o.modules.size();
    while (a > 0 && modules[a - 1].empty()) --a;
    while (b > 0 && o.modules[b - 1].empty()) --b;
    if (a != b) return false;
    for (std::size_t i = 0; i < a; ++i)
        if (!(modules[i] == o.modules[i])) return false;
    return true;
}

Int BettiTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, Int m) {
    if (m == 0) return;
    Int& x = entries[{i, j}];
    x += m;
    if (x == 0) entries.erase({i, j});
}

std::string BettiTable::staircase() const {
    if (entries.empty()) return "(empty)\n";
    int maxi = 0, minr = 0, maxr = 0;
    bool first = true;
    for (auto& [e, m] : entries) {
        int r = e.second - e.first;
        maxi = std::max(maxi, e.first);
        if (first) minr = maxr = r, first = false;
        minr = std::min(minr, r);
        maxr = std::max(maxr, r);
    }
    std::ostringstream os;
    os << "      ";
    for (int i = 0; i <= maxi; ++i) {
        std::string c = std::to_string(i);
        os << std::string(7 - c.size(), ' ') << c;
    }
    os << '\n';
    for (int r = minr; r <= maxr; ++r) {
        std::string lab = std::to_string(r) + ":";
        os << std::string(6 - std::min<std::size_t>(6, lab.size()), ' ') << lab;
        for (int i = 0; i <= maxi; ++i) {
            Int m = at(i, i + r);
            std::string c = m ? std::to_string(m) : "-";
            os << std::string(7 - std::min<std::size_t>(7, c.size()), ' ') << c;
        }
        os << '\n';
    }
    return os.str();
}

BettiTable to_table(const ResolutionShape& r) {
    BettiTable t;
    for (std::size_t i = 0; i < r.modules.size(); ++i)
        for (auto& [j, m] : r.modules[i].twists()) t.add(static_cast<int>(i), j, m);
    return t;
}

ResolutionShape to_shape(const BettiTable& t) {
    ResolutionShape r;
    for (auto& [e, m] : t.entries) {
        if (e.first < 0) throw InvalidInput("negative homological degree");
        if (m < 0) throw InvalidInput("negative Betti number");
        if (static_cast<std::size_t>(e.first) >= r.modules.size())
            r.modules.resize(static_cast<std::size_t>(e.first) + 1);
        r.modules[static_cast<std::size_t>(e.first)].add(e.second, m);
    }
    return r;
}

ResolutionShape koszul_resolution(const std::vector<int>& degrees) {
    const std::size_t n = degrees.size();
    ResolutionShape r;
    r.modules.resize(n + 1);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        int sum = 0, k = 0;
        for (std::size_t b = 0; b < n; ++b)
            if (mask >> b & 1) sum += degrees[b], ++k;
        r.modules[static_cast<std::size_t>(k)].add(sum, 1);
    }
    return r;
}

GradedFreeModule dual_twist(const GradedFreeModule& f, int d) {
    GradedFreeModule g;
    for (auto& [j, m] : f.twists()) g.add(d - j, m);
    return g;
}

ResolutionShape mapping_cone_aci(const ResolutionShape& gor, const DegreeTuple& t) {
    const int n = t.n();
    const int d = static_cast<int>(t.d());
    const int e = static_cast<int>(t.e());
    if (gor.length() != n || gor.modules.back().rank() != 1 || gor.modules.back().mult(e) != 1)
        throw ShapeMismatch("Gorenstein shape must have length " + std::to_string(n) +
                            " and end in R(-" + std::to_string(e) + ")");
    ResolutionShape k = koszul_resolution(t.first_n());
    ResolutionShape r;
    r.modules.resize(static_cast<std::size_t>(n) + 1);
    r.modules[0].add(0, 1);
    for (int i = 1; i <= n; ++i) {
        auto& p = r.modules[static_cast<std::size_t>(i)];
        if (i < n) p += dual_twist(k.modules[static_cast<std::size_t>(n - i)], d);
        p += dual_twist(gor.modules[static_cast<std::size_t>(n - i + 1)], d);
    }
    return r;
}

HilbertFunction hilbert_from_betti(const ResolutionShape& res, int n) {
    int top = 0;
    for (auto& m : res.modules)
        for (auto& [j, x] : m.twists()) {
            if (j < 0) throw NonPolynomial("negative twist");
            top = std::max(top, j);
        }
    std::vector<Int> p(static_cast<std::size_t>(top) + 1, 0);
    for (std::size_t i = 0; i < res.modules.size(); ++i)
        for (auto& [j, x] : res.modules[i].twists())
            p[static_cast<std::size_t>(j)] += (i % 2 ? -x : x);
    for (int r = 0; r < n; ++r) {
        // divide by (1 - z): partial sums, remainder is the total sum
        for (std::size_t k = 1; k < p.size(); ++k) p[k] += p[k - 1];
        if (!p.empty() && p.back() != 0) throw NonPolynomial("Betti numerator not divisible by (1-z)^n");
        if (!p.empty()) p.pop_back();
    }
    for (Int x : p)
        if (x < 0) throw NegativeCoefficient("Hilbert function with a negative value");
    return HilbertFunction(std::move(p));
}

bool check_gorenstein_symmetry(const BettiTable& table, int s, int n) {
    for (auto& [e, m] : table.entries)
        if (table.at(n - e.first, s + n - e.second) != m) return false;
    return true;
}

ResolutionShape split_summands(const ResolutionShape& res, const std::vector<Cancellation>& cancel) {
    ResolutionShape r = res;
    for (auto& c : cancel) {
        if (c.pos < 0 || c.pos + 1 >= static_cast<int>(r.modules.size()))
            throw InsufficientMultiplicity("cancellation outside the resolution");
        r.modules[static_cast<std::size_t>(c.pos)].remove(c.twist, c.count);
        r.modules[static_cast<std::size_t>(c.pos) + 1].remove(c.twist, c.count);
    }
    return r;
}

}  // namespace betti
