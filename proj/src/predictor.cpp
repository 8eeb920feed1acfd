#include "betti/predictor.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "betti/lexbound.hpp"

namespace betti {

std::string to_string(Status s) { return s == Status::Exact ? "exact" : "bound"; }

std::string to_string(GhostReason r) {
    return r == GhostReason::KoszulVsGenerator ? "KoszulVsGenerator" : "NonSplittingOverlap";
}

bool Prediction::all_exact() const {
    return std::all_of(status.begin(), status.end(), [](const auto& kv) { return kv.second == Status::Exact; });
}

Status Prediction::at(int i, int j) const {
    auto it = status.find({i, j});
    return it == status.end() ? Status::Exact : it->second;
}

ResolutionShape Prediction::instantiate(const std::vector<Int>& values) const {
    if (values.size() != families.size()) throw InvalidInput("one value per family expected");
    BettiTable t = table();
    for (std::size_t k = 0; k < families.size(); ++k) {
        const Family& f = families[k];
        if (values[k] < f.lo || values[k] > f.hi) throw InvalidInput("parameter " + f.name + " out of range");
        for (const auto& term : f.terms) t.add(term.i, term.j, -term.coeff * (f.hi - values[k]));
    }
    return to_shape(t);
}

namespace {

int dsum(const DegreeTuple& t) { return static_cast<int>(t.d()); }

// builds a shape entry by entry; UpperBound wins when entries merge
struct Builder {
    std::vector<GradedFreeModule> mods;
    std::map<Entry, Status> status;

    explicit Builder(int length) : mods(static_cast<std::size_t>(length + 1)) { mods[0].add(0, 1); }

    void add(int i, int j, Int m, Status st = Status::Exact) {
        if (m < 0) throw HypothesisNotMet("negative multiplicity in predicted shape");
        if (m == 0) return;
        mods[static_cast<std::size_t>(i)].add(j, m);
        auto [it, fresh] = status.emplace(Entry{i, j}, st);
        if (!fresh && st == Status::UpperBound) it->second = st;
    }

    Prediction done(std::string source) {
        Prediction p;
        p.shape.modules = std::move(mods);
        p.status = std::move(status);
        p.status[{0, 0}] = Status::Exact;
        p.source = std::move(source);
        return p;
    }
};

void mark_all(Prediction& p, Status st) {
    p.status.clear();
    for (std::size_t i = 0; i < p.shape.modules.size(); ++i)
        for (const auto& [j, m] : p.shape.modules[i].twists()) p.status[{static_cast<int>(i), j}] = st;
}

Prediction exact(ResolutionShape s, std::string source) {
    Prediction p;
    p.shape = std::move(s);
    mark_all(p, Status::Exact);
    p.source = std::move(source);
    return p;
}

void prune(Prediction& p) {
    for (auto it = p.status.begin(); it != p.status.end();) {
        if (p.shape.mult(it->first.first, it->first.second) == 0)
            it = p.status.erase(it);
        else
            ++it;
    }
    for (std::size_t i = 0; i < p.shape.modules.size(); ++i)
        for (const auto& [j, m] : p.shape.modules[i].twists()) p.status.emplace(Entry{static_cast<int>(i), j}, Status::Exact);
}

Prediction cone(const Prediction& gor, const DegreeTuple& t) {
    const int n = t.n();
    const int d = dsum(t);
    Prediction p;
    p.shape = mapping_cone_aci(gor.shape, t);
    mark_all(p, Status::Exact);
    for (const auto& [e, st] : gor.status) {
        if (st != Status::UpperBound || e.first < 1) continue;
        p.status[{n - e.first + 1, d - e.second}] = Status::UpperBound;
    }
    for (Family f : gor.families) {
        for (auto& term : f.terms) {
            term.i = n - term.i + 1;
            term.j = d - term.j;
        }
        p.families.push_back(std::move(f));
    }
    return p;
}

void split(Prediction& p, const std::vector<Cancellation>& c) {
    if (c.empty()) return;
    p.shape = split_summands(p.shape, c);
    prune(p);
}

// split R(d_i - d) against F_1^vee(-d) for each i <= n with d_i in [lo, hi]
std::vector<Cancellation> end_splits(const DegreeTuple& t, int lo, int hi) {
    std::vector<Cancellation> out;
    for (int i = 1; i <= t.n(); ++i)
        if (t.deg(i) >= lo && t.deg(i) <= hi) out.push_back({t.n() - 1, dsum(t) - t.deg(i), 1});
    return out;
}

Prediction finish(Prediction p, const DegreeTuple& t) {
    prune(p);
    if (p.all_exact()) p.ghosts = detect_ghosts(p, t);
    return p;
}

void require_aci(const DegreeTuple& t) {
    if (t.classification() != Classification::ProperACI)
        throw HypothesisNotMet("needs a proper almost complete intersection, got " + to_string(t.classification()));
}

}  // namespace

// ---- Gorenstein shapes ----

ResolutionShape gor_one_peak(int n, int ell) {
    if (n < 2 || ell < 0) throw InvalidInput("bad one-peak parameters");
    auto alpha = [&](int i) { return binom(n + ell - 1, i + ell) * binom(ell - 1 + i, ell); };
    ResolutionShape r;
    r.modules.resize(static_cast<std::size_t>(n + 1));
    r.modules[0].add(0, 1);
    for (int i = 1; i < n; ++i) r.modules[static_cast<std::size_t>(i)].add(ell + i, alpha(i) + alpha(n - i));
    r.modules[static_cast<std::size_t>(n)].add(2 * ell + n, 1);
    return r;
}

ResolutionShape gor_one_peak(int n, int ell, const DegreeTuple& t) {
    const GorensteinProfile g = gorenstein_profile(t);
    if (t.n() != n || g.peak_count != 1 || !g.maximal_growth || g.ell != ell)
        throw ProfileMismatch("tuple " + t.str() + " does not have a single maximal peak at " + std::to_string(ell));
    return gor_one_peak(n, ell);
}

Int two_peaks_alpha(int n, int tdeg, int i) {
    return binom(tdeg + n - 1, tdeg + i - 1) * binom(tdeg + i - 2, i - 1) -
           binom(tdeg + n - 1, tdeg + n - i) * binom(tdeg + n - i - 1, n - i);
}

Int two_peaks_middle_bound(int n, int tdeg) {
    const int p = (n - 1) / 2;
    // ceiling of prod_{k != t+p} k / (n-1)!, exact in 128 bits
    __int128 num = 1, den = 1;
    for (int k = tdeg; k <= tdeg + n - 1; ++k)
        if (k != tdeg + p) num *= k;
    for (int k = 2; k <= n - 1; ++k) den *= k;
    const Int rho = static_cast<Int>((num + den - 1) / den);
    return binom(n - 1, p) * rho - binom(tdeg + n - 1, tdeg + p) * binom(tdeg + p - 1, p);
}

ResolutionShape gor_two_peaks_even(int n, int tdeg) {
    if (n % 2 != 0) throw OddDimension("two-peak Gorenstein shape needs even n");
    if (n < 2 || tdeg < 1) throw InvalidInput("bad two-peak parameters");
    const int p = n / 2;
    Builder b(n);
    for (int i = 1; i < p; ++i) b.add(i, tdeg + i - 1, two_peaks_alpha(n, tdeg, i));
    b.add(p, tdeg + p - 1, two_peaks_alpha(n, tdeg, p));
    b.add(p, tdeg + p, two_peaks_alpha(n, tdeg, p));
    for (int i = p + 1; i < n; ++i) b.add(i, tdeg + i, two_peaks_alpha(n, tdeg, n - i));
    b.add(n, 2 * tdeg + n - 1, 1);
    return b.done("").shape;
}

Prediction gor_two_peaks_odd_bounds(int n, int tdeg) {
    if (n % 2 == 0) throw EvenDimension("middle-bound Gorenstein shape needs odd n");
    if (n < 3 || tdeg < 1) throw InvalidInput("bad two-peak parameters");
    const int p = (n - 1) / 2;
    const Int bp = std::max<Int>(0, two_peaks_middle_bound(n, tdeg));
    Builder b(n);
    for (int i = 1; i < p; ++i) b.add(i, tdeg + i - 1, two_peaks_alpha(n, tdeg, i));
    b.add(p, tdeg + p - 1, two_peaks_alpha(n, tdeg, p));
    b.add(p, tdeg + p, bp, Status::UpperBound);
    b.add(p + 1, tdeg + p, bp, Status::UpperBound);
    b.add(p + 1, tdeg + p + 1, two_peaks_alpha(n, tdeg, p));
    for (int i = p + 2; i < n; ++i) b.add(i, tdeg + i, two_peaks_alpha(n, tdeg, n - i));
    b.add(n, 2 * tdeg + n - 1, 1);
    Prediction out = b.done("Rem3.9");
    if (bp > 0) out.families.push_back({"b", 0, bp, {{p, tdeg + p, 1}, {p + 1, tdeg + p, 1}}});
    return out;
}

namespace {

struct N3Case {
    int number;  // 1..4
    int ell;
    int delta;
};

N3Case n3_case(const DegreeTuple& t) {
    const int d1 = t.deg(1), d2 = t.deg(2), d3 = t.deg(3), d4 = t.deg(4);
    const bool maximal = d2 + d3 < d1 + d4 + 3;
    const bool odd = (d1 + d2 + d3 + d4) % 2 != 0;
    const int ell = gorenstein_profile(t).ell;
    if (maximal && odd) return {1, ell, 0};
    if (maximal) return {2, ell, ell % 2 == 0 ? 1 : 0};
    if (odd) return {3, ell, 0};
    return {4, ell, d1 % 2 != 0 ? 1 : 0};
}

}  // namespace

ResolutionShape gor_n3_generic(const DegreeTuple& t) {
    if (t.n() != 3) throw HypothesisNotMet("codimension three shape needs n = 3");
    require_aci(t);
    const N3Case c = n3_case(t);
    const int l = c.ell, d1 = t.deg(1), dl = c.delta;
    Builder b(3);
    switch (c.number) {
        case 1:
            b.add(1, l + 1, 2 * l + 3);
            b.add(2, l + 2, 2 * l + 3);
            b.add(3, 2 * l + 3, 1);
            break;
        case 2:
            b.add(1, l + 1, l + 2);
            b.add(1, l + 2, dl);
            b.add(2, l + 3, l + 2);
            b.add(2, l + 2, dl);
            b.add(3, 2 * l + 4, 1);
            break;
        case 3:
            b.add(1, d1, 1);
            b.add(1, l + 1, 2 * d1);
            b.add(2, 2 * l + 3 - d1, 1);
            b.add(2, l + 2, 2 * d1);
            b.add(3, 2 * l + 3, 1);
            break;
        default:
            b.add(1, d1, 1);
            b.add(1, l + 1, d1);
            b.add(1, l + 2, dl);
            b.add(2, 2 * l + 4 - d1, 1);
            b.add(2, l + 3, d1);
            b.add(2, l + 2, dl);
            b.add(3, 2 * l + 4, 1);
            break;
    }
    return b.done("").shape;
}

// ---- equal degrees ----

SameDegParams samedeg_params(int n, int a) {
    if (n < 3 || a < 2) throw InvalidInput("equal-degree parameters need n >= 3, a >= 2");
    SameDegParams p;
    p.n = n;
    p.a = a;
    p.s = (n - 1) * a - n;
    p.ell = static_cast<int>(floor_div(p.s, 2));
    p.t = static_cast<int>(floor_div(p.ell - 1, a - 1));
    p.alpha.assign(static_cast<std::size_t>(n), 0);
    auto al = [&](int j) -> Int { return j >= 1 && j <= n - 1 ? p.alpha[static_cast<std::size_t>(j)] : 0; };
    auto sign = [](int e) -> Int { return e % 2 == 0 ? 1 : -1; };
    for (int j = 1; j <= n - 2; ++j) {
        Int v = 0;
        for (int i = 0; i <= p.t; ++i) v += sign(i + j - 1) * binom(n, i) * binom(p.ell + n - 2 + j - i * a, n - 2);
        for (int r = 1; r <= j - 1; ++r) v -= sign(r + j) * binom(n - 2 + j - r, j - r) * al(r);
        p.alpha[static_cast<std::size_t>(j)] = v;
    }
    Int last = sign(n);
    for (int i = 2; i <= n - p.t - 1; ++i) last += sign(i) * al(n - i);
    for (int i = std::max(2, n - p.t); i <= n - 1; ++i) last += sign(i) * (al(n - i) + binom(n, n - i));
    p.alpha[static_cast<std::size_t>(n - 1)] = last;
    for (int j = 1; j <= n - 1; ++j)
        if (p.alpha[static_cast<std::size_t>(j)] < 0)
            throw HypothesisNotMet("negative alpha_" + std::to_string(j) + " for n=" + std::to_string(n) +
                                   ", a=" + std::to_string(a));
    return p;
}

Prediction gor_samedeg(int n, int a) {
    const SameDegParams p = samedeg_params(n, a);
    const int s = p.s, l = p.ell;
    const bool all_exact = n % 2 == 0 && s % 2 == 0;
    auto al = [&](int j) { return p.alpha[static_cast<std::size_t>(j)]; };
    const Status loose = all_exact ? Status::Exact : Status::UpperBound;
    Builder b(n);
    for (int i = 1; i <= n - 1; ++i) {
        if (i <= p.t) b.add(i, i * a, binom(n, i));
        if (n - i <= p.t) b.add(i, s + n - (n - i) * a, binom(n, n - i));
        b.add(i, l + i, al(i), i == 1 ? Status::Exact : loose);
        b.add(i, s - l + i, al(n - i), i == n - 1 ? Status::Exact : loose);
    }
    b.add(n, s + n, 1);
    std::string tag = n % 2 != 0 ? "Thm5.4-odd" : (s % 2 != 0 ? "Thm5.4-even-odd" : "Thm5.4-even-even");
    Prediction out = b.done(tag);
    if (n == 4 && s % 2 != 0) {
        // the (1,2) and (2,3) overlaps cancel in equal numbers by self-duality
        const Int hi = al(3);
        out.families.push_back({"y", std::max<Int>(0, al(3) - al(2)), hi,
                                {{1, l + 2, 1}, {2, l + 2, 1}, {2, l + 3, 1}, {3, l + 3, 1}}});
    }
    return out;
}

ResolutionShape ala_samedeg(int n, int a) {
    const SameDegParams p = samedeg_params(n, a);
    Builder b(n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        if (i <= p.t) b.add(i, i * a, binom(n, i));
        b.add(i, p.ell + i, p.alpha[static_cast<std::size_t>(i)]);
    }
    return b.done("").shape;
}

// ---- n = 4, even degree sum ----

N4EvenData n4_even_data(const DegreeTuple& t) {
    if (t.n() != 4) throw HypothesisNotMet("needs n = 4");
    require_aci(t);
    const GorensteinProfile g = gorenstein_profile(t);
    if (g.peak_count != 1) throw HypothesisNotMet("needs an even degree sum");
    N4EvenData r;
    r.ell = g.ell;
    r.f = t.deg(1) + t.deg(2) + t.deg(3);
    const HilbertFunction hj = ci_hilbert(t.first_n(), 4);
    r.b3 = hj(r.ell) - hj(r.ell - 1);
    r.a2 = r.f - t.deg(3) <= r.ell + 1 ? 1 : 0;
    Int sum_a1 = 0, weighted = 0;
    for (int i = 1; i <= 4; ++i) {
        const Int a = t.deg(i) <= r.ell ? 1 : 0;
        r.a1.push_back(a);
        sum_a1 += a;
        weighted += a * t.deg(i);
    }
    r.b1 = weighted - r.a2 * (r.f - t.deg(3)) - (sum_a1 - 1 - r.a2) * (r.ell + 2) + r.b3;
    r.b2 = r.b3 + sum_a1 + r.b1 - 1 - r.a2;
    return r;
}

ResolutionShape gor_n4_even(const DegreeTuple& t) {
    const N4EvenData r = n4_even_data(t);
    const int l = r.ell, lo = r.f - t.deg(3);
    Builder b(4);
    for (int i = 1; i <= 4; ++i) {
        b.add(1, t.deg(i), r.a1[static_cast<std::size_t>(i - 1)]);
        b.add(3, 2 * l + 4 - t.deg(i), r.a1[static_cast<std::size_t>(i - 1)]);
    }
    b.add(1, l + 1, r.b1 + r.b3);
    b.add(2, lo, r.a2);
    b.add(2, l + 2, 2 * r.b2);
    b.add(2, 2 * l + 4 - lo, r.a2);
    b.add(3, l + 3, r.b1 + r.b3);
    b.add(4, 2 * l + 4, 1);
    return b.done("").shape;
}

ResolutionShape ala_n4_even(const DegreeTuple& t) {
    const N4EvenData r = n4_even_data(t);
    Builder b(3);
    for (int i = 1; i <= 4; ++i) b.add(1, t.deg(i), r.a1[static_cast<std::size_t>(i - 1)]);
    b.add(1, r.ell + 1, r.b1);
    b.add(2, r.f - t.deg(3), r.a2);
    b.add(2, r.ell + 2, r.b2);
    b.add(3, r.ell + 3, r.b3);
    return b.done("").shape;
}

// ---- ACI predictions ----

Prediction koszul_prediction(const DegreeTuple& t) {
    return finish(exact(koszul_resolution(t.first_n()), "Koszul"), t);
}

Prediction bound_prediction(const DegreeTuple& t) {
    Prediction p;
    p.shape = to_shape(aci_betti_bound(t));
    mark_all(p, Status::UpperBound);
    p.status[{0, 0}] = Status::Exact;
    p.source = "Cor3.5-bound";
    return p;
}

Prediction aci_one_peak(const DegreeTuple& t) {
    require_aci(t);
    const GorensteinProfile g = gorenstein_profile(t);
    if (g.peak_count != 1 || !g.maximal_growth || t.deg(1) < 2)
        throw HypothesisNotMet("single maximal peak needed for " + t.str());
    Prediction p = cone(exact(gor_one_peak(t.n(), g.ell), ""), t);
    split(p, end_splits(t, g.ell + 1, g.ell + 1));
    p.source = "Cor3.6";
    return finish(std::move(p), t);
}

Prediction aci_two_peaks_even(const DegreeTuple& t) {
    require_aci(t);
    const GorensteinProfile g = gorenstein_profile(t);
    const int n = t.n();
    if (n % 2 != 0 || g.peak_count != 2 || !g.maximal_growth || t.deg(1) < 2)
        throw HypothesisNotMet("two maximal peaks with even n needed for " + t.str());
    Prediction p = cone(exact(gor_two_peaks_even(n, g.ell + 1), ""), t);
    auto c = end_splits(t, g.ell + 1, g.ell + 1);
    if (n == 4 && t.deg(1) == 2 && t.deg(2) == 2 && t.deg(3) + t.deg(4) == t.deg(5) + 3 &&
        g.ell + 3 == t.deg(1) + t.deg(2))
        c.push_back({2, dsum(t) - g.ell - 3, 1});
    split(p, c);
    p.source = n == 4 ? "Prop3.10" : "Prop3.10-conjectural";
    return finish(std::move(p), t);
}

Prediction aci_two_peaks_odd_bounds(const DegreeTuple& t) {
    require_aci(t);
    const GorensteinProfile g = gorenstein_profile(t);
    const int n = t.n();
    if (n % 2 == 0 || n <= 3 || g.peak_count != 2 || !g.maximal_growth || t.deg(1) < 2)
        throw HypothesisNotMet("two maximal peaks with odd n > 3 needed for " + t.str());
    Prediction p = cone(gor_two_peaks_odd_bounds(n, g.ell + 1), t);
    split(p, end_splits(t, g.ell + 1, g.ell + 1));
    p.source = "Rem3.13";
    return finish(std::move(p), t);
}

Prediction aci_socle_one(const DegreeTuple& t) {
    require_aci(t);
    const GorensteinProfile g = gorenstein_profile(t);
    if (g.s != 1 || t.deg(1) < 2) throw HypothesisNotMet("needs socle degree one for " + t.str());
    // R/G is a complete intersection of n-1 linear forms and a quadric
    std::vector<int> gens(static_cast<std::size_t>(t.n() - 1), 1);
    gens.push_back(2);
    Prediction p = cone(exact(koszul_resolution(gens), ""), t);
    if (t.deg(1) == 2) split(p, {{t.n() - 1, dsum(t) - 2, 1}});
    p.source = "LinkedCI-s1";
    return finish(std::move(p), t);
}

N3SplitRules n3_case2_rules(const DegreeTuple& t) {
    if (t.n() != 3) throw HypothesisNotMet("needs n = 3");
    require_aci(t);
    const N3Case c = n3_case(t);
    if (c.number != 2) return {};
    const int d1 = t.deg(1), d2 = t.deg(2), d3 = t.deg(3), d4 = t.deg(4);
    return {d1 + d4 == d2 + d3 - 2, d1 == d2 && d3 == d4 && c.ell % 2 == 0, d4 - d3 == d2 - d1 && c.ell % 2 == 0};
}

Prediction aci_n3(const DegreeTuple& t) {
    if (t.n() != 3) throw HypothesisNotMet("needs n = 3");
    if (t.classification() == Classification::CompleteIntersection) return koszul_prediction(t);
    require_aci(t);
    const N3Case c = n3_case(t);
    const int d1 = t.deg(1), d2 = t.deg(2), d3 = t.deg(3), d4 = t.deg(4);
    Prediction p = cone(exact(gor_n3_generic(t), ""), t);
    bool one = false;
    switch (c.number) {
        case 1:
            one = d1 + d4 == d2 + d3 - 1;
            break;
        case 2: {
            const N3SplitRules r = n3_case2_rules(t);
            one = r.i || r.ii || r.iii;
            break;
        }
        default:
            one = true;
    }
    if (one) split(p, {{2, dsum(t) - d1, 1}});
    static const char* names[] = {"", "Thm4.2-CaseI", "Thm4.2-CaseII", "Thm4.2-CaseIII", "Thm4.2-CaseIV"};
    p.source = names[c.number];
    return finish(std::move(p), t);
}

Prediction aci_n3_equal(int a) {
    if (a < 2) throw InvalidInput("degree must be at least 2");
    Builder b(3);
    b.add(1, a, 4);
    b.add(2, 2 * a, 3);
    b.add(2, 2 * a - 1, a);
    b.add(3, 2 * a + 1, a);
    return finish(b.done("Cor4.3"), DegreeTuple(3, {a, a, a, a}));
}

Prediction aci_n2(const DegreeTuple& t) {
    if (t.n() != 2) throw HypothesisNotMet("needs n = 2");
    require_aci(t);
    // numerator of the Hilbert series: 1 - sum z^{d_i} + sum z^{syzygy degrees}
    const HilbertFunction h = aci_hilbert(t);
    std::vector<Int> num(static_cast<std::size_t>(h.last_degree() + 3), 0);
    for (int k = 0; k <= h.last_degree(); ++k) {
        num[static_cast<std::size_t>(k)] += h(k);
        num[static_cast<std::size_t>(k + 1)] -= 2 * h(k);
        num[static_cast<std::size_t>(k + 2)] += h(k);
    }
    Builder b(2);
    for (int d : t.degrees()) b.add(1, d, 1);
    num[0] -= 1;
    for (int d : t.degrees())
        if (d < static_cast<int>(num.size())) num[static_cast<std::size_t>(d)] += 1;
    Int total = 0;
    for (std::size_t j = 0; j < num.size(); ++j) {
        if (num[j] < 0) throw HypothesisNotMet("syzygy degrees not determined for " + t.str());
        b.add(2, static_cast<int>(j), num[j]);
        total += num[j];
    }
    if (total != 2) throw HypothesisNotMet("expected two syzygies for " + t.str());
    return finish(b.done("HilbertBurch"), t);
}

Prediction aci_samedeg(int n, int a) {
    if (n == 3) {
        Prediction p = aci_n3_equal(a);
        p.source = "Thm5.4-odd";
        return p;
    }
    std::vector<int> degs(static_cast<std::size_t>(n + 1), a);
    const DegreeTuple t(n, degs);
    const SameDegParams sp = samedeg_params(n, a);
    Prediction g = gor_samedeg(n, a);
    Prediction p = cone(g, t);
    std::vector<Cancellation> c;
    // Koszul syzygies of J sit in G's resolution up to row ell + i, one row past t
    for (int i = 1; i <= n - 1 && i * (a - 1) <= sp.ell; ++i)
        c.push_back({n - i, dsum(t) - i * a, binom(n, i)});
    split(p, c);
    p.source = g.source;
    return finish(std::move(p), t);
}

Prediction aci_n4_even(const DegreeTuple& t) {
    const N4EvenData r = n4_even_data(t);
    if (t.deg(1) < 2) throw HypothesisNotMet("needs d_1 >= 2");
    Prediction p = cone(exact(gor_n4_even(t), ""), t);
    auto c = end_splits(t, 1, r.ell + 1);
    // Koszul syzygies of two generators of J that are minimal in G
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            if (t.deg(j) <= r.ell && t.deg(i) + t.deg(j) <= r.ell + 2)
                c.push_back({2, dsum(t) - t.deg(i) - t.deg(j), 1});
    split(p, c);
    p.source = "Thm5.6";
    return finish(std::move(p), t);
}

Prediction deg1_reduction(const DegreeTuple& t, Deg1Index index) {
    if (t.deg(1) != 1) throw HypothesisNotMet("needs a linear generator");
    if (t.classification() == Classification::CompleteIntersection) return koszul_prediction(t);
    std::vector<int> rest(t.degrees().begin() + 1, t.degrees().end());
    const DegreeTuple inner(t.n() - 1, rest);
    const Prediction q = predict(inner);
    const int shift = index == Deg1Index::Minus ? 1 : -1;
    BettiTable tab;
    std::map<Entry, Status> st;
    auto put = [&](int i, int j, Int m, Status s) {
        tab.add(i, j, m);
        auto [it, fresh] = st.emplace(Entry{i, j}, s);
        if (!fresh && s == Status::UpperBound) it->second = s;
    };
    for (const auto& [e, m] : q.table().entries) {
        put(e.first, e.second, m, q.at(e.first, e.second));
        put(e.first + 1, e.second + shift, m, q.at(e.first, e.second));
    }
    Prediction p;
    p.shape = to_shape(tab);
    p.status = std::move(st);
    for (Family f : q.families) {
        std::vector<FamilyTerm> terms = f.terms;
        for (const auto& term : f.terms) terms.push_back({term.i + 1, term.j + shift, term.coeff});
        f.terms = std::move(terms);
        p.families.push_back(std::move(f));
    }
    p.source = "Prop3.1b:" + q.source;
    return finish(std::move(p), t);
}

Prediction predict(const DegreeTuple& t) {
    switch (t.classification()) {
        case Classification::CompleteIntersection:
            return koszul_prediction(t);
        case Classification::Degenerate:
            return deg1_reduction(t);
        case Classification::ProperACI:
            break;
    }
    const int n = t.n();
    if (n == 2) return aci_n2(t);
    if (n == 3) return aci_n3(t);
    if (t.equal_degrees()) return aci_samedeg(n, t.deg(1));
    const GorensteinProfile g = gorenstein_profile(t);
    if (g.s == 1) return aci_socle_one(t);
    if (g.maximal_growth && g.peak_count == 1) return aci_one_peak(t);
    if (n == 4 && g.peak_count == 1) return aci_n4_even(t);
    if (g.maximal_growth) {
        if (n % 2 == 0) return aci_two_peaks_even(t);
        return aci_two_peaks_odd_bounds(t);
    }
    return bound_prediction(t);
}

std::vector<GhostTerm> detect_ghosts(const Prediction& p, const DegreeTuple& t) {
    if (!p.all_exact()) throw BoundsPresent("ghost detection needs an exact prediction");
    std::set<int> pair_sums;
    const auto first = t.first_n();
    for (std::size_t a = 0; a < first.size(); ++a)
        for (std::size_t b = a + 1; b < first.size(); ++b) pair_sums.insert(first[a] + first[b]);
    const std::vector<int> degs = t.degrees();
    std::vector<GhostTerm> out;
    for (int i = 1; i + 1 <= p.shape.length(); ++i) {
        for (const auto& [j, m] : p.shape.modules[static_cast<std::size_t>(i)].twists()) {
            const Int other = p.shape.mult(i + 1, j);
            if (other == 0) continue;
            const bool koszul = i == 1 && pair_sums.count(j) && std::find(degs.begin(), degs.end(), j) != degs.end();
            out.push_back({i, j, std::min(m, other),
                           koszul ? GhostReason::KoszulVsGenerator : GhostReason::NonSplittingOverlap});
        }
    }
    return out;
}

}  // namespace betti
