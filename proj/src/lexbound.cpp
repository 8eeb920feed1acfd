#include "betti/lexbound.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "betti/oracle.hpp"

namespace betti {

namespace {

int max_index(const std::vector<int>& e) {
    int m = 0;
    for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v] > 0) m = static_cast<int>(v) + 1;
    return m;
}

}  // namespace

int MonomialIdeal::degree(std::size_t g) const { return std::accumulate(gens[g].begin(), gens[g].end(), 0); }

bool MonomialIdeal::contains(const std::vector<int>& exps) const {
    for (const auto& g : gens) {
        bool divides = true;
        for (std::size_t v = 0; v < g.size(); ++v)
            if (g[v] > exps[v]) {
                divides = false;
                break;
            }
        if (divides) return true;
    }
    return false;
}

MonomialIdeal lex_ideal_from_hilbert(const HilbertFunction& h, int c) {
    if (c < 1) throw InvalidInput("need at least one variable");
    if (h(0) != 1 || h(1) > c || !is_o_sequence(h.values)) throw NotOSequence("not an O-sequence: " + h.str());
    oracle::Monomials mon(c);
    MonomialIdeal out;
    out.c = c;
    // the ideal in degree t is the first count(t) - h_t monomials
    int prev_size = 0;
    for (int t = 1; t <= h.last_degree() + 1; ++t) {
        const int size = mon.count(t) - static_cast<int>(h(t));
        for (int m = 0; m < size; ++m) {
            const auto e = mon.exponents(t, m);
            bool old = false;
            for (int k = 0; k < c && !old; ++k) {
                if (e[static_cast<std::size_t>(k)] == 0) continue;
                const int lower = mon.index(t - 1, mon.key(t, m) - oracle::Monomials::var_key(k));
                old = lower < prev_size;
            }
            if (!old) out.gens.push_back(e);
        }
        prev_size = size;
    }
    return out;
}

BettiTable ek_betti(const MonomialIdeal& m) {
    BettiTable out;
    out.add(0, 0, 1);
    for (std::size_t g = 0; g < m.gens.size(); ++g) {
        const auto& u = m.gens[g];
        const int mx = max_index(u);
        for (int j = 1; j < mx; ++j) {
            auto v = u;
            v[static_cast<std::size_t>(mx - 1)] -= 1;
            v[static_cast<std::size_t>(j - 1)] += 1;
            if (!m.contains(v)) throw NotStable("monomial ideal is not stable");
        }
        const int d = m.degree(g);
        for (int i = 0; i < mx; ++i) out.add(i + 1, d + i, binom(mx - 1, i));
    }
    return out;
}

BettiTable gor_betti_bound(const HilbertFunction& h, int c) {
    if (!is_si_sequence(h)) throw NotSISequence("not an SI-sequence: " + h.str());
    const int s = h.last_degree();
    int ell = 0;
    while (ell < s && h(ell + 1) > h(ell)) ++ell;
    std::vector<Int> gv{1};
    for (int i = 1; i <= ell; ++i) gv.push_back(h(i) - h(i - 1));
    const BettiTable b = ek_betti(lex_ideal_from_hilbert(HilbertFunction(gv), c - 1));
    BettiTable out;
    for (int i = 0; i <= c; ++i) {
        for (int j = i; j <= s + c; ++j) {
            const Int first = b.at(i, j);
            const Int second = b.at(c - i, s + c - j);
            Int v = 0;
            if (j <= s - ell + i - 1)
                v = first;
            else if (j <= ell + i)
                v = first + second;
            else
                v = second;
            if (v) out.add(i, j, v);
        }
    }
    return out;
}

BettiTable aci_betti_bound(const DegreeTuple& t) {
    if (t.classification() != Classification::ProperACI)
        throw ClassificationError("bound needs a proper almost complete intersection");
    const int n = t.n();
    const BettiTable k = to_table(koszul_resolution(t.first_n()));
    const BettiTable g = gor_betti_bound(linked_gorenstein_hilbert(t), n);
    BettiTable out;
    out.add(0, 0, 1);
    const int d = t.d();
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j <= d; ++j) {
            const Int v = k.at(n - i, d - j) + g.at(n - i + 1, d - j);
            if (v) out.add(i, j, v);
        }
    return out;
}

}  // namespace betti
