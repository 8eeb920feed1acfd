#include "betti/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace betti::oracle {

using modp::Echelon;
using modp::Elem;
using modp::Row;

namespace {

std::size_t sz(int x) { return static_cast<std::size_t>(x); }

// acc += f * v, reduced lazily by the caller
void axpy(std::vector<std::uint64_t>& acc, Elem f, const Row& v) {
    if (f == 0) return;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k]) acc[k] += static_cast<std::uint64_t>(f) * v[k];
}

Row reduce_acc(const std::vector<std::uint64_t>& acc, Elem p) {
    Row out(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<Elem>(acc[k] % p);
    return out;
}

// sum_b v[b] * images[b]; folds every 2^31 terms to stay inside 64 bits
Row combine(const Row& v, const std::vector<Row>& images, int width, Elem p) {
    std::vector<std::uint64_t> acc(sz(width), 0);
    int pending = 0;
    for (std::size_t b = 0; b < v.size(); ++b) {
        if (v[b] == 0) continue;
        axpy(acc, v[b], images[b]);
        if (++pending == (1 << 30)) {
            for (auto& a : acc) a %= p;
            pending = 0;
        }
    }
    return reduce_acc(acc, p);
}

}  // namespace

// ---- Monomials ----

Monomials::Monomials(int n) : n_(n) {
    if (n < 1 || n > 8) throw InvalidInput("monomial tables support 1..8 variables");
}

void Monomials::ensure(int t) {
    if (t < 0) throw InvalidInput("negative degree");
    if (t > 255) throw InvalidInput("degree too large for packed monomials");
    while (static_cast<int>(keys_.size()) <= t) {
        const int deg = static_cast<int>(keys_.size());
        std::vector<std::uint64_t> keys;
        std::vector<int> e(sz(n_), 0);
        std::function<void(int, int)> rec = [&](int var, int left) {
            if (var == n_ - 1) {
                e[sz(var)] = left;
                std::uint64_t k = 0;
                for (int v = 0; v < n_; ++v) k |= static_cast<std::uint64_t>(e[sz(v)]) << (8 * v);
                keys.push_back(k);
                return;
            }
            for (int a = left; a >= 0; --a) {
                e[sz(var)] = a;
                rec(var + 1, left - a);
            }
        };
        rec(0, deg);
        std::vector<std::pair<std::uint64_t, int>> look;
        look.reserve(keys.size());
        for (std::size_t i = 0; i < keys.size(); ++i) look.emplace_back(keys[i], static_cast<int>(i));
        std::sort(look.begin(), look.end());
        keys_.push_back(std::move(keys));
        lookup_.push_back(std::move(look));
    }
}

int Monomials::count(int t) {
    ensure(t);
    return static_cast<int>(keys_[sz(t)].size());
}

std::uint64_t Monomials::key(int t, int m) {
    ensure(t);
    return keys_[sz(t)][sz(m)];
}

int Monomials::index(int t, std::uint64_t key) {
    ensure(t);
    const auto& look = lookup_[sz(t)];
    auto it = std::lower_bound(look.begin(), look.end(), std::make_pair(key, 0));
    if (it == look.end() || it->first != key) throw InvalidInput("monomial not found");
    return it->second;
}

int Monomials::times_var(int t, int k, int m) { return index(t + 1, key(t, m) + var_key(k)); }

std::vector<int> Monomials::exponents(int t, int m) {
    const std::uint64_t k = key(t, m);
    std::vector<int> e(sz(n_));
    for (int v = 0; v < n_; ++v) e[sz(v)] = static_cast<int>((k >> (8 * v)) & 0xff);
    return e;
}

// ---- forms ----

DenseForm monomial_form(int n, const std::vector<int>& exponents) {
    if (static_cast<int>(exponents.size()) != n) throw InvalidInput("exponent vector length");
    Monomials mon(n);
    int deg = 0;
    std::uint64_t key = 0;
    for (int v = 0; v < n; ++v) {
        if (exponents[sz(v)] < 0) throw InvalidInput("negative exponent");
        deg += exponents[sz(v)];
        key |= static_cast<std::uint64_t>(exponents[sz(v)]) << (8 * v);
    }
    DenseForm f{n, deg, Row(sz(mon.count(deg)), 0)};
    f.coeffs[sz(mon.index(deg, key))] = 1;
    return f;
}

std::vector<DenseForm> random_forms(int n, const std::vector<int>& degrees, const FieldConfig& cfg) {
    Monomials mon(n);
    std::mt19937_64 rng(cfg.seed);
    std::vector<DenseForm> out;
    for (int d : degrees) {
        DenseForm f{n, d, Row(sz(mon.count(d)))};
        for (auto& c : f.coeffs) c = static_cast<Elem>(rng() % cfg.prime);
        out.push_back(std::move(f));
    }
    return out;
}

// ---- GradedQuotient ----

HilbertFunction GradedQuotient::hilbert() const {
    std::vector<Int> v(dims.begin(), dims.end());
    return HilbertFunction(v);
}

Row GradedQuotient::apply(int t, int k, const Row& v) const {
    const int width = t + 1 <= top() ? dims[sz(t + 1)] : 0;
    if (width == 0) return {};
    return combine(v, mult[sz(t)][sz(k)], width, prime);
}

Row FormQuotient::normal_form(const DenseForm& f) const {
    if (f.degree > q.top()) return {};
    if (f.degree >= static_cast<int>(normal_forms.size()))
        throw InvalidInput("normal forms not tabulated in this degree");
    return combine(f.coeffs, normal_forms[sz(f.degree)], q.dims[sz(f.degree)], q.prime);
}

FormQuotient quotient_from_forms(const std::vector<DenseForm>& forms, int maxdeg, std::uint32_t prime,
                                 int nf_top) {
    if (forms.empty()) throw InvalidInput("no forms");
    const int n = forms.front().n;
    int gen_top = 0;
    for (const auto& f : forms) {
        if (f.n != n) throw InvalidInput("forms in different rings");
        if (f.degree < 1) throw InvalidInput("forms must have positive degree");
        gen_top = std::max(gen_top, f.degree);
    }
    nf_top = std::max(nf_top, gen_top - 1);
    Monomials mon(n);

    FormQuotient out;
    GradedQuotient& q = out.q;
    q.n = n;
    q.prime = prime;
    q.dims.push_back(1);
    out.normal_forms.push_back({Row{1}});

    for (int t = 0;; ++t) {
        const int h = q.dims[sz(t)];
        const int width = n * h;  // R_1 (x) A_t, index k*h + b
        Echelon rel(width, prime);
        if (t >= 1) {
            const int hp = q.dims[sz(t - 1)];
            for (int b = 0; b < hp; ++b)
                for (int k = 0; k < n; ++k)
                    for (int l = k + 1; l < n; ++l) {
                        Row v(sz(width), 0);
                        const Row& xl = q.mult[sz(t - 1)][sz(l)][sz(b)];
                        const Row& xk = q.mult[sz(t - 1)][sz(k)][sz(b)];
                        for (int c = 0; c < h; ++c) {
                            v[sz(k * h + c)] = xl[sz(c)];
                            v[sz(l * h + c)] = (v[sz(l * h + c)] + (xk[sz(c)] ? prime - xk[sz(c)] : 0)) % prime;
                        }
                        rel.insert(v);
                    }
        }
        for (const auto& f : forms) {
            if (f.degree != t + 1) continue;
            std::vector<std::uint64_t> acc(sz(width), 0);
            for (int u = 0; u < mon.count(t + 1); ++u) {
                const Elem c = f.coeffs[sz(u)];
                if (c == 0) continue;
                const auto e = mon.exponents(t + 1, u);
                int k = 0;
                while (e[sz(k)] == 0) ++k;
                const int lower = mon.index(t, mon.key(t + 1, u) - Monomials::var_key(k));
                const Row& nf = out.normal_forms[sz(t)][sz(lower)];
                for (int b = 0; b < h; ++b)
                    if (nf[sz(b)]) acc[sz(k * h + b)] += static_cast<std::uint64_t>(c) * nf[sz(b)];
            }
            rel.insert(reduce_acc(acc, prime));
        }
        rel.rref();
        const std::vector<int> free = rel.free_columns();
        const int h1 = static_cast<int>(free.size());
        std::vector<int> free_pos(sz(width), -1);
        for (int i = 0; i < h1; ++i) free_pos[sz(free[sz(i)])] = i;

        // x_k * b = class of column k*h + b
        std::vector<std::vector<Row>> mt(sz(n), std::vector<Row>(sz(h)));
        for (int k = 0; k < n; ++k)
            for (int b = 0; b < h; ++b) {
                const int col = k * h + b;
                Row img(sz(h1), 0);
                if (free_pos[sz(col)] >= 0) {
                    img[sz(free_pos[sz(col)])] = 1;
                } else {
                    const Row& r = rel.rows()[sz(rel.pivot_row()[sz(col)])];
                    for (int i = 0; i < h1; ++i) {
                        const Elem x = r[sz(free[sz(i)])];
                        img[sz(i)] = x ? prime - x : 0;
                    }
                }
                mt[sz(k)][sz(b)] = std::move(img);
            }
        q.mult.push_back(std::move(mt));
        if (h1 == 0) break;
        if (t + 1 > maxdeg) throw TruncationTooSmall("quotient does not vanish by degree " + std::to_string(maxdeg));
        q.dims.push_back(h1);

        if (t + 1 <= nf_top) {
            std::vector<Row> nf1(sz(mon.count(t + 1)));
            for (int u = 0; u < mon.count(t + 1); ++u) {
                const auto e = mon.exponents(t + 1, u);
                int k = 0;
                while (e[sz(k)] == 0) ++k;
                const int lower = mon.index(t, mon.key(t + 1, u) - Monomials::var_key(k));
                nf1[sz(u)] = combine(out.normal_forms[sz(t)][sz(lower)], q.mult[sz(t)][sz(k)], h1, prime);
            }
            out.normal_forms.push_back(std::move(nf1));
        }
    }
    // the top degree maps into zero; keep mult sized dims
    return out;
}

HilbertFunction ideal_hilbert(const std::vector<DenseForm>& forms, int maxdeg, std::uint32_t prime) {
    return quotient_from_forms(forms, maxdeg, prime).q.hilbert();
}

std::vector<Row> colon_degreewise(const std::vector<DenseForm>& j_forms, const DenseForm& g, int t,
                                  std::uint32_t prime) {
    int maxdeg = 0;
    for (const auto& f : j_forms) maxdeg += f.degree;
    const FormQuotient fq = quotient_from_forms(j_forms, maxdeg, prime, g.degree);
    const GradedQuotient& a = fq.q;
    Monomials mon(g.n);
    const int cols = mon.count(t);
    if (t + g.degree > a.top()) {
        std::vector<Row> all;
        for (int m = 0; m < cols; ++m) {
            Row v(sz(cols), 0);
            v[sz(m)] = 1;
            all.push_back(std::move(v));
        }
        return all;
    }
    // phi(m) = class of m g, built one variable at a time
    std::vector<Row> phi{fq.normal_form(g)};
    for (int s = 1; s <= t; ++s) {
        std::vector<Row> next(sz(mon.count(s)));
        for (int u = 0; u < mon.count(s); ++u) {
            const auto e = mon.exponents(s, u);
            int k = 0;
            while (e[sz(k)] == 0) ++k;
            const int lower = mon.index(s - 1, mon.key(s, u) - Monomials::var_key(k));
            next[sz(u)] = a.apply(s - 1 + g.degree, k, phi[sz(lower)]);
        }
        phi = std::move(next);
    }
    const int h = a.dims[sz(t + g.degree)];
    std::vector<Row> matrix(sz(h), Row(sz(cols)));
    for (int m = 0; m < cols; ++m)
        for (int i = 0; i < h; ++i) matrix[sz(i)][sz(m)] = phi[sz(m)][sz(i)];
    return modp::nullspace(matrix, cols, prime);
}

GradedQuotient cyclic_submodule(const GradedQuotient& a, int degree, const Row& v) {
    GradedQuotient out;
    out.n = a.n;
    out.prime = a.prime;
    if (degree > a.top()) return out;
    Echelon cur(a.dims[sz(degree)], a.prime);
    if (!cur.insert(v)) return out;
    cur.rref();
    std::vector<Row> basis = cur.rows();
    out.dims.push_back(1);
    for (int t = degree;; ++t) {
        const int h = t + 1 <= a.top() ? a.dims[sz(t + 1)] : 0;
        std::vector<std::vector<Row>> images(sz(a.n));
        Echelon next(h, a.prime);
        for (int k = 0; k < a.n; ++k)
            for (const Row& b : basis) {
                Row img = h ? a.apply(t, k, b) : Row{};
                if (h) next.insert(img);
                images[sz(k)].push_back(std::move(img));
            }
        next.rref();
        const int r = next.rank();
        std::vector<int> pivots;
        for (const Row& row : next.rows()) {
            int c = 0;
            while (row[sz(c)] == 0) ++c;
            pivots.push_back(c);
        }
        // coordinates in an rref basis are the entries at the pivots
        std::vector<std::vector<Row>> mt(sz(a.n));
        for (int k = 0; k < a.n; ++k)
            for (const Row& img : images[sz(k)]) {
                Row c(sz(r), 0);
                for (int i = 0; i < r; ++i) c[sz(i)] = img[sz(pivots[sz(i)])];
                mt[sz(k)].push_back(std::move(c));
            }
        out.mult.push_back(std::move(mt));
        if (r == 0) break;
        out.dims.push_back(r);
        basis = next.rows();
    }
    return out;
}

GradedQuotient quotient_by_linear_form(const GradedQuotient& a, const std::vector<Elem>& l) {
    const int n = a.n;
    if (static_cast<int>(l.size()) != n || l[sz(n - 1)] == 0)
        throw InvalidInput("linear form needs a nonzero last coefficient");
    GradedQuotient out;
    out.n = n - 1;
    out.prime = a.prime;
    const Elem p = a.prime;
    // L A_{t-1} inside A_t
    std::vector<Echelon> image;
    std::vector<std::vector<int>> free;
    for (int t = 0; t <= a.top(); ++t) {
        Echelon e(a.dims[sz(t)], p);
        if (t > 0) {
            for (int b = 0; b < a.dims[sz(t - 1)]; ++b) {
                std::vector<std::uint64_t> acc(sz(a.dims[sz(t)]), 0);
                for (int k = 0; k < n; ++k) axpy(acc, l[sz(k)], a.mult[sz(t - 1)][sz(k)][sz(b)]);
                e.insert(reduce_acc(acc, p));
            }
        }
        e.rref();
        free.push_back(e.free_columns());
        image.push_back(std::move(e));
        if (free.back().empty()) break;
    }
    for (std::size_t t = 0; t < free.size() && !free[t].empty(); ++t) out.dims.push_back(static_cast<int>(free[t].size()));
    for (int t = 0; t < out.top() + 1; ++t) {
        const bool has_next = t + 1 <= out.top();
        std::vector<std::vector<Row>> mt(sz(n - 1));
        for (int k = 0; k < n - 1; ++k)
            for (int c : free[sz(t)]) {
                if (!has_next) {
                    mt[sz(k)].push_back(Row{});
                    continue;
                }
                const Row red = image[sz(t + 1)].reduce(a.mult[sz(t)][sz(k)][sz(c)]);
                Row img;
                for (int f : free[sz(t + 1)]) img.push_back(red[sz(f)]);
                mt[sz(k)].push_back(std::move(img));
            }
        out.mult.push_back(std::move(mt));
    }
    return out;
}

BettiTable graded_betti(const GradedQuotient& q) {
    const int n = q.n;
    const Elem p = q.prime;
    const int top = q.top();
    // subsets of size i, and their positions
    std::vector<std::vector<unsigned>> subsets(sz(n + 1));
    std::vector<int> pos(std::size_t{1} << n, -1);
    for (unsigned s = 0; s < (1u << n); ++s) {
        const int i = __builtin_popcount(s);
        pos[s] = static_cast<int>(subsets[sz(i)].size());
        subsets[sz(i)].push_back(s);
    }
    auto dimA = [&](int t) { return t >= 0 && t <= top ? q.dims[sz(t)] : 0; };
    // rank of d_i : C_{i,j} -> C_{i-1,j}, C_{i,j} = wedge^i (x) A_{j-i}
    auto rank_d = [&](int i, int j) -> int {
        if (i < 1 || i > n) return 0;
        const int src = dimA(j - i), dst = dimA(j - i + 1);
        if (src == 0 || dst == 0) return 0;
        const int width = static_cast<int>(subsets[sz(i - 1)].size()) * dst;
        Echelon e(width, p);
        const int full = std::min(width, static_cast<int>(subsets[sz(i)].size()) * src);
        for (unsigned s : subsets[sz(i)]) {
            for (int b = 0; b < src; ++b) {
                Row v(sz(width), 0);
                int r = 0;
                for (int k = 0; k < n; ++k) {
                    if (!(s & (1u << k))) continue;
                    const unsigned s2 = s & ~(1u << k);
                    const int off = pos[s2] * dst;
                    const Row& img = q.mult[sz(j - i)][sz(k)][sz(b)];
                    const bool neg = r % 2 == 1;
                    for (int c = 0; c < dst; ++c) {
                        const Elem x = img[sz(c)];
                        if (x) v[sz(off + c)] = neg ? p - x : x;
                    }
                    ++r;
                }
                e.insert(v);
                if (e.rank() == full) return full;
            }
        }
        return e.rank();
    };
    BettiTable out;
    for (int i = 0; i <= n; ++i) {
        for (int j = i; j <= i + top; ++j) {
            const Int c = static_cast<Int>(subsets[sz(i)].size()) * dimA(j - i);
            const Int b = c - rank_d(i, j) - rank_d(i + 1, j);
            if (b != 0) out.add(i, j, b);
        }
    }
    return out;
}

bool certify_generic(const std::vector<DenseForm>& forms, const DegreeTuple& t, std::uint32_t prime) {
    const HilbertFunction expected = aci_hilbert(t);
    try {
        return ideal_hilbert(forms, expected.last_degree() + 1, prime) == expected;
    } catch (const TruncationTooSmall&) {
        return false;
    }
}

bool lefschetz_check(const GradedQuotient& q, int power, const FieldConfig& cfg) {
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Elem> l(sz(q.n));
    for (auto& c : l) c = static_cast<Elem>(rng() % cfg.prime);
    for (int t = 0; t + power <= q.top(); ++t) {
        // images of the basis of A_t under L^power
        std::vector<Row> cur;
        for (int b = 0; b < q.dims[sz(t)]; ++b) {
            Row v(sz(q.dims[sz(t)]), 0);
            v[sz(b)] = 1;
            cur.push_back(std::move(v));
        }
        for (int s = t; s < t + power; ++s)
            for (Row& v : cur) {
                std::vector<std::uint64_t> acc(sz(q.dims[sz(s + 1)]), 0);
                for (int k = 0; k < q.n; ++k) axpy(acc, l[sz(k)], q.apply(s, k, v));
                v = reduce_acc(acc, cfg.prime);
            }
        const int want = std::min(q.dims[sz(t)], q.dims[sz(t + power)]);
        if (modp::rank(cur, q.dims[sz(t + power)], cfg.prime) != want) return false;
    }
    return true;
}

Instance sample_instance(const DegreeTuple& t, const FieldConfig& cfg, int retries) {
    const HilbertFunction expected = aci_hilbert(t);
    Instance inst;
    for (int a = 0; a <= retries; ++a) {
        inst.cfg = cfg;
        inst.cfg.seed = cfg.seed + static_cast<std::uint64_t>(a) * kRetryStride;
        inst.attempts = a + 1;
        inst.forms = random_forms(t.n(), t.degrees(), inst.cfg);
        inst.ri = quotient_from_forms(inst.forms, expected.last_degree() + 1, cfg.prime).q;
        if (inst.ri.hilbert() == expected) {
            inst.generic = true;
            return inst;
        }
    }
    return inst;
}

GradedQuotient linked_quotient(const Instance& inst, const DegreeTuple& t) {
    if (t.classification() != Classification::ProperACI)
        throw ClassificationError("linked ideal needs a proper almost complete intersection");
    std::vector<DenseForm> jf(inst.forms.begin(), inst.forms.begin() + t.n());
    const DenseForm& g = inst.forms.back();
    const FormQuotient fq = quotient_from_forms(jf, t.d(), inst.cfg.prime, g.degree);
    return cyclic_submodule(fq.q, g.degree, fq.normal_form(g));
}

BettiTable aci_betti(const DegreeTuple& t, const FieldConfig& cfg) {
    const Instance inst = sample_instance(t, cfg);
    if (!inst.generic) throw HypothesisNotMet("no sampled instance had the generic Hilbert function");
    return graded_betti(inst.ri);
}

BettiTable gorenstein_betti(const DegreeTuple& t, const FieldConfig& cfg) {
    const Instance inst = sample_instance(t, cfg);
    if (!inst.generic) throw HypothesisNotMet("no sampled instance had the generic Hilbert function");
    return graded_betti(linked_quotient(inst, t));
}

BettiTable aci_betti_min(const DegreeTuple& t, const FieldConfig& cfg, int seeds, bool* agree) {
    if (seeds < 1) throw InvalidInput("need at least one seed");
    BettiTable best;
    bool same = true;
    for (int s = 0; s < seeds; ++s) {
        FieldConfig c = cfg;
        c.seed = cfg.seed + static_cast<std::uint64_t>(s);
        const BettiTable b = aci_betti(t, c);
        if (s == 0) {
            best = b;
            continue;
        }
        if (!(b == best)) same = false;
        BettiTable m;
        for (const auto& [e, v] : best.entries) {
            const Int w = std::min(v, b.at(e.first, e.second));
            if (w) m.add(e.first, e.second, w);
        }
        best = m;
    }
    if (agree) *agree = same;
    return best;
}

}  // namespace betti::oracle
