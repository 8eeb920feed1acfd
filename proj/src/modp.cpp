#include "betti/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace betti::modp {

Elem inverse(Elem a, Elem p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw std::domain_error("element not invertible");
    if (t < 0) t += p;
    return static_cast<Elem>(t);
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

Echelon::Echelon(int ncols, Elem p)
    : ncols_(ncols), p_(p), pivot_row_(static_cast<std::size_t>(ncols), -1),
      work_(static_cast<std::size_t>(ncols)) {
    if (p >= (1u << 16)) throw std::invalid_argument("prime must be below 65536");
}

bool Echelon::insert(const Row& v) {
    const std::size_t n = static_cast<std::size_t>(ncols_);
    std::uint64_t* w = work_.data();
    bool any = false;
    for (std::size_t k = 0; k < n; ++k) {
        w[k] = v[k];
        any |= v[k] != 0;
    }
    if (!any) return false;
    // pending additions stay below 2^64 as long as fewer than 2^32 rows are
    // folded in, since each term is below p^2 < 2^32
    for (std::size_t c = 0; c < n; ++c) {
        const std::uint64_t x = w[c] % p_;
        if (x == 0) continue;
        const int r = pivot_row_[c];
        if (r >= 0) {
            const Elem f = static_cast<Elem>(p_ - x);
            const Elem* row = rows_[static_cast<std::size_t>(r)].data();
            for (std::size_t k = c + 1; k < n; ++k) w[k] += static_cast<std::uint64_t>(f) * row[k];
            w[c] = 0;
            continue;
        }
        const std::uint64_t inv = inverse(static_cast<Elem>(x), p_);
        Row row(n, 0);
        row[c] = 1;
        for (std::size_t k = c + 1; k < n; ++k) row[k] = static_cast<Elem>((w[k] % p_) * inv % p_);
        pivot_row_[c] = static_cast<int>(rows_.size());
        pivot_col_.push_back(static_cast<int>(c));
        rows_.push_back(std::move(row));
        reduced_ = false;
        return true;
    }
    return false;
}

void Echelon::rref() {
    if (reduced_) return;
    const std::size_t n = static_cast<std::size_t>(ncols_);
    std::vector<int> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pivot_col_[static_cast<std::size_t>(a)] > pivot_col_[static_cast<std::size_t>(b)]; });
    // clear each pivot column above, largest pivot first
    for (int r : order) {
        const std::size_t c = static_cast<std::size_t>(pivot_col_[static_cast<std::size_t>(r)]);
        const Row& pr = rows_[static_cast<std::size_t>(r)];
        for (std::size_t q = 0; q < rows_.size(); ++q) {
            if (q == static_cast<std::size_t>(r)) continue;
            Row& other = rows_[q];
            const Elem x = other[c];
            if (x == 0) continue;
            const std::uint64_t f = p_ - x;
            for (std::size_t k = c; k < n; ++k)
                if (pr[k]) other[k] = static_cast<Elem>((other[k] + f * pr[k]) % p_);
        }
    }
    reduced_ = true;
}

std::vector<int> Echelon::free_columns() const {
    std::vector<int> out;
    for (int c = 0; c < ncols_; ++c)
        if (pivot_row_[static_cast<std::size_t>(c)] < 0) out.push_back(c);
    return out;
}

Row Echelon::reduce(const Row& v) const {
    if (!reduced_) throw std::logic_error("reduce() needs rref()");
    const std::size_t n = static_cast<std::size_t>(ncols_);
    std::vector<std::uint64_t> w(v.begin(), v.end());
    for (std::size_t c = 0; c < n; ++c) {
        const int r = pivot_row_[c];
        if (r < 0) continue;
        const std::uint64_t x = w[c] % p_;
        w[c] = 0;
        if (x == 0) continue;
        const std::uint64_t f = p_ - x;
        const Row& row = rows_[static_cast<std::size_t>(r)];
        for (std::size_t k = c + 1; k < n; ++k)
            if (row[k]) w[k] += f * row[k];
    }
    Row out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<Elem>(w[k] % p_);
    return out;
}

int rank(const std::vector<Row>& rows, int ncols, Elem p) {
    Echelon e(ncols, p);
    for (const Row& r : rows) {
        e.insert(r);
        if (e.rank() == ncols) break;
    }
    return e.rank();
}

std::vector<Row> nullspace(const std::vector<Row>& rows, int ncols, Elem p) {
    Echelon e(ncols, p);
    for (const Row& r : rows) {
        e.insert(r);
        if (e.rank() == ncols) break;
    }
    e.rref();
    std::vector<Row> out;
    for (int f : e.free_columns()) {
        Row v(static_cast<std::size_t>(ncols), 0);
        v[static_cast<std::size_t>(f)] = 1;
        for (int c = 0; c < ncols; ++c) {
            int r = e.pivot_row()[static_cast<std::size_t>(c)];
            if (r < 0) continue;
            Elem x = e.rows()[static_cast<std::size_t>(r)][static_cast<std::size_t>(f)];
            v[static_cast<std::size_t>(c)] = x ? p - x : 0;
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace betti::modp
