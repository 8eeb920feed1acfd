#pragma once

#include <cstdint>
#include <vector>

namespace betti::modp {

using Elem = std::uint32_t;
using Row = std::vector<Elem>;

Elem inverse(Elem a, Elem p);
bool is_prime(std::uint64_t p);

// Row echelon basis of a subspace of GF(p)^ncols. Rows are stored with a
// leading 1; rref() makes the basis fully reduced.
class Echelon {
public:
    Echelon(int ncols, Elem p);

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    Elem prime() const { return p_; }

    // true if v was independent of the current rows
    bool insert(const Row& v);
    void rref();
    bool reduced() const { return reduced_; }

    // pivot_row()[c] = row index with pivot c, or -1
    const std::vector<int>& pivot_row() const { return pivot_row_; }
    const std::vector<Row>& rows() const { return rows_; }
    std::vector<int> free_columns() const;

    // v minus its projection on the pivot columns; requires rref()
    Row reduce(const Row& v) const;

private:
    int ncols_;
    Elem p_;
    std::vector<Row> rows_;
    std::vector<int> pivot_col_;
    std::vector<int> pivot_row_;
    std::vector<std::uint64_t> work_;
    bool reduced_ = true;
};

int rank(const std::vector<Row>& rows, int ncols, Elem p);

// basis of {x : A x = 0} for A given by rows
std::vector<Row> nullspace(const std::vector<Row>& rows, int ncols, Elem p);

}  // namespace betti::modp
