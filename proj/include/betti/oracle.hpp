#pragma once

#include <cstdint>
#include <vector>

#include "betti/betti_core.hpp"
#include "betti/hilbert.hpp"
#include "betti/modp.hpp"

namespace betti::oracle {

struct FieldConfig {
    std::uint32_t prime = 32003;
    std::uint64_t seed = 1;
};

// Monomials of each degree in n variables, x_1^t first (lex, x_1 > ... > x_n).
// Exponents are packed 8 bits per variable, so n <= 8 and degree < 256.
class Monomials {
public:
    explicit Monomials(int n);

    int n() const { return n_; }
    int count(int t);
    std::uint64_t key(int t, int m);
    int index(int t, std::uint64_t key);
    // index of x_k * m in degree t+1
    int times_var(int t, int k, int m);
    std::vector<int> exponents(int t, int m);
    static std::uint64_t var_key(int k) { return std::uint64_t{1} << (8 * k); }

private:
    void ensure(int t);

    int n_;
    std::vector<std::vector<std::uint64_t>> keys_;
    std::vector<std::vector<std::pair<std::uint64_t, int>>> lookup_;  // sorted by key
};

struct DenseForm {
    int n = 0;
    int degree = 0;
    modp::Row coeffs;  // indexed like Monomials(n) in this degree
};

DenseForm monomial_form(int n, const std::vector<int>& exponents);
std::vector<DenseForm> random_forms(int n, const std::vector<int>& degrees, const FieldConfig& cfg);

// Artinian graded module over k[x_1..x_n] generated in degree 0, given by a
// basis in each degree and the action of every variable.
struct GradedQuotient {
    int n = 0;
    std::uint32_t prime = 32003;
    std::vector<int> dims;  // dims[t], t = 0..top, all positive
    // mult[t][k][b] = x_k times basis element b of A_t, in coordinates of A_{t+1}
    std::vector<std::vector<std::vector<modp::Row>>> mult;

    int top() const { return static_cast<int>(dims.size()) - 1; }
    HilbertFunction hilbert() const;
    // x_k applied to v in A_t
    modp::Row apply(int t, int k, const modp::Row& v) const;
};

// R/I for I generated by the forms. normal_forms[t][m] is the class of
// monomial m of degree t, kept for t <= nf_top.
struct FormQuotient {
    GradedQuotient q;
    std::vector<std::vector<modp::Row>> normal_forms;

    modp::Row normal_form(const DenseForm& f) const;
};

FormQuotient quotient_from_forms(const std::vector<DenseForm>& forms, int maxdeg, std::uint32_t prime,
                                 int nf_top = -1);

HilbertFunction ideal_hilbert(const std::vector<DenseForm>& forms, int maxdeg, std::uint32_t prime);

// Basis (monomial coordinates of R_t) of {f in R_t : f g in (forms)}.
std::vector<modp::Row> colon_degreewise(const std::vector<DenseForm>& j_forms, const DenseForm& g, int t,
                                        std::uint32_t prime);

// R.v inside A, regraded so v sits in degree 0. For A = R/J and v = [g] this
// is R/(J : g).
GradedQuotient cyclic_submodule(const GradedQuotient& a, int degree, const modp::Row& v);

// A / L A over k[x_1..x_{n-1}]; L = sum c_k x_k with c_{n} != 0.
GradedQuotient quotient_by_linear_form(const GradedQuotient& a, const std::vector<modp::Elem>& l);

// beta_{i,j} = dim H_i(K(x_1..x_n) (x) A)_j
BettiTable graded_betti(const GradedQuotient& q);

bool certify_generic(const std::vector<DenseForm>& forms, const DegreeTuple& t, std::uint32_t prime);

// maximal rank of multiplication by L^power in every degree, L random
bool lefschetz_check(const GradedQuotient& q, int power, const FieldConfig& cfg);

// One sampled instance of a tuple: R/I, and R/G when the tuple is ProperACI.
struct Instance {
    FieldConfig cfg;  // seed actually used
    std::vector<DenseForm> forms;
    GradedQuotient ri;
    bool generic = false;
    int attempts = 0;
};

// Samples forms until R/I has the expected Hilbert function, trying at most
// 1 + retries seeds (seed, seed + stride, ...).
Instance sample_instance(const DegreeTuple& t, const FieldConfig& cfg, int retries = 3);
GradedQuotient linked_quotient(const Instance& inst, const DegreeTuple& t);

BettiTable aci_betti(const DegreeTuple& t, const FieldConfig& cfg);
BettiTable gorenstein_betti(const DegreeTuple& t, const FieldConfig& cfg);

// entrywise minimum over seeds cfg.seed, cfg.seed+1, ...; `agree` is set to
// whether every seed produced the same table
BettiTable aci_betti_min(const DegreeTuple& t, const FieldConfig& cfg, int seeds, bool* agree = nullptr);

inline constexpr std::uint64_t kRetryStride = 1000003;

}  // namespace betti::oracle
