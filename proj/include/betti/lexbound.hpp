#pragma once

#include <vector>

#include "betti/betti_core.hpp"
#include "betti/hilbert.hpp"

namespace betti {

// Monomial ideal in k[z_1..z_c], lex order z_1 > ... > z_c.
struct MonomialIdeal {
    int c = 0;
    std::vector<std::vector<int>> gens;  // exponent vectors, minimal

    int degree(std::size_t g) const;
    bool contains(const std::vector<int>& exps) const;
};

// throws NotOSequence
MonomialIdeal lex_ideal_from_hilbert(const HilbertFunction& h, int c);

// Eliahou-Kervaire table of T/m; throws NotStable
BettiTable ek_betti(const MonomialIdeal& m);

// Bound on the Betti table of a Gorenstein quotient with h-vector h in c
// variables having the weak Lefschetz property; throws NotSISequence
BettiTable gor_betti_bound(const HilbertFunction& h, int c);

// Koszul part plus the Gorenstein bound, per homological position
BettiTable aci_betti_bound(const DegreeTuple& t);

}  // namespace betti
