#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace betti {

using Int = std::int64_t;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define BETTI_ERROR(Name)                   \
    struct Name : Error {                   \
        using Error::Error;                 \
    }

BETTI_ERROR(InvalidInput);
BETTI_ERROR(ClassificationError);
BETTI_ERROR(ShapeMismatch);
BETTI_ERROR(NonPolynomial);
BETTI_ERROR(NegativeCoefficient);
BETTI_ERROR(InsufficientMultiplicity);
BETTI_ERROR(HypothesisNotMet);
BETTI_ERROR(ProfileMismatch);
BETTI_ERROR(OddDimension);
BETTI_ERROR(EvenDimension);
BETTI_ERROR(BoundsPresent);
BETTI_ERROR(NotOSequence);
BETTI_ERROR(NotStable);
BETTI_ERROR(NotSISequence);
BETTI_ERROR(NonRegularSequence);
BETTI_ERROR(TruncationTooSmall);

#undef BETTI_ERROR

// C(a, b) with C(a, b) = 0 whenever b < 0 or a < b (negative a included).
// Throws on int64 overflow.
Int binom(Int a, Int b);

// floor division for possibly negative numerators
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace betti
