#include "betti/common.hpp"

namespace betti {

Int binom(Int a, Int b) {
    if (b < 0 || a < b) return 0;
    if (b > a - b) b = a - b;
    Int r = 1;
    for (Int i = 1; i <= b; ++i) {
        // r * (a - b + i) / i is exact at every step
        __int128 t = static_cast<__int128>(r) * (a - b + i);
        t /= i;
        if (t > INT64_MAX) throw std::overflow_error("binomial overflow");
        r = static_cast<Int>(t);
    }
    return r;
}

}  // namespace betti
