#include "superdiag/integer.hpp"

namespace superdiag {

Int binomial(std::int64_t a, std::int64_t b) {
    if (b < 0) return 0;
    if (b == 0) return 1;
    if (a < b) return 0;
    if (b > a - b) b = a - b;
    Int r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

} // namespace superdiag
