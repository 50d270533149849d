#ifndef SUPERDIAG_TESTS_ORACLES_HPP
#define SUPERDIAG_TESTS_ORACLES_HPP

// Test-only reference computations. Nothing here calls into the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Parts = std::vector<std::uint32_t>;

// Every composition of n >= 1 from the 2^(n-1) cut patterns; n = 0 gives {()}.
inline std::vector<Parts> all_compositions(unsigned n) {
    if (n == 0) return {Parts{}};
    std::vector<Parts> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        Parts p;
        std::uint32_t run = 1;
        for (unsigned i = 0; i + 1 < n; ++i) {
            if (mask >> i & 1) {
                p.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        p.push_back(run);
        out.push_back(std::move(p));
    }
    return out;
}

inline bool superdiagonal(const Parts& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] < i + 1) return false;
    return true;
}

inline bool palindromic(const Parts& p) { return std::equal(p.begin(), p.end(), p.rbegin()); }

inline std::vector<Parts> filtered(unsigned n, const std::function<bool(const Parts&)>& keep) {
    std::vector<Parts> out;
    for (auto& p : all_compositions(n))
        if (keep(p)) out.push_back(p);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// Coefficients of x(x+1)...(x+n-1), n <= 20 fits in 64 bits.
inline std::vector<std::int64_t> rising_factorial(unsigned n) {
    std::vector<std::int64_t> p{1};
    for (unsigned j = 0; j < n; ++j) {
        std::vector<std::int64_t> q(p.size() + 1, 0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i + 1] += p[i];
            q[i] += static_cast<std::int64_t>(j) * p[i];
        }
        p = std::move(q);
    }
    return p;
}

// sum over compositions of n of (product of parts), superdiagonal only.
inline std::int64_t colored_count(unsigned n) {
    std::int64_t total = 0;
    for (auto& p : all_compositions(n)) {
        if (!superdiagonal(p)) continue;
        std::int64_t w = 1;
        for (auto x : p) w *= x;
        total += w;
    }
    return total;
}

} // namespace oracle

#endif
