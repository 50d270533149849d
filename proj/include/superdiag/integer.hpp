#ifndef SUPERDIAG_INTEGER_HPP
#define SUPERDIAG_INTEGER_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace superdiag {

/// Arbitrary-precision signed integer used for every coefficient and count.
using Int = boost::multiprecision::cpp_int;

/// Generalised binomial coefficient with the convention used throughout:
/// C(a, b) = 0 for b < 0; C(a, 0) = 1 for every integer a (negative
/// included); C(a, b) = 0 for b > 0 when a < b (which covers a < 0).
Int binomial(std::int64_t a, std::int64_t b);

/// Triangular number m(m+1)/2.
constexpr std::int64_t triangular(std::int64_t m) { return m * (m + 1) / 2; }

inline std::string to_string(const Int& v) { return v.str(); }

} // namespace superdiag

#endif // SUPERDIAG_INTEGER_HPP
