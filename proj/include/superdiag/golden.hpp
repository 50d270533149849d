#ifndef SUPERDIAG_GOLDEN_HPP
#define SUPERDIAG_GOLDEN_HPP

#include <cstdint>
#include <string_view>
#include <vector>

// Published reference values, transcribed by hand. Everything computed by
// the library is compared against these bit-exactly.
namespace superdiag::golden {

/// s(n, k) for 1 <= k <= 5 (rows) and 1 <= n <= 26 (columns), as CSV.
extern const std::string_view kTable1Csv;

/// table1()[k-1][n-1] = s(n, k), parsed from kTable1Csv.
const std::vector<std::vector<std::int64_t>>& table1();

/// s(n) for 0 <= n <= 28.
extern const std::vector<std::int64_t> kSTotal;

/// c(n) for 0 <= n <= 10.
extern const std::vector<std::int64_t> kColored;

/// Q_m coefficients in ascending powers of x, 0 <= m <= 6.
extern const std::vector<std::vector<std::int64_t>> kQPolynomials;

/// kSExpansion[n][k] = [x^n y^k] S(x, y) for 0 <= n <= 12, 0 <= k <= 3.
extern const std::vector<std::vector<std::int64_t>> kSExpansion;

} // namespace superdiag::golden

#endif // SUPERDIAG_GOLDEN_HPP
