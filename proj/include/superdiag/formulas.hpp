#ifndef SUPERDIAG_FORMULAS_HPP
#define SUPERDIAG_FORMULAS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "superdiag/integer.hpp"
#include "superdiag/series.hpp"

namespace superdiag {

/// Raised for triangle indices outside 0 <= k <= m.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Unsigned Stirling numbers of the first kind [n, k] for 0 <= n, k <= max_n,
/// filled by [n,k] = (n-1)[n-1,k] + [n-1,k-1].
class StirlingTable {
public:
    explicit StirlingTable(unsigned max_n);

    unsigned max_n() const noexcept { return max_n_; }
    /// Zero for k > n; throws IndexError past max_n.
    const Int& operator()(unsigned n, unsigned k) const;

private:
    unsigned max_n_;
    std::vector<std::vector<Int>> rows_;
};

/// Coefficients T(m, k) of Q_m(x) = prod_{l=1}^m (l - (l-1)x), filled by
/// T(m,k) = m T(m-1,k) - (m-1) T(m-1,k-1) from T(0,0) = 1.
class TriangleT {
public:
    explicit TriangleT(unsigned max_m);

    unsigned max_m() const noexcept { return max_m_; }
    /// Throws IndexError unless 0 <= k <= m <= max_m.
    const Int& operator()(unsigned m, unsigned k) const;
    /// Same as operator() but zero outside 0 <= k <= m.
    Int at_or_zero(std::int64_t m, std::int64_t k) const;
    const std::vector<Int>& row(unsigned m) const;

private:
    unsigned max_m_;
    std::vector<std::vector<Int>> rows_;
};

Int stirling1(unsigned n, unsigned k);

/// Q_m(x) as the product of its linear factors.
IntPolynomial q_polynomial(unsigned m);

/// T(m, k) via the recurrence. Throws IndexError for k > m or negatives.
Int triangle_T_recurrence(std::int64_t m, std::int64_t k);
/// T(m, k) via the alternating Stirling sum
/// sum_i C(i, m-k) [m+1, m+1-i] (-1)^{m+i+k}.
Int triangle_T_stirling(std::int64_t m, std::int64_t k);

/// s(2n, 2k) = C(n - C(k+1,2) - 2C(k,2) - 1, k-1), evaluated literally
/// under the binomial convention of binomial().
Int s_even(std::int64_t n, std::int64_t k);
/// s(n, 2k-1) = C(floor((n - 3k^2)/2) + 2k - 1, k-1), evaluated literally.
Int s_odd(std::int64_t n, std::int64_t k);
/// Smallest weight with the given number of parts: the x-exponent of the
/// leading term for that part count.
std::int64_t min_palindromic_superdiagonal_weight(std::int64_t parts);
/// Number of palindromic superdiagonal compositions of `weight` with
/// `parts` parts from the closed forms. Zero below the minimal weight and
/// for odd weight with an even part count.
Int s_closed(std::int64_t weight, std::int64_t parts);

/// S(x, y) truncated to x^N y^K.
BiSeries series_S(std::size_t n_order, std::size_t k_order);
/// S(x, 1) from its own one-variable sum.
UniSeries s_total_series(std::size_t n_order);
/// C(x) = sum_m x^{C(m+1,2)} Q_m(x) / (1-x)^{2m}, truncated to x^N.
UniSeries series_C(std::size_t n_order);

/// c(n) = sum_{m,l} C(2m+l-1, l) T(m, n - C(m+1,2) - l).
Int c_closed(std::int64_t n);

/// sum_{k>=1} C(n - C(k,2) - 1, k-1): number of superdiagonal compositions.
Int superdiagonal_total(std::int64_t n);
/// 2^floor(n/2): number of palindromic compositions.
Int palindromic_total(std::int64_t n);

} // namespace superdiag

#endif // SUPERDIAG_FORMULAS_HPP
