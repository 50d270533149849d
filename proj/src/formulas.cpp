#include "superdiag/formulas.hpp"

#include <array>
#include <string>

namespace superdiag {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::string index_message(std::int64_t m, std::int64_t k) {
    return "T(" + std::to_string(m) + ", " + std::to_string(k) + ") requires 0 <= k <= m";
}

void check_triangle_index(std::int64_t m, std::int64_t k) {
    if (m < 0 || k < 0 || k > m) throw IndexError(index_message(m, k));
}

const Int kZero{0};

} // namespace

// ---------------------------------------------------------------------------
// Tables

StirlingTable::StirlingTable(unsigned max_n) : max_n_(max_n), rows_(max_n + 1) {
    rows_[0] = {Int{1}};
    for (unsigned n = 1; n <= max_n; ++n) {
        auto& row = rows_[n];
        const auto& prev = rows_[n - 1];
        row.assign(n + 1, Int{0});
        for (unsigned k = 1; k <= n; ++k) {
            if (k < prev.size()) row[k] += (n - 1) * prev[k];
            row[k] += prev[k - 1];
        }
    }
}

const Int& StirlingTable::operator()(unsigned n, unsigned k) const {
    if (n > max_n_)
        throw IndexError("Stirling row " + std::to_string(n) + " beyond table size " +
                         std::to_string(max_n_));
    return k <= n ? rows_[n][k] : kZero;
}

TriangleT::TriangleT(unsigned max_m) : max_m_(max_m), rows_(max_m + 1) {
    rows_[0] = {Int{1}};
    for (unsigned m = 1; m <= max_m; ++m) {
        auto& row = rows_[m];
        const auto& prev = rows_[m - 1];
        row.assign(m + 1, Int{0});
        for (unsigned k = 0; k <= m; ++k) {
            if (k < prev.size()) row[k] += m * prev[k];
            if (k >= 1) row[k] -= (m - 1) * prev[k - 1];
        }
    }
}

const Int& TriangleT::operator()(unsigned m, unsigned k) const {
    if (k > m || m > max_m_) throw IndexError(index_message(m, k));
    return rows_[m][k];
}

Int TriangleT::at_or_zero(std::int64_t m, std::int64_t k) const {
    if (m < 0 || k < 0 || k > m) return 0;
    return (*this)(static_cast<unsigned>(m), static_cast<unsigned>(k));
}

const std::vector<Int>& TriangleT::row(unsigned m) const {
    if (m > max_m_) throw IndexError("T row " + std::to_string(m) + " beyond table size");
    return rows_[m];
}

// ---------------------------------------------------------------------------
// Stirling numbers, Q_m and T(m, k)

Int stirling1(unsigned n, unsigned k) { return StirlingTable(n)(n, k); }

IntPolynomial q_polynomial(unsigned m) {
    IntPolynomial q{1};
    for (long long l = 1; l <= static_cast<long long>(m); ++l) q = poly_mul(q, IntPolynomial{l, -(l - 1)});
    return q;
}

Int triangle_T_recurrence(std::int64_t m, std::int64_t k) {
    check_triangle_index(m, k);
    return TriangleT(static_cast<unsigned>(m))(static_cast<unsigned>(m), static_cast<unsigned>(k));
}

Int triangle_T_stirling(std::int64_t m, std::int64_t k) {
    check_triangle_index(m, k);
    const StirlingTable st(static_cast<unsigned>(m + 1));
    Int sum = 0;
    for (std::int64_t i = 0; i <= m; ++i) {
        Int term = binomial(i, m - k) * st(static_cast<unsigned>(m + 1), static_cast<unsigned>(m + 1 - i));
        if ((m + i + k) % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Palindromic superdiagonal counts

Int s_even(std::int64_t n, std::int64_t k) {
    const std::int64_t top = n - triangular(k) - 2 * (k * (k - 1) / 2) - 1;
    return binomial(top, k - 1);
}

Int s_odd(std::int64_t n, std::int64_t k) {
    return binomial(floor_div(n - 3 * k * k, 2) + 2 * k - 1, k - 1);
}

std::int64_t min_palindromic_superdiagonal_weight(std::int64_t parts) {
    const std::int64_t m = parts / 2;
    return parts % 2 == 0 ? 3 * m * m + m : 3 * m * m + 4 * m + 1;
}

Int s_closed(std::int64_t weight, std::int64_t parts) {
    if (weight < 0 || parts < 0) return 0;
    if (parts == 0) return weight == 0 ? 1 : 0;
    if (weight < min_palindromic_superdiagonal_weight(parts)) return 0;
    if (parts % 2 == 0) {
        if (weight % 2 != 0) return 0;
        return s_even(weight / 2, parts / 2);
    }
    return s_odd(weight, (parts + 1) / 2);
}

// ---------------------------------------------------------------------------
// Generating functions

BiSeries series_S(std::size_t n_order, std::size_t k_order) {
    BiSeries s(n_order, k_order);
    const IntPolynomial one_minus_x{1, -1};
    const IntPolynomial one_minus_x2{1, 0, -1};
    for (std::size_t m = 0;; ++m) {
        const std::size_t even_exp = 3 * m * m + m;
        if (even_exp > n_order || 2 * m > k_order) break;
        const std::array<DenominatorFactor, 1> even_den{{{one_minus_x2, static_cast<unsigned>(m)}}};
        s.add_row(2 * m, expand_rational(IntPolynomial::monomial(1, even_exp), even_den, n_order));

        const std::size_t odd_exp = 3 * m * m + 4 * m + 1;
        if (odd_exp > n_order || 2 * m + 1 > k_order) continue;
        const std::array<DenominatorFactor, 2> odd_den{
            {{one_minus_x, 1}, {one_minus_x2, static_cast<unsigned>(m)}}};
        s.add_row(2 * m + 1, expand_rational(IntPolynomial::monomial(1, odd_exp), odd_den, n_order));
    }
    return s;
}

UniSeries s_total_series(std::size_t n_order) {
    UniSeries total(n_order);
    const IntPolynomial one_minus_x{1, -1};
    const IntPolynomial one_minus_x2{1, 0, -1};
    for (std::size_t m = 0;; ++m) {
        const std::size_t lead = 3 * m * m + m;
        if (lead > n_order) break;
        // x^lead (1 - x + x^{3m+1})
        std::vector<Int> num(lead + 3 * m + 2);
        num[lead] += 1;
        num[lead + 1] -= 1;
        num[lead + 3 * m + 1] += 1;
        const std::array<DenominatorFactor, 2> den{
            {{one_minus_x, 1}, {one_minus_x2, static_cast<unsigned>(m)}}};
        total = series_add(total, expand_rational(IntPolynomial(std::move(num)), den, n_order));
    }
    return total;
}

UniSeries series_C(std::size_t n_order) {
    UniSeries total(n_order);
    const IntPolynomial one_minus_x{1, -1};
    IntPolynomial q{1};
    for (std::size_t m = 0;; ++m) {
        if (m >= 1) {
            const auto l = static_cast<long long>(m);
            q = poly_mul(q, IntPolynomial{l, -(l - 1)});
        }
        const auto lead = static_cast<std::size_t>(triangular(static_cast<std::int64_t>(m)));
        if (lead > n_order) break;
        const std::array<DenominatorFactor, 1> den{{{one_minus_x, static_cast<unsigned>(2 * m)}}};
        const IntPolynomial num = poly_mul(IntPolynomial::monomial(1, lead), q);
        total = series_add(total, expand_rational(num, den, n_order));
    }
    return total;
}

Int c_closed(std::int64_t n) {
    if (n < 0) return 0;
    std::int64_t max_m = 0;
    while (triangular(max_m + 1) <= n) ++max_m;
    const TriangleT t(static_cast<unsigned>(max_m));
    Int sum = 0;
    for (std::int64_t m = 0; m <= max_m; ++m) {
        const std::int64_t rest = n - triangular(m);
        for (std::int64_t l = 0; l <= rest; ++l) {
            const Int tv = t.at_or_zero(m, rest - l);
            if (tv == 0) continue;
            sum += binomial(2 * m + l - 1, l) * tv;
        }
    }
    return sum;
}

Int superdiagonal_total(std::int64_t n) {
    Int sum = 0;
    for (std::int64_t k = 1; k * (k - 1) / 2 <= n; ++k) sum += binomial(n - k * (k - 1) / 2 - 1, k - 1);
    return sum;
}

Int palindromic_total(std::int64_t n) {
    if (n < 0) return 0;
    return Int{1} << static_cast<unsigned>(n / 2);
}

} // namespace superdiag
