#ifndef SUPERDIAG_SERIES_HPP
#define SUPERDIAG_SERIES_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superdiag/integer.hpp"

namespace superdiag {

/// Raised by expand_rational when a denominator factor has constant term 0.
class ZeroConstantTerm : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by expand_rational when the quotient leaves the integers
/// (constant term of a factor does not divide the running remainder).
class InexactDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised on coefficient lookup outside a truncated grid.
class OutOfTruncation : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Dense integer polynomial; coeffs()[i] is the coefficient of x^i.
/// Normalised so the highest stored coefficient is nonzero, except for the
/// zero polynomial which stores exactly one 0.
class IntPolynomial {
public:
    IntPolynomial();
    explicit IntPolynomial(std::vector<Int> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    /// c * x^e
    static IntPolynomial monomial(const Int& c, std::size_t e);

    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }

    /// Coefficient of x^i, zero past the degree.
    Int coeff(std::size_t i) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void normalize();

    std::vector<Int> coeffs_;
};

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

/// Truncated power series: coefficients of x^0..x^N are exact, nothing is
/// known above x^N.
class UniSeries {
public:
    /// Zero series of the given order.
    explicit UniSeries(std::size_t truncation_order);
    /// Takes the first order+1 coefficients, padding with zeros.
    UniSeries(std::vector<Int> coeffs, std::size_t truncation_order);

    static UniSeries from_polynomial(const IntPolynomial& p, std::size_t truncation_order);
    /// 1 + x + x^2 + ... + x^N
    static UniSeries geometric(std::size_t truncation_order);

    std::size_t truncation_order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    /// Throws OutOfTruncation for i > N.
    const Int& coeff(std::size_t i) const;

    friend bool operator==(const UniSeries&, const UniSeries&) = default;

private:
    std::vector<Int> coeffs_;
};

UniSeries series_add(const UniSeries& a, const UniSeries& b);
UniSeries series_mul(const UniSeries& a, const UniSeries& b);

/// One denominator factor q(x)^e of a rational function.
struct DenominatorFactor {
    IntPolynomial base;
    unsigned exponent = 1;
};

/// Expands numerator / prod(base_i^exponent_i) modulo x^{N+1} by repeated
/// exact series division.
UniSeries expand_rational(const IntPolynomial& numerator,
                          std::span<const DenominatorFactor> denominator,
                          std::size_t truncation_order);

/// Bivariate truncated series, dense grid of x^0..x^N times y^0..y^K.
class BiSeries {
public:
    BiSeries(std::size_t truncation_n, std::size_t truncation_k);

    std::size_t truncation_n() const noexcept { return truncation_n_; }
    std::size_t truncation_k() const noexcept { return truncation_k_; }

    /// Adds y^k * s (restricted to x^0..x^N) into the grid.
    void add_row(std::size_t k, const UniSeries& s);

    const Int& coeff(std::size_t n, std::size_t k) const;

    /// Coefficients of x^0..x^N after substituting y = 1.
    UniSeries at_y_one() const;

private:
    std::size_t truncation_n_;
    std::size_t truncation_k_;
    std::vector<Int> grid_; // row-major in n
};

/// [x^n y^k] s; OutOfTruncation when (n, k) lies outside the grid.
Int biseries_coeff(const BiSeries& s, std::size_t n, std::size_t k);

} // namespace superdiag

#endif // SUPERDIAG_SERIES_HPP
