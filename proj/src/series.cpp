#include "superdiag/series.hpp"

#include <algorithm>

namespace superdiag {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial() : coeffs_{Int{0}} {}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs)
    : coeffs_(coeffs.begin(), coeffs.end()) {
    normalize();
}

IntPolynomial IntPolynomial::monomial(const Int& c, std::size_t e) {
    std::vector<Int> v(e + 1);
    v[e] = c;
    return IntPolynomial(std::move(v));
}

Int IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Int{0};
}

void IntPolynomial::normalize() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.emplace_back(0);
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Int> out(ac.size() + bc.size() - 1);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
    }
    return IntPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------
// UniSeries

UniSeries::UniSeries(std::size_t truncation_order) : coeffs_(truncation_order + 1) {}

UniSeries::UniSeries(std::vector<Int> coeffs, std::size_t truncation_order)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(truncation_order + 1);
}

UniSeries UniSeries::from_polynomial(const IntPolynomial& p, std::size_t truncation_order) {
    return UniSeries(p.coeffs(), truncation_order);
}

UniSeries UniSeries::geometric(std::size_t truncation_order) {
    return UniSeries(std::vector<Int>(truncation_order + 1, Int{1}), truncation_order);
}

const Int& UniSeries::coeff(std::size_t i) const {
    if (i >= coeffs_.size())
        throw OutOfTruncation("coefficient x^" + std::to_string(i) + " beyond truncation order " +
                              std::to_string(truncation_order()));
    return coeffs_[i];
}

UniSeries series_add(const UniSeries& a, const UniSeries& b) {
    const std::size_t n = std::min(a.truncation_order(), b.truncation_order());
    std::vector<Int> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = a.coeffs()[i] + b.coeffs()[i];
    return UniSeries(std::move(out), n);
}

UniSeries series_mul(const UniSeries& a, const UniSeries& b) {
    const std::size_t n = std::min(a.truncation_order(), b.truncation_order());
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Int> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (ac[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += ac[i] * bc[j];
    }
    return UniSeries(std::move(out), n);
}

namespace {

// In-place long division of the truncated series by q; q(0) != 0.
void divide_in_place(std::vector<Int>& s, const IntPolynomial& q) {
    const auto& qc = q.coeffs();
    const Int& q0 = qc[0];
    const std::size_t qd = q.degree();
    for (std::size_t i = 0; i < s.size(); ++i) {
        Int acc = s[i];
        for (std::size_t j = 1; j <= std::min(i, qd); ++j) {
            if (qc[j] != 0) acc -= qc[j] * s[i - j];
        }
        if (q0 == 1) {
            s[i] = std::move(acc);
        } else if (q0 == -1) {
            s[i] = -acc;
        } else {
            if (acc % q0 != 0)
                throw InexactDivision("series quotient has a non-integer coefficient at x^" +
                                      std::to_string(i));
            s[i] = acc / q0;
        }
    }
}

} // namespace

UniSeries expand_rational(const IntPolynomial& numerator,
                          std::span<const DenominatorFactor> denominator,
                          std::size_t truncation_order) {
    for (const auto& f : denominator) {
        if (f.base.coeffs()[0] == 0)
            throw ZeroConstantTerm("denominator factor has zero constant term");
    }
    std::vector<Int> s = numerator.coeffs();
    s.resize(truncation_order + 1);
    for (const auto& f : denominator) {
        for (unsigned e = 0; e < f.exponent; ++e) divide_in_place(s, f.base);
    }
    return UniSeries(std::move(s), truncation_order);
}

// ---------------------------------------------------------------------------
// BiSeries

BiSeries::BiSeries(std::size_t truncation_n, std::size_t truncation_k)
    : truncation_n_(truncation_n),
      truncation_k_(truncation_k),
      grid_((truncation_n + 1) * (truncation_k + 1)) {}

void BiSeries::add_row(std::size_t k, const UniSeries& s) {
    if (k > truncation_k_)
        throw OutOfTruncation("y^" + std::to_string(k) + " beyond truncation order " +
                              std::to_string(truncation_k_));
    const std::size_t n = std::min(truncation_n_, s.truncation_order());
    for (std::size_t i = 0; i <= n; ++i) grid_[i * (truncation_k_ + 1) + k] += s.coeffs()[i];
}

const Int& BiSeries::coeff(std::size_t n, std::size_t k) const {
    if (n > truncation_n_ || k > truncation_k_)
        throw OutOfTruncation("coefficient x^" + std::to_string(n) + " y^" + std::to_string(k) +
                              " outside grid " + std::to_string(truncation_n_) + "x" +
                              std::to_string(truncation_k_));
    return grid_[n * (truncation_k_ + 1) + k];
}

UniSeries BiSeries::at_y_one() const {
    std::vector<Int> out(truncation_n_ + 1);
    for (std::size_t n = 0; n <= truncation_n_; ++n) {
        for (std::size_t k = 0; k <= truncation_k_; ++k) out[n] += grid_[n * (truncation_k_ + 1) + k];
    }
    return UniSeries(std::move(out), truncation_n_);
}

Int biseries_coeff(const BiSeries& s, std::size_t n, std::size_t k) { return s.coeff(n, k); }

} // namespace superdiag
