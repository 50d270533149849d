#include <doctest.h>

#include <array>
#include <random>

#include "superdiag/series.hpp"

using namespace superdiag;

namespace {

std::vector<Int> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

UniSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit_constant) {
    std::uniform_int_distribution<int> d(-9, 9);
    std::vector<Int> c(order + 1);
    for (auto& x : c) x = d(rng);
    if (unit_constant) c[0] = (rng() & 1) ? 1 : -1;
    return UniSeries(std::move(c), order);
}

IntPolynomial random_poly(std::mt19937_64& rng, std::size_t max_degree, bool unit_constant) {
    std::uniform_int_distribution<int> d(-5, 5);
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::vector<Int> c(deg(rng) + 1);
    for (auto& x : c) x = d(rng);
    if (unit_constant) c[0] = (rng() & 1) ? 1 : -1;
    return IntPolynomial(std::move(c));
}

} // namespace

TEST_CASE("IntPolynomial normalises trailing zeros") {
    CHECK(IntPolynomial{1, 2, 0, 0}.coeffs() == ints({1, 2}));
    CHECK(IntPolynomial{0, 0}.is_zero());
    CHECK(IntPolynomial{}.coeffs().size() == 1);
    CHECK(IntPolynomial{0, 0, 3}.degree() == 2);
    CHECK(IntPolynomial::monomial(5, 3).coeffs() == ints({0, 0, 0, 5}));
}

TEST_CASE("poly_mul") {
    CHECK(poly_mul(IntPolynomial{1}, IntPolynomial{2, -1}) == IntPolynomial{2, -1});
    CHECK(poly_mul(IntPolynomial{1, -1}, IntPolynomial{1, 1}) == IntPolynomial{1, 0, -1});
    // Q_3 = 6 - 7x + 2x^2
    CHECK(poly_mul(IntPolynomial{2, -1}, IntPolynomial{3, -2}) == IntPolynomial{6, -7, 2});
    CHECK(poly_mul(IntPolynomial{}, IntPolynomial{1, 2, 3}).is_zero());
}

TEST_CASE("poly_mul degrees add on nonzero inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_poly(rng, 8, false);
        auto b = random_poly(rng, 8, false);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(poly_mul(a, b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("series_add") {
    const UniSeries one_plus_x({1, 1}, 4);
    CHECK(series_add(one_plus_x, UniSeries(4)) == one_plus_x);
    CHECK(series_add(UniSeries(5), UniSeries(3)).truncation_order() == 3);

    // m = 0 and m = 1 terms of C(x): 1 + x/(1-x)^2. x/(1-x)^2 = sum n x^n.
    const std::array<DenominatorFactor, 1> den{{{IntPolynomial{1, -1}, 2}}};
    const UniSeries m1 = expand_rational(IntPolynomial{0, 1}, den, 4);
    std::vector<Int> expected(5);
    for (int n = 0; n <= 4; ++n) expected[n] = n;
    expected[0] += 1;
    CHECK(series_add(UniSeries({1}, 4), m1).coeffs() == expected);
}

TEST_CASE("series_mul") {
    const UniSeries telescoped = series_mul(UniSeries::geometric(6), UniSeries({1, -1}, 6));
    CHECK(telescoped.coeffs() == ints({1, 0, 0, 0, 0, 0, 0}));

    const UniSeries x2({0, 0, 1}, 4);
    const UniSeries x3({0, 0, 0, 1}, 4);
    CHECK(series_mul(x2, x3) == UniSeries(4));

    // 1/(1-x^2) squared: sum (j+1) x^{2j}.
    const UniSeries alt({1, 0, 1, 0, 1, 0, 1}, 6);
    CHECK(series_mul(alt, alt).coeffs() == ints({1, 0, 2, 0, 3, 0, 4}));
}

TEST_CASE("series_mul is commutative and associative") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_series(rng, 12, false);
        auto b = random_series(rng, 12, false);
        auto c = random_series(rng, 9, false);
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    }
}

TEST_CASE("expand_rational examples") {
    const IntPolynomial one_minus_x{1, -1};
    const IntPolynomial one_minus_x2{1, 0, -1};

    const std::array<DenominatorFactor, 1> geo{{{one_minus_x, 1}}};
    CHECK(expand_rational(IntPolynomial{1}, geo, 4).coeffs() == ints({1, 1, 1, 1, 1}));

    const std::array<DenominatorFactor, 1> even{{{one_minus_x2, 1}}};
    CHECK(expand_rational(IntPolynomial::monomial(1, 4), even, 10).coeffs() ==
          ints({0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1}));

    const std::array<DenominatorFactor, 2> odd{{{one_minus_x, 1}, {one_minus_x2, 1}}};
    CHECK(expand_rational(IntPolynomial::monomial(1, 8), odd, 12).coeffs() ==
          ints({0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 2, 3}));
}

TEST_CASE("expand_rational errors") {
    const std::array<DenominatorFactor, 1> bad{{{IntPolynomial{0, 1}, 1}}};
    CHECK_THROWS_AS(expand_rational(IntPolynomial{1}, bad, 5), ZeroConstantTerm);

    const std::array<DenominatorFactor, 1> two{{{IntPolynomial{2, 1}, 1}}};
    CHECK_THROWS_AS(expand_rational(IntPolynomial{1}, two, 5), InexactDivision);
    // Exact when the numerator is divisible.
    CHECK(expand_rational(IntPolynomial{4, 2}, two, 3).coeffs() == ints({2, 0, 0, 0}));
}

TEST_CASE("expand_rational inverts multiplication") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t N = 1 + rng() % 20;
        const IntPolynomial q = random_poly(rng, 6, true);
        const std::array<DenominatorFactor, 1> den{{{q, 1}}};
        const UniSeries inv = expand_rational(IntPolynomial{1}, den, N);
        const UniSeries one({1}, N);
        CHECK(series_mul(inv, UniSeries::from_polynomial(q, N)) == one);
    }
}

TEST_CASE("expand_rational with exponent e matches repeated multiplication") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t N = 15;
        const IntPolynomial p = random_poly(rng, 4, false);
        const IntPolynomial q = random_poly(rng, 3, true);
        const std::array<DenominatorFactor, 1> once{{{q, 1}}};
        const UniSeries inv = expand_rational(IntPolynomial{1}, once, N);
        UniSeries expected = expand_rational(p, once, N);
        for (unsigned e = 1; e <= 4; ++e) {
            const std::array<DenominatorFactor, 1> pow{{{q, e}}};
            CHECK(expand_rational(p, pow, N) == expected);
            expected = series_mul(expected, inv);
        }
    }
}

TEST_CASE("BiSeries lookup is bounded") {
    BiSeries s(3, 2);
    s.add_row(1, UniSeries({0, 1, 1, 1}, 3));
    CHECK(biseries_coeff(s, 2, 1) == 1);
    CHECK(biseries_coeff(s, 0, 0) == 0);
    CHECK_THROWS_AS(biseries_coeff(s, 4, 0), OutOfTruncation);
    CHECK_THROWS_AS(biseries_coeff(s, 0, 3), OutOfTruncation);
    CHECK_THROWS_AS(s.add_row(3, UniSeries(3)), OutOfTruncation);
    CHECK(s.at_y_one().coeffs() == ints({0, 1, 1, 1}));
}

TEST_CASE("UniSeries coefficient past truncation throws") {
    CHECK_THROWS_AS(UniSeries::geometric(3).coeff(4), OutOfTruncation);
}
