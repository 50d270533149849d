#ifndef SUPERDIAG_VERIFY_HPP
#define SUPERDIAG_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "superdiag/integer.hpp"
#include "superdiag/series.hpp"

namespace superdiag {

/// One disagreement between two routes for the same input.
struct Mismatch {
    std::string input;
    Int route_a;
    Int route_b;
    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerificationReport {
    std::string check_name;
    std::string range_checked;
    std::vector<Mismatch> mismatches;
    bool passed = true;
    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// The computations under test. Defaults are the library implementations;
/// tests swap individual entries to check that a broken route is caught.
struct Routes {
    std::function<Int(std::int64_t, std::int64_t)> brute_s_nk;
    std::function<Int(std::int64_t)> brute_s;
    std::function<Int(std::int64_t)> brute_c;
    std::function<Int(std::int64_t, std::int64_t)> s_closed;
    std::function<BiSeries(std::size_t, std::size_t)> series_S;
    std::function<UniSeries(std::size_t)> s_total_series;
    std::function<UniSeries(std::size_t)> series_C;
    std::function<Int(std::int64_t)> c_closed;
    std::function<Int(std::int64_t, std::int64_t)> t_recurrence;
    std::function<Int(std::int64_t, std::int64_t)> t_stirling;
    std::function<IntPolynomial(unsigned)> q_polynomial;
    std::function<Int(unsigned, unsigned)> stirling1;
    std::function<Int(std::int64_t)> superdiagonal_total;
    std::function<Int(std::int64_t)> palindromic_total;
    std::function<std::uint64_t(std::uint64_t)> count_superdiagonal;
    std::function<std::uint64_t(std::uint64_t)> count_palindromic;

    static Routes defaults();
};

/// s(n, k) on 1..n_max x 1..k_max: brute force vs closed forms vs series,
/// plus the published table where the grids overlap.
VerificationReport verify_table1(std::int64_t n_max, std::int64_t k_max,
                                 const Routes& routes = Routes::defaults());
/// s(n) from S(x, 1), from summing S(x, y) over y, and by brute force,
/// plus the published list for n <= 28.
VerificationReport verify_s_sequence(std::int64_t n_max, const Routes& routes = Routes::defaults());
/// [x^n y^k] S(x, y) against the published expansion through x^12.
VerificationReport verify_printed_expansion(const Routes& routes = Routes::defaults());
/// c(n) by brute force, the double sum and C(x), plus the published list.
VerificationReport verify_colored(std::int64_t n_max, const Routes& routes = Routes::defaults());
/// T recurrence vs Stirling sum vs Q_m coefficients, plus the published Q_0..Q_6.
VerificationReport verify_proposition1(std::int64_t m_max, const Routes& routes = Routes::defaults());
/// Enumeration counts vs the superdiagonal sum and 2^floor(n/2).
VerificationReport verify_cross_checks(std::int64_t n_max, const Routes& routes = Routes::defaults());
/// Stirling row sums equal n! and rows match the rising factorial.
VerificationReport verify_stirling(std::int64_t n_max, const Routes& routes = Routes::defaults());

enum class Profile { quick, full };

struct ProfileLimits {
    std::int64_t n_max;
    std::int64_t k_max;
    std::int64_t m_max;
};

ProfileLimits profile_limits(Profile p);
/// Accepts "quick", "full" and "" (quick). Throws std::invalid_argument otherwise.
Profile parse_profile(std::string_view name);

/// Runs every check concurrently; results are in a fixed order.
std::vector<VerificationReport> verify_all(Profile profile = Profile::quick,
                                           const Routes& routes = Routes::defaults());

bool all_passed(const std::vector<VerificationReport>& reports);

/// JSON integer when |v| <= 2^53 - 1, decimal string otherwise.
nlohmann::json json_integer(const Int& v);

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const std::vector<VerificationReport>& reports);
std::string to_text(const std::vector<VerificationReport>& reports);

} // namespace superdiag

#endif // SUPERDIAG_VERIFY_HPP
