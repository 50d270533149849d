#include "superdiag/verify.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "superdiag/compositions.hpp"
#include "superdiag/formulas.hpp"
#include "superdiag/golden.hpp"

namespace superdiag {

namespace {

std::string cell(std::string_view name, std::int64_t a) {
    return std::string(name) + "(" + std::to_string(a) + ")";
}

std::string cell(std::string_view name, std::int64_t a, std::int64_t b) {
    return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Records a mismatch when the two routes disagree.
void compare(VerificationReport& r, const std::string& input, std::string_view routes, const Int& a,
             const Int& b) {
    if (a != b) r.mismatches.push_back({input + " " + std::string(routes), a, b});
}

VerificationReport finish(VerificationReport r) {
    r.passed = r.mismatches.empty();
    return r;
}

std::string range(std::string_view var, std::int64_t lo, std::int64_t hi) {
    return std::to_string(lo) + "<=" + std::string(var) + "<=" + std::to_string(hi);
}

} // namespace

Routes Routes::defaults() {
    Routes r;
    r.brute_s_nk = [](std::int64_t n, std::int64_t k) {
        return superdiag::brute_s_nk(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
    };
    r.brute_s = [](std::int64_t n) { return superdiag::brute_s(static_cast<std::uint64_t>(n)); };
    r.brute_c = [](std::int64_t n) { return superdiag::brute_c(static_cast<std::uint64_t>(n)); };
    r.s_closed = superdiag::s_closed;
    r.series_S = superdiag::series_S;
    r.s_total_series = superdiag::s_total_series;
    r.series_C = superdiag::series_C;
    r.c_closed = superdiag::c_closed;
    r.t_recurrence = superdiag::triangle_T_recurrence;
    r.t_stirling = superdiag::triangle_T_stirling;
    r.q_polynomial = superdiag::q_polynomial;
    r.stirling1 = superdiag::stirling1;
    r.superdiagonal_total = superdiag::superdiagonal_total;
    r.palindromic_total = superdiag::palindromic_total;
    r.count_superdiagonal = [](std::uint64_t n) {
        std::uint64_t count = 0;
        for_each_superdiagonal(n, [&](const std::vector<Part>&) { ++count; });
        return count;
    };
    r.count_palindromic = [](std::uint64_t n) {
        return static_cast<std::uint64_t>(enumerate_palindromic(n).size());
    };
    return r;
}

VerificationReport verify_table1(std::int64_t n_max, std::int64_t k_max, const Routes& routes) {
    VerificationReport r;
    r.check_name = "table1";
    r.range_checked = range("n", 1, n_max) + ", " + range("k", 1, k_max);

    const auto& published = golden::table1();
    const BiSeries S = routes.series_S(static_cast<std::size_t>(n_max), static_cast<std::size_t>(k_max));
    std::vector<std::string> flagged;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        for (std::int64_t k = 1; k <= k_max; ++k) {
            const std::string in = cell("s", n, k);
            const Int brute = routes.brute_s_nk(n, k);
            const Int closed = routes.s_closed(n, k);
            const Int series = S.coeff(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
            compare(r, in, "brute vs closed", brute, closed);
            compare(r, in, "brute vs series", brute, series);
            compare(r, in, "closed vs series", closed, series);
            if (n <= 26 && k <= 5)
                compare(r, in, "brute vs published", brute, published[k - 1][n - 1]);

            // The closed forms taken literally, without the minimal-weight
            // guard. Disagreement above the minimal weight is a failure;
            // below it the formula is outside its derivation and is flagged.
            std::optional<Int> raw;
            if (k % 2 == 1)
                raw = s_odd(n, (k + 1) / 2);
            else if (n % 2 == 0)
                raw = s_even(n / 2, k / 2);
            if (raw && *raw != brute) {
                if (n >= min_palindromic_superdiagonal_weight(k))
                    compare(r, in, "brute vs literal closed form", brute, *raw);
                else
                    flagged.push_back(in + "=" + raw->str() + " (enumeration " + brute.str() + ")");
            }
        }
    }
    if (!flagged.empty()) {
        r.range_checked += "; literal closed form below minimal weight flagged at";
        for (const auto& f : flagged) r.range_checked += " " + f;
    }
    return finish(std::move(r));
}

VerificationReport verify_s_sequence(std::int64_t n_max, const Routes& routes) {
    VerificationReport r;
    r.check_name = "s_sequence";
    const std::int64_t top = std::max<std::int64_t>(n_max, static_cast<std::int64_t>(golden::kSTotal.size()) - 1);
    r.range_checked = range("n", 0, top);

    const auto N = static_cast<std::size_t>(top);
    const UniSeries total = routes.s_total_series(N);
    const UniSeries summed = routes.series_S(N, max_superdiagonal_parts(N)).at_y_one();
    for (std::int64_t n = 0; n <= top; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const std::string in = cell("s", n);
        const Int brute = routes.brute_s(n);
        compare(r, in, "brute vs S(x,1)", brute, total.coeff(i));
        compare(r, in, "S(x,1) vs sum_k S(x,y)", total.coeff(i), summed.coeff(i));
        if (i < golden::kSTotal.size())
            compare(r, in, "S(x,1) vs published", total.coeff(i), golden::kSTotal[i]);
    }
    return finish(std::move(r));
}

VerificationReport verify_printed_expansion(const Routes& routes) {
    VerificationReport r;
    r.check_name = "printed_expansion";
    const std::size_t N = golden::kSExpansion.size() - 1;
    r.range_checked = range("n", 0, static_cast<std::int64_t>(N)) + ", all k";
    const BiSeries S = routes.series_S(N, N);
    for (std::size_t n = 0; n <= N; ++n) {
        const auto& row = golden::kSExpansion[n];
        for (std::size_t k = 0; k <= N; ++k) {
            const Int expected = k < row.size() ? Int{row[k]} : Int{0};
            compare(r, "[x^" + std::to_string(n) + " y^" + std::to_string(k) + "]", "series vs published",
                    S.coeff(n, k), expected);
        }
    }
    return finish(std::move(r));
}

VerificationReport verify_colored(std::int64_t n_max, const Routes& routes) {
    VerificationReport r;
    r.check_name = "colored";
    r.range_checked = range("n", 0, n_max);
    const UniSeries C = routes.series_C(static_cast<std::size_t>(n_max));
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const std::string in = cell("c", n);
        const Int brute = routes.brute_c(n);
        const Int closed = routes.c_closed(n);
        compare(r, in, "brute vs double sum", brute, closed);
        compare(r, in, "brute vs C(x)", brute, C.coeff(i));
        compare(r, in, "double sum vs C(x)", closed, C.coeff(i));
        if (i < golden::kColored.size()) compare(r, in, "brute vs published", brute, golden::kColored[i]);
    }
    return finish(std::move(r));
}

VerificationReport verify_proposition1(std::int64_t m_max, const Routes& routes) {
    VerificationReport r;
    r.check_name = "proposition1";
    r.range_checked = "0<=k<=m, " + range("m", 0, m_max);
    for (std::int64_t m = 0; m <= m_max; ++m) {
        const IntPolynomial q = routes.q_polynomial(static_cast<unsigned>(m));
        if (q.degree() > static_cast<std::size_t>(m))
            r.mismatches.push_back({cell("deg Q", m) + " exceeds m", Int(q.degree()), m});
        for (std::int64_t k = 0; k <= m; ++k) {
            const std::string in = cell("T", m, k);
            const Int rec = routes.t_recurrence(m, k);
            const Int sum = routes.t_stirling(m, k);
            const Int coeff = q.coeff(static_cast<std::size_t>(k));
            compare(r, in, "recurrence vs Stirling sum", rec, sum);
            compare(r, in, "recurrence vs Q coefficient", rec, coeff);
            if (static_cast<std::size_t>(m) < golden::kQPolynomials.size()) {
                const auto& pub = golden::kQPolynomials[static_cast<std::size_t>(m)];
                const Int expected = static_cast<std::size_t>(k) < pub.size() ? Int{pub[k]} : Int{0};
                compare(r, in, "Q coefficient vs published", coeff, expected);
            }
        }
    }
    return finish(std::move(r));
}

VerificationReport verify_cross_checks(std::int64_t n_max, const Routes& routes) {
    VerificationReport r;
    r.check_name = "cross_checks";
    const std::int64_t pal_max = std::min<std::int64_t>(n_max, 18);
    r.range_checked = "superdiagonal " + range("n", 0, n_max) + ", palindromic " + range("n", 1, pal_max);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        compare(r, cell("superdiagonal", n), "enumeration vs sum",
                routes.count_superdiagonal(static_cast<std::uint64_t>(n)), routes.superdiagonal_total(n));
    }
    for (std::int64_t n = 1; n <= pal_max; ++n) {
        compare(r, cell("palindromic", n), "enumeration vs 2^floor(n/2)",
                routes.count_palindromic(static_cast<std::uint64_t>(n)), routes.palindromic_total(n));
    }
    return finish(std::move(r));
}

VerificationReport verify_stirling(std::int64_t n_max, const Routes& routes) {
    VerificationReport r;
    r.check_name = "stirling";
    r.range_checked = range("n", 0, n_max);
    IntPolynomial rising{1};
    Int factorial = 1;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        if (n >= 1) {
            rising = poly_mul(rising, IntPolynomial{n - 1, 1});
            factorial *= n;
        }
        Int row_sum = 0;
        for (std::int64_t k = 0; k <= n; ++k) {
            const Int v = routes.stirling1(static_cast<unsigned>(n), static_cast<unsigned>(k));
            row_sum += v;
            compare(r, cell("stirling", n, k), "recurrence vs rising factorial", v,
                    rising.coeff(static_cast<std::size_t>(k)));
        }
        compare(r, cell("row sum", n), "vs n!", row_sum, factorial);
    }
    return finish(std::move(r));
}

ProfileLimits profile_limits(Profile p) {
    return p == Profile::full ? ProfileLimits{40, 8, 25} : ProfileLimits{26, 5, 10};
}

Profile parse_profile(std::string_view name) {
    if (name.empty() || name == "quick") return Profile::quick;
    if (name == "full") return Profile::full;
    throw std::invalid_argument("unknown profile '" + std::string(name) + "' (expected quick or full)");
}

std::vector<VerificationReport> verify_all(Profile profile, const Routes& routes) {
    const ProfileLimits lim = profile_limits(profile);
    std::vector<std::future<VerificationReport>> jobs;
    const auto launch = [&](auto f) { jobs.push_back(std::async(std::launch::async, f)); };
    launch([&] { return verify_table1(lim.n_max, lim.k_max, routes); });
    launch([&] { return verify_s_sequence(lim.n_max, routes); });
    launch([&] { return verify_printed_expansion(routes); });
    launch([&] { return verify_colored(lim.n_max, routes); });
    launch([&] { return verify_proposition1(lim.m_max, routes); });
    launch([&] { return verify_cross_checks(lim.n_max, routes); });
    launch([&] { return verify_stirling(12, routes); });
    std::vector<VerificationReport> out;
    out.reserve(jobs.size());
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

nlohmann::json json_integer(const Int& v) {
    static const Int limit = (Int{1} << 53) - 1;
    if (v <= limit && v >= -limit) return static_cast<std::int64_t>(v);
    return v.str();
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json mismatches = nlohmann::json::array();
    for (const auto& m : r.mismatches) {
        mismatches.push_back(
            {{"input", m.input}, {"route_a", json_integer(m.route_a)}, {"route_b", json_integer(m.route_b)}});
    }
    return {{"check_name", r.check_name},
            {"range_checked", r.range_checked},
            {"mismatches", std::move(mismatches)},
            {"passed", r.passed}};
}

nlohmann::json to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

std::string to_text(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    for (const auto& r : reports) {
        out << (r.passed ? "PASS" : "FAIL") << "  " << r.check_name << "  [" << r.range_checked << "]";
        if (!r.passed) out << "  " << r.mismatches.size() << " mismatch(es)";
        out << '\n';
        for (const auto& m : r.mismatches) out << "    " << m.input << ": " << m.route_a << " != " << m.route_b << '\n';
    }
    out << (all_passed(reports) ? "all checks passed" : "verification FAILED") << '\n';
    return out.str();
}

} // namespace superdiag
