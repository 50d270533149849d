#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "superdiag/compositions.hpp"
#include "superdiag/formulas.hpp"
#include "superdiag/verify.hpp"

namespace py = pybind11;
using namespace superdiag;

namespace pybind11::detail {

// Python int <-> cpp_int through the decimal representation.
template <>
struct type_caster<Int> {
    PYBIND11_TYPE_CASTER(Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = Int(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const Int& v, return_value_policy, handle) {
        const std::string s = v.str();
        return PyLong_FromString(s.c_str(), nullptr, 10);
    }
};

} // namespace pybind11::detail

namespace {

using Tuples = std::vector<std::vector<Part>>;

Tuples as_tuples(const std::vector<Composition>& cs) {
    Tuples out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(c.parts());
    return out;
}

py::dict report_dict(const VerificationReport& r) {
    py::list mismatches;
    for (const auto& m : r.mismatches)
        mismatches.append(py::dict(py::arg("input") = m.input, py::arg("route_a") = m.route_a,
                                   py::arg("route_b") = m.route_b));
    return py::dict(py::arg("check_name") = r.check_name, py::arg("range_checked") = r.range_checked,
                    py::arg("mismatches") = mismatches, py::arg("passed") = r.passed);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Palindromic superdiagonal and colored superdiagonal compositions";

    m.def("binomial", &binomial, py::arg("a"), py::arg("b"));

    m.def("enumerate_superdiagonal", [](std::uint64_t n) { return as_tuples(enumerate_superdiagonal(n)); },
          py::arg("n"));
    m.def("enumerate_palindromic_superdiagonal",
          [](std::uint64_t n) { return as_tuples(enumerate_palindromic_superdiagonal(n)); }, py::arg("n"));
    m.def("enumerate_palindromic", [](std::uint64_t n) { return as_tuples(enumerate_palindromic(n)); },
          py::arg("n"));
    m.def("is_superdiagonal", [](const std::vector<Part>& p) { return is_superdiagonal(Composition(p)); },
          py::arg("parts"));
    m.def("is_palindromic", [](const std::vector<Part>& p) { return is_palindromic(Composition(p)); },
          py::arg("parts"));
    m.def("colored_weight", [](const std::vector<Part>& p) { return colored_weight(Composition(p)); },
          py::arg("parts"));
    m.def(
        "expand_colored_superdiagonal",
        [](std::uint64_t n) {
            std::vector<std::vector<std::pair<Part, Part>>> out;
            for (const auto& t : expand_colored_superdiagonal(n)) {
                auto& row = out.emplace_back();
                for (const auto& cp : t) row.emplace_back(cp.value, cp.color);
            }
            return out;
        },
        py::arg("n"), "Each colouring as a list of (value, color) pairs; n <= 8.");

    m.def("brute_s", &brute_s, py::arg("n"));
    m.def("brute_s_nk", &brute_s_nk, py::arg("n"), py::arg("k"));
    m.def("brute_c", &brute_c, py::arg("n"));

    m.def("stirling1", &stirling1, py::arg("n"), py::arg("k"));
    m.def("q_polynomial", [](unsigned k) { return q_polynomial(k).coeffs(); }, py::arg("m"),
          "Coefficients of Q_m, lowest degree first.");
    m.def("triangle_T_recurrence", &triangle_T_recurrence, py::arg("m"), py::arg("k"));
    m.def("triangle_T_stirling", &triangle_T_stirling, py::arg("m"), py::arg("k"));

    m.def("s_even", &s_even, py::arg("n"), py::arg("k"));
    m.def("s_odd", &s_odd, py::arg("n"), py::arg("k"));
    m.def("s_closed", &s_closed, py::arg("n"), py::arg("k"));
    m.def(
        "series_S",
        [](std::size_t n_order, std::size_t k_order) {
            const BiSeries s = series_S(n_order, k_order);
            std::vector<std::vector<Int>> grid(n_order + 1, std::vector<Int>(k_order + 1));
            for (std::size_t n = 0; n <= n_order; ++n)
                for (std::size_t k = 0; k <= k_order; ++k) grid[n][k] = s.coeff(n, k);
            return grid;
        },
        py::arg("n_order"), py::arg("k_order"), "grid[n][k] = [x^n y^k] S(x, y).");
    m.def("s_total_series", [](std::size_t n) { return s_total_series(n).coeffs(); }, py::arg("n_order"));
    m.def("series_C", [](std::size_t n) { return series_C(n).coeffs(); }, py::arg("n_order"));
    m.def("c_closed", &c_closed, py::arg("n"));
    m.def("superdiagonal_total", &superdiagonal_total, py::arg("n"));
    m.def("palindromic_total", &palindromic_total, py::arg("n"));

    m.def(
        "expand_rational",
        [](const std::vector<Int>& numerator, const std::vector<std::pair<std::vector<Int>, unsigned>>& factors,
           std::size_t order) {
            std::vector<DenominatorFactor> den;
            for (const auto& [base, e] : factors) den.push_back({IntPolynomial(base), e});
            return expand_rational(IntPolynomial(numerator), den, order).coeffs();
        },
        py::arg("numerator"), py::arg("denominator"), py::arg("order"),
        "denominator is a list of (coefficients, exponent) pairs.");

    m.def(
        "verify_all",
        [](const std::string& profile) {
            std::vector<VerificationReport> reports;
            {
                py::gil_scoped_release release;
                reports = verify_all(parse_profile(profile));
            }
            py::list out;
            for (const auto& r : reports) out.append(report_dict(r));
            return out;
        },
        py::arg("profile") = "quick");
}
