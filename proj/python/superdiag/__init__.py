"""Palindromic superdiagonal compositions and colored superdiagonal compositions."""

from ._core import (
    binomial,
    brute_c,
    brute_s,
    brute_s_nk,
    c_closed,
    colored_weight,
    enumerate_palindromic,
    enumerate_palindromic_superdiagonal,
    enumerate_superdiagonal,
    expand_colored_superdiagonal,
    expand_rational,
    is_palindromic,
    is_superdiagonal,
    palindromic_total,
    q_polynomial,
    s_closed,
    s_even,
    s_odd,
    s_total_series,
    series_C,
    series_S,
    stirling1,
    superdiagonal_total,
    triangle_T_recurrence,
    triangle_T_stirling,
    verify_all,
)

__all__ = [
    "binomial",
    "brute_c",
    "brute_s",
    "brute_s_nk",
    "c_closed",
    "colored_weight",
    "enumerate_palindromic",
    "enumerate_palindromic_superdiagonal",
    "enumerate_superdiagonal",
    "expand_colored_superdiagonal",
    "expand_rational",
    "is_palindromic",
    "is_superdiagonal",
    "palindromic_total",
    "q_polynomial",
    "s_closed",
    "s_even",
    "s_odd",
    "s_total_series",
    "series_C",
    "series_S",
    "stirling1",
    "superdiagonal_total",
    "triangle_T_recurrence",
    "triangle_T_stirling",
    "verify_all",
]
