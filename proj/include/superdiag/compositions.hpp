#ifndef SUPERDIAG_COMPOSITIONS_HPP
#define SUPERDIAG_COMPOSITIONS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "superdiag/integer.hpp"

namespace superdiag {

using Part = std::uint32_t;

/// An ordered sequence of positive parts. The empty composition is the
/// unique composition of 0.
class Composition {
public:
    Composition() = default;
    /// Throws std::invalid_argument if any part is 0.
    explicit Composition(std::vector<Part> parts);
    Composition(std::initializer_list<Part> parts);

    const std::vector<Part>& parts() const noexcept { return parts_; }
    std::uint64_t weight() const noexcept;
    std::size_t rho() const noexcept { return parts_.size(); }

    /// "(4, 2, 4)", "()" for the empty composition
    std::string str() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<Part> parts_;
};

/// Compositions of n together with a histogram by number of parts.
struct EnumerationReport {
    std::uint64_t n = 0;
    std::vector<Composition> compositions;
    std::map<std::size_t, std::uint64_t> by_part_count;
};

/// Largest part count a superdiagonal composition of n can have:
/// max l with l(l+1)/2 <= n.
std::size_t max_superdiagonal_parts(std::uint64_t n);

// Enumerators emit compositions in decreasing lexicographic order of their
// part lists, e.g. (10), (5,5), (4,2,4), (3,4,3).

/// Streams every superdiagonal composition (parts[i] >= i+1) of n to visit.
/// The vector passed to visit is reused between calls.
void for_each_superdiagonal(std::uint64_t n,
                            const std::function<void(const std::vector<Part>&)>& visit);

std::vector<Composition> enumerate_superdiagonal(std::uint64_t n);
std::vector<Composition> enumerate_palindromic_superdiagonal(std::uint64_t n);
/// All palindromic compositions of n (no superdiagonal constraint).
std::vector<Composition> enumerate_palindromic(std::uint64_t n);

bool is_palindromic(const Composition& c);
bool is_superdiagonal(const Composition& c);

/// Number of colourings: product of the parts (1 for the empty composition).
Int colored_weight(const Composition& c);

/// A part of size v with colour j (1 <= j <= v).
struct ColoredPart {
    Part value;
    Part color;
    friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
};

/// Every coloured superdiagonal composition of n, materialised. Throws
/// std::invalid_argument for n > 8.
std::vector<std::vector<ColoredPart>> expand_colored_superdiagonal(std::uint64_t n);

EnumerationReport palindromic_superdiagonal_report(std::uint64_t n);

Int brute_s(std::uint64_t n);
Int brute_s_nk(std::uint64_t n, std::uint64_t k);
/// Sum of colored_weight over the superdiagonal compositions of n.
Int brute_c(std::uint64_t n);

} // namespace superdiag

#endif // SUPERDIAG_COMPOSITIONS_HPP
