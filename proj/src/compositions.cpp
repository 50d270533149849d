#include "superdiag/compositions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace superdiag {

Composition::Composition(std::vector<Part> parts) : parts_(std::move(parts)) {
    if (std::find(parts_.begin(), parts_.end(), Part{0}) != parts_.end())
        throw std::invalid_argument("composition parts must be positive");
}

Composition::Composition(std::initializer_list<Part> parts)
    : Composition(std::vector<Part>(parts)) {}

std::uint64_t Composition::weight() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::string Composition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::size_t max_superdiagonal_parts(std::uint64_t n) {
    std::size_t l = 0;
    while (static_cast<std::uint64_t>(triangular(static_cast<std::int64_t>(l + 1))) <= n) ++l;
    return l;
}

namespace {

void superdiagonal_rec(std::uint64_t position, std::uint64_t remaining, std::vector<Part>& buf,
                       const std::function<void(const std::vector<Part>&)>& visit) {
    // Largest part first gives decreasing lexicographic order.
    for (std::uint64_t p = remaining; p >= position; --p) {
        const std::uint64_t rest = remaining - p;
        if (rest != 0 && rest < position + 1) continue;
        buf.push_back(static_cast<Part>(p));
        if (rest == 0)
            visit(buf);
        else
            superdiagonal_rec(position + 1, rest, buf, visit);
        buf.pop_back();
    }
}

// All compositions of n, no constraint.
void all_compositions_rec(std::uint64_t remaining, std::vector<Part>& buf,
                          std::vector<std::vector<Part>>& out) {
    if (remaining == 0) {
        out.push_back(buf);
        return;
    }
    for (std::uint64_t p = remaining; p >= 1; --p) {
        buf.push_back(static_cast<Part>(p));
        all_compositions_rec(remaining - p, buf, out);
        buf.pop_back();
    }
}

std::vector<std::vector<Part>> all_compositions(std::uint64_t n) {
    std::vector<std::vector<Part>> out;
    std::vector<Part> buf;
    all_compositions_rec(n, buf, out);
    return out;
}

bool parts_palindromic(const std::vector<Part>& p) {
    return std::equal(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(p.size() / 2), p.rbegin());
}

} // namespace

void for_each_superdiagonal(std::uint64_t n,
                            const std::function<void(const std::vector<Part>&)>& visit) {
    std::vector<Part> buf;
    if (n == 0) {
        visit(buf);
        return;
    }
    buf.reserve(max_superdiagonal_parts(n));
    superdiagonal_rec(1, n, buf, visit);
}

std::vector<Composition> enumerate_superdiagonal(std::uint64_t n) {
    std::vector<Composition> out;
    for_each_superdiagonal(n, [&](const std::vector<Part>& p) { out.emplace_back(p); });
    return out;
}

std::vector<Composition> enumerate_palindromic_superdiagonal(std::uint64_t n) {
    std::vector<Composition> out;
    for_each_superdiagonal(n, [&](const std::vector<Part>& p) {
        if (parts_palindromic(p)) out.emplace_back(p);
    });
    return out;
}

std::vector<Composition> enumerate_palindromic(std::uint64_t n) {
    std::vector<Composition> out;
    // Left half h, optional middle part m: h + (m) + reverse(h).
    for (std::uint64_t half = 0; 2 * half <= n; ++half) {
        const std::uint64_t middle = n - 2 * half;
        for (auto& h : all_compositions(half)) {
            std::vector<Part> p = h;
            if (middle) p.push_back(static_cast<Part>(middle));
            p.insert(p.end(), h.rbegin(), h.rend());
            out.emplace_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool is_palindromic(const Composition& c) { return parts_palindromic(c.parts()); }

bool is_superdiagonal(const Composition& c) {
    const auto& p = c.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < i + 1) return false;
    }
    return true;
}

Int colored_weight(const Composition& c) {
    Int w = 1;
    for (Part p : c.parts()) w *= p;
    return w;
}

std::vector<std::vector<ColoredPart>> expand_colored_superdiagonal(std::uint64_t n) {
    if (n > 8) throw std::invalid_argument("explicit colourings are limited to n <= 8");
    std::vector<std::vector<ColoredPart>> out;
    for (const auto& c : enumerate_superdiagonal(n)) {
        const auto& parts = c.parts();
        std::vector<ColoredPart> tuple;
        for (Part p : parts) tuple.push_back({p, 1});
        // Odometer over the colours, last position fastest.
        while (true) {
            out.push_back(tuple);
            std::size_t i = tuple.size();
            while (i > 0 && tuple[i - 1].color == tuple[i - 1].value) {
                tuple[i - 1].color = 1;
                --i;
            }
            if (i == 0) break;
            ++tuple[i - 1].color;
        }
    }
    return out;
}

EnumerationReport palindromic_superdiagonal_report(std::uint64_t n) {
    EnumerationReport r;
    r.n = n;
    r.compositions = enumerate_palindromic_superdiagonal(n);
    for (const auto& c : r.compositions) ++r.by_part_count[c.rho()];
    return r;
}

Int brute_s(std::uint64_t n) {
    std::uint64_t count = 0;
    for_each_superdiagonal(n, [&](const std::vector<Part>& p) { count += parts_palindromic(p); });
    return count;
}

Int brute_s_nk(std::uint64_t n, std::uint64_t k) {
    std::uint64_t count = 0;
    for_each_superdiagonal(n, [&](const std::vector<Part>& p) {
        count += p.size() == k && parts_palindromic(p);
    });
    return count;
}

Int brute_c(std::uint64_t n) {
    Int total = 0;
    for_each_superdiagonal(n, [&](const std::vector<Part>& p) {
        Int w = 1;
        for (Part x : p) w *= x;
        total += w;
    });
    return total;
}

} // namespace superdiag
