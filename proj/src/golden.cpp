#include "superdiag/golden.hpp"

#include <sstream>
#include <string>

namespace superdiag::golden {

// Table of s(n, k): k = 1..5 down, n = 1..26 across.
const std::string_view kTable1Csv =
    "k/n,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26\n"
    "1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1\n"
    "2,0,0,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,1\n"
    "3,0,0,0,0,0,0,0,1,1,2,2,3,3,4,4,5,5,6,6,7,7,8,8,9,9,10\n"
    "4,0,0,0,0,0,0,0,0,0,0,0,0,0,1,0,2,0,3,0,4,0,5,0,6,0,7\n"
    "5,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1,3,3,6,6\n";

const std::vector<std::vector<std::int64_t>>& table1() {
    static const auto grid = [] {
        std::vector<std::vector<std::int64_t>> rows;
        std::istringstream in{std::string(kTable1Csv)};
        std::string line;
        std::getline(in, line); // header
        while (std::getline(in, line)) {
            std::istringstream fields(line);
            std::string cell;
            std::getline(fields, cell, ','); // k label
            auto& row = rows.emplace_back();
            while (std::getline(fields, cell, ',')) row.push_back(std::stoll(cell));
        }
        return rows;
    }();
    return grid;
}

// Sequence s(n), 0 <= n <= 28.
const std::vector<std::int64_t> kSTotal = {1, 1, 1, 1,  2, 1,  2, 1,  3,  2,  4,  3,  5,  4, 7,
                                           5, 9, 6, 11, 7, 13, 9, 16, 12, 20, 16, 25, 21, 31};

// Sequence c(n), 0 <= n <= 10.
const std::vector<std::int64_t> kColored = {1, 1, 2, 5, 11, 21, 42, 86, 171, 322, 596};

// Q_0..Q_6, constant term first.
const std::vector<std::vector<std::int64_t>> kQPolynomials = {
    {1},
    {1},
    {2, -1},
    {6, -7, 2},
    {24, -46, 29, -6},
    {120, -326, 329, -146, 24},
    {720, -2556, 3604, -2521, 874, -120},
};

// Expansion of S(x, y) through x^12; each row lists y^0..y^3.
const std::vector<std::vector<std::int64_t>> kSExpansion = {
    {1, 0, 0, 0}, // 1
    {0, 1, 0, 0}, // x y
    {0, 1, 0, 0}, // x^2 y
    {0, 1, 0, 0}, // x^3 y
    {0, 1, 1, 0}, // x^4 (y^2 + y)
    {0, 1, 0, 0}, // x^5 y
    {0, 1, 1, 0}, // x^6 (y^2 + y)
    {0, 1, 0, 0}, // x^7 y
    {0, 1, 1, 1}, // x^8 (y^3 + y^2 + y)
    {0, 1, 0, 1}, // x^9 (y^3 + y)
    {0, 1, 1, 2}, // x^10 (2y^3 + y^2 + y)
    {0, 1, 0, 2}, // x^11 (2y^3 + y)
    {0, 1, 1, 3}, // x^12 (3y^3 + y^2 + y)
};

} // namespace superdiag::golden
