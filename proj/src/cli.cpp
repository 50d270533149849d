#include "superdiag/cli.hpp"

#include <algorithm>
#include <functional>

#include <CLI11.hpp>

#include "superdiag/compositions.hpp"
#include "superdiag/formulas.hpp"

namespace superdiag::cli {

namespace {

void write_parts(std::ostream& out, const std::vector<Part>& parts, char sep) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << sep;
        out << parts[i];
    }
}

// Streams one family through `emit`, in enumeration order.
void for_each_in_family(std::uint64_t n, Family family,
                        const std::function<void(const std::vector<Part>&)>& emit) {
    switch (family) {
    case Family::superdiagonal:
        for_each_superdiagonal(n, emit);
        break;
    case Family::palindromic_superdiagonal:
        for_each_superdiagonal(n, [&](const std::vector<Part>& p) {
            if (std::equal(p.begin(), p.end(), p.rbegin())) emit(p);
        });
        break;
    case Family::palindromic:
        for (const auto& c : enumerate_palindromic(n)) emit(c.parts());
        break;
    }
}

struct Grid {
    std::string corner;
    std::vector<std::int64_t> row_index;
    std::vector<std::int64_t> col_index;
    std::vector<std::vector<Int>> values;
};

void render_grid(const Grid& g, std::string_view name, OutputFormat format, std::ostream& out) {
    switch (format) {
    case OutputFormat::csv: {
        out << g.corner;
        for (auto c : g.col_index) out << ',' << c;
        out << '\n';
        for (std::size_t r = 0; r < g.row_index.size(); ++r) {
            out << g.row_index[r];
            for (const auto& v : g.values[r]) out << ',' << v;
            out << '\n';
        }
        break;
    }
    case OutputFormat::json: {
        nlohmann::json values = nlohmann::json::array();
        for (const auto& row : g.values) {
            nlohmann::json jr = nlohmann::json::array();
            for (const auto& v : row) jr.push_back(json_integer(v));
            values.push_back(std::move(jr));
        }
        const nlohmann::json doc = {{"name", name},
                                    {"corner", g.corner},
                                    {"rows", g.row_index},
                                    {"cols", g.col_index},
                                    {"values", std::move(values)}};
        out << doc.dump() << '\n';
        break;
    }
    case OutputFormat::text: {
        // Right-aligned columns; column 0 holds the row labels.
        std::vector<std::vector<std::string>> cells;
        std::vector<std::string> header{g.corner};
        for (auto c : g.col_index) header.push_back(std::to_string(c));
        const std::size_t ncols = header.size();
        cells.push_back(std::move(header));
        for (std::size_t r = 0; r < g.row_index.size(); ++r) {
            auto& line = cells.emplace_back();
            line.push_back(std::to_string(g.row_index[r]));
            for (const auto& v : g.values[r]) line.push_back(v.str());
        }
        std::vector<std::size_t> width(ncols, 0);
        for (const auto& line : cells)
            for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
        for (const auto& line : cells) {
            for (std::size_t i = 0; i < line.size(); ++i) {
                if (i) out << ' ';
                out << std::string(width[i] - line[i].size(), ' ') << line[i];
            }
            out << '\n';
        }
        break;
    }
    }
}

} // namespace

OutputFormat parse_format(std::string_view s) {
    if (s == "text") return OutputFormat::text;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

Family parse_family(std::string_view s) {
    if (s == "superdiagonal") return Family::superdiagonal;
    if (s == "palindromic-superdiagonal") return Family::palindromic_superdiagonal;
    if (s == "palindromic") return Family::palindromic;
    throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

void cmd_enumerate(std::uint64_t n, Family family, OutputFormat format, bool force, std::ostream& out) {
    const bool pal = family == Family::palindromic;
    const std::uint64_t limit = pal ? kPalindromicLimit : kSuperdiagonalLimit;
    if (n > limit && !force) {
        throw LimitExceeded("n=" + std::to_string(n) + " exceeds the enumeration limit of " +
                            std::to_string(limit) + " for this family; pass --force to override");
    }

    std::uint64_t count = 0;
    switch (format) {
    case OutputFormat::text:
        for_each_in_family(n, family, [&](const std::vector<Part>& p) {
            if (p.empty())
                out << "()";
            else
                write_parts(out, p, ' ');
            out << '\n';
        });
        break;
    case OutputFormat::csv: {
        const std::size_t max_len = pal ? n : max_superdiagonal_parts(n);
        out << "rho";
        for (std::size_t i = 1; i <= max_len; ++i) out << ',' << i;
        out << '\n';
        for_each_in_family(n, family, [&](const std::vector<Part>& p) {
            out << p.size();
            for (Part x : p) out << ',' << x;
            out << '\n';
        });
        break;
    }
    case OutputFormat::json:
        // Same bytes as nlohmann's compact dump, streamed.
        out << "{\"compositions\":[";
        for_each_in_family(n, family, [&](const std::vector<Part>& p) {
            if (count++) out << ',';
            out << '[';
            write_parts(out, p, ',');
            out << ']';
        });
        out << "],\"count\":" << count << ",\"n\":" << n << "}\n";
        break;
    }
}

void cmd_sequence(std::string_view name, std::int64_t n_max, OutputFormat format, std::ostream& out) {
    if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
    const auto N = static_cast<std::size_t>(n_max);
    std::vector<Int> values;
    if (name == "s") {
        values = s_total_series(N).coeffs();
    } else if (name == "c") {
        values = series_C(N).coeffs();
    } else if (name == "superdiagonal-total") {
        for (std::int64_t n = 0; n <= n_max; ++n) values.push_back(superdiagonal_total(n));
    } else if (name == "palindromic-total") {
        for (std::int64_t n = 0; n <= n_max; ++n) values.push_back(palindromic_total(n));
    } else {
        throw UnknownSequence("unknown sequence '" + std::string(name) +
                              "' (expected s, c, superdiagonal-total or palindromic-total)");
    }

    switch (format) {
    case OutputFormat::text:
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
        out << '\n';
        break;
    case OutputFormat::csv:
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << i;
        out << '\n';
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
        out << '\n';
        break;
    case OutputFormat::json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& v : values) arr.push_back(json_integer(v));
        out << nlohmann::json{{"name", name}, {"values", std::move(arr)}}.dump() << '\n';
        break;
    }
    }
}

void cmd_table(std::string_view name, std::int64_t rows, std::int64_t cols, OutputFormat format,
               std::ostream& out) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("table dimensions must be positive");
    Grid g;
    if (name == "snk") {
        // k = 1..rows down, n = 1..cols across.
        const BiSeries S = series_S(static_cast<std::size_t>(cols), static_cast<std::size_t>(rows));
        g.corner = "k/n";
        for (std::int64_t k = 1; k <= rows; ++k) g.row_index.push_back(k);
        for (std::int64_t n = 1; n <= cols; ++n) g.col_index.push_back(n);
        for (std::int64_t k = 1; k <= rows; ++k) {
            auto& row = g.values.emplace_back();
            for (std::int64_t n = 1; n <= cols; ++n)
                row.push_back(S.coeff(static_cast<std::size_t>(n), static_cast<std::size_t>(k)));
        }
    } else if (name == "T") {
        const TriangleT t(static_cast<unsigned>(rows));
        g.corner = "m/k";
        for (std::int64_t m = 0; m <= rows; ++m) g.row_index.push_back(m);
        for (std::int64_t k = 0; k <= cols; ++k) g.col_index.push_back(k);
        for (std::int64_t m = 0; m <= rows; ++m) {
            auto& row = g.values.emplace_back();
            for (std::int64_t k = 0; k <= cols; ++k) row.push_back(t.at_or_zero(m, k));
        }
    } else if (name == "stirling") {
        const StirlingTable st(static_cast<unsigned>(rows));
        g.corner = "n/k";
        for (std::int64_t n = 0; n <= rows; ++n) g.row_index.push_back(n);
        for (std::int64_t k = 0; k <= cols; ++k) g.col_index.push_back(k);
        for (std::int64_t n = 0; n <= rows; ++n) {
            auto& row = g.values.emplace_back();
            for (std::int64_t k = 0; k <= cols; ++k)
                row.push_back(st(static_cast<unsigned>(n), static_cast<unsigned>(k)));
        }
    } else {
        throw UnknownTable("unknown table '" + std::string(name) + "' (expected snk, T or stirling)");
    }
    render_grid(g, name, format, out);
}

int cmd_verify(Profile profile, OutputFormat format, std::ostream& out) {
    const auto reports = verify_all(profile);
    switch (format) {
    case OutputFormat::json:
        out << to_json(reports).dump() << '\n';
        break;
    case OutputFormat::csv:
        out << "check_name,passed,mismatches\n";
        for (const auto& r : reports)
            out << r.check_name << ',' << (r.passed ? "true" : "false") << ',' << r.mismatches.size() << '\n';
        break;
    case OutputFormat::text:
        out << to_text(reports);
        break;
    }
    return all_passed(reports) ? kSuccess : kMismatch;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enumerate and cross-verify palindromic and colored superdiagonal compositions",
                 "superdiag"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"text", "json", "csv"};
    std::string format = "text";

    auto* enumerate = app.add_subcommand("enumerate", "List the compositions of n in a family");
    std::uint64_t en = 0;
    std::string family;
    bool force = false;
    enumerate->add_option("n", en, "Weight")->required();
    enumerate->add_option("family", family, "superdiagonal | palindromic-superdiagonal | palindromic")
        ->required()
        ->check(CLI::IsMember({"superdiagonal", "palindromic-superdiagonal", "palindromic"}));
    enumerate->add_option("--format", format)->check(CLI::IsMember(formats));
    enumerate->add_flag("--force", force, "Ignore the enumeration size limits");

    auto* sequence = app.add_subcommand("sequence", "Print a sequence for n = 0..n_max");
    std::string seq_name;
    std::int64_t n_max = 0;
    sequence->add_option("name", seq_name, "s | c | superdiagonal-total | palindromic-total")->required();
    sequence->add_option("n_max", n_max)->required()->check(CLI::NonNegativeNumber);
    sequence->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* table = app.add_subcommand("table", "Print a table of s(n,k), T(m,k) or Stirling numbers");
    std::string table_name;
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    table->add_option("name", table_name, "snk | T | stirling")
        ->required()
        ->check(CLI::IsMember({"snk", "T", "stirling"}));
    table->add_option("rows", rows)->required()->check(CLI::PositiveNumber);
    table->add_option("cols", cols)->required()->check(CLI::PositiveNumber);
    table->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* verify = app.add_subcommand("verify", "Cross-check every formula against brute force");
    std::string profile = "quick";
    verify->add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--format", format)->check(CLI::IsMember(formats));

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        const OutputFormat fmt = parse_format(format);
        if (*enumerate) {
            cmd_enumerate(en, parse_family(family), fmt, force, out);
        } else if (*sequence) {
            cmd_sequence(seq_name, n_max, fmt, out);
        } else if (*table) {
            cmd_table(table_name, rows, cols, fmt, out);
        } else if (*verify) {
            return cmd_verify(parse_profile(profile), fmt, out);
        }
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kSuccess;
}

} // namespace superdiag::cli
