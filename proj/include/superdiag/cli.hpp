#ifndef SUPERDIAG_CLI_HPP
#define SUPERDIAG_CLI_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "superdiag/verify.hpp"

namespace superdiag::cli {

enum class OutputFormat { text, json, csv };

enum class Family { superdiagonal, palindromic_superdiagonal, palindromic };

/// Requested enumeration is past the hard limit and --force was not given.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownSequence : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnknownTable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kSuperdiagonalLimit = 60;
inline constexpr std::uint64_t kPalindromicLimit = 24;

enum ExitCode : int { kSuccess = 0, kMismatch = 1, kUsage = 2 };

OutputFormat parse_format(std::string_view s);
Family parse_family(std::string_view s);

void cmd_enumerate(std::uint64_t n, Family family, OutputFormat format, bool force, std::ostream& out);
void cmd_sequence(std::string_view name, std::int64_t n_max, OutputFormat format, std::ostream& out);
void cmd_table(std::string_view name, std::int64_t rows, std::int64_t cols, OutputFormat format,
               std::ostream& out);
/// Returns kSuccess iff every report passed, kMismatch otherwise.
int cmd_verify(Profile profile, OutputFormat format, std::ostream& out);

/// Full command line, args[0] being the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace superdiag::cli

#endif // SUPERDIAG_CLI_HPP
