#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "schubres/resolution.hpp"
#include "schubres/weyl.hpp"

namespace schubres::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kMembership = 3,
    kConsistency = 4,
};

/// Runs one command line (argv[0] is the program name). Rendered output goes
/// to `out` unless --out is given; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "3,4,6,7". Throws std::invalid_argument on anything else.
std::vector<int> parse_sequence(const std::string& text);

/// Parses "4" or "2..5" into an inclusive range.
std::pair<int, int> parse_range(const std::string& text);

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal
/// strings.
nlohmann::json big_to_json(const BigInt& v);

nlohmann::json resolution_json(const ResolutionReport& report);
std::string resolution_text(const ResolutionReport& report);

/// Conventional Betti grid: column i, row d - i, "." for zero.
std::string betti_grid(const BettiTable& betti);

struct SweepRow {
    GrassPerm w;
    int r = 0;
    int regularity = 0;
    int conjectured = 0;
    bool validated = false;
    std::string error;

    bool agrees() const noexcept { return error.empty() && regularity == conjectured; }
};

/// Resolves every w in W_r for the given (n, m) grid on `threads` workers.
/// Rows come back in enumeration order regardless of scheduling.
std::vector<SweepRow> sweep(std::pair<int, int> n_range, std::pair<int, int> m_range, unsigned threads,
                            bool normalize = true);

/// Worker count from SCHUBRES_THREADS, else hardware concurrency.
unsigned default_threads();

}  // namespace schubres::cli
