#ifndef ORLICZ_CLI_RUN_HPP
#define ORLICZ_CLI_RUN_HPP

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "orlicz/young.hpp"

namespace orlicz::cli {

enum class Command { Norm, Sweep, Classical, Bounds, CheckYoung, Compare };
enum class Format { Csv, Json };

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumeric = 2;

struct RunConfig {
    Command command = Command::Norm;
    double p = 1.0;
    double q = 1.0;
    double shift = kE0;
    std::string q_grid = "1:100000:6:log";
    std::string p_grid = "1:1024:11:log";
    double eps = 0.1;
    double tol = 1e-10;
    unsigned threads = 1;

    // Exactly one of these for commands that need a function.
    std::optional<std::string> preset;
    std::optional<std::filesystem::path> input;

    std::optional<std::filesystem::path> output;  // stdout when unset
    Format format = Format::Csv;

    // compare: the right-hand Young function. Defaults to the same p, q
    // with the other canonical shift.
    std::optional<double> against_p;
    std::optional<double> against_q;
    std::optional<double> against_shift;
    std::optional<std::string> grid;  // check-young / compare; default 64-point grid
};

/// Executes one command and writes its report to config.output (or `out`).
/// Returns kExitOk, kExitValidation for bad input, or kExitNumeric for solver
/// failures; failures print a one-line diagnostic to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it. Parse errors exit with
/// kExitValidation.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orlicz::cli

#endif  // ORLICZ_CLI_RUN_HPP
