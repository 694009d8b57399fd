#pragma once

// Subcommand bodies. Each writes its report to `out` (or to the --output
// file when given), diagnostics to `err`, and returns the process exit code:
// 0 success, 1 input or argument error, 2 no orthogonality within horizon.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "orthotime/cli/problem.hpp"
#include "orthotime/cli/sweeps.hpp"

namespace orthotime::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNoOrthogonality = 2;

struct ProblemArgs {
    std::string input;
    std::optional<std::string> output;
    std::optional<double> t_max;
    std::optional<double> scan_step;
    std::optional<double> tol;
};

struct VerifyArgs {
    std::size_t trials = 1000;
    long dim_max = 6;
    std::uint64_t seed = 20240601;
    std::optional<std::string> output;
};

/// Structured discriminate report for an already parsed problem.
nlohmann::json discriminate_report(const ProblemSpec& spec, bool& found);

/// Structured bounds report for an already parsed problem.
nlohmann::json bounds_json(const ProblemSpec& spec);

std::string verify_theorem_report(const VerifyArgs& args, bool& passed);

int cmd_discriminate(const ProblemArgs& args, std::ostream& out, std::ostream& err);
int cmd_bounds(const ProblemArgs& args, std::ostream& out, std::ostream& err);
int cmd_fig1(const Fig1Params& params, const std::optional<std::string>& output, std::ostream& out,
             std::ostream& err);
int cmd_fig2(const Fig2Params& params, const std::optional<std::string>& output, std::ostream& out,
             std::ostream& err);
int cmd_verify_theorem(const VerifyArgs& args, std::ostream& out, std::ostream& err);

}  // namespace orthotime::cli
