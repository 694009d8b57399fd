// orthotime: orthogonality times for pairs of Hamiltonians.

#include <iostream>

#include <CLI11.hpp>

#include "orthotime/cli/commands.hpp"

int main(int argc, char** argv) {
    using namespace orthotime::cli;

    CLI::App app{"Orthogonality times, lower bounds and log-norm checks for pairs of Hamiltonians"};
    app.require_subcommand(1);

    ProblemArgs disc_args;
    auto* disc = app.add_subcommand("discriminate", "First orthogonality time and optimal state");
    disc->add_option("--input", disc_args.input, "Problem JSON")->required()->check(CLI::ExistingFile);
    disc->add_option("--output", disc_args.output, "Report path (default stdout)");
    disc->add_option("--t-max", disc_args.t_max, "Search horizon");
    disc->add_option("--scan-step", disc_args.scan_step, "Grid spacing of the scan");
    disc->add_option("--tol", disc_args.tol, "Time tolerance of the refinement");

    ProblemArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "Lower bounds on the orthogonality time");
    bounds->add_option("--input", bounds_args.input, "Problem JSON")->required()->check(CLI::ExistingFile);
    bounds->add_option("--output", bounds_args.output, "Report path (default stdout)");
    bounds->add_option("--t-max", bounds_args.t_max, "Search horizon");
    bounds->add_option("--scan-step", bounds_args.scan_step, "Grid spacing of the scan");
    bounds->add_option("--tol", bounds_args.tol, "Time tolerance of the refinement");

    Fig1Params fig1_params;
    std::optional<std::string> fig1_output;
    auto* fig1 = app.add_subcommand("fig1", "Aligned qubit fields: t_perp against r (CSV)");
    fig1->add_option("--r-min", fig1_params.r_min, "Smallest relative frequency difference");
    fig1->add_option("--r-max", fig1_params.r_max, "Largest relative frequency difference");
    fig1->add_option("--points,-n", fig1_params.points, "Number of sweep points");
    fig1->add_option("--omega-sum", fig1_params.omega_sum, "omega_a + omega_b");
    fig1->add_option("--output", fig1_output, "CSV path (default stdout)");

    Fig2Params fig2_params;
    std::optional<std::string> fig2_output;
    auto* fig2 = app.add_subcommand("fig2", "Fixed frequency ratio: t_perp against gamma (CSV)");
    fig2->add_option("--gamma-min", fig2_params.gamma_min, "Smallest alignment angle");
    fig2->add_option("--gamma-max", fig2_params.gamma_max, "Largest alignment angle");
    fig2->add_option("--points,-n", fig2_params.points, "Number of sweep points");
    fig2->add_option("--omega-ratio", fig2_params.omega_ratio, "omega_a / omega_b");
    fig2->add_option("--omega-sum", fig2_params.omega_sum, "omega_a + omega_b");
    fig2->add_option("--output", fig2_output, "CSV path (default stdout)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify-theorem", "Randomised log-norm subadditivity check");
    verify->add_option("--trials", verify_args.trials, "Number of unitary pairs");
    verify->add_option("--dim-max", verify_args.dim_max, "Largest dimension drawn");
    verify->add_option("--seed", verify_args.seed, "Master seed");
    verify->add_option("--output", verify_args.output, "Report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    if (*disc) return cmd_discriminate(disc_args, std::cout, std::cerr);
    if (*bounds) return cmd_bounds(bounds_args, std::cout, std::cerr);
    if (*fig1) return cmd_fig1(fig1_params, fig1_output, std::cout, std::cerr);
    if (*fig2) return cmd_fig2(fig2_params, fig2_output, std::cout, std::cerr);
    if (*verify) return cmd_verify_theorem(verify_args, std::cout, std::cerr);
    return kExitError;
}
