#include "orthotime/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "orthotime/bounds.hpp"
#include "orthotime/discriminate.hpp"
#include "orthotime/qubit.hpp"
#include "orthotime/theorem.hpp"

namespace orthotime::cli {

namespace {

using nlohmann::json;

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

void apply_overrides(ProblemSpec& spec, const ProblemArgs& args) {
    if (args.t_max) spec.t_max = args.t_max;
    if (args.scan_step) spec.scan_step = args.scan_step;
    if (args.tol) spec.refine_tol = args.tol;
    if (spec.t_max && !(*spec.t_max > 0.0)) throw InputError("--t-max", "must be positive");
    if (spec.scan_step && !(*spec.scan_step > 0.0)) throw InputError("--scan-step", "must be positive");
    if (spec.refine_tol && !(*spec.refine_tol > 0.0)) throw InputError("--tol", "must be positive");
}

SearchOptions search_options(const ProblemSpec& spec) {
    SearchOptions opts;
    opts.t_max = spec.t_max;
    opts.scan_step = spec.scan_step;
    opts.refine_tol = spec.refine_tol;
    opts.alpha = spec.alpha;
    return opts;
}

std::optional<double> qubit_e_bar(const ProblemSpec& spec) {
    if (!spec.qubit) return std::nullopt;
    return mean_energy_bar(spec.qubit->omega_a, spec.qubit->omega_b, std::cos(spec.qubit->gamma));
}

json qubit_section(const QubitShorthand& q) {
    json j;
    j["gamma"] = q.gamma;
    const std::optional<double> horizon = qubit_horizon(q.gamma, q.omega_a, q.omega_b);
    j["horizon"] = optional_number(horizon);
    j["t_perp_closed_form"] = optional_number(qubit_t_perp(q.gamma, q.omega_a, q.omega_b));
    const double cg = std::cos(q.gamma);
    const double e_bar = mean_energy_bar(q.omega_a, q.omega_b, cg);
    j["mean_energy_bar"] = e_bar;
    j["t_margolus"] = e_bar > 0.0 ? json(margolus_bound(e_bar)) : json(nullptr);
    try {
        j["short_time_estimate"] = short_time_estimate(q.omega_a, q.omega_b, cg);
    } catch (const Error&) {
        j["short_time_estimate"] = nullptr;
    }
    return j;
}

json state_bounds(const ProblemSpec& spec, const ComplexVector& psi, std::optional<double> t) {
    const BoundsReport r = bounds_report(spec.ha, spec.hb, psi, qubit_e_bar(spec));
    json b;
    b["delta_Ea"] = r.delta_Ea;
    b["delta_Eb"] = r.delta_Eb;
    b["span_a"] = r.span_a;
    b["span_b"] = r.span_b;
    b["t_lb_aa"] = optional_number(r.t_lb_aa);
    b["t_lb_span"] = r.t_lb_span;
    b["t_margolus"] = optional_number(r.t_margolus);
    if (t) {
        b["geodesic_length_at_t_perp"] = r.geodesic_length_at(*t);
        const SegmentAngles angles = brody_segment_angles(spec.ha, spec.hb, psi, *t);
        b["brody_alpha_a"] = angles.alpha_a;
        b["brody_alpha_b"] = angles.alpha_b;
    }
    return b;
}

json stateless_bounds(const ProblemSpec& spec) {
    json b;
    b["span_a"] = half_span(spec.ha);
    b["span_b"] = half_span(spec.hb);
    try {
        b["t_lb_span"] = span_lower_bound(spec.ha, spec.hb);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BothFlat) throw;
        b["t_lb_span"] = nullptr;
    }
    const std::optional<double> e_bar = qubit_e_bar(spec);
    b["t_margolus"] = e_bar && *e_bar > 0.0 ? json(margolus_bound(*e_bar)) : json(nullptr);
    return b;
}

// Runs `body` with the selected sink and maps failures onto exit codes.
int run_with_output(const std::optional<std::string>& output, std::ostream& out, std::ostream& err,
                    const std::function<int(std::ostream&)>& body) {
    try {
        if (output) {
            std::ofstream file(*output);
            if (!file) {
                err << "error: field '--output': cannot open " << *output << '\n';
                return kExitError;
            }
            return body(file);
        }
        return body(out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace

json discriminate_report(const ProblemSpec& spec, bool& found) {
    const SearchOutcome outcome = find_t_perp(spec.ha, spec.hb, search_options(spec));
    found = outcome.found();

    json rep;
    rep["dim"] = spec.dim;
    rep["horizon"] = outcome.t_max;
    rep["scan_step"] = outcome.scan_step;
    rep["samples"] = outcome.samples;
    rep["g_infimum"] = outcome.g_infimum;
    rep["lipschitz_flags"] = outcome.lipschitz_flags;
    if (outcome.result) {
        const DiscriminationResult& r = *outcome.result;
        rep["status"] = "orthogonal";
        rep["t_perp"] = r.t_perp;
        rep["pair"] = json::array({r.pair.first, r.pair.second});
        rep["alpha"] = r.alpha;
        rep["state"] = vector_to_json(r.state);
        rep["residual"] = r.residual;
        rep["tangent"] = r.tangent;
        rep["bounds"] = state_bounds(spec, r.state, r.t_perp);
    } else {
        rep["status"] = "no orthogonality within horizon";
        rep["t_perp"] = nullptr;
        rep["bounds"] = stateless_bounds(spec);
    }
    if (spec.qubit) rep["qubit"] = qubit_section(*spec.qubit);
    return rep;
}

json bounds_json(const ProblemSpec& spec) {
    json rep;
    if (spec.psi) {
        rep = state_bounds(spec, *spec.psi, std::nullopt);
        rep["state_source"] = "input";
        return rep;
    }
    const SearchOutcome outcome = find_t_perp(spec.ha, spec.hb, search_options(spec));
    if (outcome.result) {
        rep = state_bounds(spec, outcome.result->state, outcome.result->t_perp);
        rep["state_source"] = "optimal";
        rep["t_perp"] = outcome.result->t_perp;
    } else {
        rep = stateless_bounds(spec);
        rep["state_source"] = nullptr;
    }
    return rep;
}

std::string verify_theorem_report(const VerifyArgs& args, bool& passed) {
    if (args.trials < 1) throw InputError("--trials", "must be at least 1");
    if (args.dim_max < 1) throw InputError("--dim-max", "must be at least 1");
    const TheoremSummary sum = run_theorem_trials(args.trials, args.dim_max, args.seed);
    passed = sum.violations == 0;

    std::ostringstream s;
    s << std::setprecision(12);
    s << "verify-theorem: |ln(UV)|_F <= |ln U|_F + |ln V|_F\n";
    s << "trials: " << sum.trials << "\n";
    s << "dim_max: " << args.dim_max << "\n";
    s << "seed: " << args.seed << "\n";
    s << "evaluated: " << (sum.trials - sum.skipped) << "\n";
    s << "skipped: " << sum.skipped << "\n";
    s << "skip_rate: " << sum.skip_rate() << "\n";
    s << "violations: " << sum.violations << " (slack " << sum.violation_slack << ")\n";
    s << "worst_margin: " << sum.worst_margin << "\n";
    s << "result: " << (passed ? "PASS" : "FAIL") << "\n";
    return s.str();
}

int cmd_discriminate(const ProblemArgs& args, std::ostream& out, std::ostream& err) {
    return run_with_output(args.output, out, err, [&](std::ostream& sink) {
        ProblemSpec spec = load_problem(args.input);
        apply_overrides(spec, args);
        bool found = false;
        sink << discriminate_report(spec, found).dump(2) << '\n';
        if (!found) err << "no orthogonality within horizon\n";
        return found ? kExitOk : kExitNoOrthogonality;
    });
}

int cmd_bounds(const ProblemArgs& args, std::ostream& out, std::ostream& err) {
    return run_with_output(args.output, out, err, [&](std::ostream& sink) {
        ProblemSpec spec = load_problem(args.input);
        apply_overrides(spec, args);
        sink << bounds_json(spec).dump(2) << '\n';
        return kExitOk;
    });
}

int cmd_fig1(const Fig1Params& params, const std::optional<std::string>& output, std::ostream& out,
             std::ostream& err) {
    return run_with_output(output, out, err, [&](std::ostream& sink) {
        write_csv(sink, fig1_rows(params));
        return kExitOk;
    });
}

int cmd_fig2(const Fig2Params& params, const std::optional<std::string>& output, std::ostream& out,
             std::ostream& err) {
    return run_with_output(output, out, err, [&](std::ostream& sink) {
        write_csv(sink, fig2_rows(params));
        return kExitOk;
    });
}

int cmd_verify_theorem(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    return run_with_output(args.output, out, err, [&](std::ostream& sink) {
        bool passed = false;
        sink << verify_theorem_report(args, passed);
        return passed ? kExitOk : kExitError;
    });
}

}  // namespace orthotime::cli
