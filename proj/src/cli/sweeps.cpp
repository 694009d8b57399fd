#include "orthotime/cli/sweeps.hpp"

#include <cmath>
#include <exception>
#include <iomanip>
#include <sstream>

#include "orthotime/bounds.hpp"
#include "orthotime/discriminate.hpp"
#include "orthotime/errors.hpp"
#include "orthotime/qubit.hpp"

namespace orthotime::cli {

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> xs(n);
    for (std::size_t k = 0; k < n; ++k) {
        xs[k] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    }
    if (n > 1) xs.back() = hi;
    return xs;
}

template <class PointFn>
std::vector<SweepRow> evaluate(const std::vector<double>& xs, PointFn point, Exec exec) {
    std::vector<SweepRow> rows(xs.size());
    const auto n = static_cast<std::ptrdiff_t>(xs.size());
    if (exec == Exec::serial) {
        for (std::ptrdiff_t k = 0; k < n; ++k) rows[static_cast<std::size_t>(k)] = point(xs[static_cast<std::size_t>(k)]);
        return rows;
    }
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        try {
            rows[static_cast<std::size_t>(k)] = point(xs[static_cast<std::size_t>(k)]);
        } catch (...) {
#pragma omp critical(orthotime_sweep_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::string cell(const std::optional<double>& v) {
    if (!v) return "NA";
    std::ostringstream s;
    s << std::setprecision(12) << *v;
    return s.str();
}

}  // namespace

SweepRow qubit_sweep_point(double abscissa, double omega_a, double omega_b, double gamma) {
    SweepRow row;
    row.abscissa = abscissa;
    row.omega_a = omega_a;
    row.omega_b = omega_b;
    row.gamma = gamma;

    const QubitPair pair = aligned_pair(omega_a, omega_b, gamma);
    const HermitianOperator ha = pair.ha();
    const HermitianOperator hb = pair.hb();
    row.t_lb_span = span_lower_bound(ha, hb);
    const double e_bar = mean_energy_bar(omega_a, omega_b, pair.cos_gamma());
    if (e_bar > 0.0) row.t_margolus = margolus_bound(e_bar);

    row.t_perp_raw = qubit_t_perp(gamma, omega_a, omega_b);
    if (!row.t_perp_raw) return row;
    const double t = *row.t_perp_raw;
    row.t_perp_norm = t * (omega_a + omega_b) / (4.0 * kPi);

    const PhaseSpectrum spec = phase_spectrum(ha, hb, t);
    const ComplexVector psi =
        orthogonal_state(spec.frame, max_circular_gap(spec.phases).pair, 0.0);
    row.residual = std::abs(bracket(psi, ha, hb, t));
    row.t_lb_aa = aa_lower_bound(ha, hb, psi);
    return row;
}

std::vector<SweepRow> fig1_rows(const Fig1Params& p, Exec exec) {
    if (!(p.r_min > 0.0 && p.r_min <= p.r_max && p.r_max < 1.0) || p.points < 1) {
        throw Error(ErrorCode::BadRange, "need 0 < r_min <= r_max < 1 and points >= 1");
    }
    if (!(p.omega_sum > 0.0)) throw Error(ErrorCode::BadRange, "omega_sum must be positive");
    return evaluate(
        linspace(p.r_min, p.r_max, p.points),
        [&](double r) {
            return qubit_sweep_point(r, 0.5 * p.omega_sum * (1.0 + r), 0.5 * p.omega_sum * (1.0 - r), 0.0);
        },
        exec);
}

std::vector<SweepRow> fig2_rows(const Fig2Params& p, Exec exec) {
    if (!(p.gamma_min >= 0.0 && p.gamma_min <= p.gamma_max && p.gamma_max <= kPi + 1e-12) ||
        p.points < 1) {
        throw Error(ErrorCode::BadRange, "need 0 <= gamma_min <= gamma_max <= pi and points >= 1");
    }
    if (!(p.omega_ratio > 0.0) || !(p.omega_sum > 0.0)) {
        throw Error(ErrorCode::BadRange, "omega_ratio and omega_sum must be positive");
    }
    const double omega_b = p.omega_sum / (1.0 + p.omega_ratio);
    const double omega_a = p.omega_sum - omega_b;
    return evaluate(
        linspace(p.gamma_min, p.gamma_max, p.points),
        [&](double gamma) { return qubit_sweep_point(gamma, omega_a, omega_b, gamma); }, exec);
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "abscissa,t_perp_raw,t_perp_norm,t_lb_aa,t_lb_span,t_margolus,exists\n";
    for (const SweepRow& r : rows) {
        out << cell(r.abscissa) << ',' << cell(r.t_perp_raw) << ',' << cell(r.t_perp_norm) << ','
            << cell(r.t_lb_aa) << ',' << cell(r.t_lb_span) << ',' << cell(r.t_margolus) << ','
            << (r.exists() ? 1 : 0) << '\n';
    }
}

}  // namespace orthotime::cli
