#pragma once

// Qubit parameter sweeps behind the fig1/fig2 subcommands.

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "orthotime/config.hpp"

namespace orthotime::cli {

struct SweepRow {
    double abscissa = 0.0;  // r for fig1, gamma for fig2
    double omega_a = 0.0;
    double omega_b = 0.0;
    double gamma = 0.0;
    std::optional<double> t_perp_raw;
    std::optional<double> t_perp_norm;  // t (wa + wb) / (4 pi)
    std::optional<double> t_lb_aa;
    double t_lb_span = 0.0;
    std::optional<double> t_margolus;
    double residual = 0.0;  // bracket modulus of the two-component optimal state

    bool exists() const noexcept { return t_perp_raw.has_value(); }
};

/// One point of a sweep: closed-form t_perp, the optimal state built from the
/// product's eigenframe, and the three lower bounds.
SweepRow qubit_sweep_point(double abscissa, double omega_a, double omega_b, double gamma);

struct Fig1Params {
    double r_min = 0.05;
    double r_max = 0.95;
    std::size_t points = 50;
    double omega_sum = 4.0;
};

struct Fig2Params {
    double gamma_min = 0.0;
    double gamma_max = 3.141592653589793;
    std::size_t points = 100;
    double omega_ratio = 3.0;
    double omega_sum = 4.0;
};

/// Aligned fields (gamma = 0), relative frequency difference r swept.
std::vector<SweepRow> fig1_rows(const Fig1Params& p, Exec exec = Exec::parallel);

/// Fixed frequency ratio, alignment angle swept.
std::vector<SweepRow> fig2_rows(const Fig2Params& p, Exec exec = Exec::parallel);

/// Header: abscissa,t_perp_raw,t_perp_norm,t_lb_aa,t_lb_span,t_margolus,exists
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace orthotime::cli
