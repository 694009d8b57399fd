#pragma once

// Randomised checks of the Frobenius-norm subadditivity of principal
// logarithms, |ln(UV)|_F <= |ln U|_F + |ln V|_F, of the one-step inequality
// along the path exp(i Z(s)) = exp(iX) exp(isY), and of the claim that the
// anti-aligned partner Hb = -K Ha maximises |Hc| among fixed-norm partners.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "orthotime/config.hpp"
#include "orthotime/linalg.hpp"

namespace orthotime {

/// splitmix64 finaliser of master ^ f(index); stable per-trial seeds.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Haar-distributed unitary: QR of a seeded complex Gaussian matrix with the
/// phases of R's diagonal folded back into Q.
UnitaryMatrix random_unitary(Eigen::Index dim, std::uint64_t seed);

/// Gaussian Hermitian matrix (GUE-style), optionally trace-projected, scaled
/// to the requested Frobenius norm.
HermitianOperator random_hermitian(Eigen::Index dim, std::uint64_t seed, double frobenius_norm,
                                   bool traceless = false);

struct TheoremTrial {
    Eigen::Index dim = 0;
    std::uint64_t seed = 0;
    double lhs = 0.0;     // |ln(UV)|_F
    double rhs = 0.0;     // |ln U|_F + |ln V|_F
    double margin = 0.0;  // rhs - lhs
    bool skipped = false;
    std::string skip_reason;
};

TheoremTrial check_theorem1(const UnitaryMatrix& u, const UnitaryMatrix& v,
                            const Tolerances& tol = kDefaultTolerances);

struct InductionStep {
    double lhs = 0.0;  // |Z(s + ds)|_F
    double rhs = 0.0;  // |Z(s)|_F + ds |Y|_F
    double margin() const noexcept { return rhs - lhs; }
    bool holds(double rel_slack = 1e-8) const noexcept { return margin() >= -rel_slack * (1.0 + rhs); }
};

InductionStep check_induction_step(const HermitianOperator& x, const HermitianOperator& y, double s,
                                   double ds, const Tolerances& tol = kDefaultTolerances);

/// Hermitian Z(s) with exp(i Z(s)) = exp(iX) exp(isY).
HermitianOperator path_log(const HermitianOperator& x, const HermitianOperator& y, double s,
                           const Tolerances& tol = kDefaultTolerances);

struct PathTrace {
    std::vector<double> grid;
    std::vector<double> norms;  // NaN where the path came within cut_guard of the cut
    double min_cut_distance = 0.0;
    bool valid = true;
    std::string reason;
};

PathTrace trace_path(const HermitianOperator& x, const HermitianOperator& y, std::size_t n_grid,
                     const Tolerances& tol = kDefaultTolerances);

struct ConjectureReport {
    double base_norm = 0.0;            // |Ha|_F after trace projection
    double anti_aligned_value = 0.0;   // (1 + K) |Ha|_F
    double anti_aligned_measured = 0.0;
    double aligned_measured = 0.0;     // Hb = +K Ha
    double max_sample = 0.0;
    std::size_t samples = 0;
    std::size_t violations = 0;        // samples above the anti-aligned value + 1e-8
};

/// |Hc(t)|_F = |ln(exp(i Hb t) exp(-i Ha t))|_F / t for random Hb with
/// |Hb|_F = K |Ha|_F.
double hc_norm(const HermitianOperator& ha, const HermitianOperator& hb, double t,
               const Tolerances& tol = kDefaultTolerances);

ConjectureReport conjecture_scan(const HermitianOperator& ha, double k_ratio, double t,
                                 std::size_t n_samples, std::uint64_t seed, bool traceless = true,
                                 const Tolerances& tol = kDefaultTolerances);

struct TheoremSummary {
    std::size_t trials = 0;
    std::size_t skipped = 0;
    std::size_t violations = 0;
    double worst_margin = 0.0;  // smallest margin among evaluated trials
    double violation_slack = 1e-9;

    double skip_rate() const noexcept {
        return trials == 0 ? 0.0 : static_cast<double>(skipped) / static_cast<double>(trials);
    }
};

/// Trial i draws dim in [1, dim_max] and a pair of Haar unitaries from
/// mix_seed(seed, i). Outputs are in trial order for either kernel.
std::vector<TheoremTrial> theorem_trials_serial(std::size_t trials, Eigen::Index dim_max,
                                                std::uint64_t seed, const Tolerances& tol);
std::vector<TheoremTrial> theorem_trials_omp(std::size_t trials, Eigen::Index dim_max,
                                             std::uint64_t seed, const Tolerances& tol);

TheoremSummary summarize(const std::vector<TheoremTrial>& trials, double slack = 1e-9);

TheoremSummary run_theorem_trials(std::size_t trials, Eigen::Index dim_max, std::uint64_t seed,
                                  Exec exec = Exec::parallel,
                                  const Tolerances& tol = kDefaultTolerances);

}  // namespace orthotime
