#include "orthotime/theorem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "orthotime/discriminate.hpp"

namespace orthotime {

namespace {

ComplexMatrix gaussian_matrix(Eigen::Index dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix z(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            z(r, c) = Complex(re, im);
        }
    }
    return z;
}

double min_cut_distance(const RealVector& phases) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < phases.size(); ++k) best = std::min(best, cut_distance(phases(k)));
    return best;
}

double spectral_radius(const HermitianOperator& h) {
    const RealVector e = herm_eig(h).values;
    return std::max(std::abs(e(0)), std::abs(e(e.size() - 1)));
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) noexcept {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

UnitaryMatrix random_unitary(Eigen::Index dim, std::uint64_t seed) {
    if (dim < 1) throw Error(ErrorCode::InvalidArgument, "random_unitary needs dim >= 1");
    std::mt19937_64 rng(seed);
    const ComplexMatrix z = gaussian_matrix(dim, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < dim; ++k) {
        const Complex d = r(k, k);
        const double mag = std::abs(d);
        if (mag > 0.0) q.col(k) *= d / mag;
    }
    return UnitaryMatrix::unchecked(std::move(q));
}

HermitianOperator random_hermitian(Eigen::Index dim, std::uint64_t seed, double frobenius_norm,
                                   bool traceless) {
    if (dim < 1) throw Error(ErrorCode::InvalidArgument, "random_hermitian needs dim >= 1");
    std::mt19937_64 rng(seed);
    const ComplexMatrix z = gaussian_matrix(dim, rng);
    ComplexMatrix h = 0.5 * (z + z.adjoint());
    if (traceless) {
        const Complex mean = h.trace() / static_cast<double>(dim);
        h.diagonal().array() -= mean;
    }
    const double n = h.norm();
    if (n > 0.0) h *= frobenius_norm / n;
    return HermitianOperator(h);
}

TheoremTrial check_theorem1(const UnitaryMatrix& u, const UnitaryMatrix& v, const Tolerances& tol) {
    if (u.dim() != v.dim()) throw Error(ErrorCode::DimensionMismatch, "check_theorem1");
    TheoremTrial trial;
    trial.dim = u.dim();
    const UnitaryMatrix uv = u * v;
    const double guard = std::min({min_cut_distance(unitary_eig(u).values),
                                   min_cut_distance(unitary_eig(v).values),
                                   min_cut_distance(unitary_eig(uv).values)});
    if (guard <= tol.cut_guard) {
        trial.skipped = true;
        trial.skip_reason = "CutProximity";
        return trial;
    }
    trial.lhs = frobenius(principal_log_u(uv, tol).matrix());
    trial.rhs = frobenius(principal_log_u(u, tol).matrix()) + frobenius(principal_log_u(v, tol).matrix());
    trial.margin = trial.rhs - trial.lhs;
    return trial;
}

HermitianOperator path_log(const HermitianOperator& x, const HermitianOperator& y, double s,
                           const Tolerances& tol) {
    if (x.dim() != y.dim()) throw Error(ErrorCode::DimensionMismatch, "path_log");
    return principal_log_u(expm_i(x, -1.0) * expm_i(y, -s), tol);
}

InductionStep check_induction_step(const HermitianOperator& x, const HermitianOperator& y, double s,
                                   double ds, const Tolerances& tol) {
    if (!(s >= 0.0 && ds >= 0.0 && s + ds <= 1.0)) {
        throw Error(ErrorCode::BadRange, "need 0 <= s <= s + ds <= 1");
    }
    if (spectral_radius(x) > kPi || spectral_radius(y) > kPi) {
        throw Error(ErrorCode::InvalidArgument, "X and Y need spectra inside (-pi, pi]");
    }
    InductionStep step;
    step.lhs = frobenius(path_log(x, y, s + ds, tol).matrix());
    step.rhs = frobenius(path_log(x, y, s, tol).matrix()) + ds * frobenius(y.matrix());
    return step;
}

PathTrace trace_path(const HermitianOperator& x, const HermitianOperator& y, std::size_t n_grid,
                     const Tolerances& tol) {
    if (n_grid < 2) throw Error(ErrorCode::InvalidArgument, "trace_path needs at least two points");
    if (x.dim() != y.dim()) throw Error(ErrorCode::DimensionMismatch, "trace_path");
    PathTrace trace;
    trace.min_cut_distance = std::numeric_limits<double>::infinity();
    const UnitaryMatrix ex = expm_i(x, -1.0);
    for (std::size_t k = 0; k < n_grid; ++k) {
        const double s = static_cast<double>(k) / static_cast<double>(n_grid - 1);
        const UnitaryMatrix u = ex * expm_i(y, -s);
        const double dist = min_cut_distance(unitary_eig(u).values);
        trace.grid.push_back(s);
        trace.min_cut_distance = std::min(trace.min_cut_distance, dist);
        if (dist <= tol.cut_guard) {
            trace.valid = false;
            if (trace.reason.empty()) trace.reason = "CutProximity at s = " + std::to_string(s);
            trace.norms.push_back(std::numeric_limits<double>::quiet_NaN());
        } else {
            trace.norms.push_back(frobenius(principal_log_u(u, tol).matrix()));
        }
    }
    return trace;
}

double hc_norm(const HermitianOperator& ha, const HermitianOperator& hb, double t,
               const Tolerances& tol) {
    if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "t must be positive");
    return frobenius(principal_log_u(product_unitary(ha, hb, t), tol).matrix()) / t;
}

ConjectureReport conjecture_scan(const HermitianOperator& ha, double k_ratio, double t,
                                 std::size_t n_samples, std::uint64_t seed, bool traceless,
                                 const Tolerances& tol) {
    if (!(k_ratio > 0.0)) throw Error(ErrorCode::BadK, "K ratio must be positive");
    const HermitianOperator base = traceless ? ha.traceless() : ha;
    ConjectureReport rep;
    rep.base_norm = frobenius(base.matrix());
    rep.anti_aligned_value = (1.0 + k_ratio) * rep.base_norm;
    rep.anti_aligned_measured = hc_norm(base, -k_ratio * base, t, tol);
    rep.aligned_measured = hc_norm(base, k_ratio * base, t, tol);
    rep.samples = n_samples;
    for (std::size_t i = 0; i < n_samples; ++i) {
        const HermitianOperator hb =
            random_hermitian(base.dim(), mix_seed(seed, i), k_ratio * rep.base_norm, traceless);
        const double value = hc_norm(base, hb, t, tol);
        rep.max_sample = std::max(rep.max_sample, value);
        if (value > rep.anti_aligned_value + 1e-8) ++rep.violations;
    }
    return rep;
}

TheoremSummary summarize(const std::vector<TheoremTrial>& trials, double slack) {
    TheoremSummary sum;
    sum.trials = trials.size();
    sum.violation_slack = slack;
    sum.worst_margin = std::numeric_limits<double>::infinity();
    for (const TheoremTrial& tr : trials) {
        if (tr.skipped) {
            ++sum.skipped;
            continue;
        }
        sum.worst_margin = std::min(sum.worst_margin, tr.margin);
        if (tr.margin < -slack) ++sum.violations;
    }
    if (sum.skipped == sum.trials) sum.worst_margin = 0.0;
    return sum;
}

TheoremSummary run_theorem_trials(std::size_t trials, Eigen::Index dim_max, std::uint64_t seed,
                                  Exec exec, const Tolerances& tol) {
    if (trials < 1 || dim_max < 1) {
        throw Error(ErrorCode::InvalidArgument, "need trials >= 1 and dim_max >= 1");
    }
    return summarize(exec == Exec::parallel ? theorem_trials_omp(trials, dim_max, seed, tol)
                                            : theorem_trials_serial(trials, dim_max, seed, tol));
}

}  // namespace orthotime
