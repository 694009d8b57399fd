#include "orthotime/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orthotime/discriminate.hpp"

namespace orthotime {

namespace {

void check_state(const HermitianOperator& h, const ComplexVector& psi, const Tolerances& tol) {
    if (psi.size() != h.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "state length " + std::to_string(psi.size()) +
                                                      " vs dimension " + std::to_string(h.dim()));
    }
    if (std::abs(psi.norm() - 1.0) > tol.normalization) {
        throw Error(ErrorCode::NotNormalized, "state norm " + std::to_string(psi.norm()));
    }
}

double overlap_angle(const ComplexVector& x, const ComplexVector& y) {
    return 2.0 * std::acos(std::clamp(std::abs(x.dot(y)), 0.0, 1.0));
}

}  // namespace

double energy_uncertainty(const HermitianOperator& h, const ComplexVector& psi,
                          const Tolerances& tol) {
    check_state(h, psi, tol);
    const ComplexVector hpsi = h.matrix() * psi;
    const double mean = psi.dot(hpsi).real();
    // <H^2> - <H>^2 written as |(H - <H>) psi|^2, which cannot go negative.
    return (hpsi - mean * psi).norm();
}

double half_span(const HermitianOperator& h) {
    const RealVector e = herm_eig(h).values;
    return 0.5 * (e(e.size() - 1) - e(0));
}

double aa_lower_bound(const HermitianOperator& ha, const HermitianOperator& hb,
                      const ComplexVector& psi, const Tolerances& tol) {
    const double total = energy_uncertainty(ha, psi, tol) + energy_uncertainty(hb, psi, tol);
    if (!(total > 1e-14)) {
        throw Error(ErrorCode::ZeroUncertainty, "state is an eigenvector of both Hamiltonians");
    }
    return kPi / (2.0 * total);
}

double span_lower_bound(const HermitianOperator& ha, const HermitianOperator& hb) {
    if (ha.dim() != hb.dim()) throw Error(ErrorCode::DimensionMismatch, "span_lower_bound");
    const double total = half_span(ha) + half_span(hb);
    if (!(total > 0.0)) throw Error(ErrorCode::BothFlat, "both Hamiltonians are scalar");
    return kPi / (2.0 * total);
}

double margolus_bound(double e_bar) {
    if (!(e_bar > 0.0)) throw Error(ErrorCode::ZeroEnergy, "average energy must be positive");
    return kPi / (2.0 * e_bar);
}

double geodesic_length(const HermitianOperator& ha, const HermitianOperator& hb,
                       const ComplexVector& psi, double t, const Tolerances& tol) {
    return 2.0 * (energy_uncertainty(ha, psi, tol) + energy_uncertainty(hb, psi, tol)) * t;
}

double brody_time(double overlap_mod, double omega) {
    if (!(omega > 0.0)) throw Error(ErrorCode::ZeroSpan, "half-span must be positive");
    if (!(overlap_mod >= 0.0 && overlap_mod <= 1.0 + 1e-12)) {
        throw Error(ErrorCode::InvalidArgument, "overlap modulus outside [0, 1]");
    }
    return 2.0 * std::acos(std::min(overlap_mod, 1.0)) / (2.0 * omega);
}

SegmentAngles brody_segment_angles(const HermitianOperator& ha, const HermitianOperator& hb,
                                   const ComplexVector& psi, double t, const Tolerances& tol) {
    check_state(ha, psi, tol);
    if (hb.dim() != ha.dim()) throw Error(ErrorCode::DimensionMismatch, "brody_segment_angles");
    const ComplexVector mid = expm_i(ha, t).matrix() * psi;
    const ComplexVector fin = expm_i(-hb, t).matrix() * mid;
    return {overlap_angle(psi, mid), overlap_angle(mid, fin)};
}

SaturatingPair saturating_pair(double omega_a, double omega_b, Eigen::Index dim, double alpha,
                               const std::optional<UnitaryMatrix>& frame) {
    if (!(omega_a > 0.0) || !(omega_b > 0.0)) {
        throw Error(ErrorCode::BadFrequency, "saturating_pair needs positive frequencies");
    }
    if (dim < 2) throw Error(ErrorCode::InvalidArgument, "saturating_pair needs dim >= 2");
    if (frame && frame->dim() != dim) throw Error(ErrorCode::DimensionMismatch, "frame dimension");

    const ComplexMatrix w = frame ? frame->matrix() : ComplexMatrix::Identity(dim, dim);
    const ComplexVector up = w.col(0);
    const ComplexVector down = w.col(1);
    const ComplexMatrix p_up = up * up.adjoint();
    const ComplexMatrix p_down = down * down.adjoint();
    ComplexVector psi = (up + std::polar(1.0, alpha) * down) / std::sqrt(2.0);
    return {HermitianOperator(omega_a * (p_up - p_down)),
            HermitianOperator(omega_b * (p_down - p_up)), std::move(psi)};
}

EqualityCase equality_case_norm(const HermitianOperator& ha, double k, double t,
                                const Tolerances& tol) {
    if (!(k < 0.0)) throw Error(ErrorCode::BadK, "the equality case needs K < 0");
    const RealVector e = herm_eig(ha).values;
    const double radius = (1.0 - k) * std::abs(t) * std::max(std::abs(e(0)), std::abs(e(e.size() - 1)));
    if (radius >= kPi - tol.cut_guard) {
        throw Error(ErrorCode::CutProximity,
                    "(1 - K) t Ha has spectral radius " + std::to_string(radius) + ", reduce t");
    }
    const HermitianOperator hb = k * ha;
    const HermitianOperator log = principal_log_u(product_unitary(ha, hb, t), tol);
    const double norm_a = std::abs(t) * frobenius(ha.matrix());
    const double norm_b = std::abs(t) * frobenius(hb.matrix());
    return {frobenius(log.matrix()), norm_a + norm_b};
}

BoundsReport bounds_report(const HermitianOperator& ha, const HermitianOperator& hb,
                           const ComplexVector& psi, std::optional<double> e_bar,
                           const Tolerances& tol) {
    BoundsReport r;
    r.delta_Ea = energy_uncertainty(ha, psi, tol);
    r.delta_Eb = energy_uncertainty(hb, psi, tol);
    r.span_a = half_span(ha);
    r.span_b = half_span(hb);
    r.t_lb_span = span_lower_bound(ha, hb);
    if (r.delta_Ea + r.delta_Eb > 1e-14) r.t_lb_aa = kPi / (2.0 * (r.delta_Ea + r.delta_Eb));
    if (e_bar && *e_bar > 0.0) r.t_margolus = margolus_bound(*e_bar);
    return r;
}

}  // namespace orthotime
