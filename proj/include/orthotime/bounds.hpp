#pragma once

// Lower bounds on the orthogonality time and the constructions that attain
// them. All quantities use hbar = 1.

#include <optional>

#include "orthotime/config.hpp"
#include "orthotime/linalg.hpp"

namespace orthotime {

/// Standard deviation of H in the pure state psi.
double energy_uncertainty(const HermitianOperator& h, const ComplexVector& psi,
                          const Tolerances& tol = kDefaultTolerances);

/// (E_max - E_min) / 2
double half_span(const HermitianOperator& h);

/// pi / (2 (dEa + dEb)), from the Fubini-Study length of the two-leg path.
double aa_lower_bound(const HermitianOperator& ha, const HermitianOperator& hb,
                      const ComplexVector& psi, const Tolerances& tol = kDefaultTolerances);

/// pi / (2 omega_a + 2 omega_b) with omega the spectral half-spans.
double span_lower_bound(const HermitianOperator& ha, const HermitianOperator& hb);

/// pi / (2 E_bar) for a generator whose ground level sits at zero energy.
double margolus_bound(double e_bar);

/// Fubini-Study length 2 (dEa + dEb) t travelled by psi along both legs.
double geodesic_length(const HermitianOperator& ha, const HermitianOperator& hb,
                       const ComplexVector& psi, double t,
                       const Tolerances& tol = kDefaultTolerances);

/// Shortest time for a generator of half-span omega to connect two states
/// with overlap modulus |<psi_I|psi_F>|.
double brody_time(double overlap_mod, double omega);

/// Angles 2 arccos|<psi|psi_m>| and 2 arccos|<psi_m|psi_f>| of the two legs,
/// with psi_m = exp(-i Ha t) psi and psi_f = exp(i Hb t) psi_m.
struct SegmentAngles {
    double alpha_a = 0.0;
    double alpha_b = 0.0;
    double sum() const noexcept { return alpha_a + alpha_b; }
};

SegmentAngles brody_segment_angles(const HermitianOperator& ha, const HermitianOperator& hb,
                                   const ComplexVector& psi, double t,
                                   const Tolerances& tol = kDefaultTolerances);

/// Anti-aligned two-level pair that reaches the span bound. The two levels
/// are the first two columns of `frame` (identity when absent); remaining
/// levels carry energy zero in both Hamiltonians.
struct SaturatingPair {
    HermitianOperator ha;
    HermitianOperator hb;
    ComplexVector psi;
};

SaturatingPair saturating_pair(double omega_a, double omega_b, Eigen::Index dim, double alpha,
                               const std::optional<UnitaryMatrix>& frame = std::nullopt);

/// |ln(exp(i K Ha t) exp(-i Ha t))|_F against |Ha t|_F + |K Ha t|_F for K < 0.
struct EqualityCase {
    double lhs = 0.0;
    double rhs = 0.0;
};

EqualityCase equality_case_norm(const HermitianOperator& ha, double k, double t,
                                const Tolerances& tol = kDefaultTolerances);

struct BoundsReport {
    double delta_Ea = 0.0;
    double delta_Eb = 0.0;
    double span_a = 0.0;
    double span_b = 0.0;
    std::optional<double> t_lb_aa;  // empty when psi is a common eigenvector
    double t_lb_span = 0.0;
    std::optional<double> t_margolus;

    double geodesic_length_at(double t) const noexcept { return 2.0 * (delta_Ea + delta_Eb) * t; }
};

/// Collects every bound for (ha, hb, psi). `e_bar` feeds the Margolus-type
/// bound; it is only meaningful where the difference Hamiltonian governs the
/// product, so the caller decides whether to supply it.
BoundsReport bounds_report(const HermitianOperator& ha, const HermitianOperator& hb,
                           const ComplexVector& psi, std::optional<double> e_bar = std::nullopt,
                           const Tolerances& tol = kDefaultTolerances);

}  // namespace orthotime
