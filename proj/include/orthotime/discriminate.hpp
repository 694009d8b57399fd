#pragma once

// Orthogonality-time search for two time-independent Hamiltonians.
//
// A state evolved under Ha and a copy evolved under Hb become orthogonal at t
// exactly when <psi| exp(i Hb t) exp(-i Ha t) |psi> = 0. The attainable
// brackets fill the convex hull of the eigenvalues exp(i theta_j(t)) of that
// product, so the first orthogonality time is the first t at which the hull
// reaches the origin. That happens when the eigenphase cluster first spans an
// arc of pi; the two phases bounding the cluster then select the optimal
// two-component initial state.

#include <cstddef>
#include <optional>
#include <utility>

#include "orthotime/config.hpp"
#include "orthotime/linalg.hpp"

namespace orthotime {

using IndexPair = std::pair<Eigen::Index, Eigen::Index>;

struct PhaseSpectrum {
    double t = 0.0;
    RealVector phases;    // ascending, in (-pi, pi]
    UnitaryMatrix frame;  // product = frame diag(exp(i phases)) frame^dag
};

struct CircularGap {
    double gap = 0.0;   // largest empty arc, in [0, 2 pi]
    IndexPair pair{0, 0};  // phases bounding that arc, counter-clockwise
};

/// The eigenphases seen from a reference direction: their extent once each
/// is unwrapped into (ref - pi, ref + pi], and the indices at both ends.
struct ClusterExtent {
    double spread = 0.0;
    IndexPair ends{0, 0};  // (lowest, highest)
};

struct DiscriminationResult {
    double t_perp = 0.0;
    IndexPair pair{0, 0};
    double alpha = 0.0;
    ComplexVector state;
    double residual = 0.0;  // |<psi| product(t_perp) |psi>|
    RealVector phases;      // eigenphases at t_perp (trace-free generators)
    bool tangent = false;   // the hull touched the origin without crossing it
};

struct SearchOptions {
    std::optional<double> t_max;       // default: 100 x span lower bound
    std::optional<double> scan_step;   // default: see find_t_perp
    std::optional<double> refine_tol;  // default: 1e-10 x t_max
    double alpha = 0.0;
    double phase_tol = 1e-12;  // keep refining until the end phases are this close to pi apart
    double touch_tol = 1e-9;   // tangential approach counted as orthogonality
    std::size_t chunk = 64;    // grid points evaluated per parallel batch
    Exec exec = Exec::parallel;
    Tolerances tol{};
};

struct SearchOutcome {
    std::optional<DiscriminationResult> result;
    double t_max = 0.0;
    double scan_step = 0.0;
    double g_infimum = 0.0;   // min over samples of (largest gap - pi)
    std::size_t samples = 0;
    std::size_t lipschitz_flags = 0;  // adjacent samples of g jumping more than allowed

    bool found() const noexcept { return result.has_value(); }
};

/// exp(i Hb t) exp(-i Ha t)
UnitaryMatrix product_unitary(const HermitianOperator& ha, const HermitianOperator& hb, double t);

PhaseSpectrum phase_spectrum(const HermitianOperator& ha, const HermitianOperator& hb, double t);

CircularGap max_circular_gap(const RealVector& sorted_phases);

/// Direction opposite the middle of the largest gap.
double cluster_center(const RealVector& sorted_phases);

ClusterExtent cluster_extent(const RealVector& phases, double reference);

/// First orthogonality time within [0, t_max] with the state that reaches it.
///
/// Defaults: t_max = 100 x span_lower_bound(ha, hb); scan_step is the smaller
/// of t_max / 2000 and pi / (16 (omega_a + omega_b)) with omega the spectral
/// half-spans, which keeps the eigenphase cluster moving by at most pi/8 per
/// step. When both generators are scalar and no t_max is given, the result is
/// empty with a zero horizon.
SearchOutcome find_t_perp(const HermitianOperator& ha, const HermitianOperator& hb,
                          const SearchOptions& opts = {});

/// frame (e_i + exp(i alpha) e_j) / sqrt 2
ComplexVector orthogonal_state(const UnitaryMatrix& frame, IndexPair pair, double alpha);

/// <psi| exp(i Hb t) exp(-i Ha t) |psi>
Complex bracket(const ComplexVector& psi, const HermitianOperator& ha, const HermitianOperator& hb,
                double t, const Tolerances& tol = kDefaultTolerances);

}  // namespace orthotime
