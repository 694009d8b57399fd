#pragma once

// Closed-form treatment of two precessing spin-1/2 systems.
//
// H = r0 1 + omega (axis . sigma). The scalar offset r0 only adds a global
// phase. The product exp(i Hb t) exp(-i Ha t) is a single Bloch rotation
// whose half-angle cosine is
//     cos^2(gamma/2) cos((wa - wb) t) + sin^2(gamma/2) cos((wa + wb) t),
// and the evolved states become orthogonal where that quantity vanishes.

#include <optional>

#include <Eigen/Dense>

#include "orthotime/linalg.hpp"

namespace orthotime {

using Vec3 = Eigen::Vector3d;

struct QubitField {
    double omega = 0.0;
    Vec3 axis = Vec3::UnitZ();
    double r0 = 0.0;
};

struct AxisAngle {
    double theta = 0.0;
    Vec3 axis = Vec3::Zero();  // zero only when sin(theta / 2) vanishes
};

/// Pauli matrices sigma_x, sigma_y, sigma_z.
const ComplexMatrix& pauli(int k);

/// axis . sigma
ComplexMatrix sigma_dot(const Vec3& axis);

HermitianOperator qubit_hamiltonian(const QubitField& f);

/// exp(-i theta axis.sigma / 2) = cos(theta/2) 1 - i sin(theta/2) axis.sigma
UnitaryMatrix rotation(const Vec3& axis, double theta);

/// Single rotation equal to R_b(theta_b) R_a(-theta_a). The returned angle is
/// in [0, 2 pi].
AxisAngle compose_rotations(double theta_a, const Vec3& axis_a, double theta_b, const Vec3& axis_b);

double criterion(double gamma, double omega_a, double omega_b, double t);

/// Search horizon within which a root of the criterion is guaranteed:
/// pi / |wa - wb| when cos^2(gamma/2) dominates, pi / (wa + wb) otherwise.
/// Empty when the first case applies with wa == wb.
std::optional<double> qubit_horizon(double gamma, double omega_a, double omega_b);

/// First root of the criterion in (0, horizon]; empty when no horizon exists.
std::optional<double> qubit_t_perp(double gamma, double omega_a, double omega_b);

/// Formal small-t solution sqrt(8 / (wa^2 + wb^2 - 2 wa wb cos gamma)). Only
/// useful to show the divergence as the two generators coincide.
double short_time_estimate(double omega_a, double omega_b, double cos_gamma);

/// Level splitting of the difference Hamiltonian (wa ra - wb rb) . sigma,
/// i.e. its mean energy once the lower level is put at zero.
double mean_energy_bar(double omega_a, double omega_b, double cos_gamma);

/// (|up> + exp(i alpha) |down>) / sqrt 2 in the eigenbasis of axis . sigma.
ComplexVector equatorial_state(const Vec3& axis, double alpha);

/// Pair with field a along z and field b tilted by gamma in the x-z plane.
struct QubitPair {
    QubitField a;
    QubitField b;

    double cos_gamma() const { return a.axis.dot(b.axis); }
    double gamma() const;
    HermitianOperator ha() const { return qubit_hamiltonian(a); }
    HermitianOperator hb() const { return qubit_hamiltonian(b); }
};

QubitPair aligned_pair(double omega_a, double omega_b, double gamma);

/// Equatorial state about the composed rotation axis at time t; at a root of
/// the criterion it is orthogonal to its partner.
ComplexVector qubit_optimal_state(const QubitPair& pair, double t, double alpha);

}  // namespace orthotime
