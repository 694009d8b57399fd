#include "orthotime/qubit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "orthotime/zero_search.hpp"

namespace orthotime {

namespace {

constexpr double kAxisTol = 1e-12;
constexpr Complex kI{0.0, 1.0};

void check_axis(const Vec3& axis) {
    if (!(std::abs(axis.norm() - 1.0) <= kAxisTol)) {
        throw Error(ErrorCode::BadAxis, "axis norm " + std::to_string(axis.norm()) + " is not 1");
    }
}

void check_frequencies(double omega_a, double omega_b) {
    if (!(omega_a >= 0.0) || !(omega_b >= 0.0)) {
        throw Error(ErrorCode::BadFrequency, "frequencies must be non-negative");
    }
}

}  // namespace

const ComplexMatrix& pauli(int k) {
    static const std::array<ComplexMatrix, 3> sigma = [] {
        std::array<ComplexMatrix, 3> s;
        s[0] = ComplexMatrix::Zero(2, 2);
        s[0] << 0.0, 1.0, 1.0, 0.0;
        s[1] = ComplexMatrix::Zero(2, 2);
        s[1] << 0.0, -kI, kI, 0.0;
        s[2] = ComplexMatrix::Zero(2, 2);
        s[2] << 1.0, 0.0, 0.0, -1.0;
        return s;
    }();
    return sigma.at(static_cast<std::size_t>(k));
}

ComplexMatrix sigma_dot(const Vec3& axis) {
    return axis.x() * pauli(0) + axis.y() * pauli(1) + axis.z() * pauli(2);
}

HermitianOperator qubit_hamiltonian(const QubitField& f) {
    check_axis(f.axis);
    if (!(f.omega >= 0.0)) throw Error(ErrorCode::BadFrequency, "omega must be non-negative");
    return HermitianOperator(f.r0 * ComplexMatrix::Identity(2, 2) + f.omega * sigma_dot(f.axis));
}

UnitaryMatrix rotation(const Vec3& axis, double theta) {
    check_axis(axis);
    return UnitaryMatrix::unchecked(std::cos(0.5 * theta) * ComplexMatrix::Identity(2, 2) -
                                    kI * std::sin(0.5 * theta) * sigma_dot(axis));
}

AxisAngle compose_rotations(double theta_a, const Vec3& axis_a, double theta_b, const Vec3& axis_b) {
    check_axis(axis_a);
    check_axis(axis_b);
    const double ca = std::cos(-0.5 * theta_a);
    const double sa = std::sin(-0.5 * theta_a);
    const double cb = std::cos(0.5 * theta_b);
    const double sb = std::sin(0.5 * theta_b);

    const double c = ca * cb - sa * sb * axis_a.dot(axis_b);
    // Product of unit quaternions (cb, sb rb)(ca, sa ra); the cross term
    // enters as + sa sb (rb x ra).
    const Vec3 v = sa * cb * axis_a + ca * sb * axis_b + sa * sb * axis_b.cross(axis_a);

    const double s = v.norm();
    AxisAngle out;
    out.theta = 2.0 * std::atan2(s, c);
    if (s > 1e-15) out.axis = v / s;
    return out;
}

double criterion(double gamma, double omega_a, double omega_b, double t) {
    const double c = std::cos(0.5 * gamma);
    const double s = std::sin(0.5 * gamma);
    return c * c * std::cos((omega_a - omega_b) * t) + s * s * std::cos((omega_a + omega_b) * t);
}

std::optional<double> qubit_horizon(double gamma, double omega_a, double omega_b) {
    check_frequencies(omega_a, omega_b);
    if (omega_a + omega_b == 0.0) {
        throw Error(ErrorCode::BadFrequency, "at least one frequency must be positive");
    }
    const double c = std::cos(0.5 * gamma);
    const double s = std::sin(0.5 * gamma);
    if (c * c - s * s > 1e-12) {
        if (omega_a == omega_b) return std::nullopt;
        return kPi / std::abs(omega_a - omega_b);
    }
    return kPi / (omega_a + omega_b);
}

std::optional<double> qubit_t_perp(double gamma, double omega_a, double omega_b) {
    const std::optional<double> horizon = qubit_horizon(gamma, omega_a, omega_b);
    if (!horizon) return std::nullopt;

    // At least 2000 samples, and at least 16 per period of the fast term.
    constexpr double kMaxPoints = 2e6;
    const double periods = *horizon * (omega_a + omega_b) / (2.0 * kPi);
    const auto n =
        static_cast<std::size_t>(std::clamp(std::ceil(16.0 * periods), 2000.0, kMaxPoints));
    const double step = *horizon / static_cast<double>(n);

    const double c = std::cos(0.5 * gamma);
    const double s = std::sin(0.5 * gamma);
    auto f = [=](double t) { return criterion(gamma, omega_a, omega_b, t); };

    ZeroSearchOptions zopts;
    zopts.t_tol = 1e-12 * step;
    zopts.touch_tol = 5e-10;
    zopts.lipschitz = c * c * std::abs(omega_a - omega_b) + s * s * (omega_a + omega_b);
    FirstZeroScan scan([&](std::size_t) { return FirstZeroScan::Refiner(f); }, zopts);

    for (std::size_t k = 0; k <= n; ++k) {
        const double t = k == n ? *horizon : step * static_cast<double>(k);
        if (const auto hit = scan.push(t, f(t))) return hit->t;
    }
    if (const auto hit = scan.finish()) return hit->t;
    return std::nullopt;
}

double short_time_estimate(double omega_a, double omega_b, double cos_gamma) {
    const double denom = omega_a * omega_a + omega_b * omega_b - 2.0 * omega_a * omega_b * cos_gamma;
    if (!(denom > 1e-15)) {
        throw Error(ErrorCode::IdenticalOperators, "the two generators coincide");
    }
    return std::sqrt(8.0 / denom);
}

double mean_energy_bar(double omega_a, double omega_b, double cos_gamma) {
    const double sq = omega_a * omega_a + omega_b * omega_b - 2.0 * omega_a * omega_b * cos_gamma;
    return std::sqrt(std::max(0.0, sq));
}

ComplexVector equatorial_state(const Vec3& axis, double alpha) {
    check_axis(axis);
    const double polar = std::acos(std::clamp(axis.z(), -1.0, 1.0));
    const double azimuth = std::atan2(axis.y(), axis.x());
    const double c = std::cos(0.5 * polar);
    const double s = std::sin(0.5 * polar);
    ComplexVector up(2), down(2);
    up << c, std::polar(s, azimuth);
    down << -std::polar(s, -azimuth), c;
    return (up + std::polar(1.0, alpha) * down) / std::sqrt(2.0);
}

double QubitPair::gamma() const { return std::acos(std::clamp(cos_gamma(), -1.0, 1.0)); }

QubitPair aligned_pair(double omega_a, double omega_b, double gamma) {
    QubitPair p;
    p.a = {omega_a, Vec3::UnitZ(), 0.0};
    p.b = {omega_b, Vec3(std::sin(gamma), 0.0, std::cos(gamma)), 0.0};
    return p;
}

ComplexVector qubit_optimal_state(const QubitPair& pair, double t, double alpha) {
    // exp(i Hb t) exp(-i Ha t) = R_b(-2 wb t) R_a(2 wa t)
    const AxisAngle r =
        compose_rotations(-2.0 * pair.a.omega * t, pair.a.axis, -2.0 * pair.b.omega * t, pair.b.axis);
    if (r.axis.isZero()) return equatorial_state(Vec3::UnitZ(), alpha);
    return equatorial_state(r.axis, alpha);
}

}  // namespace orthotime
