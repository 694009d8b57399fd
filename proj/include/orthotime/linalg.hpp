#pragma once

// Dense complex linear algebra for Hermitian generators and the unitaries
// they produce: spectral decompositions, exp/log, and the divided-difference
// derivative of the principal logarithm.

#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "orthotime/config.hpp"
#include "orthotime/errors.hpp"

namespace orthotime {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = std::numbers::pi;

/// Maps an angle onto the half-open interval (-pi, pi].
double wrap_phase(double angle) noexcept;

/// Distance of an eigenphase in (-pi, pi] from the branch cut at pi.
inline double cut_distance(double phase) noexcept { return kPi - std::abs(phase); }

/// A square complex matrix equal to its adjoint within the hermiticity
/// tolerance. The stored matrix is symmetrised on construction.
class HermitianOperator {
public:
    explicit HermitianOperator(const ComplexMatrix& m, const Tolerances& tol = kDefaultTolerances);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    Eigen::Index dim() const noexcept { return m_.rows(); }

    /// Zero-trace part, H - (tr H / d) 1.
    HermitianOperator traceless() const;

    friend HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b);
    friend HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b);
    friend HermitianOperator operator*(double s, const HermitianOperator& h);
    HermitianOperator operator-() const;

private:
    struct Trusted {};
    HermitianOperator(ComplexMatrix m, Trusted) : m_(std::move(m)) {}

    ComplexMatrix m_;
};

/// A square complex matrix with U^dag U = 1 within the unitarity tolerance.
class UnitaryMatrix {
public:
    explicit UnitaryMatrix(const ComplexMatrix& m, const Tolerances& tol = kDefaultTolerances);

    /// Wraps a matrix produced by a unitary factorisation without re-checking.
    static UnitaryMatrix unchecked(ComplexMatrix m);

    static UnitaryMatrix identity(Eigen::Index dim);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    Eigen::Index dim() const noexcept { return m_.rows(); }

    UnitaryMatrix adjoint() const;
    friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);

private:
    struct Trusted {};
    UnitaryMatrix(ComplexMatrix m, Trusted) : m_(std::move(m)) {}

    ComplexMatrix m_;
};

/// M = W diag(values) W^dag. For Hermitian input the values are real
/// eigenvalues; for unitary input they are eigenphases in (-pi, pi].
/// Values are ascending and the columns of W follow them.
struct EigenSystem {
    RealVector values;
    UnitaryMatrix vectors;
};

EigenSystem herm_eig(const HermitianOperator& h);
EigenSystem unitary_eig(const UnitaryMatrix& u);

/// exp(-i H t) through the spectral decomposition of H.
UnitaryMatrix expm_i(const HermitianOperator& h, double t);

/// Hermitian K with exp(iK) = U and spectrum in (-pi, pi]. Throws
/// CutProximity when an eigenphase sits within cut_guard of pi without
/// being exactly pi.
HermitianOperator principal_log_u(const UnitaryMatrix& u, const Tolerances& tol = kDefaultTolerances);

double frobenius(const ComplexMatrix& m) noexcept;

/// Frechet derivative of the principal logarithm at diagonal G in the
/// direction H: the entrywise product of the divided-difference matrix of
/// ln at diag(G) with H.
ComplexMatrix log_frechet_diag(const ComplexVector& g_diag, const ComplexMatrix& h,
                               const Tolerances& tol = kDefaultTolerances);
ComplexMatrix log_frechet_diag(const ComplexMatrix& g, const ComplexMatrix& h,
                               const Tolerances& tol = kDefaultTolerances);

/// Divided-difference matrix ln^[1](diag(G)).
ComplexMatrix log_divided_differences(const ComplexVector& g_diag,
                                      const Tolerances& tol = kDefaultTolerances);

}  // namespace orthotime
