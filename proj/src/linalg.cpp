#include "orthotime/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

namespace orthotime {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
    if (m.rows() < 1 || m.rows() != m.cols()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + " must be a non-empty square matrix, got " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

}  // namespace

double wrap_phase(double angle) noexcept {
    double a = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

// ---------------------------------------------------------------------------

HermitianOperator::HermitianOperator(const ComplexMatrix& m, const Tolerances& tol) {
    require_square(m, "Hermitian operator");
    const double asym = (m - m.adjoint()).norm();
    const double scale = m.norm();
    if (!(asym <= tol.hermiticity * scale)) {
        throw Error(ErrorCode::NonHermitian, "|H - H^dag|_F = " + std::to_string(asym) +
                                                 " exceeds tolerance relative to |H|_F = " +
                                                 std::to_string(scale));
    }
    m_ = 0.5 * (m + m.adjoint());
}

HermitianOperator HermitianOperator::traceless() const {
    const double mean = m_.trace().real() / static_cast<double>(dim());
    ComplexMatrix shifted = m_;
    shifted.diagonal().array() -= mean;
    return {std::move(shifted), Trusted{}};
}

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "operator sum");
    return {a.m_ + b.m_, HermitianOperator::Trusted{}};
}

HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "operator difference");
    return {a.m_ - b.m_, HermitianOperator::Trusted{}};
}

HermitianOperator operator*(double s, const HermitianOperator& h) {
    return {s * h.m_, HermitianOperator::Trusted{}};
}

HermitianOperator HermitianOperator::operator-() const { return {-m_, Trusted{}}; }

// ---------------------------------------------------------------------------

UnitaryMatrix::UnitaryMatrix(const ComplexMatrix& m, const Tolerances& tol) {
    require_square(m, "Unitary matrix");
    const double defect =
        (m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols())).norm();
    if (!(defect <= tol.unitarity)) {
        throw Error(ErrorCode::NonUnitary,
                    "|U^dag U - 1|_F = " + std::to_string(defect) + " exceeds tolerance");
    }
    m_ = m;
}

UnitaryMatrix UnitaryMatrix::unchecked(ComplexMatrix m) { return {std::move(m), Trusted{}}; }

UnitaryMatrix UnitaryMatrix::identity(Eigen::Index dim) {
    return {ComplexMatrix::Identity(dim, dim), Trusted{}};
}

UnitaryMatrix UnitaryMatrix::adjoint() const { return {m_.adjoint(), Trusted{}}; }

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "unitary product");
    return {a.m_ * b.m_, UnitaryMatrix::Trusted{}};
}

// ---------------------------------------------------------------------------

EigenSystem herm_eig(const HermitianOperator& h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::NoConvergence, "Hermitian eigensolver did not converge");
    }
    return {solver.eigenvalues(), UnitaryMatrix::unchecked(solver.eigenvectors())};
}

EigenSystem unitary_eig(const UnitaryMatrix& u) {
    // A unitary matrix is normal, so its complex Schur form is diagonal up to
    // rounding and the Schur vectors are an orthonormal eigenbasis.
    Eigen::ComplexSchur<ComplexMatrix> schur(u.matrix());
    if (schur.info() != Eigen::Success) {
        throw Error(ErrorCode::NoConvergence, "Schur decomposition did not converge");
    }
    const ComplexMatrix& t = schur.matrixT();
    const ComplexMatrix& q = schur.matrixU();
    const Eigen::Index d = u.dim();

    std::vector<double> phases(static_cast<std::size_t>(d));
    for (Eigen::Index k = 0; k < d; ++k) {
        double p = std::arg(t(k, k));
        if (p <= -kPi) p = kPi;
        phases[static_cast<std::size_t>(k)] = p;
    }
    std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return phases[static_cast<std::size_t>(a)] < phases[static_cast<std::size_t>(b)];
    });

    RealVector values(d);
    ComplexMatrix vectors(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        const Eigen::Index src = order[static_cast<std::size_t>(k)];
        values(k) = phases[static_cast<std::size_t>(src)];
        vectors.col(k) = q.col(src);
    }
    return {std::move(values), UnitaryMatrix::unchecked(std::move(vectors))};
}

UnitaryMatrix expm_i(const HermitianOperator& h, double t) {
    if (!std::isfinite(t)) throw Error(ErrorCode::InvalidArgument, "expm_i: time must be finite");
    const EigenSystem es = herm_eig(h);
    const ComplexMatrix& w = es.vectors.matrix();
    ComplexVector phase(es.values.size());
    for (Eigen::Index k = 0; k < phase.size(); ++k) {
        phase(k) = std::polar(1.0, -es.values(k) * t);
    }
    return UnitaryMatrix::unchecked(w * phase.asDiagonal() * w.adjoint());
}

HermitianOperator principal_log_u(const UnitaryMatrix& u, const Tolerances& tol) {
    const EigenSystem es = unitary_eig(u);
    for (Eigen::Index k = 0; k < es.values.size(); ++k) {
        const double dist = cut_distance(es.values(k));
        if (dist > 0.0 && dist < tol.cut_guard) {
            throw Error(ErrorCode::CutProximity,
                        "eigenphase " + std::to_string(es.values(k)) + " lies within " +
                            std::to_string(tol.cut_guard) + " of the branch cut");
        }
    }
    const ComplexMatrix& w = es.vectors.matrix();
    ComplexMatrix k = w * es.values.cast<Complex>().asDiagonal() * w.adjoint();
    return HermitianOperator(0.5 * (k + k.adjoint()), Tolerances{.hermiticity = 1e-10});
}

double frobenius(const ComplexMatrix& m) noexcept { return m.norm(); }

ComplexMatrix log_divided_differences(const ComplexVector& g, const Tolerances& tol) {
    const Eigen::Index d = g.size();
    ComplexVector logs(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        const Complex z = g(j);
        if (std::abs(z) == 0.0 || cut_distance(std::arg(z)) < tol.cut_guard) {
            throw Error(ErrorCode::CutProximity,
                        "diagonal entry " + std::to_string(j) + " lies on or near the branch cut");
        }
        logs(j) = std::log(z);
    }
    ComplexMatrix dd(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = 0; k < d; ++k) {
            const Complex diff = g(j) - g(k);
            if (j == k || std::abs(diff) < tol.coincident) {
                dd(j, k) = 1.0 / g(j);
            } else {
                dd(j, k) = (logs(j) - logs(k)) / diff;
            }
        }
    }
    return dd;
}

ComplexMatrix log_frechet_diag(const ComplexVector& g, const ComplexMatrix& h,
                               const Tolerances& tol) {
    if (h.rows() != g.size() || h.cols() != g.size()) {
        throw Error(ErrorCode::DimensionMismatch, "log_frechet_diag: direction has wrong shape");
    }
    return log_divided_differences(g, tol).cwiseProduct(h);
}

ComplexMatrix log_frechet_diag(const ComplexMatrix& g, const ComplexMatrix& h,
                               const Tolerances& tol) {
    require_square(g, "log_frechet_diag base point");
    ComplexMatrix off = g;
    off.diagonal().setZero();
    if (off.cwiseAbs().maxCoeff() != 0.0) {
        throw Error(ErrorCode::InvalidArgument, "log_frechet_diag: base point must be diagonal");
    }
    return log_frechet_diag(ComplexVector(g.diagonal()), h, tol);
}

}  // namespace orthotime
