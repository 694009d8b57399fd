#include <cmath>
#include <random>

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "orthotime/linalg.hpp"
#include "orthotime/theorem.hpp"
#include "test_support.hpp"

namespace orthotime {
namespace {

using testing::gaussian_matrix;
using testing::sigma_x;
using testing::sigma_z;

bool has_code(ErrorCode code, const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

TEST(WrapPhase, HalfOpenInterval) {
    EXPECT_DOUBLE_EQ(wrap_phase(-kPi), kPi);
    EXPECT_DOUBLE_EQ(wrap_phase(kPi), kPi);
    EXPECT_NEAR(wrap_phase(3 * kPi / 2), -kPi / 2, 1e-15);
    EXPECT_NEAR(wrap_phase(-5 * kPi / 2), -kPi / 2, 1e-14);
    EXPECT_DOUBLE_EQ(wrap_phase(0.3), 0.3);
}

TEST(HermitianOperator, AcceptsHermitian) {
    const HermitianOperator h(sigma_x());
    EXPECT_EQ(h.dim(), 2);
}

TEST(HermitianOperator, RejectsNonHermitian) {
    ComplexMatrix m(2, 2);
    m << 0, 1, 0, 0;
    EXPECT_TRUE(has_code(ErrorCode::NonHermitian, [&] { HermitianOperator h(m); }));
}

TEST(HermitianOperator, RejectsNonSquare) {
    EXPECT_TRUE(has_code(ErrorCode::DimensionMismatch,
                         [&] { HermitianOperator h(ComplexMatrix::Zero(2, 3)); }));
}

TEST(HermitianOperator, TracelessRemovesTrace) {
    ComplexMatrix m(2, 2);
    m << 3, 0, 0, 1;
    EXPECT_NEAR(std::abs(HermitianOperator(m).traceless().matrix().trace()), 0.0, 1e-15);
}

TEST(UnitaryMatrix, RejectsNonUnitary) {
    EXPECT_TRUE(has_code(ErrorCode::NonUnitary,
                         [&] { UnitaryMatrix u(2.0 * ComplexMatrix::Identity(2, 2)); }));
}

TEST(HermEig, PauliZ) {
    const EigenSystem es = herm_eig(HermitianOperator(sigma_z()));
    EXPECT_NEAR(es.values(0), -1.0, 1e-15);
    EXPECT_NEAR(es.values(1), 1.0, 1e-15);
}

TEST(HermEig, Reassembles) {
    std::mt19937_64 rng(3);
    for (Eigen::Index d = 1; d <= 8; ++d) {
        const HermitianOperator h = testing::hermitian_with_radius(d, 2.0, rng);
        const EigenSystem es = herm_eig(h);
        const ComplexMatrix& w = es.vectors.matrix();
        const ComplexMatrix back = w * es.values.cast<Complex>().asDiagonal() * w.adjoint();
        EXPECT_LT(frobenius(back - h.matrix()), 1e-12);
    }
}

TEST(UnitaryEig, ReassemblesRandomUnitaries) {
    for (Eigen::Index d = 1; d <= 8; ++d) {
        for (std::uint64_t s = 0; s < 10; ++s) {
            const UnitaryMatrix u = random_unitary(d, 100 * d + s);
            const EigenSystem es = unitary_eig(u);
            const ComplexMatrix& w = es.vectors.matrix();
            ComplexVector diag(d);
            for (Eigen::Index i = 0; i < d; ++i) diag(i) = std::polar(1.0, es.values(i));
            const ComplexMatrix back = w * diag.asDiagonal() * w.adjoint();
            EXPECT_LT(frobenius(back - u.matrix()), 1e-10);
            for (Eigen::Index i = 0; i < d; ++i) {
                EXPECT_GT(es.values(i), -kPi);
                EXPECT_LE(es.values(i), kPi);
                if (i > 0) EXPECT_LE(es.values(i - 1), es.values(i));
            }
        }
    }
}

TEST(UnitaryEig, MinusOneMapsToPi) {
    const EigenSystem es = unitary_eig(UnitaryMatrix(-ComplexMatrix::Identity(2, 2)));
    EXPECT_DOUBLE_EQ(es.values(0), kPi);
    EXPECT_DOUBLE_EQ(es.values(1), kPi);
}

TEST(ExpmI, ZeroTimeIsIdentity) {
    const UnitaryMatrix u = expm_i(HermitianOperator(sigma_x()), 0.0);
    EXPECT_LT(frobenius(u.matrix() - ComplexMatrix::Identity(2, 2)), 1e-15);
}

TEST(ExpmI, PauliZClosedForm) {
    const double t = 0.7;
    const UnitaryMatrix u = expm_i(HermitianOperator(sigma_z()), t);
    EXPECT_NEAR(std::abs(u.matrix()(0, 0) - std::polar(1.0, -t)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u.matrix()(1, 1) - std::polar(1.0, t)), 0.0, 1e-15);
}

TEST(ExpmI, IsUnitaryForRandomGenerators) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ut(-50.0, 50.0);
    for (int k = 0; k < 40; ++k) {
        const Eigen::Index d = 1 + k % 7;
        const HermitianOperator h = testing::hermitian_with_radius(d, 3.0, rng);
        const UnitaryMatrix u = expm_i(h, ut(rng));
        const ComplexMatrix id = ComplexMatrix::Identity(d, d);
        EXPECT_LT(frobenius(u.matrix().adjoint() * u.matrix() - id), 1e-10);
    }
}

TEST(PrincipalLog, IdentityGivesZero) {
    const HermitianOperator k = principal_log_u(UnitaryMatrix::identity(3));
    EXPECT_LT(frobenius(k.matrix()), 1e-15);
}

TEST(PrincipalLog, Diagonal) {
    ComplexMatrix u = ComplexMatrix::Zero(2, 2);
    u(0, 0) = std::polar(1.0, kPi / 4);
    u(1, 1) = std::polar(1.0, -kPi / 4);
    const HermitianOperator k = principal_log_u(UnitaryMatrix(u));
    EXPECT_NEAR(k.matrix()(0, 0).real(), kPi / 4, 1e-15);
    EXPECT_NEAR(k.matrix()(1, 1).real(), -kPi / 4, 1e-15);
}

TEST(PrincipalLog, ExactPiAllowed) {
    const HermitianOperator k = principal_log_u(UnitaryMatrix(-ComplexMatrix::Identity(2, 2)));
    EXPECT_NEAR(k.matrix()(0, 0).real(), kPi, 1e-15);
}

TEST(PrincipalLog, NearCutRejected) {
    ComplexMatrix u = ComplexMatrix::Zero(2, 2);
    u(0, 0) = std::polar(1.0, kPi - 1e-11);
    u(1, 1) = 1.0;
    EXPECT_TRUE(has_code(ErrorCode::CutProximity, [&] { principal_log_u(UnitaryMatrix(u)); }));
}

TEST(PrincipalLog, RoundTripAndSpectrum) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; ++k) {
        const Eigen::Index d = 1 + k % 6;
        const HermitianOperator h = testing::hermitian_with_radius(d, 3.0, rng);
        const HermitianOperator back = principal_log_u(expm_i(h, 1.0));
        EXPECT_LT(frobenius(back.matrix() + h.matrix()), 1e-10);

        const HermitianOperator k2 = principal_log_u(random_unitary(d, 900 + k));
        const RealVector e = herm_eig(k2).values;
        EXPECT_GT(e.minCoeff(), -kPi);
        EXPECT_LE(e.maxCoeff(), kPi + 1e-12);
    }
}

TEST(Frobenius, Basics) {
    EXPECT_EQ(frobenius(ComplexMatrix::Zero(3, 3)), 0.0);
    EXPECT_NEAR(frobenius(ComplexMatrix::Identity(3, 3)), std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(frobenius(sigma_z()), std::sqrt(2.0), 1e-15);
}

TEST(Frobenius, UnitarilyInvariant) {
    std::mt19937_64 rng(11);
    for (Eigen::Index d = 1; d <= 6; ++d) {
        const ComplexMatrix m = gaussian_matrix(d, d, rng);
        const ComplexMatrix w = random_unitary(d, 40 + d).matrix();
        EXPECT_LT(std::abs(frobenius(w * m * w.adjoint()) - frobenius(m)), 1e-10);
    }
}

TEST(LogFrechet, TwoByTwoExample) {
    ComplexVector g(2);
    g << 1.0, 2.0;
    const ComplexMatrix l = log_frechet_diag(g, ComplexMatrix::Ones(2, 2));
    EXPECT_NEAR(std::abs(l(0, 0) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(l(0, 1) - std::log(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(l(1, 0) - std::log(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(l(1, 1) - 0.5), 0.0, 1e-15);
}

TEST(LogFrechet, IdentityIsIdentityMap) {
    std::mt19937_64 rng(13);
    const ComplexMatrix h = gaussian_matrix(4, 4, rng);
    const ComplexVector ones = ComplexVector::Ones(4);
    const ComplexMatrix l = log_frechet_diag(ones, h);
    EXPECT_LT(frobenius(l - h), 1e-15);
}

TEST(LogFrechet, MatrixOverloadRequiresDiagonal) {
    ComplexMatrix g = ComplexMatrix::Identity(2, 2);
    g(0, 1) = 0.5;
    EXPECT_TRUE(has_code(ErrorCode::InvalidArgument,
                         [&] { log_frechet_diag(g, ComplexMatrix::Ones(2, 2)); }));
}

TEST(LogFrechet, CutEntryRejected) {
    ComplexVector g(2);
    g << -1.0, 1.0;
    EXPECT_TRUE(has_code(ErrorCode::CutProximity,
                         [&] { log_frechet_diag(g, ComplexMatrix::Ones(2, 2)); }));
}

TEST(LogFrechet, MatchesFiniteDifferenceOfMatrixLog) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> mod(0.5, 2.0);
    std::uniform_real_distribution<double> arg(-2.5, 2.5);
    const double h = 1e-5;
    for (int k = 0; k < 60; ++k) {
        const Eigen::Index d = 1 + k % 6;
        ComplexVector g(d);
        for (Eigen::Index i = 0; i < d; ++i) g(i) = std::polar(mod(rng), arg(rng));
        const ComplexMatrix dir = gaussian_matrix(d, d, rng);
        const ComplexMatrix gm = g.asDiagonal();
        const ComplexMatrix plus = (gm + h * dir).log();
        const ComplexMatrix minus = (gm - h * dir).log();
        const ComplexMatrix fd = (plus - minus) / (2.0 * h);
        const ComplexMatrix exact = log_frechet_diag(g, dir);
        EXPECT_LE(frobenius(fd - exact) / frobenius(exact), 1e-6) << "instance " << k;
    }
}

TEST(LogFrechet, CoincidentEntriesUseLimit) {
    ComplexVector g(2);
    g << std::polar(1.3, 0.4), std::polar(1.3, 0.4);
    const ComplexMatrix dd = log_divided_differences(g);
    EXPECT_NEAR(std::abs(dd(0, 1) - 1.0 / g(0)), 0.0, 1e-15);
}

}  // namespace
}  // namespace orthotime
