#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "orthotime/theorem.hpp"
#include "test_support.hpp"

namespace orthotime {
namespace {

TEST(RandomUnitary, Basics) {
    const UnitaryMatrix one = random_unitary(1, 99);
    EXPECT_NEAR(std::abs(one.matrix()(0, 0)), 1.0, 1e-15);
    const UnitaryMatrix a = random_unitary(4, 5);
    const UnitaryMatrix b = random_unitary(4, 5);
    EXPECT_EQ(a.matrix(), b.matrix());
    EXPECT_NE(a.matrix(), random_unitary(4, 6).matrix());
    EXPECT_LT(frobenius(a.matrix().adjoint() * a.matrix() - ComplexMatrix::Identity(4, 4)), 1e-12);
}

TEST(RandomUnitary, TraceMomentIsHaarLike) {
    // E|tr U|^2 = 1 for Haar measure on U(d).
    double acc = 0.0;
    const int n = 4000;
    for (int k = 0; k < n; ++k) acc += std::norm(random_unitary(4, mix_seed(1, k)).matrix().trace());
    EXPECT_NEAR(acc / n, 1.0, 0.1);
}

TEST(RandomHermitian, Norm) {
    const HermitianOperator h = random_hermitian(5, 7, 2.5, true);
    EXPECT_NEAR(frobenius(h.matrix()), 2.5, 1e-12);
    EXPECT_NEAR(std::abs(h.matrix().trace()), 0.0, 1e-12);
}

TEST(CheckTheorem1, Examples) {
    const TheoremTrial id = check_theorem1(UnitaryMatrix::identity(2), UnitaryMatrix::identity(2));
    EXPECT_EQ(id.lhs, 0.0);
    EXPECT_EQ(id.rhs, 0.0);
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = std::polar(1.0, kPi / 4);
    d(1, 1) = std::polar(1.0, -kPi / 4);
    const TheoremTrial t = check_theorem1(UnitaryMatrix(d), UnitaryMatrix(d));
    EXPECT_FALSE(t.skipped);
    EXPECT_NEAR(t.lhs, kPi / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(t.rhs, kPi / std::sqrt(2.0), 1e-12);
    EXPECT_THROW(check_theorem1(UnitaryMatrix::identity(2), UnitaryMatrix::identity(3)), Error);
}

TEST(CheckTheorem1, NearCutIsSkipped) {
    ComplexMatrix d = ComplexMatrix::Identity(2, 2);
    d(0, 0) = std::polar(1.0, kPi - 1e-12);
    const TheoremTrial t = check_theorem1(UnitaryMatrix(d), UnitaryMatrix::identity(2));
    EXPECT_TRUE(t.skipped);
    EXPECT_FALSE(t.skip_reason.empty());
}

TEST(CheckTheorem1, RandomTrialsHaveNoViolations) {
    const TheoremSummary s = run_theorem_trials(300, 6, 77);
    EXPECT_EQ(s.trials, 300u);
    EXPECT_EQ(s.violations, 0u);
    EXPECT_GE(s.worst_margin, -1e-9);
}

TEST(PathLog, EndpointsAndExponential) {
    std::mt19937_64 rng(79);
    const HermitianOperator x = testing::hermitian_with_radius(3, 1.0, rng);
    const HermitianOperator y = testing::hermitian_with_radius(3, 1.0, rng);
    EXPECT_LT(frobenius(path_log(x, y, 0.0).matrix() - x.matrix()), 1e-12);
    const HermitianOperator z = path_log(x, y, 0.6);
    const ComplexMatrix lhs = expm_i(z, -1.0).matrix();
    const ComplexMatrix rhs = expm_i(x, -1.0).matrix() * expm_i(y, -0.6).matrix();
    EXPECT_LT(frobenius(lhs - rhs), 1e-12);
}

TEST(InductionStep, ZeroYKeepsNorm) {
    std::mt19937_64 rng(83);
    const HermitianOperator x = testing::hermitian_with_radius(3, 1.0, rng);
    const HermitianOperator y(ComplexMatrix::Zero(3, 3));
    const InductionStep s = check_induction_step(x, y, 0.4, 1e-3);
    EXPECT_NEAR(s.lhs, s.rhs, 1e-12);
    EXPECT_NEAR(s.lhs, frobenius(x.matrix()), 1e-12);
}

TEST(InductionStep, HoldsOnRandomInstances) {
    std::mt19937_64 rng(89);
    std::uniform_real_distribution<double> us(0.0, 0.999);
    for (int k = 0; k < 100; ++k) {
        const Eigen::Index d = 2 + k % 5;
        const HermitianOperator x = testing::hermitian_with_radius(d, 1.4, rng);
        const HermitianOperator y = testing::hermitian_with_radius(d, 1.4, rng);
        EXPECT_TRUE(check_induction_step(x, y, us(rng), 1e-3).holds()) << k;
    }
}

TEST(InductionStep, Errors) {
    const HermitianOperator x(testing::sigma_z());
    EXPECT_THROW(check_induction_step(x, x, 0.5, -1e-3), Error);
    EXPECT_THROW(check_induction_step(4.0 * x, x, 0.5, 1e-3), Error);
    EXPECT_THROW(check_induction_step(x, x, 1.5, 1e-3), Error);
}

TEST(TracePath, TrivialDirections) {
    std::mt19937_64 rng(97);
    const HermitianOperator x = testing::hermitian_with_radius(3, 1.0, rng);
    const HermitianOperator zero(ComplexMatrix::Zero(3, 3));
    const PathTrace a = trace_path(x, zero, 11);
    ASSERT_TRUE(a.valid);
    for (double n : a.norms) EXPECT_NEAR(n, frobenius(x.matrix()), 1e-12);
    const PathTrace b = trace_path(zero, x, 11);
    ASSERT_TRUE(b.valid);
    for (std::size_t i = 0; i < b.grid.size(); ++i)
        EXPECT_NEAR(b.norms[i], b.grid[i] * frobenius(x.matrix()), 1e-12);
}

TEST(TracePath, EndToEndInequality) {
    std::mt19937_64 rng(101);
    for (int k = 0; k < 20; ++k) {
        const HermitianOperator x = testing::hermitian_with_radius(4, 1.2, rng);
        const HermitianOperator y = testing::hermitian_with_radius(4, 1.2, rng);
        const PathTrace p = trace_path(x, y, 101);
        if (!p.valid) continue;
        EXPECT_LE(p.norms.back(), frobenius(x.matrix()) + frobenius(y.matrix()) + 1e-9);
    }
}

TEST(ConjectureScan, Examples) {
    const HermitianOperator ha = random_hermitian(3, 11, 1.0, true);
    const ConjectureReport r = conjecture_scan(ha, 1.0, 0.1, 100, 5);
    EXPECT_NEAR(r.anti_aligned_measured, r.anti_aligned_value, 1e-10);
    EXPECT_NEAR(r.aligned_measured, 0.0, 1e-10);
    EXPECT_EQ(r.violations, 0u);
    EXPECT_LE(r.max_sample, r.anti_aligned_value + 1e-8);
    EXPECT_THROW(conjecture_scan(ha, -1.0, 0.1, 10, 5), Error);
}

TEST(HcNorm, AntiAlignedCommuting) {
    const HermitianOperator z(testing::sigma_z());
    EXPECT_NEAR(hc_norm(z, -2.0 * z, 0.1), 3.0 * std::sqrt(2.0), 1e-10);
}

}  // namespace
}  // namespace orthotime
