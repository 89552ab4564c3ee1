#include <gtest/gtest.h>

#include <random>

#include "nlosc/linsys.hpp"

using namespace nlosc;

TEST(LuSolve, Identity) {
    DenseSystem s(2);
    s.matrix = Eigen::MatrixXd::Identity(2, 2);
    s.rhs << 3, -1;
    const Eigen::VectorXd x = lu_solve(s);
    EXPECT_EQ(x(0), 3.0);
    EXPECT_EQ(x(1), -1.0);
}

TEST(LuSolve, TwoByTwo) {
    Eigen::MatrixXd a(2, 2);
    a << 2, 1, 1, 3;
    Eigen::VectorXd b(2);
    b << 4, 7;
    const Eigen::VectorXd x = lu_solve(DenseSystem(a, b));
    EXPECT_NEAR(x(0), 1.0, 1e-15);
    EXPECT_NEAR(x(1), 2.0, 1e-15);
}

TEST(LuSolve, NeedsPivoting) {
    Eigen::MatrixXd a(2, 2);
    a << 0, 1, 1, 0;
    Eigen::VectorXd b(2);
    b << 5, 6;
    const Eigen::VectorXd x = lu_solve(DenseSystem(a, b));
    EXPECT_EQ(x(0), 6.0);
    EXPECT_EQ(x(1), 5.0);
}

TEST(LuSolve, Singular) {
    Eigen::MatrixXd a(2, 2);
    a << 1, 1, 2, 2;
    Eigen::VectorXd b(2);
    b << 1, 3;
    EXPECT_THROW(lu_solve(DenseSystem(a, b)), SingularMatrixError);
    EXPECT_THROW(lu_solve(DenseSystem(Eigen::MatrixXd::Zero(3, 3), Eigen::VectorXd::Ones(3))), SingularMatrixError);
}

TEST(LuSolve, RejectsBadInput) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2, 2);
    a(0, 1) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(lu_solve(DenseSystem(a, Eigen::VectorXd::Ones(2))), std::invalid_argument);
    EXPECT_THROW(DenseSystem(Eigen::MatrixXd::Identity(2, 2), Eigen::VectorXd::Ones(3)), std::invalid_argument);
    EXPECT_THROW(DenseSystem(Eigen::MatrixXd::Identity(2, 3), Eigen::VectorXd::Ones(2)), std::invalid_argument);
}

TEST(LuSolve, RandomWellConditionedResidual) {
    std::mt19937 rng(3);
    std::normal_distribution<double> nd;
    for (int n : {1, 5, 20, 64, 200}) {
        // orthogonal factors with singular values in [1, 1e6]
        Eigen::MatrixXd g1(n, n), g2(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                g1(i, j) = nd(rng);
                g2(i, j) = nd(rng);
            }
        const Eigen::MatrixXd q1 = Eigen::HouseholderQR<Eigen::MatrixXd>(g1).householderQ();
        const Eigen::MatrixXd q2 = Eigen::HouseholderQR<Eigen::MatrixXd>(g2).householderQ();
        Eigen::VectorXd s(n);
        for (int i = 0; i < n; ++i) s(i) = std::pow(1e6, n == 1 ? 0.0 : double(i) / (n - 1));
        const Eigen::MatrixXd a = q1 * s.asDiagonal() * q2.transpose();
        Eigen::VectorXd b(n);
        for (int i = 0; i < n; ++i) b(i) = nd(rng);
        const Eigen::VectorXd x = lu_solve(DenseSystem(a, b));
        const double rel = (a * x - b).lpNorm<Eigen::Infinity>() /
                           (a.lpNorm<Eigen::Infinity>() * x.lpNorm<Eigen::Infinity>() + b.lpNorm<Eigen::Infinity>());
        EXPECT_LE(rel, 1e-9) << "n=" << n;
    }
}

TEST(SolveExact, SmallSystem) {
    // 16 b = 1, 2 b + d = 1
    const std::vector<Rational> x =
        solve_exact({{Rational(16), Rational(0)}, {Rational(2), Rational(1)}}, {Rational(1), Rational(1)});
    EXPECT_EQ(x[0], Rational(1, 16));
    EXPECT_EQ(x[1], Rational(7, 8));
    EXPECT_THROW(solve_exact({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, {Rational(1), Rational(2)}),
                 SingularMatrixError);
}
