#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "nlosc/rational.hpp"

namespace nlosc {

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Square system A x = b.
struct DenseSystem {
    Eigen::MatrixXd matrix;
    Eigen::VectorXd rhs;

    DenseSystem() = default;
    explicit DenseSystem(Eigen::Index n) : matrix(Eigen::MatrixXd::Zero(n, n)), rhs(Eigen::VectorXd::Zero(n)) {}
    DenseSystem(Eigen::MatrixXd a, Eigen::VectorXd b);

    Eigen::Index size() const noexcept { return rhs.size(); }
};

/// Dense LU with partial pivoting. Throws SingularMatrixError when a pivot
/// falls below 1e-300 relative to the largest matrix entry, and
/// std::invalid_argument on non-finite entries or mismatched sizes.
Eigen::VectorXd lu_solve(const DenseSystem& sys);

/// Exact Gaussian elimination over the rationals for small square systems.
/// Throws SingularMatrixError if the matrix is singular.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace nlosc
