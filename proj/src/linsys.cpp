#include "nlosc/linsys.hpp"

#include <cmath>

namespace nlosc {

DenseSystem::DenseSystem(Eigen::MatrixXd a, Eigen::VectorXd b) : matrix(std::move(a)), rhs(std::move(b)) {
    if (matrix.rows() != matrix.cols() || matrix.rows() != rhs.size())
        throw std::invalid_argument("DenseSystem: matrix must be square and match the right-hand side");
}

Eigen::VectorXd lu_solve(const DenseSystem& sys) {
    const auto& a = sys.matrix;
    if (a.rows() != a.cols() || a.rows() != sys.rhs.size())
        throw std::invalid_argument("lu_solve: matrix must be square and match the right-hand side");
    if (!a.allFinite() || !sys.rhs.allFinite()) throw std::invalid_argument("lu_solve: non-finite entries");
    if (a.rows() == 0) return Eigen::VectorXd();

    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    const double smallest = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (smallest <= 1e-300 * scale) throw SingularMatrixError("lu_solve: matrix is numerically singular");
    return lu.solve(sys.rhs);
}

std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    if (a.size() != n) throw std::invalid_argument("solve_exact: dimension mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("solve_exact: matrix must be square");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == Rational(0)) ++pivot;
        if (pivot == n) throw SingularMatrixError("solve_exact: singular system");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == Rational(0)) continue;
            const Rational factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace nlosc
