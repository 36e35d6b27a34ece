#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCore>
#include <cstdlib>
#include <string>
#include <vector>

#include "comblab/errors.hpp"
#include "comblab/oracle.hpp"

namespace comblab::oracle {
namespace {

void require_radius(int radius) {
  if (radius < 1) throw UsageError("exit time: radius must be >= 1, got " + std::to_string(radius));
}

// Number of tooth vertices above (x, 0) inside the ball.
std::int64_t tooth_height(std::int64_t x, int radius, Norm norm) {
  return norm == Norm::inf ? radius : radius - std::llabs(x);
}

bool inside(std::int64_t x, std::int64_t y, int radius, Norm norm) {
  const std::int64_t ax = std::llabs(x);
  const std::int64_t ay = std::llabs(y);
  return norm == Norm::inf ? (ax <= radius && ay <= radius) : (ax + ay <= radius);
}

}  // namespace

Rational exit_time_expectation(int radius, Norm norm) {
  require_radius(radius);
  // On a tooth of height H above an axis vertex with value t_x the expected
  // exit time is t_j = t_x (H + 1 - j) / (H + 1) + j (H + 1 - j), so
  // t_1 = H + t_x H / (H + 1). Substituting into the axis equation
  //   t_x = 1 + (t_{x-1} + t_{x+1}) / 4 + t_1 / 2
  // leaves a tridiagonal system on x in [-radius, radius].
  const std::size_t m = static_cast<std::size_t>(2 * radius + 1);
  std::vector<Rational> diag(m), rhs(m);
  const Rational off(-1, 4);
  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t x = static_cast<std::int64_t>(i) - radius;
    const std::int64_t h = tooth_height(x, radius, norm);
    diag[i] = 1 - Rational(h, 2 * (h + 1));
    rhs[i] = 1 + Rational(h, 2);
  }
  // Thomas algorithm; the matrix is strictly diagonally dominant.
  std::vector<Rational> c(m), d(m);
  c[0] = off / diag[0];
  d[0] = rhs[0] / diag[0];
  for (std::size_t i = 1; i < m; ++i) {
    const Rational denom = diag[i] - off * c[i - 1];
    if (sgn(denom) == 0) throw InternalError("exit_time_expectation: singular pivot");
    c[i] = off / denom;
    d[i] = (rhs[i] - off * d[i - 1]) / denom;
  }
  std::vector<Rational> t(m);
  t[m - 1] = d[m - 1];
  for (std::size_t i = m - 1; i-- > 0;) t[i] = d[i] - c[i] * t[i + 1];
  return t[static_cast<std::size_t>(radius)];
}

FloatSolve exit_time_expectation_float(int radius, Norm norm, double tolerance) {
  require_radius(radius);
  const std::int64_t r = radius;
  const std::int64_t side = 2 * r + 1;
  std::vector<long> index(static_cast<std::size_t>(side * side), -1);
  auto slot = [&](std::int64_t x, std::int64_t y) -> long& {
    return index[static_cast<std::size_t>((x + r) * side + (y + r))];
  };
  long count = 0;
  for (std::int64_t x = -r; x <= r; ++x) {
    for (std::int64_t y = -r; y <= r; ++y) {
      if (inside(x, y, radius, norm)) slot(x, y) = count++;
    }
  }

  // Reversible chain with degree weights: (D - A) t = D 1 is symmetric
  // positive definite on the interior.
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(count) * 5);
  Eigen::VectorXd b(count);
  auto couple = [&](long row, std::int64_t x, std::int64_t y) {
    if (inside(x, y, radius, norm)) triplets.emplace_back(row, slot(x, y), -1.0);
  };
  for (std::int64_t x = -r; x <= r; ++x) {
    for (std::int64_t y = -r; y <= r; ++y) {
      if (!inside(x, y, radius, norm)) continue;
      const long row = slot(x, y);
      const double degree = y == 0 ? 4.0 : 2.0;
      triplets.emplace_back(row, row, degree);
      b[row] = degree;
      couple(row, x, y - 1);
      couple(row, x, y + 1);
      if (y == 0) {
        couple(row, x - 1, 0);
        couple(row, x + 1, 0);
      }
    }
  }
  Eigen::SparseMatrix<double> a(count, count);
  a.setFromTriplets(triplets.begin(), triplets.end());

  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
  cg.setTolerance(tolerance);
  cg.setMaxIterations(std::max<long>(10000, 40 * count));
  cg.compute(a);
  const Eigen::VectorXd t = cg.solve(b);
  if (cg.info() != Eigen::Success) {
    throw InternalError("exit_time_expectation_float: conjugate gradients did not converge");
  }
  FloatSolve out;
  out.value = t[slot(0, 0)];
  out.relative_residual = (b - a * t).norm() / b.norm();
  out.iterations = cg.iterations();
  return out;
}

}  // namespace comblab::oracle
