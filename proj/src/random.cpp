#include "schurpat/random.hpp"

#include <cmath>
#include <numbers>

namespace schurpat {

namespace {

// Box-Muller on our own uniform source so draws do not depend on the
// standard library's distribution implementation.
double standard_normal(Rng& rng) {
  double u = uniform01(rng);
  while (u <= 0.0) u = uniform01(rng);
  const double v = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

}  // namespace

Matrix gaussian_matrix(std::size_t n, Rng& rng) {
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd a(m, m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = 0; i < m; ++i) {
      const double re = standard_normal(rng);
      const double im = standard_normal(rng);
      a(i, j) = Complex(re, im) / std::numbers::sqrt2;
    }
  return Matrix(std::move(a));
}

Eigen::VectorXcd gaussian_vector(std::size_t n, Rng& rng) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = standard_normal(rng);
    const double im = standard_normal(rng);
    v(i) = Complex(re, im) / std::numbers::sqrt2;
  }
  return v;
}

Matrix real_gaussian_matrix(std::size_t n, Rng& rng) {
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd a(m, m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = 0; i < m; ++i) a(i, j) = standard_normal(rng);
  return Matrix(std::move(a));
}

Matrix random_unitary(std::size_t n, Rng& rng) {
  const Matrix g = gaussian_matrix(n, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g.dense());
  Eigen::MatrixXcd q = qr.householderQ();
  // Fix the phases of R's diagonal so the distribution is Haar.
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex rk = r(k, k);
    if (std::abs(rk) > 0.0) q.col(k) *= rk / std::abs(rk);
  }
  return Matrix(std::move(q));
}

Complex unit_disc_sample(Rng& rng) {
  const double radius = std::sqrt(uniform01(rng));
  const double angle = 2.0 * std::numbers::pi * uniform01(rng);
  return std::polar(radius, angle);
}

}  // namespace schurpat
