#include "schurpat/spectra.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "schurpat/error.hpp"

namespace schurpat {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_input: return "invalid_input";
    case Errc::invalid_parameter: return "invalid_parameter";
    case Errc::infeasible: return "infeasible";
    case Errc::degenerate_input: return "degenerate_input";
    case Errc::invalid_map: return "invalid_map";
    case Errc::precondition: return "precondition";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

namespace {

bool all_finite(const Eigen::MatrixXcd& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

double parse_real(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf")
    return std::numeric_limits<double>::infinity();
  auto to_double = [&](std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw Error(Errc::invalid_parameter, "cannot parse number '" + std::string(text) + "'");
    return v;
  };
  // Accept simple fractions such as 1/2.
  if (auto slash = text.find('/'); slash != std::string_view::npos)
    return to_double(text.substr(0, slash)) / to_double(text.substr(slash + 1));
  return to_double(text);
}

}  // namespace

Matrix::Matrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols())
    throw Error(Errc::invalid_input, "matrix must be square and nonempty, got " +
                                         std::to_string(entries_.rows()) + "x" +
                                         std::to_string(entries_.cols()));
  if (!all_finite(entries_)) throw Error(Errc::invalid_input, "matrix has non-finite entries");
}

Matrix Matrix::zero(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  return Matrix(Eigen::MatrixXcd::Zero(m, m));
}

Matrix Matrix::identity(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  return Matrix(Eigen::MatrixXcd::Identity(m, m));
}

Matrix Matrix::ones(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  return Matrix(Eigen::MatrixXcd::Ones(m, m));
}

bool Matrix::is_hermitian(double tol) const {
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

bool Matrix::is_positive_semidefinite(double tol) const {
  if (!is_hermitian(tol)) return false;
  const auto eig = hermitian_eigenvalues(*this);
  const double scale = std::max(1.0, std::abs(eig.front()));
  return eig.back() >= -tol * scale;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.n() != b.n()) throw Error(Errc::invalid_input, "matrix dimensions differ");
  return Matrix(a.entries_ + b.entries_);
}

Matrix operator*(Complex s, const Matrix& a) { return Matrix(s * a.entries_); }

SingularValues::SingularValues(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_)
    if (!std::isfinite(v) || v < 0.0)
      throw Error(Errc::invalid_input, "singular values must be finite and nonnegative");
  std::sort(values_.begin(), values_.end(), std::greater<>());
  if (!values_.empty()) {
    const double floor = kSingularValueFloor * values_.front();
    for (double& v : values_)
      if (v < floor) v = 0.0;
  }
}

IdealNorm IdealNorm::schatten(double p) {
  if (!(p > 0.0))  // also rejects NaN
    throw Error(Errc::invalid_parameter, "Schatten exponent must be positive");
  return IdealNorm(Kind::schatten, p, 0);
}

IdealNorm IdealNorm::operator_norm() {
  return IdealNorm(Kind::schatten, std::numeric_limits<double>::infinity(), 0);
}

IdealNorm IdealNorm::ky_fan(std::size_t k) {
  if (k == 0) throw Error(Errc::invalid_parameter, "Ky Fan index must be at least 1");
  return IdealNorm(Kind::ky_fan, 1.0, k);
}

IdealNorm IdealNorm::parse(std::string_view text) {
  if (text == "operator" || text == "inf") return operator_norm();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(Errc::invalid_parameter, "norm must look like schatten:P or kyfan:K");
  const auto family = text.substr(0, colon);
  const auto arg = text.substr(colon + 1);
  if (family == "schatten") return schatten(parse_real(arg));
  if (family == "kyfan") {
    const double k = parse_real(arg);
    if (!(k >= 1.0) || k != std::floor(k) || !std::isfinite(k))
      throw Error(Errc::invalid_parameter, "Ky Fan index must be a positive integer");
    return ky_fan(static_cast<std::size_t>(k));
  }
  throw Error(Errc::invalid_parameter, "unknown norm family '" + std::string(family) + "'");
}

double IdealNorm::evaluate(std::span<const double> values) const {
  if (kind_ == Kind::ky_fan) {
    std::vector<double> sorted(values.begin(), values.end());
    const auto k = std::min(k_, sorted.size());
    std::partial_sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k),
                      sorted.end(), std::greater<>());
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) sum += sorted[i];
    return sum;
  }
  double largest = 0.0;
  for (double v : values) largest = std::max(largest, std::abs(v));
  if (largest == 0.0 || std::isinf(p_)) return largest;
  // Scale by the largest entry so that the p-th powers cannot overflow.
  double sum = 0.0;
  for (double v : values) sum += std::pow(std::abs(v) / largest, p_);
  return largest * std::pow(sum, 1.0 / p_);
}

bool IdealNorm::fully_symmetric() const noexcept {
  return kind_ == Kind::ky_fan || p_ >= 1.0;
}

double IdealNorm::quasi_triangle_constant() const noexcept {
  if (fully_symmetric()) return 1.0;
  return std::pow(2.0, 1.0 / p_ - 1.0);
}

std::string IdealNorm::to_string() const {
  if (kind_ == Kind::ky_fan) return "kyfan:" + std::to_string(k_);
  if (std::isinf(p_)) return "schatten:inf";
  std::ostringstream out;
  out.precision(15);
  out << "schatten:" << p_;
  return out.str();
}

SingularValues singular_values(const Matrix& a, std::size_t max_dimension) {
  if (a.n() > max_dimension)
    throw Error(Errc::invalid_input, "matrix dimension " + std::to_string(a.n()) +
                                         " exceeds the configured cap " +
                                         std::to_string(max_dimension));
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a.dense());
  const auto& s = svd.singularValues();
  return SingularValues(std::vector<double>(s.data(), s.data() + s.size()));
}

std::vector<double> hermitian_eigenvalues(const Matrix& a) {
  const Eigen::MatrixXcd h = 0.5 * (a.dense() + a.dense().adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double ideal_norm(const Matrix& a, const IdealNorm& norm, std::size_t max_dimension) {
  return norm.evaluate(singular_values(a, max_dimension));
}

std::vector<Complex> diag_extract(const Matrix& a) {
  std::vector<Complex> out(a.n());
  for (std::size_t j = 0; j < a.n(); ++j) out[j] = a(j, j);
  return out;
}

Matrix diag_embed(std::span<const Complex> diagonal) {
  const auto n = static_cast<Eigen::Index>(diagonal.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m(j, j) = diagonal[static_cast<std::size_t>(j)];
  return Matrix(std::move(m));
}

Matrix diag_embed(std::span<const double> diagonal) {
  std::vector<Complex> z(diagonal.begin(), diagonal.end());
  return diag_embed(std::span<const Complex>(z));
}

Matrix diag_average(const Matrix& a) {
  const std::size_t n = a.n();
  // Entry (j, l) of U_k A U_k^* is A(j, l) w^{(j - l) k}; reduce exponents mod n
  // so every phase comes from one table of roots of unity.
  std::vector<Complex> roots(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    roots[m] = Complex(std::cos(angle), std::sin(angle));
  }
  // The sum over k depends on (j, l) only through the shift j - l mod n.
  std::vector<Complex> phase_sums(n, Complex(0.0, 0.0));
  for (std::size_t shift = 0; shift < n; ++shift) {
    std::size_t exponent = 0;
    for (std::size_t k = 0; k < n; ++k) {
      phase_sums[shift] += roots[exponent];
      exponent = (exponent + shift) % n;
    }
    phase_sums[shift] /= static_cast<double>(n);
  }
  const auto& src = a.dense();
  Eigen::MatrixXcd out(src.rows(), src.cols());
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto jj = static_cast<Eigen::Index>(j);
      const auto ll = static_cast<Eigen::Index>(l);
      out(jj, ll) = src(jj, ll) * phase_sums[(j + n - l) % n];
    }
  }
  return Matrix(std::move(out));
}

}  // namespace schurpat
