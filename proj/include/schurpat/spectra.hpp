#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace schurpat {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultMaxDimension = 1024;

// Singular values below this fraction of the largest one are set to zero.
inline constexpr double kSingularValueFloor = 1e-12;

/// Dense square complex matrix with finite entries.
class Matrix {
 public:
  /// Throws Errc::invalid_input unless `entries` is square, nonempty and finite.
  explicit Matrix(Eigen::MatrixXcd entries);

  static Matrix zero(std::size_t n);
  static Matrix identity(std::size_t n);
  /// The all-ones matrix J_n.
  static Matrix ones(std::size_t n);

  std::size_t n() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  const Eigen::MatrixXcd& dense() const noexcept { return entries_; }

  bool is_hermitian(double tol) const;
  bool is_positive_semidefinite(double tol) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Complex s, const Matrix& a);

 private:
  Eigen::MatrixXcd entries_;
};

/// Nonincreasing, nonnegative sequence mu(0, A) >= mu(1, A) >= ... of length n.
class SingularValues {
 public:
  /// Sorts nonincreasing and zeroes entries below kSingularValueFloor * max.
  explicit SingularValues(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  /// Largest singular value (the operator norm); zero for an empty sequence.
  double largest() const noexcept { return values_.empty() ? 0.0 : values_.front(); }

 private:
  std::vector<double> values_;
};

/// Symmetric (quasi-)norm evaluated on singular values: Schatten-p for
/// p in (0, inf] or Ky Fan k.
class IdealNorm {
 public:
  enum class Kind { schatten, ky_fan };

  static IdealNorm schatten(double p);
  static IdealNorm operator_norm();
  static IdealNorm ky_fan(std::size_t k);
  /// Parses "schatten:P", "schatten:inf", "operator" or "kyfan:K".
  static IdealNorm parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  double p() const noexcept { return p_; }
  std::size_t k() const noexcept { return k_; }

  /// Evaluates on a nonnegative sequence in any order.
  double evaluate(std::span<const double> values) const;
  double evaluate(const SingularValues& mu) const { return evaluate(mu.values()); }

  /// True for the norms that are monotone under submajorisation.
  bool fully_symmetric() const noexcept;
  /// Constant C with N(a + b) <= C (N(a) + N(b)); 2^(1/p - 1) below p = 1.
  double quasi_triangle_constant() const noexcept;

  std::string to_string() const;

 private:
  IdealNorm(Kind kind, double p, std::size_t k) : kind_(kind), p_(p), k_(k) {}

  Kind kind_;
  double p_;
  std::size_t k_;
};

SingularValues singular_values(const Matrix& a, std::size_t max_dimension = kDefaultMaxDimension);

/// Eigenvalues of the Hermitian part of `a`, sorted nonincreasing.
std::vector<double> hermitian_eigenvalues(const Matrix& a);

double ideal_norm(const Matrix& a, const IdealNorm& norm,
                  std::size_t max_dimension = kDefaultMaxDimension);

std::vector<Complex> diag_extract(const Matrix& a);
Matrix diag_embed(std::span<const Complex> diagonal);
Matrix diag_embed(std::span<const double> diagonal);

/// (1/n) sum_k U_k A U_k^* with U_k = diag(w^{jk}), w = exp(2 pi i / n).
/// For an n x n matrix this average is exactly the diagonal part of A.
Matrix diag_average(const Matrix& a);

}  // namespace schurpat
