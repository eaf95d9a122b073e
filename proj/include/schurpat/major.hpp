#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "schurpat/spectra.hpp"

namespace schurpat {

/// Finite nonnegative real sequence with a comparison slack.
///
/// Entries in [-tolerance, 0) are clamped to zero on construction; anything
/// more negative, or non-finite, is rejected with Errc::invalid_input.
/// Predicates below always work on the nonincreasing rearrangement, and
/// sequences of unequal length are compared as if zero-padded.
class RealSeq {
 public:
  static constexpr double kDefaultTolerance = 1e-10;

  explicit RealSeq(std::vector<double> values, double tolerance = kDefaultTolerance);
  RealSeq(std::initializer_list<double> values) : RealSeq(std::vector<double>(values)) {}
  explicit RealSeq(const SingularValues& mu, double tolerance = kDefaultTolerance);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  double tolerance() const noexcept { return tolerance_; }
  double sum() const noexcept;

  RealSeq rearranged() const;
  /// Zero-pads (never truncates) to length `n`.
  RealSeq padded(std::size_t n) const;

 private:
  std::vector<double> values_;
  double tolerance_;
};

/// Sum of the k largest entries; k beyond the length gives the total.
double ky_fan_sum(const RealSeq& x, std::size_t k);

/// Length of the first prefix where sum_{i<k} x*_i exceeds sum_{i<k} y*_i by
/// more than tol * max(1, sum_{i<k} y*_i), tol being the larger of the two
/// tolerances. Empty when x is submajorised by y.
std::optional<std::size_t> first_submajorisation_violation(const RealSeq& x, const RealSeq& y);

bool is_submajorised(const RealSeq& x, const RealSeq& y);
/// Submajorisation plus |sum x - sum y| <= tol * max(1, sum y).
bool is_majorised(const RealSeq& x, const RealSeq& y);

/// Given y submajorised by x, returns x' (nonincreasing) with 0 <= x' <= x*
/// entrywise and y majorised by x'. Throws Errc::precondition when y is not
/// submajorised by x.
RealSeq intermediate(const RealSeq& y, const RealSeq& x);

/// sup{ N(a) : a in R^n nonnegative, a submajorised by b }.
///
/// The supremum has a closed form in each regime. For a norm that is monotone
/// under submajorisation (Schatten p >= 1, Ky Fan) it is N(b). For Schatten
/// p < 1 the map a -> sum a_i^p is concave and symmetric, hence Schur-concave,
/// so over the feasible set it peaks at the flattest point: the constant vector
/// with entries sum(b)/n, which every prefix-average argument shows is itself
/// submajorised by b. That gives ||b||_1 * n^(1/p - 1).
double distortion(const RealSeq& b, const IdealNorm& norm, std::size_t n);

}  // namespace schurpat
