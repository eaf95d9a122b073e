#include "schurpat/major.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "schurpat/error.hpp"

namespace schurpat {

namespace {

std::vector<double> sorted_padded(const RealSeq& x, std::size_t n) {
  std::vector<double> v(x.values().begin(), x.values().end());
  v.resize(std::max(n, v.size()), 0.0);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

double slack(double tol, double bound) { return tol * std::max(1.0, std::abs(bound)); }

// Checks 0 <= candidate <= x entrywise and y majorised by candidate.
bool valid_intermediate(const RealSeq& y, std::span<const double> x,
                        std::span<const double> candidate, double tol) {
  for (std::size_t k = 0; k < x.size(); ++k)
    if (candidate[k] < 0.0 || candidate[k] > x[k] + slack(tol, x[k])) return false;
  RealSeq c(std::vector<double>(candidate.begin(), candidate.end()), tol);
  return is_majorised(y, c);
}

}  // namespace

RealSeq::RealSeq(std::vector<double> values, double tolerance)
    : values_(std::move(values)), tolerance_(tolerance) {
  if (!(tolerance_ >= 0.0) || !std::isfinite(tolerance_))
    throw Error(Errc::invalid_parameter, "tolerance must be finite and nonnegative");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    double& v = values_[k];
    if (!std::isfinite(v))
      throw Error(Errc::invalid_input, "sequence entry " + std::to_string(k) + " is not finite");
    if (v < 0.0) {
      if (v < -tolerance_)
        throw Error(Errc::invalid_input,
                    "sequence entry " + std::to_string(k) + " is negative");
      v = 0.0;
    }
  }
}

RealSeq::RealSeq(const SingularValues& mu, double tolerance)
    : RealSeq(std::vector<double>(mu.values().begin(), mu.values().end()), tolerance) {}

double RealSeq::sum() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

RealSeq RealSeq::rearranged() const {
  auto v = values_;
  std::sort(v.begin(), v.end(), std::greater<>());
  return RealSeq(std::move(v), tolerance_);
}

RealSeq RealSeq::padded(std::size_t n) const {
  auto v = values_;
  if (v.size() < n) v.resize(n, 0.0);
  return RealSeq(std::move(v), tolerance_);
}

double ky_fan_sum(const RealSeq& x, std::size_t k) {
  const auto v = sorted_padded(x, 0);
  k = std::min(k, v.size());
  return std::accumulate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
}

std::optional<std::size_t> first_submajorisation_violation(const RealSeq& x, const RealSeq& y) {
  const std::size_t n = std::max(x.size(), y.size());
  const auto xs = sorted_padded(x, n);
  const auto ys = sorted_padded(y, n);
  const double tol = std::max(x.tolerance(), y.tolerance());
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sx += xs[k];
    sy += ys[k];
    if (sx > sy + slack(tol, sy)) return k + 1;
  }
  return std::nullopt;
}

bool is_submajorised(const RealSeq& x, const RealSeq& y) {
  return !first_submajorisation_violation(x, y).has_value();
}

bool is_majorised(const RealSeq& x, const RealSeq& y) {
  if (!is_submajorised(x, y)) return false;
  const double tol = std::max(x.tolerance(), y.tolerance());
  const double total = y.sum();
  return std::abs(x.sum() - total) <= slack(tol, total);
}

RealSeq intermediate(const RealSeq& y, const RealSeq& x) {
  if (auto bad = first_submajorisation_violation(y, x))
    throw InfeasibleTarget(*bad, "intermediate: y is not submajorised by x (prefix " +
                                     std::to_string(*bad) + ")",
                           Errc::precondition);
  const double tol = std::max(x.tolerance(), y.tolerance());
  const std::size_t n = std::max(x.size(), y.size());
  const auto xs = sorted_padded(x, n);
  const double target = y.sum();

  // Greedy: drain mass from the tail of x* until the totals agree. The prefix
  // sums of the result are min(S_k(x), sum y), so y stays submajorised.
  std::vector<double> candidate = xs;
  double excess = std::accumulate(xs.begin(), xs.end(), 0.0) - target;
  for (std::size_t k = n; k-- > 0 && excess > 0.0;) {
    const double take = std::min(candidate[k], excess);
    candidate[k] -= take;
    excess -= take;
  }
  if (valid_intermediate(y, xs, candidate, tol)) return RealSeq(std::move(candidate), tol);

  // Fallback: build the same prefix-sum profile min(S_k(x), sum y) directly in
  // extended precision, then difference it.
  long double running = 0.0L;
  long double previous = 0.0L;
  const long double cap = target;
  for (std::size_t k = 0; k < n; ++k) {
    running += xs[k];
    const long double profile = std::min(running, cap);
    candidate[k] = std::clamp(static_cast<double>(profile - previous), 0.0, xs[k]);
    previous = profile;
  }
  if (valid_intermediate(y, xs, candidate, tol)) return RealSeq(std::move(candidate), tol);
  throw Error(Errc::internal, "intermediate: no verified candidate found");
}

double distortion(const RealSeq& b, const IdealNorm& norm, std::size_t n) {
  if (n < b.size())
    throw Error(Errc::invalid_parameter, "distortion: dimension " + std::to_string(n) +
                                             " is shorter than the sequence");
  if (n == 0) return 0.0;
  const auto padded = b.padded(n);
  if (norm.fully_symmetric()) return norm.evaluate(padded.values());
  const double p = norm.p();
  return padded.sum() * std::pow(static_cast<double>(n), 1.0 / p - 1.0);
}

}  // namespace schurpat
