#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "schurpat/patterns.hpp"
#include "schurpat/spectra.hpp"

namespace schurpat {

/// Bounded symbol m of a Schur multiplier, normalised to sup |m| <= 1 and
/// vanishing off its support pattern.
class MultiplierSymbol {
 public:
  /// m = 1 on the support.
  static MultiplierSymbol indicator(const Pattern& support);
  /// Values off the support are dropped; if the remaining sup-modulus exceeds
  /// one, the symbol is divided by it and the divisor is kept in scale().
  static MultiplierSymbol from_values(const Pattern& support, const Eigen::MatrixXcd& values);
  /// Independent +-1 values on the support.
  static MultiplierSymbol random_signs(const Pattern& support, std::uint64_t seed);

  std::size_t n() const noexcept { return support_.box(); }
  const Eigen::MatrixXcd& values() const noexcept { return values_; }
  const Pattern& support() const noexcept { return support_; }
  double scale() const noexcept { return scale_; }

  /// Pointwise product; support is the intersection.
  friend MultiplierSymbol operator*(const MultiplierSymbol& a, const MultiplierSymbol& b);

 private:
  MultiplierSymbol(Pattern support, Eigen::MatrixXcd values, double scale)
      : support_(std::move(support)), values_(std::move(values)), scale_(scale) {}

  Pattern support_;
  Eigen::MatrixXcd values_;
  double scale_;
};

/// Entrywise product T_m(A) = {m(j, k) A(j, k)}.
Matrix apply(const MultiplierSymbol& m, const Matrix& a);

/// ||T_m(A)|| / ||A||, a lower bound for the multiplier norm of m on N.
/// Throws Errc::degenerate_input when ||A|| = 0.
double multiplier_ratio(const MultiplierSymbol& m, const Matrix& a, const IdealNorm& norm);

/// Larger of two ratios certified on the longest monotone diagonal L of the
/// pattern, with the indicator of L as symbol. The rank-one witness has 1/|L|
/// on every (row, col) drawn from L's rows and columns (so mu = (1, 0, ...))
/// and gives |L|^(1/p - 1) on Schatten p; the partial permutation of L is left
/// unchanged and gives 1. Zero for an empty pattern.
double witness_lower_bound(const Pattern& p, const IdealNorm& norm);

/// Monte-Carlo lower bound on the multiplier norm of patterns P.
///
/// Trial t uses the stream derive_seed(seed, t) and cycles through three test
/// families: t % 3 == 0 complex Gaussian A, t % 3 == 1 rank-one u v^* with
/// Gaussian u, v, and t % 3 == 2 the monotone-diagonal witness with random
/// signs. Families 0 and 1 pair A with random +-1 signs on P. The result is the
/// maximum over all trials and witness_lower_bound(P, N).
double estimate_multiplier_norm(const Pattern& p, const IdealNorm& norm, std::size_t trials,
                                std::uint64_t seed);

struct BlowupReport {
  IdealNorm norm;
  std::vector<std::size_t> sizes;
  std::vector<double> ratios;
  /// Least-squares slope of log ratio against log size, over sizes with a
  /// positive ratio; empty with fewer than two such points.
  std::optional<double> fit_exponent;
};

struct HankelReport {
  BlowupReport blowup;
  double q;
  std::size_t trials;
  std::uint64_t seed;
  std::vector<std::size_t> cell_counts;
  std::vector<std::size_t> monotone_lengths;
  std::vector<double> witness_bounds;
  /// Heuristic: max ratio / min positive ratio < 4.
  bool bounded;
};

std::optional<double> fit_loglog_slope(std::span<const std::size_t> sizes,
                                       std::span<const double> ratios);

/// For each n: V = kaftal_weiss_witness((1/n, ..., 1/n), (1, 0, ..., 0), n) and
/// the ratio of the diagonal indicator on Schatten p. Closed form n^(1/p - 1).
BlowupReport diagonal_blowup(double p, std::span<const std::size_t> sizes);

/// Moves the size n - |d| diagonal witness onto the Toeplitz line j - k = d
/// with the partial isometries e_k -> e_{a(k)}, e_k -> e_{b(k)}, and returns
/// the ratio of that line's indicator on Schatten p.
double toeplitz_transfer_check(std::int64_t d, double p, std::size_t n);

/// estimate_multiplier_norm over lacunary_hankel(q, n) for each size, with the
/// monotone-diagonal length of every pattern recorded alongside.
HankelReport hankel_probe(double q, const IdealNorm& norm, std::span<const std::size_t> sizes,
                          std::size_t trials, std::uint64_t seed);

}  // namespace schurpat
