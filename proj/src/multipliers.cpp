#include "schurpat/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "schurpat/error.hpp"
#include "schurpat/major.hpp"
#include "schurpat/random.hpp"
#include "schurpat/schur_horn.hpp"

namespace schurpat {

namespace {

Eigen::MatrixXcd indicator_values(const Pattern& support) {
  const auto m = static_cast<Eigen::Index>(support.box());
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(m, m);
  for (const Cell& c : support.cells())
    v(static_cast<Eigen::Index>(c.row), static_cast<Eigen::Index>(c.col)) = 1.0;
  return v;
}

// The canonical blow-up witness of size n: diagonal (1/n, ..., 1/n) under the
// spectrum (1, 0, ..., 0).
Matrix uniform_witness(std::size_t n) {
  const RealSeq y(std::vector<double>(n, 1.0 / static_cast<double>(n)));
  std::vector<double> x(n, 0.0);
  x[0] = 1.0;
  return kaftal_weiss_witness(y, RealSeq(std::move(x)), n);
}

// U_a V U_b^* inside an n x n box, where U_a e_k = e_{rows[k]} and
// U_b e_k = e_{cols[k]}.
Matrix transfer(const Matrix& v, std::span<const std::size_t> rows,
                std::span<const std::size_t> cols, std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m, m);
  for (std::size_t i = 0; i < v.n(); ++i)
    for (std::size_t k = 0; k < v.n(); ++k)
      out(static_cast<Eigen::Index>(rows[i]), static_cast<Eigen::Index>(cols[k])) += v(i, k);
  return Matrix(std::move(out));
}

struct ChainWitness {
  Matrix matrix;
  Pattern chain;
};

std::optional<ChainWitness> chain_witness(const Pattern& p) {
  const auto chain = extract_monotone_diagonal(p);
  if (chain.empty()) return std::nullopt;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  for (const Cell& c : chain) {
    rows.push_back(c.row);
    cols.push_back(c.col);
  }
  return ChainWitness{transfer(uniform_witness(chain.size()), rows, cols, p.box()),
                      Pattern(p.box(), chain)};
}

}  // namespace

MultiplierSymbol MultiplierSymbol::indicator(const Pattern& support) {
  return MultiplierSymbol(support, indicator_values(support), 1.0);
}

MultiplierSymbol MultiplierSymbol::from_values(const Pattern& support,
                                               const Eigen::MatrixXcd& values) {
  const auto m = static_cast<Eigen::Index>(support.box());
  if (values.rows() != m || values.cols() != m)
    throw Error(Errc::invalid_input, "symbol values must match the support box");
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(m, m);
  double sup = 0.0;
  for (const Cell& c : support.cells()) {
    const auto j = static_cast<Eigen::Index>(c.row);
    const auto k = static_cast<Eigen::Index>(c.col);
    if (!std::isfinite(values(j, k).real()) || !std::isfinite(values(j, k).imag()))
      throw Error(Errc::invalid_input, "symbol values must be finite");
    v(j, k) = values(j, k);
    sup = std::max(sup, std::abs(values(j, k)));
  }
  double scale = 1.0;
  if (sup > 1.0) {
    scale = sup;
    v /= sup;
  }
  return MultiplierSymbol(support, std::move(v), scale);
}

MultiplierSymbol MultiplierSymbol::random_signs(const Pattern& support, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  Eigen::MatrixXcd v = indicator_values(support);
  for (const Cell& c : support.cells())
    if (rng() & 1U) v(static_cast<Eigen::Index>(c.row), static_cast<Eigen::Index>(c.col)) = -1.0;
  return MultiplierSymbol(support, std::move(v), 1.0);
}

MultiplierSymbol operator*(const MultiplierSymbol& a, const MultiplierSymbol& b) {
  if (a.n() != b.n()) throw Error(Errc::invalid_input, "symbol dimensions differ");
  std::vector<Cell> common;
  std::set_intersection(a.support_.cells().begin(), a.support_.cells().end(),
                        b.support_.cells().begin(), b.support_.cells().end(),
                        std::back_inserter(common));
  return MultiplierSymbol(Pattern(a.n(), std::move(common)), a.values_.cwiseProduct(b.values_),
                          a.scale_ * b.scale_);
}

Matrix apply(const MultiplierSymbol& m, const Matrix& a) {
  if (m.n() != a.n())
    throw Error(Errc::invalid_input, "symbol is " + std::to_string(m.n()) + "x" +
                                         std::to_string(m.n()) + " but the matrix is " +
                                         std::to_string(a.n()) + "x" + std::to_string(a.n()));
  return Matrix(m.values().cwiseProduct(a.dense()));
}

double multiplier_ratio(const MultiplierSymbol& m, const Matrix& a, const IdealNorm& norm) {
  const double denominator = ideal_norm(a, norm);
  if (denominator == 0.0)
    throw Error(Errc::degenerate_input, "multiplier_ratio: test matrix has zero norm");
  return ideal_norm(apply(m, a), norm) / denominator;
}

double witness_lower_bound(const Pattern& p, const IdealNorm& norm) {
  const auto witness = chain_witness(p);
  if (!witness) return 0.0;
  const double spread = multiplier_ratio(MultiplierSymbol::indicator(witness->chain), witness->matrix, norm);
  // The chain's partial permutation is fixed by the indicator, giving ratio 1.
  Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(p.box()),
                                                 static_cast<Eigen::Index>(p.box()));
  for (const Cell& c : witness->chain.cells())
    unit(static_cast<Eigen::Index>(c.row), static_cast<Eigen::Index>(c.col)) = 1.0;
  const double fixed = multiplier_ratio(MultiplierSymbol::indicator(witness->chain), Matrix(std::move(unit)), norm);
  return std::max(spread, fixed);
}

double estimate_multiplier_norm(const Pattern& p, const IdealNorm& norm, std::size_t trials,
                                std::uint64_t seed) {
  if (trials == 0) throw Error(Errc::invalid_parameter, "estimate needs at least one trial");
  if (p.is_empty()) return 0.0;
  const std::size_t n = p.box();
  const auto witness = chain_witness(p);
  double best = witness_lower_bound(p, norm);

  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t stream = derive_seed(seed, t);
    Rng rng = make_rng(stream);
    double ratio = 0.0;
    switch (t % 3) {
      case 0: {
        const Matrix a = gaussian_matrix(n, rng);
        ratio = multiplier_ratio(MultiplierSymbol::random_signs(p, derive_seed(stream, 1)), a, norm);
        break;
      }
      case 1: {
        const Eigen::VectorXcd u = gaussian_vector(n, rng);
        const Eigen::VectorXcd v = gaussian_vector(n, rng);
        const Matrix a(Eigen::MatrixXcd(u * v.adjoint()));
        ratio = multiplier_ratio(MultiplierSymbol::random_signs(p, derive_seed(stream, 1)), a, norm);
        break;
      }
      default: {
        const auto signs = MultiplierSymbol::random_signs(witness->chain, derive_seed(stream, 2));
        ratio = multiplier_ratio(signs, witness->matrix, norm);
        break;
      }
    }
    best = std::max(best, ratio);
  }
  return best;
}

std::optional<double> fit_loglog_slope(std::span<const std::size_t> sizes,
                                       std::span<const double> ratios) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < std::min(sizes.size(), ratios.size()); ++i) {
    if (sizes[i] == 0 || !(ratios[i] > 0.0)) continue;
    xs.push_back(std::log(static_cast<double>(sizes[i])));
    ys.push_back(std::log(ratios[i]));
  }
  if (xs.size() < 2) return std::nullopt;
  const double count = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

namespace {

void require_increasing_sizes(std::span<const std::size_t> sizes) {
  if (sizes.empty()) throw Error(Errc::invalid_parameter, "at least one size is required");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw Error(Errc::invalid_parameter, "sizes must be positive");
    if (i > 0 && sizes[i] <= sizes[i - 1])
      throw Error(Errc::invalid_parameter, "sizes must be strictly increasing");
  }
}

}  // namespace

BlowupReport diagonal_blowup(double p, std::span<const std::size_t> sizes) {
  if (!(p > 0.0 && p <= 1.0))
    throw Error(Errc::invalid_parameter, "blow-up exponent p must lie in (0, 1]");
  require_increasing_sizes(sizes);
  const IdealNorm norm = IdealNorm::schatten(p);
  BlowupReport report{norm, {sizes.begin(), sizes.end()}, {}, std::nullopt};
  for (std::size_t n : sizes) {
    const Matrix v = uniform_witness(n);
    report.ratios.push_back(
        multiplier_ratio(MultiplierSymbol::indicator(Pattern::diagonal(n)), v, norm));
  }
  report.fit_exponent = fit_loglog_slope(report.sizes, report.ratios);
  return report;
}

double toeplitz_transfer_check(std::int64_t d, double p, std::size_t n) {
  const IdealNorm norm = IdealNorm::schatten(p);
  const auto size = static_cast<std::int64_t>(n);
  if (n == 0 || d >= size || -d >= size)
    throw Error(Errc::invalid_parameter, "Toeplitz offset must satisfy |d| < n");
  const std::size_t length = n - static_cast<std::size_t>(d >= 0 ? d : -d);
  const std::size_t row_shift = d > 0 ? static_cast<std::size_t>(d) : 0;
  const std::size_t col_shift = d < 0 ? static_cast<std::size_t>(-d) : 0;
  std::vector<std::size_t> rows(length);
  std::vector<std::size_t> cols(length);
  for (std::size_t k = 0; k < length; ++k) {
    rows[k] = k + row_shift;
    cols[k] = k + col_shift;
  }
  const Pattern line = transform(Pattern::diagonal(length), rows, cols, n);
  const std::int64_t offsets[] = {d};
  if (line != Pattern::toeplitz(offsets, n))
    throw Error(Errc::internal, "shifted diagonal does not match the Toeplitz line");
  const Matrix a = transfer(uniform_witness(length), rows, cols, n);
  return multiplier_ratio(MultiplierSymbol::indicator(line), a, norm);
}

HankelReport hankel_probe(double q, const IdealNorm& norm, std::span<const std::size_t> sizes,
                          std::size_t trials, std::uint64_t seed) {
  require_increasing_sizes(sizes);
  if (trials == 0) throw Error(Errc::invalid_parameter, "hankel probe needs at least one trial");
  HankelReport report{BlowupReport{norm, {sizes.begin(), sizes.end()}, {}, std::nullopt},
                      q, trials, seed, {}, {}, {}, true};
  for (std::size_t n : sizes) {
    const Pattern p = Pattern::lacunary_hankel(q, n);
    report.cell_counts.push_back(p.size());
    report.monotone_lengths.push_back(extract_monotone_diagonal(p).size());
    report.witness_bounds.push_back(witness_lower_bound(p, norm));
    report.blowup.ratios.push_back(estimate_multiplier_norm(p, norm, trials, seed));
  }
  report.blowup.fit_exponent = fit_loglog_slope(report.blowup.sizes, report.blowup.ratios);
  double lo = 0.0;
  double hi = 0.0;
  for (double r : report.blowup.ratios) {
    if (!(r > 0.0)) continue;
    lo = lo == 0.0 ? r : std::min(lo, r);
    hi = std::max(hi, r);
  }
  report.bounded = lo == 0.0 || hi / lo < 4.0;
  return report;
}

}  // namespace schurpat
