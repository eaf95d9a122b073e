#include "schurpat/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>

#include "schurpat/error.hpp"

namespace schurpat::oracle {

std::vector<double> singular_values_via_gram(const Matrix& a) {
  const Eigen::MatrixXcd gram = a.dense().adjoint() * a.dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    out.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()(i))));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<std::vector<bool>> dd_feasibility_table(const Pattern& p, std::size_t max_budget) {
  const std::size_t k = p.size();
  if (k > 24) throw Error(Errc::invalid_input, "brute force limited to 24 cells");
  const std::size_t n = p.box();
  // Per-row and per-column bit masks over cell indices.
  std::vector<std::uint32_t> row_mask(n, 0);
  std::vector<std::uint32_t> col_mask(n, 0);
  for (std::size_t i = 0; i < k; ++i) {
    row_mask[p.cells()[i].row] |= 1U << i;
    col_mask[p.cells()[i].col] |= 1U << i;
  }
  std::vector<std::vector<bool>> feasible(max_budget + 1, std::vector<bool>(max_budget + 1, false));
  const std::uint32_t all = k == 32 ? ~0U : ((1U << k) - 1U);
  // Bit set = cell assigned to C.
  for (std::uint32_t c_set = 0;; ++c_set) {
    std::size_t worst_row = 0;
    std::size_t worst_col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      worst_row = std::max<std::size_t>(worst_row, std::popcount(row_mask[j] & ~c_set & all));
      worst_col = std::max<std::size_t>(worst_col, std::popcount(col_mask[j] & c_set));
    }
    for (std::size_t r = worst_row; r <= max_budget; ++r)
      for (std::size_t c = worst_col; c <= max_budget; ++c) feasible[r][c] = true;
    if (c_set == all) break;
  }
  return feasible;
}

std::size_t min_cover_size(const Pattern& p) {
  const std::size_t n = p.box();
  if (n > 20) throw Error(Errc::invalid_input, "brute force limited to 20 rows");
  std::size_t best = n;
  for (std::uint32_t rows = 0; rows < (1U << n); ++rows) {
    std::uint64_t cols = 0;
    for (const Cell& c : p.cells())
      if (!(rows >> c.row & 1U)) cols |= std::uint64_t{1} << c.col;
    best = std::min<std::size_t>(best, std::popcount(rows) + std::popcount(cols));
  }
  return best;
}

std::size_t longest_chain(const Pattern& p) {
  const std::size_t k = p.size();
  if (k > 24) throw Error(Errc::invalid_input, "brute force limited to 24 cells");
  std::size_t best = 0;
  std::vector<Cell> chosen;
  for (std::uint32_t subset = 1; subset < (1U << k); ++subset) {
    const auto size = static_cast<std::size_t>(std::popcount(subset));
    if (size <= best) continue;
    chosen.clear();
    for (std::size_t i = 0; i < k; ++i)
      if (subset >> i & 1U) chosen.push_back(p.cells()[i]);
    std::sort(chosen.begin(), chosen.end());
    bool chain = true;
    for (std::size_t i = 1; i < chosen.size() && chain; ++i)
      chain = chosen[i].row > chosen[i - 1].row && chosen[i].col > chosen[i - 1].col;
    if (chain) best = size;
  }
  return best;
}

std::vector<double> t_transform_mix(std::vector<double> y, std::size_t count, Rng& rng) {
  if (y.size() < 2) return y;
  for (std::size_t step = 0; step < count; ++step) {
    const std::size_t i = rng() % y.size();
    std::size_t j = rng() % (y.size() - 1);
    if (j >= i) ++j;
    const double t = uniform01(rng);
    const double a = y[i];
    const double b = y[j];
    y[i] = t * a + (1.0 - t) * b;
    y[j] = (1.0 - t) * a + t * b;
  }
  return y;
}

double distortion_grid(const std::vector<double>& b, const IdealNorm& norm, std::size_t n,
                       double step) {
  std::vector<double> bs = b;
  bs.resize(std::max(n, bs.size()), 0.0);
  std::sort(bs.begin(), bs.end(), std::greater<>());
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + bs[k];

  const double slack = 1e-12;
  std::vector<double> a(n, 0.0);
  double best = 0.0;
  // a is built nonincreasing, level by level, in units of `step`.
  std::function<void(std::size_t, long, double)> visit = [&](std::size_t k, long cap, double sum) {
    if (k == n) {
      best = std::max(best, norm.evaluate(a));
      return;
    }
    for (long units = cap; units >= 0; --units) {
      const double v = static_cast<double>(units) * step;
      if (sum + v > prefix[k + 1] + slack) continue;
      a[k] = v;
      visit(k + 1, units, sum + v);
    }
    a[k] = 0.0;
  };
  const auto top = static_cast<long>(std::floor(bs.empty() ? 0.0 : bs[0] / step + 1e-9));
  visit(0, top, 0.0);
  return best;
}

}  // namespace schurpat::oracle
