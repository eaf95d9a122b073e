#include "schurpat/schur_horn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "schurpat/error.hpp"

namespace schurpat {

namespace {

// Applies G^T H G where G acts on coordinates (j, i) as the symmetric
// orthogonal reflector [[c, s], [s, -c]].
void reflect(Eigen::MatrixXd& h, Eigen::Index j, Eigen::Index i, double c, double s) {
  const Eigen::RowVectorXd row_j = h.row(j);
  const Eigen::RowVectorXd row_i = h.row(i);
  h.row(j) = c * row_j + s * row_i;
  h.row(i) = s * row_j - c * row_i;
  const Eigen::VectorXd col_j = h.col(j);
  const Eigen::VectorXd col_i = h.col(i);
  h.col(j) = c * col_j + s * col_i;
  h.col(i) = s * col_j - c * col_i;
}

}  // namespace

SchurHornResult schur_horn_construct_traced(const SpectrumDiagonalPair& pair) {
  const std::size_t n = std::max(pair.diagonal.size(), pair.spectrum.size());
  if (n == 0) throw Error(Errc::invalid_input, "schur_horn: empty targets");
  const RealSeq d = pair.diagonal.padded(n);
  const RealSeq lam = pair.spectrum.padded(n).rearranged();

  if (auto bad = first_submajorisation_violation(d, lam))
    throw InfeasibleTarget(*bad, "schur_horn: diagonal is not majorised by the spectrum (prefix " +
                                     std::to_string(*bad) + ")");
  if (!is_majorised(d, lam))
    throw InfeasibleTarget(n, "schur_horn: diagonal and spectrum have different totals");

  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index k = 0; k < m; ++k) h(k, k) = lam[static_cast<std::size_t>(k)];

  // Targets largest first; ties keep the caller's order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });

  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), 0);
  std::vector<std::size_t> target_of(n, 0);
  std::size_t rotations = 0;

  for (std::size_t step = 0; step + 1 < n; ++step) {
    const double t = d[order[step]];
    std::stable_sort(active.begin(), active.end(), [&](std::size_t a, std::size_t b) {
      return h(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)) >
             h(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b));
    });
    auto value = [&](std::size_t idx) {
      return h(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx));
    };
    // Position of the smallest active entry that is still >= t; the entry
    // right after it is the largest one <= t.
    std::size_t upper = 0;
    while (upper + 1 < active.size() && value(active[upper + 1]) >= t) ++upper;
    if (upper + 1 == active.size()) upper = active.size() - 2;
    const std::size_t j = active[upper];
    const std::size_t i = active[upper + 1];

    const double aj = value(j);
    const double ai = value(i);
    const double c2 = aj > ai ? std::clamp((t - ai) / (aj - ai), 0.0, 1.0) : 1.0;
    const double c = std::sqrt(c2);
    const double s = std::sqrt(1.0 - c2);
    if (s != 0.0) reflect(h, static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i), c, s);
    ++rotations;

    target_of[j] = order[step];
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(upper));
  }
  target_of[active.front()] = order[n - 1];

  // Symmetric permutation: caller position p receives the index holding d[p].
  std::vector<std::size_t> source(n);
  for (std::size_t idx = 0; idx < n; ++idx) source[target_of[idx]] = idx;
  Eigen::MatrixXcd out(m, m);
  for (Eigen::Index b = 0; b < m; ++b)
    for (Eigen::Index a = 0; a < m; ++a)
      out(a, b) = h(static_cast<Eigen::Index>(source[static_cast<std::size_t>(a)]),
                    static_cast<Eigen::Index>(source[static_cast<std::size_t>(b)]));
  return {Matrix(std::move(out)), rotations};
}

Matrix kaftal_weiss_witness(const RealSeq& y, const RealSeq& x, std::size_t n) {
  if (n == 0 || n < y.size())
    throw Error(Errc::invalid_parameter, "kaftal_weiss_witness: dimension " + std::to_string(n) +
                                             " cannot hold a diagonal of length " +
                                             std::to_string(y.size()));
  // Only the n largest entries of x can appear in an n x n spectrum; since y
  // has at most n nonzero entries this truncation does not change feasibility.
  auto top = x.rearranged().padded(n);
  std::vector<double> head(top.values().begin(), top.values().begin() + static_cast<std::ptrdiff_t>(n));
  const RealSeq x_top(std::move(head), x.tolerance());
  const RealSeq y_full = y.padded(n);

  if (auto bad = first_submajorisation_violation(y_full, x_top))
    throw InfeasibleTarget(*bad, "kaftal_weiss_witness: y is not submajorised by x (prefix " +
                                     std::to_string(*bad) + ")");
  const RealSeq spectrum = intermediate(y_full, x_top);
  return schur_horn_construct({y_full, spectrum});
}

}  // namespace schurpat
