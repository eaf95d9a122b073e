#include "schurpat/check.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "schurpat/error.hpp"
#include "schurpat/major.hpp"
#include "schurpat/multipliers.hpp"
#include "schurpat/oracles.hpp"
#include "schurpat/patterns.hpp"
#include "schurpat/random.hpp"
#include "schurpat/schur_horn.hpp"
#include "schurpat/spectra.hpp"

namespace schurpat {

namespace {

class Recorder {
 public:
  Recorder(std::string suite, std::string name) {
    result_.suite = std::move(suite);
    result_.name = std::move(name);
  }

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.detail = describe();
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::size_t scaled(std::size_t base, double scale) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(base * scale)));
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); }

std::vector<double> abs_diagonal(const Matrix& a) {
  std::vector<double> out;
  for (const Complex& z : diag_extract(a)) out.push_back(std::abs(z));
  return out;
}

std::vector<double> random_profile(std::size_t n, Rng& rng) {
  std::vector<double> v(n);
  for (double& x : v) x = uniform01(rng) < 0.2 ? 0.0 : uniform01(rng);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::vector<double> shuffled(std::vector<double> v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
  return v;
}

std::string str(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

// --- spectra ---------------------------------------------------------------

void spectra_checks(std::vector<CheckResult>& out, std::uint64_t seed, double scale) {
  const char* suite = "spectra";
  Rng rng = make_rng(derive_seed(seed, 1));
  const std::size_t count = scaled(60, scale);
  {
    Recorder r(suite, "svd_matches_gram_eigenvalues");
    for (std::size_t t = 0; t < count; ++t) {
      const Matrix a = gaussian_matrix(pick(rng, 1, 12), rng);
      const auto mu = singular_values(a);
      const auto ref = oracle::singular_values_via_gram(a);
      double err = 0.0;
      for (std::size_t k = 0; k < ref.size(); ++k) err = std::max(err, std::abs(mu[k] - ref[k]));
      r.expect(err <= 1e-9 * std::max(1.0, ref[0]), [&] { return "max error " + str(err); });
    }
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "unitary_invariance");
    for (std::size_t t = 0; t < count; ++t) {
      const std::size_t n = pick(rng, 1, 10);
      const Matrix a = gaussian_matrix(n, rng);
      const Matrix u = random_unitary(n, rng);
      const Matrix v = random_unitary(n, rng);
      const auto lhs = singular_values(Matrix(u.dense() * a.dense() * v.dense()));
      const auto rhs = singular_values(a);
      double err = 0.0;
      for (std::size_t k = 0; k < n; ++k) err = std::max(err, std::abs(lhs[k] - rhs[k]));
      r.expect(err <= 1e-9, [&] { return "max error " + str(err); });
    }
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "diagonal_submajorised_by_singular_values");
    for (std::size_t t = 0; t < count; ++t) {
      const Matrix a = gaussian_matrix(pick(rng, 1, 16), rng);
      r.expect(is_submajorised(RealSeq(abs_diagonal(a), 1e-9), RealSeq(singular_values(a), 1e-9)),
               [&] { return "violation at n = " + std::to_string(a.n()); });
    }
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "averaging_identity_exact");
    for (std::size_t t = 0; t < count; ++t) {
      const Matrix a = gaussian_matrix(pick(rng, 1, 24), rng);
      const Matrix avg = diag_average(a);
      const Matrix ref = diag_embed(std::span<const Complex>(diag_extract(a)));
      const double err = (avg.dense() - ref.dense()).cwiseAbs().maxCoeff();
      r.expect(err <= 1e-12, [&] { return "max deviation " + str(err); });
    }
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "schatten_quasi_triangle");
    const double exponents[] = {1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0, 2.0};
    for (std::size_t t = 0; t < count; ++t) {
      const std::size_t n = pick(rng, 1, 10);
      const Matrix a = gaussian_matrix(n, rng);
      const Matrix b = gaussian_matrix(n, rng);
      for (double p : exponents) {
        const auto norm = IdealNorm::schatten(p);
        const double na = ideal_norm(a, norm);
        const double nb = ideal_norm(b, norm);
        const double nab = ideal_norm(a + b, norm);
        const bool ok = p <= 1.0 ? std::pow(nab, p) <= std::pow(na, p) + std::pow(nb, p) + 1e-9
                                 : nab <= na + nb + 1e-9;
        r.expect(ok, [&] { return "p = " + str(p) + " at n = " + std::to_string(n); });
      }
    }
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "eckart_young");
    for (std::size_t t = 0; t < count; ++t) {
      const std::size_t n = pick(rng, 1, 8);
      const Matrix a = gaussian_matrix(n, rng);
      const auto mu = singular_values(a);
      r.expect(std::abs(mu[0] - ideal_norm(a, IdealNorm::operator_norm())) <= 1e-12,
               [] { return std::string("mu(0) differs from the operator norm"); });
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.dense(), Eigen::ComputeFullU | Eigen::ComputeFullV);
      for (std::size_t k = 0; k < n; ++k) {
        Eigen::VectorXd s = svd.singularValues();
        for (std::size_t i = k; i < n; ++i) s(static_cast<Eigen::Index>(i)) = 0.0;
        const Eigen::MatrixXcd best = svd.matrixU() * s.cast<Complex>().asDiagonal() *
                                      svd.matrixV().adjoint();
        const double err = ideal_norm(Matrix(a.dense() - best), IdealNorm::operator_norm());
        r.expect(std::abs(err - mu[k]) <= 1e-9,
                 [&] { return "k = " + std::to_string(k) + ": " + str(err) + " vs " + str(mu[k]); });
      }
    }
    out.push_back(r.take());
  }
}

// --- major -----------------------------------------------------------------

void major_checks(std::vector<CheckResult>& out, std::uint64_t seed, double scale) {
  const char* suite = "major";
  Rng rng = make_rng(derive_seed(seed, 2));
  const std::size_t count = scaled(200, scale);
  {
    Recorder r(suite, "ky_fan_matches_sort_and_sum");
    for (std::size_t t = 0; t < count; ++t) {
      auto v = shuffled(random_profile(pick(rng, 0, 12), rng), rng);
      const RealSeq x(v);
      std::sort(v.begin(), v.end(), std::greater<>());
      for (std::size_t k = 0; k <= v.size() + 1; ++k) {
        double ref = 0.0;
        for (std::size_t i = 0; i < std::min(k, v.size()); ++i) ref += v[i];
        r.expect(std::abs(ky_fan_sum(x, k) - ref) <= 1e-12, [&] { return "k = " + std::to_string(k); });
      }
    }
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "t_transforms_majorised");
    for (std::size_t t = 0; t < count; ++t) {
      const auto y = random_profile(pick(rng, 1, 12), rng);
      const auto x = oracle::t_transform_mix(y, pick(rng, 1, 20), rng);
      r.expect(is_majorised(RealSeq(x), RealSeq(y)), [] { return std::string("D y not majorised by y"); });
    }
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "ky_fan_matrix_inequality");
    for (std::size_t t = 0; t < scaled(60, scale); ++t) {
      const std::size_t n = pick(rng, 1, 10);
      const Matrix a = gaussian_matrix(n, rng);
      const Matrix b = gaussian_matrix(n, rng);
      const auto sa = singular_values(a);
      const auto sb = singular_values(b);
      std::vector<double> sum(n);
      for (std::size_t k = 0; k < n; ++k) sum[k] = sa[k] + sb[k];
      r.expect(is_submajorised(RealSeq(singular_values(a + b), 1e-9), RealSeq(sum, 1e-9)),
               [&] { return "violation at n = " + std::to_string(n); });
    }
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "intermediate_postconditions");
    for (std::size_t t = 0; t < count; ++t) {
      const auto x = random_profile(pick(rng, 1, 12), rng);
      auto y = oracle::t_transform_mix(x, pick(rng, 0, 15), rng);
      const double theta = 1.0 - uniform01(rng);
      for (double& v : y) v *= theta;
      const RealSeq ys(shuffled(y, rng));
      const RealSeq xp = intermediate(ys, RealSeq(x));
      bool below = true;
      for (std::size_t k = 0; k < x.size(); ++k)
        below = below && xp[k] >= 0.0 && xp[k] <= x[k] + 1e-12;
      r.expect(below && is_majorised(ys, xp), [] { return std::string("postcondition failed"); });
    }
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "distortion_matches_grid");
    const double step = 1.0 / 16.0;
    for (double p : {0.5, 1.0, 2.0}) {
      for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<double> b(n, 0.0);
        b[0] = 1.0;
        const auto norm = IdealNorm::schatten(p);
        const double closed = distortion(RealSeq(b), norm, n);
        const double grid = oracle::distortion_grid(b, norm, n, step);
        r.expect(grid <= closed + 1e-9 && closed - grid <= 2.0 * step * closed,
                 [&] { return "p = " + str(p) + ", n = " + std::to_string(n); });
      }
    }
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "submajorisation_transitive");
    for (std::size_t t = 0; t < count; ++t) {
      const auto z = random_profile(pick(rng, 1, 10), rng);
      auto y = oracle::t_transform_mix(z, 5, rng);
      for (double& v : y) v *= 1.0 - 0.5 * uniform01(rng);
      auto x = oracle::t_transform_mix(y, 5, rng);
      for (double& v : x) v *= 1.0 - 0.5 * uniform01(rng);
      const RealSeq xs(x), ys(y), zs(z);
      const bool premise = is_submajorised(xs, ys) && is_submajorised(ys, zs);
      r.expect(!premise || is_submajorised(xs, zs), [] { return std::string("not transitive"); });
    }
    out.push_back(r.take());
  }
}

// --- schur_horn ------------------------------------------------------------

void schur_horn_checks(std::vector<CheckResult>& out, std::uint64_t seed, double scale) {
  const char* suite = "schur_horn";
  Rng rng = make_rng(derive_seed(seed, 3));
  const std::size_t count = scaled(80, scale);
  {
    Recorder r(suite, "round_trip");
    for (std::size_t t = 0; t < count; ++t) {
      const std::size_t n = pick(rng, 1, 16);
      const auto lam = random_profile(n, rng);
      const auto d = shuffled(oracle::t_transform_mix(lam, pick(rng, 0, 3 * n), rng), rng);
      const auto res = schur_horn_construct_traced({RealSeq(d), RealSeq(lam)});
      const auto eig = hermitian_eigenvalues(res.matrix);
      double err = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        err = std::max(err, std::abs(eig[k] - lam[k]));
        err = std::max(err, std::abs(res.matrix(k, k).real() - d[k]));
      }
      r.expect(err <= 1e-8 * std::max(1.0, lam[0]) && res.rotations == n - 1 &&
                   res.matrix.is_hermitian(1e-12),
               [&] { return "n = " + std::to_string(n) + ", error " + str(err); });
    }
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "kaftal_weiss_witness");
    for (std::size_t t = 0; t < count; ++t) {
      const std::size_t n = pick(rng, 1, 12);
      const auto x = random_profile(pick(rng, 1, n), rng);
      auto y = oracle::t_transform_mix(x, pick(rng, 0, 10), rng);
      const double theta = 1.0 - uniform01(rng);
      for (double& v : y) v *= theta;
      y = shuffled(y, rng);
      const Matrix v = kaftal_weiss_witness(RealSeq(y), RealSeq(x), n);
      const auto eig = hermitian_eigenvalues(v);
      const auto mu = singular_values(v);
      bool ok = eig.back() >= -1e-8;
      for (std::size_t k = 0; k < n; ++k) {
        const double target = k < y.size() ? y[k] : 0.0;
        const double bound = k < x.size() ? x[k] : 0.0;
        ok = ok && std::abs(v(k, k).real() - target) <= 1e-8 && mu[k] <= bound + 1e-8;
      }
      r.expect(ok, [&] { return "n = " + std::to_string(n); });
    }
    out.push_back(r.take());
  }
}

// --- patterns --------------------------------------------------------------

Pattern random_small_pattern(Rng& rng, std::size_t box, std::size_t max_cells) {
  std::vector<Cell> cells;
  const std::size_t target = pick(rng, 0, max_cells);
  for (std::size_t i = 0; i < target; ++i) cells.push_back({rng() % box, rng() % box});
  return Pattern(box, std::move(cells));
}

void pattern_checks(std::vector<CheckResult>& out, std::uint64_t seed, double scale) {
  const char* suite = "patterns";
  Rng rng = make_rng(derive_seed(seed, 4));
  const std::size_t count = scaled(300, scale);
  {
    Recorder r(suite, "dd_decompose_matches_exhaustive_search");
    for (std::size_t t = 0; t < count; ++t) {
      const Pattern p = random_small_pattern(rng, pick(rng, 1, 4), 12);
      const auto table = oracle::dd_feasibility_table(p, 2);
      for (std::size_t rb = 0; rb <= 2; ++rb)
        for (std::size_t cb = 0; cb <= 2; ++cb) {
          const auto d = dd_decompose(p, rb, cb);
          const bool ok = d.has_value() == table[rb][cb] && (!d || d->is_valid_for(p));
          r.expect(ok, [&] {
            return "r = " + std::to_string(rb) + ", c = " + std::to_string(cb) + ", " +
                   std::to_string(p.size()) + " cells";
          });
        }
    }
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "minimal_cover_matches_brute_force");
    for (std::size_t t = 0; t < count; ++t) {
      const Pattern p = random_small_pattern(rng, pick(rng, 1, 6), 14);
      const auto cover = minimal_cover(p);
      bool covers = true;
      for (const Cell& c : p.cells())
        covers = covers && std::any_of(cover.begin(), cover.end(), [&](const Line& l) {
                   return (l.side == Side::row && l.index == c.row) ||
                          (l.side == Side::column && l.index == c.col);
                 });
      r.expect(covers && cover.size() == oracle::min_cover_size(p),
               [&] { return "cover size " + std::to_string(cover.size()); });
    }
    for (std::size_t n = 1; n <= 64; n *= 2)
      r.expect(minimal_cover(Pattern::diagonal(n)).size() == n,
               [&] { return "diagonal(" + std::to_string(n) + ")"; });
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "monotone_diagonal_matches_brute_force");
    for (std::size_t t = 0; t < count; ++t) {
      const Pattern p = random_small_pattern(rng, 8, 15);
      const auto chain = extract_monotone_diagonal(p);
      bool valid = true;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        valid = valid && p.contains(chain[i]);
        if (i > 0) valid = valid && chain[i].row > chain[i - 1].row && chain[i].col > chain[i - 1].col;
      }
      r.expect(valid && chain.size() == oracle::longest_chain(p),
               [&] { return "chain length " + std::to_string(chain.size()); });
    }
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "toeplitz_lines_contain_diagonals");
    for (std::size_t n = 1; n <= 16; ++n)
      for (std::int64_t d = -static_cast<std::int64_t>(n) + 1; d < static_cast<std::int64_t>(n); ++d) {
        const std::int64_t offsets[] = {d};
        const auto chain = extract_monotone_diagonal(Pattern::toeplitz(offsets, n));
        r.expect(chain.size() == n - static_cast<std::size_t>(std::abs(d)),
                 [&] { return "n = " + std::to_string(n) + ", d = " + std::to_string(d); });
      }
    out.push_back(r.take());
  }
}

// --- multipliers -----------------------------------------------------------

void multiplier_checks(std::vector<CheckResult>& out, std::uint64_t seed, double scale) {
  const char* suite = "multipliers";
  Rng rng = make_rng(derive_seed(seed, 5));
  const std::size_t count = scaled(100, scale);
  {
    Recorder r(suite, "hilbert_schmidt_contraction");
    for (std::size_t t = 0; t < count; ++t) {
      const std::size_t n = pick(rng, 1, 12);
      const Pattern support = Pattern::random(n, uniform01(rng), rng());
      Eigen::MatrixXcd values(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      for (Eigen::Index j = 0; j < values.rows(); ++j)
        for (Eigen::Index k = 0; k < values.cols(); ++k) values(j, k) = unit_disc_sample(rng);
      const auto m = MultiplierSymbol::from_values(support, values);
      const double ratio = multiplier_ratio(m, gaussian_matrix(n, rng), IdealNorm::schatten(2.0));
      r.expect(ratio <= 1.0 + 1e-9, [&] { return "ratio " + str(ratio); });
    }
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "diagonal_symbol_is_average");
    for (std::size_t t = 0; t < count; ++t) {
      const std::size_t n = pick(rng, 1, 16);
      const Matrix a = gaussian_matrix(n, rng);
      const Matrix lhs = apply(MultiplierSymbol::indicator(Pattern::diagonal(n)), a);
      const double err = (lhs.dense() - diag_average(a).dense()).cwiseAbs().maxCoeff();
      r.expect(err <= 1e-12, [&] { return "deviation " + str(err); });
    }
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "diagonal_symbol_submajorised");
    for (std::size_t t = 0; t < count; ++t) {
      const std::size_t n = pick(rng, 1, 12);
      const Matrix a = gaussian_matrix(n, rng);
      const auto m = MultiplierSymbol::random_signs(Pattern::diagonal(n), rng());
      r.expect(is_submajorised(RealSeq(singular_values(apply(m, a)), 1e-9),
                               RealSeq(singular_values(a), 1e-9)),
               [&] { return "n = " + std::to_string(n); });
    }
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "diagonal_blowup_closed_form");
    const std::size_t sizes[] = {1, 2, 3, 4, 8, 16, 32};
    for (double p : {1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0}) {
      const auto report = diagonal_blowup(p, sizes);
      for (std::size_t i = 0; i < report.sizes.size(); ++i) {
        const double expected = std::pow(static_cast<double>(report.sizes[i]), 1.0 / p - 1.0);
        r.expect(std::abs(report.ratios[i] - expected) <= 1e-8 * expected,
                 [&] { return "p = " + str(p) + ", n = " + std::to_string(report.sizes[i]); });
      }
      r.expect(report.fit_exponent && std::abs(*report.fit_exponent - (1.0 / p - 1.0)) <= 0.01,
               [&] { return "fitted exponent off at p = " + str(p); });
    }
    out.push_back(r.take());
  }
  {
    Recorder r(suite, "toeplitz_transfer");
    for (std::size_t n = 1; n <= 12; ++n)
      for (std::int64_t d = -static_cast<std::int64_t>(n) + 1; d < static_cast<std::int64_t>(n); ++d) {
        const double expected = static_cast<double>(n - static_cast<std::size_t>(std::abs(d)));
        const double got = toeplitz_transfer_check(d, 0.5, n);
        r.expect(std::abs(got - expected) <= 1e-10 * expected,
                 [&] { return "n = " + std::to_string(n) + ", d = " + std::to_string(d); });
      }
    out.push_back(r.take());
  }
}

}  // namespace

std::vector<CheckResult> run_checks(std::string_view suite, std::uint64_t seed, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw Error(Errc::invalid_parameter, "check scale must be positive");
  using Runner = void (*)(std::vector<CheckResult>&, std::uint64_t, double);
  const std::pair<std::string_view, Runner> suites[] = {
      {"spectra", spectra_checks},       {"major", major_checks},
      {"schur_horn", schur_horn_checks}, {"patterns", pattern_checks},
      {"multipliers", multiplier_checks},
  };
  std::vector<CheckResult> out;
  bool matched = false;
  for (const auto& [name, run] : suites) {
    if (suite == "all" || suite == name) {
      matched = true;
      run(out, seed, scale);
    }
  }
  if (!matched) throw Error(Errc::invalid_parameter, "unknown check suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace schurpat
