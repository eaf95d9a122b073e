// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
// Usage: schurpat_acceptance <path-to-schurpat-cli>

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "schurpat/major.hpp"
#include "schurpat/multipliers.hpp"
#include "schurpat/oracles.hpp"
#include "schurpat/patterns.hpp"
#include "schurpat/random.hpp"
#include "schurpat/schur_horn.hpp"
#include "schurpat/spectra.hpp"

using namespace schurpat;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); }

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

std::vector<double> eigenvalues_desc(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.dense(), Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::vector<double> jacobi_singular_values(const Matrix& a) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.dense());
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

// Mixed test matrices: Gaussian, rescaled Gaussian, low rank, and U diag V.
Matrix test_matrix(std::size_t n, Rng& rng) {
  switch (rng() % 4) {
    case 0:
      return gaussian_matrix(n, rng);
    case 1:
      return Complex(std::pow(10.0, 6.0 * uniform01(rng) - 3.0)) * gaussian_matrix(n, rng);
    case 2: {
      const auto u = gaussian_vector(n, rng);
      const auto v = gaussian_vector(n, rng);
      return Matrix(Eigen::MatrixXcd(u * v.adjoint()));
    }
    default: {
      auto prof = random_profile(n, rng);
      prof[0] = std::max(prof[0], 0.5);
      Eigen::VectorXcd d(static_cast<Eigen::Index>(n));
      for (std::size_t k = 0; k < n; ++k) d(static_cast<Eigen::Index>(k)) = prof[k];
      const Matrix u = random_unitary(n, rng);
      const Matrix w = random_unitary(n, rng);
      return Matrix(Eigen::MatrixXcd(u.dense() * d.asDiagonal() * w.dense()));
    }
  }
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  status = pclose(pipe);
  return out;
}

struct BlowupCsv {
  std::vector<double> sizes, ratios, exponents;
};

bool parse_blowup_csv(const std::string& text, BlowupCsv& out) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "size,ratio,exponent") return false;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string a, b, c;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, c)) return false;
    out.sizes.push_back(std::stod(a));
    out.ratios.push_back(std::stod(b));
    out.exponents.push_back(c.empty() ? NAN : std::stod(c));
  }
  return !out.sizes.empty();
}

// 1 -----------------------------------------------------------------------
Outcome blowup_dichotomy(const std::string& cli) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  for (double p : {0.5, 1.0}) {
    int status = 0;
    const std::string cmd = "'" + cli + "' blowup --p " + (p == 0.5 ? "0.5" : "1") +
                            " --sizes 2,4,8,16,32,64 --format csv 2>/dev/null";
    BlowupCsv csv;
    if (!parse_blowup_csv(run_command(cmd, status), csv) || status != 0 || csv.sizes.size() != 6) {
      return {false, "CLI run failed for p = " + fmt(p)};
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < csv.sizes.size(); ++i) {
      const double expected = p == 0.5 ? csv.sizes[i] : 1.0;
      const double err = p == 0.5 ? std::abs(csv.ratios[i] - expected) / expected
                                  : std::abs(csv.ratios[i] - expected);
      worst = std::max(worst, err);
    }
    const double exponent = csv.exponents.front();
    const double target = p == 0.5 ? 1.0 : 0.0;
    const double tol = p == 0.5 ? 1e-8 : 1e-9;
    ok = ok && worst <= tol && std::abs(exponent - target) <= 0.01;
    detail += "p=" + fmt(p) + " max ratio err " + fmt(worst) + " exponent " + fmt(exponent) + "; ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && secs < 5.0;
  return {ok, detail + "runtime " + fmt(secs) + " s (limit 5)"};
}

// 2 -----------------------------------------------------------------------
Outcome diagonal_submajorisation() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng = make_rng(2002);
  std::size_t violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const Matrix a = test_matrix(pick(rng, 1, 32), rng);
    std::vector<double> d(a.n());
    for (std::size_t k = 0; k < a.n(); ++k) d[k] = std::abs(a(k, k));
    std::sort(d.begin(), d.end(), std::greater<>());
    if (!is_submajorised(RealSeq(d, 1e-9), RealSeq(singular_values(a), 1e-9))) ++violations;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {violations == 0 && secs < 30.0,
          std::to_string(violations) + " violations in 1000 matrices, runtime " + fmt(secs) + " s (limit 30)"};
}

// 3 -----------------------------------------------------------------------
Outcome averaging_exactness() {
  Rng rng = make_rng(2003);
  double off = 0.0, diag = 0.0;
  for (int t = 0; t < 200; ++t) {
    const Matrix a = test_matrix(pick(rng, 1, 64), rng);
    const Matrix e = diag_average(a);
    for (std::size_t j = 0; j < a.n(); ++j)
      for (std::size_t k = 0; k < a.n(); ++k) {
        if (j == k)
          diag = std::max(diag, std::abs(e(j, k) - a(j, k)));
        else
          off = std::max(off, std::abs(e(j, k)));
      }
  }
  return {off <= 1e-12 && diag <= 1e-12,
          "max off-diagonal modulus " + fmt(off) + ", max diagonal deviation " + fmt(diag)};
}

// 4 -----------------------------------------------------------------------
Outcome schur_horn_round_trip() {
  Rng rng = make_rng(2004);
  std::size_t failures = 0;
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = pick(rng, 1, 64);
    const auto lam = random_profile(n, rng);
    const auto d = shuffled(oracle::t_transform_mix(lam, pick(rng, 0, 4 * n), rng), rng);
    const auto res = schur_horn_construct_traced({RealSeq(d), RealSeq(shuffled(lam, rng))});
    const auto eig = eigenvalues_desc(res.matrix);
    double err = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      err = std::max(err, std::abs(eig[k] - lam[k]));
      err = std::max(err, std::abs(res.matrix(k, k) - Complex(d[k])));
    }
    worst = std::max(worst, err);
    if (err > 1e-8 || res.rotations != n - 1) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " failures in 500 pairs, max error " + fmt(worst)};
}

// 5 -----------------------------------------------------------------------
Outcome kaftal_weiss() {
  Rng rng = make_rng(2005);
  std::size_t failures = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = pick(rng, 1, 32);
    const auto x = random_profile(pick(rng, 1, n), rng);
    // Spread x over n slots with T-transforms, then shrink: y is submajorised by x.
    auto padded = x;
    padded.resize(n, 0.0);
    auto y = oracle::t_transform_mix(padded, pick(rng, 0, 3 * n), rng);
    const double theta = 1.0 - uniform01(rng);
    for (double& v : y) v *= theta;
    y.resize(pick(rng, 1, n));
    y = shuffled(y, rng);
    const Matrix v = kaftal_weiss_witness(RealSeq(y), RealSeq(shuffled(x, rng)), n);
    bool ok = v.n() == n && eigenvalues_desc(v).back() >= -1e-8;
    const auto mu = jacobi_singular_values(v);
    for (std::size_t k = 0; ok && k < n; ++k) {
      ok = std::abs(v(k, k) - Complex(k < y.size() ? y[k] : 0.0)) <= 1e-8 &&
           mu[k] <= (k < x.size() ? x[k] : 0.0) + 1e-8;
    }
    if (!ok) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " failures in 500 pairs"};
}

// Cells of a bitmask over an m x m box, bit j * m + k for (j, k).
Pattern pattern_of(std::uint32_t mask, std::size_t m) {
  std::vector<Cell> cells;
  while (mask) {
    const auto b = static_cast<std::size_t>(std::countr_zero(mask));
    cells.push_back({b / m, b % m});
    mask &= mask - 1;
  }
  return Pattern(m, std::move(cells));
}

// Visits every mask of `bits` bits with at most `max_cells` ones.
void for_each_mask(unsigned bits, unsigned max_cells, const std::function<void(std::uint32_t)>& f) {
  for (unsigned k = 0; k <= max_cells; ++k) {
    if (k == 0) {
      f(0);
      continue;
    }
    std::uint32_t m = (1u << k) - 1;
    while (m < (1u << bits)) {
      f(m);
      const std::uint32_t c = m & -m;
      const std::uint32_t r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
}

// 6 -----------------------------------------------------------------------
Outcome davidson_donsig() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t instances = 0, disagreements = 0, invalid = 0;
  for_each_mask(16, 12, [&](std::uint32_t mask) {
    const Pattern p = pattern_of(mask, 4);
    const auto table = oracle::dd_feasibility_table(p, 2);
    for (std::size_t r = 0; r <= 2; ++r)
      for (std::size_t c = 0; c <= 2; ++c) {
        ++instances;
        const auto dec = dd_decompose(p, r, c);
        if (dec.has_value() != table[r][c]) ++disagreements;
        if (!dec) continue;
        std::array<std::size_t, 4> rows{}, cols{};
        bool ok = dec->cells.size() == p.size() && dec->parts.size() == p.size();
        for (std::size_t i = 0; ok && i < p.size(); ++i) {
          ok = dec->cells[i] == p.cells()[i];
          if (dec->parts[i] == Part::row_part)
            ++rows[dec->cells[i].row];
          else
            ++cols[dec->cells[i].col];
        }
        for (std::size_t i = 0; i < 4; ++i) ok = ok && rows[i] <= r && cols[i] <= c;
        if (!ok) ++invalid;
      }
  });
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {disagreements == 0 && invalid == 0 && secs < 60.0,
          std::to_string(instances) + " instances, " + std::to_string(disagreements) + " disagreements, " +
              std::to_string(invalid) + " invalid splits, runtime " + fmt(secs) + " s (limit 60)"};
}

// 7 -----------------------------------------------------------------------
// Brute force over row subsets: the rows left out force every column they touch.
std::size_t brute_cover(std::uint32_t mask) {
  std::array<std::uint32_t, 5> row_cols{};
  for (unsigned j = 0; j < 5; ++j) row_cols[j] = (mask >> (5 * j)) & 31u;
  std::size_t best = 10;
  for (unsigned s = 0; s < 32; ++s) {
    std::uint32_t cols = 0;
    for (unsigned j = 0; j < 5; ++j)
      if (!(s >> j & 1u)) cols |= row_cols[j];
    best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(s) + std::popcount(cols)));
  }
  return best;
}

Outcome konig_cover() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t patterns = 0, mismatches = 0, not_covers = 0;
  for_each_mask(25, 10, [&](std::uint32_t mask) {
    ++patterns;
    const Pattern p = pattern_of(mask, 5);
    const auto lines = minimal_cover(p);
    if (lines.size() != brute_cover(mask)) ++mismatches;
    std::uint32_t rows = 0, cols = 0;
    for (const Line& l : lines) (l.side == Side::row ? rows : cols) |= 1u << l.index;
    for (const Cell& c : p.cells())
      if (!(rows >> c.row & 1u) && !(cols >> c.col & 1u)) {
        ++not_covers;
        break;
      }
  });
  std::size_t diagonal_failures = 0;
  for (std::size_t n = 1; n <= 64; ++n)
    if (minimal_cover(Pattern::diagonal(n)).size() != n) ++diagonal_failures;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {mismatches == 0 && not_covers == 0 && diagonal_failures == 0,
          std::to_string(patterns) + " patterns, " + std::to_string(mismatches) + " size mismatches, " +
              std::to_string(not_covers) + " non-covers, " + std::to_string(diagonal_failures) +
              " diagonal failures (n <= 64), runtime " + fmt(secs) + " s"};
}

// 8 -----------------------------------------------------------------------
Outcome hilbert_schmidt_contraction() {
  Rng rng = make_rng(2008);
  std::size_t violations = 0;
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = pick(rng, 1, 32);
    Pattern support = Pattern::random(n, 0.05 + 0.95 * uniform01(rng), rng());
    if (support.is_empty()) support = Pattern::diagonal(n);
    const auto m = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd values(m, m);
    for (Eigen::Index j = 0; j < m; ++j)
      for (Eigen::Index k = 0; k < m; ++k) values(j, k) = unit_disc_sample(rng);
    double sup = 0.0;
    for (const Cell& c : support.cells())
      sup = std::max(sup, std::abs(values(static_cast<Eigen::Index>(c.row), static_cast<Eigen::Index>(c.col))));
    if (sup > 0.0) values /= sup;
    const auto symbol = MultiplierSymbol::from_values(support, values);
    const double ratio = multiplier_ratio(symbol, test_matrix(n, rng), IdealNorm::schatten(2.0));
    worst = std::max(worst, ratio);
    if (ratio > 1.0 + 1e-9) ++violations;
  }
  return {violations == 0, std::to_string(violations) + " violations in 1000 pairs, max ratio " + fmt(worst)};
}

// 9 -----------------------------------------------------------------------
Outcome distortion_functional() {
  bool ok = true;
  std::string detail;
  const auto half = IdealNorm::schatten(0.5);
  for (std::size_t n : {2u, 4u, 8u}) {
    std::vector<double> e1(n, 0.0);
    e1[0] = 1.0;
    const double v = distortion(RealSeq(e1), half, n);
    ok = ok && std::abs(v - static_cast<double>(n)) <= 1e-12 * static_cast<double>(n);
  }
  detail += "S_1/2 closed form = n for n in {2,4,8}: " + std::string(ok ? "yes" : "no") + "; ";

  // Grid oracle with step h: the best grid point lies within two steps of the
  // maximiser in each coordinate, so the gap is at most 2h relative.
  const double step = 1.0 / 16.0;
  double worst_gap = 0.0;
  bool grid_ok = true;
  for (double p : {0.5, 1.0}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      std::vector<double> e1(n, 0.0);
      e1[0] = 1.0;
      const auto norm = IdealNorm::schatten(p);
      const double closed = distortion(RealSeq(e1), norm, n);
      const double grid = oracle::distortion_grid(e1, norm, n, step);
      const double gap = (closed - grid) / closed;
      worst_gap = std::max(worst_gap, std::abs(gap));
      grid_ok = grid_ok && grid <= closed + 1e-9 && gap <= 2.0 * step;
    }
  }
  ok = ok && grid_ok;
  detail += "grid oracle (h = 1/16, n <= 4) max relative gap " + fmt(worst_gap) + "; ";

  const auto one = IdealNorm::schatten(1.0);
  double spread = 0.0;
  for (std::size_t n = 1; n <= 64; ++n) {
    std::vector<double> e1(n, 0.0);
    e1[0] = 1.0;
    spread = std::max(spread, std::abs(distortion(RealSeq(e1), one, n) - 1.0));
  }
  ok = ok && spread <= 1e-12;
  detail += "S_1 deviation from 1 over n <= 64: " + fmt(spread);
  return {ok, detail};
}

// 10 ----------------------------------------------------------------------
Outcome ky_fan_inequality() {
  Rng rng = make_rng(2010);
  std::size_t violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = pick(rng, 1, 32);
    const Matrix a = test_matrix(n, rng);
    const Matrix b = test_matrix(n, rng);
    const auto sa = singular_values(a);
    const auto sb = singular_values(b);
    std::vector<double> sum(n);
    for (std::size_t k = 0; k < n; ++k) sum[k] = sa[k] + sb[k];
    if (!is_submajorised(RealSeq(singular_values(a + b), 1e-9), RealSeq(sum, 1e-9))) ++violations;
  }
  return {violations == 0, std::to_string(violations) + " violations in 1000 pairs"};
}

// 11 ----------------------------------------------------------------------
Outcome toeplitz_transfer() {
  std::size_t cases = 0, failures = 0;
  double worst = 0.0;
  for (std::size_t n = 1; n <= 16; ++n)
    for (auto d = 1 - static_cast<std::int64_t>(n); d < static_cast<std::int64_t>(n); ++d) {
      ++cases;
      const double expected = static_cast<double>(static_cast<std::int64_t>(n) - std::abs(d));
      const double err = std::abs(toeplitz_transfer_check(d, 0.5, n) - expected) / expected;
      worst = std::max(worst, err);
      if (err > 1e-10) ++failures;
    }
  return {failures == 0, std::to_string(cases) + " (d, n) pairs, " + std::to_string(failures) +
                             " failures, max relative error " + fmt(worst)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <schurpat-cli>\n", argv[0]);
    return 64;
  }
  const std::string cli = argv[1];
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"blowup dichotomy", [&] { return blowup_dichotomy(cli); }},
      {"diagonal submajorised by singular values", diagonal_submajorisation},
      {"averaging identity exact", averaging_exactness},
      {"Schur-Horn round trip", schur_horn_round_trip},
      {"Kaftal-Weiss witness", kaftal_weiss},
      {"Davidson-Donsig decision vs exhaustive search", davidson_donsig},
      {"minimal cover vs brute force", konig_cover},
      {"C_2 contraction", hilbert_schmidt_contraction},
      {"distortion functional", distortion_functional},
      {"Ky Fan inequality", ky_fan_inequality},
      {"Toeplitz transfer", toeplitz_transfer},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s [%zu] %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
