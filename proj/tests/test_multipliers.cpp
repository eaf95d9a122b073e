#include <cmath>

#include <gtest/gtest.h>

#include "schurpat/major.hpp"
#include "schurpat/multipliers.hpp"
#include "schurpat/random.hpp"
#include "support.hpp"

using namespace schurpat;
using schurpat::test::expect_errc;
using schurpat::test::pick;

namespace {

// ||diag(1/n, ..., 1/n)||_p by direct summation.
double uniform_diagonal_norm(std::size_t n, double p) {
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) sum += std::pow(1.0 / static_cast<double>(n), p);
  return std::pow(sum, 1.0 / p);
}

Matrix ones_over_n(std::size_t n) { return Complex(1.0 / static_cast<double>(n)) * Matrix::ones(n); }

double max_error(const Matrix& a, const Matrix& b) { return (a.dense() - b.dense()).cwiseAbs().maxCoeff(); }

Eigen::MatrixXcd random_values(std::size_t n, Rng& rng, double radius) {
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd v(m, m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index k = 0; k < m; ++k) v(j, k) = radius * unit_disc_sample(rng);
  return v;
}

}  // namespace

TEST(Symbol, FromValuesMasksAndNormalises) {
  Rng rng = make_rng(51);
  const Pattern support(3, {{0, 1}, {2, 2}});
  const auto m = MultiplierSymbol::from_values(support, random_values(3, rng, 5.0));
  for (Eigen::Index j = 0; j < 3; ++j)
    for (Eigen::Index k = 0; k < 3; ++k)
      if (!support.contains({static_cast<std::size_t>(j), static_cast<std::size_t>(k)}))
        EXPECT_EQ(m.values()(j, k), Complex(0.0));
  EXPECT_NEAR(m.values().cwiseAbs().maxCoeff(), 1.0, 1e-15);
  EXPECT_GT(m.scale(), 1.0);

  const auto small = MultiplierSymbol::from_values(support, Eigen::MatrixXcd::Constant(3, 3, 0.5));
  EXPECT_EQ(small.scale(), 1.0);
  EXPECT_EQ(small.values()(0, 1), Complex(0.5));

  expect_errc(Errc::invalid_input, [&] { MultiplierSymbol::from_values(support, Eigen::MatrixXcd::Zero(2, 2)); });
}

TEST(Symbol, RandomSignsAreSeededAndSupported) {
  const Pattern p = Pattern::random(8, 0.5, 3);
  const auto a = MultiplierSymbol::random_signs(p, 9);
  const auto b = MultiplierSymbol::random_signs(p, 9);
  EXPECT_EQ(a.values(), b.values());
  for (Eigen::Index j = 0; j < 8; ++j)
    for (Eigen::Index k = 0; k < 8; ++k) {
      const Complex v = a.values()(j, k);
      if (p.contains({static_cast<std::size_t>(j), static_cast<std::size_t>(k)}))
        EXPECT_TRUE(v == Complex(1.0) || v == Complex(-1.0));
      else
        EXPECT_EQ(v, Complex(0.0));
    }
}

TEST(Apply, Examples) {
  Rng rng = make_rng(52);
  const Matrix a = gaussian_matrix(6, rng);
  EXPECT_EQ(max_error(apply(MultiplierSymbol::indicator(Pattern::full(6)), a), a), 0.0);
  EXPECT_LT(max_error(apply(MultiplierSymbol::indicator(Pattern::diagonal(6)), a), diag_average(a)), 1e-12);

  const Matrix signed_identity = apply(MultiplierSymbol::random_signs(Pattern::full(6), 4), Matrix::identity(6));
  const auto mu = singular_values(signed_identity);
  for (std::size_t k = 0; k < 6; ++k) EXPECT_NEAR(mu[k], 1.0, 1e-14);

  expect_errc(Errc::invalid_input, [&] { apply(MultiplierSymbol::indicator(Pattern::full(5)), a); });
}

TEST(Apply, LinearAndComposes) {
  Rng rng = make_rng(53);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = pick(rng, 1, 10);
    const auto m1 = MultiplierSymbol::from_values(Pattern::random(n, 0.7, rng()), random_values(n, rng, 1.0));
    const auto m2 = MultiplierSymbol::from_values(Pattern::random(n, 0.7, rng()), random_values(n, rng, 1.0));
    const Matrix a = gaussian_matrix(n, rng);
    const Matrix b = gaussian_matrix(n, rng);
    const Complex s(-0.4, 2.0);
    EXPECT_LT(max_error(apply(m1, a + s * b), apply(m1, a) + s * apply(m1, b)), 1e-12);
    EXPECT_LT(max_error(apply(m1, apply(m2, a)), apply(m1 * m2, a)), 1e-12);
  }
}

TEST(Ratio, Examples) {
  Rng rng = make_rng(54);
  const Matrix a = gaussian_matrix(5, rng);
  EXPECT_NEAR(multiplier_ratio(MultiplierSymbol::indicator(Pattern::full(5)), a, IdealNorm::schatten(0.5)), 1.0,
              1e-14);
  for (std::size_t n : {2u, 4u, 8u, 16u}) {
    const auto delta = MultiplierSymbol::indicator(Pattern::diagonal(n));
    for (double p : {1.0 / 3.0, 0.5, 2.0 / 3.0}) {
      const double expected = uniform_diagonal_norm(n, p);
      EXPECT_NEAR(expected, std::pow(static_cast<double>(n), 1.0 / p - 1.0), 1e-9 * expected);
      EXPECT_NEAR(multiplier_ratio(delta, ones_over_n(n), IdealNorm::schatten(p)), expected, 1e-9 * expected);
    }
    EXPECT_NEAR(multiplier_ratio(delta, ones_over_n(n), IdealNorm::schatten(1.0)), 1.0, 1e-12);
  }
  expect_errc(Errc::degenerate_input, [] {
    multiplier_ratio(MultiplierSymbol::indicator(Pattern::full(3)), Matrix::zero(3), IdealNorm::schatten(1.0));
  });
}

TEST(Ratio, HilbertSchmidtContraction) {
  Rng rng = make_rng(55);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = pick(rng, 1, 12);
    const auto m = MultiplierSymbol::from_values(Pattern::random(n, uniform01(rng), rng()),
                                                 random_values(n, rng, 1.0 + 3.0 * uniform01(rng)));
    EXPECT_LE(multiplier_ratio(m, gaussian_matrix(n, rng), IdealNorm::schatten(2.0)), 1.0 + 1e-9);
  }
}

TEST(Ratio, DiagonalSymbolsAreSubmajorising) {
  Rng rng = make_rng(56);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = pick(rng, 1, 12);
    const Matrix a = gaussian_matrix(n, rng);
    const auto m = MultiplierSymbol::from_values(Pattern::diagonal(n), random_values(n, rng, 1.0));
    EXPECT_TRUE(is_submajorised(RealSeq(singular_values(apply(m, a)), 1e-9), RealSeq(singular_values(a), 1e-9)));
  }
}

TEST(Estimate, Examples) {
  EXPECT_EQ(estimate_multiplier_norm(Pattern::empty(4), IdealNorm::schatten(0.5), 5, 0), 0.0);
  for (std::size_t n : {2u, 4u, 8u}) {
    const double est = estimate_multiplier_norm(Pattern::diagonal(n), IdealNorm::schatten(0.5), 6, 1);
    EXPECT_GE(est, static_cast<double>(n) * (1.0 - 1e-12));
  }
  for (std::size_t n : {1u, 3u, 7u}) {
    const double est = estimate_multiplier_norm(Pattern::full(n), IdealNorm::schatten(2.0), 30, 2);
    EXPECT_LE(est, 1.0 + 1e-9);
  }
  expect_errc(Errc::invalid_parameter,
              [] { estimate_multiplier_norm(Pattern::diagonal(3), IdealNorm::schatten(1.0), 0, 0); });
}

TEST(Estimate, DeterministicForSeed) {
  const Pattern p = Pattern::random(9, 0.4, 77);
  const auto norm = IdealNorm::operator_norm();
  EXPECT_EQ(estimate_multiplier_norm(p, norm, 12, 5), estimate_multiplier_norm(p, norm, 12, 5));
  // Signed symbols on the full box beat the witnesses, so the seed shows.
  const Pattern full = Pattern::full(9);
  const double a = estimate_multiplier_norm(full, norm, 12, 5);
  EXPECT_GT(a, 1.0);
  EXPECT_NE(a, estimate_multiplier_norm(full, norm, 12, 6));
}

TEST(Estimate, WitnessBoundIsMonotoneUnderInclusion) {
  Rng rng = make_rng(57);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = pick(rng, 2, 12);
    const Pattern p = Pattern::random(n, 0.3 * uniform01(rng), rng());
    const Pattern q = p.unite(Pattern::random(n, 0.3, rng()));
    for (double s : {0.5, 1.0}) {
      const auto norm = IdealNorm::schatten(s);
      EXPECT_LE(witness_lower_bound(p, norm), witness_lower_bound(q, norm) * (1.0 + 1e-12));
      EXPECT_GE(estimate_multiplier_norm(q, norm, 3, 0), witness_lower_bound(p, norm) * (1.0 - 1e-12));
    }
  }
}

TEST(Estimate, WitnessBoundFollowsMonotoneDiagonal) {
  // A permuted diagonal has a shorter monotone chain; the bound is the chain
  // length raised to 1/p - 1.
  const Pattern anti(4, {{0, 3}, {1, 2}, {2, 1}, {3, 0}});
  EXPECT_NEAR(witness_lower_bound(anti, IdealNorm::schatten(0.5)), 1.0, 1e-12);
  const Pattern mixed(5, {{0, 0}, {1, 3}, {2, 1}, {3, 2}, {4, 4}});
  EXPECT_NEAR(witness_lower_bound(mixed, IdealNorm::schatten(0.5)), 4.0, 1e-9);
}

TEST(Estimate, NonemptyIndicatorsHaveNormAtLeastOne) {
  // A matrix unit inside the pattern is fixed by the indicator.
  for (const auto& norm : {IdealNorm::operator_norm(), IdealNorm::schatten(1.0), IdealNorm::schatten(3.0)}) {
    for (std::size_t n : {1u, 4u, 9u}) {
      EXPECT_NEAR(witness_lower_bound(Pattern::diagonal(n), norm), 1.0, 1e-12);
      EXPECT_GE(estimate_multiplier_norm(Pattern::random(n, 0.3, n).unite(Pattern::diagonal(n)), norm, 4, 1),
                1.0 - 1e-12);
    }
  }
  EXPECT_NEAR(witness_lower_bound(Pattern::diagonal(8), IdealNorm::schatten(0.5)), 8.0, 1e-9);
}

TEST(Blowup, ClosedForm) {
  const std::size_t sizes[] = {1, 2, 3, 4, 8, 16, 32, 64};
  for (double p : {1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0}) {
    const auto report = diagonal_blowup(p, sizes);
    ASSERT_EQ(report.ratios.size(), std::size(sizes));
    for (std::size_t i = 0; i < report.sizes.size(); ++i) {
      const double expected = uniform_diagonal_norm(report.sizes[i], p);
      EXPECT_NEAR(report.ratios[i], expected, 1e-8 * expected);
      EXPECT_GE(report.ratios[i], 1.0 - 1e-9);
    }
    ASSERT_TRUE(report.fit_exponent);
    EXPECT_NEAR(*report.fit_exponent, 1.0 / p - 1.0, 0.01);
  }
}

TEST(Blowup, SmallCases) {
  const std::size_t a[] = {2, 4, 8};
  const auto one = diagonal_blowup(1.0, a);
  for (double r : one.ratios) EXPECT_NEAR(r, 1.0, 1e-9);
  EXPECT_NEAR(*one.fit_exponent, 0.0, 0.01);
  const std::size_t b[] = {8};
  const auto third = diagonal_blowup(1.0 / 3.0, b);
  EXPECT_NEAR(third.ratios[0], 64.0, 64.0 * 1e-8);
  EXPECT_FALSE(third.fit_exponent);
}

TEST(Blowup, Errors) {
  const std::size_t ok[] = {2, 4};
  const std::size_t unsorted[] = {4, 2};
  const std::size_t zero[] = {0, 2};
  expect_errc(Errc::invalid_parameter, [&] { diagonal_blowup(0.0, ok); });
  expect_errc(Errc::invalid_parameter, [&] { diagonal_blowup(1.5, ok); });
  expect_errc(Errc::invalid_parameter, [&] { diagonal_blowup(0.5, unsorted); });
  expect_errc(Errc::invalid_parameter, [&] { diagonal_blowup(0.5, zero); });
  expect_errc(Errc::invalid_parameter, [&] { diagonal_blowup(0.5, std::span<const std::size_t>()); });
}

TEST(FitSlope, RecoversPowerLaw) {
  const std::size_t sizes[] = {2, 4, 8, 16};
  const double ratios[] = {std::pow(2.0, 1.7), std::pow(4.0, 1.7), std::pow(8.0, 1.7), std::pow(16.0, 1.7)};
  EXPECT_NEAR(*fit_loglog_slope(sizes, ratios), 1.7, 1e-12);
  const double with_zero[] = {0.0, 0.0, 0.0, 3.0};
  EXPECT_FALSE(fit_loglog_slope(sizes, with_zero));
}

TEST(ToeplitzTransfer, MatchesShiftedClosedForm) {
  EXPECT_NEAR(toeplitz_transfer_check(1, 0.5, 5), 4.0, 1e-10);
  EXPECT_NEAR(toeplitz_transfer_check(4, 0.5, 5), 1.0, 1e-12);
  EXPECT_NEAR(toeplitz_transfer_check(-4, 0.5, 5), 1.0, 1e-12);
  const std::size_t seven[] = {7};
  EXPECT_NEAR(toeplitz_transfer_check(0, 0.5, 7), diagonal_blowup(0.5, seven).ratios[0], 1e-12);
  for (std::size_t n = 1; n <= 16; ++n)
    for (std::int64_t d = 1 - static_cast<std::int64_t>(n); d < static_cast<std::int64_t>(n); ++d)
      for (double p : {1.0 / 3.0, 0.5}) {
        const double expected = uniform_diagonal_norm(n - static_cast<std::size_t>(std::abs(d)), p);
        EXPECT_NEAR(toeplitz_transfer_check(d, p, n), expected, 1e-10 * expected);
      }
  expect_errc(Errc::invalid_parameter, [] { toeplitz_transfer_check(5, 0.5, 5); });
  expect_errc(Errc::invalid_parameter, [] { toeplitz_transfer_check(-5, 0.5, 5); });
}

TEST(HankelProbe, ReportShape) {
  const std::size_t sizes[] = {8, 16, 32};
  const auto report = hankel_probe(2.0, IdealNorm::operator_norm(), sizes, 6, 3);
  ASSERT_EQ(report.blowup.ratios.size(), 3u);
  ASSERT_EQ(report.cell_counts.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(report.cell_counts[i], Pattern::lacunary_hankel(2.0, sizes[i]).size());
    EXPECT_GE(report.blowup.ratios[i], report.witness_bounds[i] * (1.0 - 1e-12));
    EXPECT_GT(report.blowup.ratios[i], 0.0);
  }
  const auto again = hankel_probe(2.0, IdealNorm::operator_norm(), sizes, 6, 3);
  EXPECT_EQ(again.blowup.ratios, report.blowup.ratios);
  EXPECT_EQ(report.seed, 3u);
  EXPECT_EQ(report.trials, 6u);
}

TEST(HankelProbe, QuasiNormGrowsWithMonotoneDiagonal) {
  const std::size_t sizes[] = {8, 16, 32, 64};
  const auto report = hankel_probe(2.0, IdealNorm::schatten(0.5), sizes, 3, 0);
  for (std::size_t i = 0; i < std::size(sizes); ++i) {
    const auto length = report.monotone_lengths[i];
    EXPECT_GE(length, 1u);
    EXPECT_NEAR(report.witness_bounds[i], static_cast<double>(length), 1e-9 * static_cast<double>(length));
    EXPECT_GE(report.blowup.ratios[i], static_cast<double>(length) * (1.0 - 1e-12));
  }
  EXPECT_GT(report.monotone_lengths.back(), report.monotone_lengths.front());
}

TEST(HankelProbe, EmptyLacunarySetGivesZero) {
  const std::size_t sizes[] = {1};
  const auto report = hankel_probe(2.0, IdealNorm::operator_norm(), sizes, 2, 0);
  EXPECT_EQ(report.cell_counts[0], 0u);
  EXPECT_EQ(report.blowup.ratios[0], 0.0);
  EXPECT_FALSE(report.blowup.fit_exponent);
  expect_errc(Errc::invalid_parameter,
              [&] { hankel_probe(1.0, IdealNorm::operator_norm(), sizes, 2, 0); });
}
