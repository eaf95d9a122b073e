#include <gtest/gtest.h>
#include <json.hpp>

#include "schurpat/io.hpp"
#include "schurpat/random.hpp"
#include "support.hpp"

using namespace schurpat;
using schurpat::test::expect_errc;

TEST(MatrixIo, JsonRoundTripIsExact) {
  Rng rng = make_rng(61);
  for (std::size_t n : {1u, 3u, 7u}) {
    const Matrix a = gaussian_matrix(n, rng);
    const Matrix b = io::matrix_from_json(io::matrix_to_json(a));
    EXPECT_EQ(a.dense(), b.dense());
  }
}

TEST(MatrixIo, TextRoundTripIsExact) {
  Rng rng = make_rng(62);
  const Matrix a = gaussian_matrix(5, rng);
  EXPECT_EQ(io::matrix_from_text(io::matrix_to_text(a)).dense(), a.dense());
  const Matrix b = io::matrix_from_text("2\n1 0 0 -1\n0.5 0 2 0.25\n");
  EXPECT_EQ(b(0, 1), Complex(0.0, -1.0));
  EXPECT_EQ(b(1, 1), Complex(2.0, 0.25));
}

TEST(MatrixIo, ImaginaryPartIsOptional) {
  const Matrix a = io::matrix_from_json(R"({"n": 2, "re": [[1, 2], [3, 4]]})");
  EXPECT_EQ(a(1, 0), Complex(3.0));
}

TEST(MatrixIo, RejectsMalformedInput) {
  expect_errc(Errc::invalid_input, [] { io::matrix_from_json("{"); });
  expect_errc(Errc::invalid_input, [] { io::matrix_from_json(R"({"n": 2, "re": [[1, 2]]})"); });
  expect_errc(Errc::invalid_input, [] { io::matrix_from_json(R"({"n": 2, "re": [[1, 2], [3]]})"); });
  expect_errc(Errc::invalid_input, [] { io::matrix_from_json(R"({"n": 1, "re": [["x"]]})"); });
  expect_errc(Errc::invalid_input, [] { io::matrix_from_json(R"({"n": 0, "re": []})"); });
  expect_errc(Errc::invalid_input, [] { io::matrix_from_text("2\n1 0 0 0\n"); });
  expect_errc(Errc::invalid_input, [] { io::matrix_from_text("1\n1 0 9"); });
  expect_errc(Errc::invalid_input, [] { io::matrix_from_text("1.5\n1 0"); });
  expect_errc(Errc::invalid_input, [] { io::matrix_from_text("1\nabc 0"); });
  expect_errc(Errc::invalid_input, [] { io::matrix_from_json(R"({"n": 1, "re": [[1e999]]})"); });
}

TEST(PatternIo, RoundTrip) {
  const Pattern p = Pattern::random(9, 0.3, 4);
  EXPECT_EQ(io::pattern_from_json(io::pattern_to_json(p)), p);
  const Pattern q = io::pattern_from_json(R"({"n": 3, "cells": [[2, 0], [0, 1], [2, 0]]})");
  EXPECT_EQ(q.size(), 2u);
  EXPECT_EQ(q.box(), 3u);
}

TEST(PatternIo, RejectsMalformedInput) {
  expect_errc(Errc::invalid_input, [] { io::pattern_from_json(R"({"n": 3})"); });
  expect_errc(Errc::invalid_input, [] { io::pattern_from_json(R"({"n": 3, "cells": [[1]]})"); });
  expect_errc(Errc::invalid_input, [] { io::pattern_from_json(R"({"n": 3, "cells": [[1, 3]]})"); });
  expect_errc(Errc::invalid_input, [] { io::pattern_from_json(R"({"n": 3, "cells": [[-1, 0]]})"); });
}

TEST(SeqIo, RoundTripAndValidation) {
  const RealSeq x({0.5, 0.25, 1.0 / 3.0});
  const RealSeq y = io::seq_from_json(io::seq_to_json(x));
  ASSERT_EQ(y.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(x[k], y[k]);
  expect_errc(Errc::invalid_input, [] { io::seq_from_json("[1, -1]"); });
  expect_errc(Errc::invalid_input, [] { io::seq_from_json(R"({"a": 1})"); });
}

TEST(NumberLists, ParsesDecimalsAndFractions) {
  const auto v = io::parse_number_list(" 0.5, 1/3 ,2e-1,7");
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[0], 0.5);
  EXPECT_EQ(v[1], 1.0 / 3.0);
  EXPECT_EQ(v[2], 0.2);
  EXPECT_EQ(v[3], 7.0);
  EXPECT_TRUE(io::parse_number_list("  ").empty());
  EXPECT_EQ(io::parse_size_list("2,4,64"), (std::vector<std::size_t>{2, 4, 64}));
  expect_errc(Errc::invalid_input, [] { io::parse_number_list("1,,2"); });
  expect_errc(Errc::invalid_input, [] { io::parse_number_list("1;2"); });
  expect_errc(Errc::invalid_input, [] { io::parse_size_list("2.5"); });
  expect_errc(Errc::invalid_input, [] { io::parse_size_list("-1"); });
}

TEST(ReportIo, BlowupFields) {
  const std::size_t sizes[] = {2, 4};
  const auto doc = nlohmann::json::parse(io::blowup_report_to_json(diagonal_blowup(0.5, sizes)));
  EXPECT_EQ(doc.at("norm"), "schatten:0.5");
  EXPECT_EQ(doc.at("sizes"), nlohmann::json({2, 4}));
  EXPECT_NEAR(doc.at("ratios")[1].get<double>(), 4.0, 1e-12);
  EXPECT_NEAR(doc.at("fit_exponent").get<double>(), 1.0, 1e-9);

  const std::size_t one[] = {4};
  const auto single = nlohmann::json::parse(io::blowup_report_to_json(diagonal_blowup(0.5, one)));
  EXPECT_TRUE(single.at("fit_exponent").is_null());
}

TEST(ReportIo, HankelFields) {
  const std::size_t sizes[] = {4, 8};
  const auto doc =
      nlohmann::json::parse(io::hankel_report_to_json(hankel_probe(2.0, IdealNorm::operator_norm(), sizes, 3, 9)));
  for (const char* key : {"norm", "sizes", "ratios", "fit_exponent", "q", "trials", "seed", "cell_counts",
                          "monotone_lengths", "witness_bounds", "bounded_heuristic"})
    EXPECT_TRUE(doc.contains(key)) << key;
  EXPECT_EQ(doc.at("seed"), 9);
  EXPECT_EQ(doc.at("norm"), "schatten:inf");
}
