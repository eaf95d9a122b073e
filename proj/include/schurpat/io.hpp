#pragma once

// Text and JSON formats shared by the CLI and the C API.
//
//   Matrix  JSON  {"n": int, "re": [[...]], "im": [[...]]}
//           text  n, then n^2 whitespace-separated (re, im) pairs, row-major
//   Pattern JSON  {"n": int, "cells": [[row, col], ...]}
//   RealSeq JSON  [x0, x1, ...]; inline form "x0,x1,..."

#include <string>
#include <string_view>
#include <vector>

#include "schurpat/major.hpp"
#include "schurpat/multipliers.hpp"
#include "schurpat/patterns.hpp"
#include "schurpat/spectra.hpp"

namespace schurpat::io {

std::string matrix_to_json(const Matrix& a);
Matrix matrix_from_json(std::string_view text);
std::string matrix_to_text(const Matrix& a);
Matrix matrix_from_text(std::string_view text);

std::string pattern_to_json(const Pattern& p);
Pattern pattern_from_json(std::string_view text);

std::string seq_to_json(const RealSeq& x);
RealSeq seq_from_json(std::string_view text, double tolerance = RealSeq::kDefaultTolerance);

/// Splits "a,b,c" (spaces allowed) into numbers; fractions like 1/3 accepted.
std::vector<double> parse_number_list(std::string_view text);
std::vector<std::size_t> parse_size_list(std::string_view text);

std::string blowup_report_to_json(const BlowupReport& report);
std::string hankel_report_to_json(const HankelReport& report);

}  // namespace schurpat::io
