#include "schurpat/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "schurpat/error.hpp"

namespace schurpat::io {

using json = nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_input, std::string(what) + ": " + e.what());
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view token) {
  token = trim(token);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
    throw Error(Errc::invalid_input, "cannot parse number '" + std::string(token) + "'");
  return v;
}

json blowup_json(const BlowupReport& report) {
  json out;
  out["norm"] = report.norm.to_string();
  out["sizes"] = report.sizes;
  out["ratios"] = report.ratios;
  out["fit_exponent"] = report.fit_exponent ? json(*report.fit_exponent) : json(nullptr);
  return out;
}

}  // namespace

std::string matrix_to_json(const Matrix& a) {
  const std::size_t n = a.n();
  json re = json::array();
  json im = json::array();
  for (std::size_t j = 0; j < n; ++j) {
    json re_row = json::array();
    json im_row = json::array();
    for (std::size_t k = 0; k < n; ++k) {
      re_row.push_back(a(j, k).real());
      im_row.push_back(a(j, k).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}}.dump();
}

Matrix matrix_from_json(std::string_view text) {
  const json doc = parse_json(text, "matrix JSON");
  try {
    const auto n = doc.at("n").get<std::size_t>();
    const json& re = doc.at("re");
    const json* im = doc.contains("im") ? &doc.at("im") : nullptr;
    if (n == 0 || re.size() != n || (im && im->size() != n))
      throw Error(Errc::invalid_input, "matrix JSON: row count does not match n");
    const auto m = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd a(m, m);
    for (std::size_t j = 0; j < n; ++j) {
      if (re[j].size() != n || (im && (*im)[j].size() != n))
        throw Error(Errc::invalid_input, "matrix JSON: row " + std::to_string(j) + " has wrong length");
      for (std::size_t k = 0; k < n; ++k) {
        const double imag = im ? (*im)[j][k].get<double>() : 0.0;
        a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
            Complex(re[j][k].get<double>(), imag);
      }
    }
    return Matrix(std::move(a));
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_input, std::string("matrix JSON: ") + e.what());
  }
}

std::string matrix_to_text(const Matrix& a) {
  std::ostringstream out;
  out.precision(17);
  out << a.n() << '\n';
  for (std::size_t j = 0; j < a.n(); ++j) {
    for (std::size_t k = 0; k < a.n(); ++k) {
      if (k > 0) out << ' ';
      out << a(j, k).real() << ' ' << a(j, k).imag();
    }
    out << '\n';
  }
  return out.str();
}

Matrix matrix_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  if (!(in >> token)) throw Error(Errc::invalid_input, "matrix text: missing dimension");
  const double dim = parse_double(token);
  if (!(dim >= 1.0) || dim != std::floor(dim))
    throw Error(Errc::invalid_input, "matrix text: dimension must be a positive integer");
  const auto m = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd a(m, m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index k = 0; k < m; ++k) {
      std::string re_token;
      std::string im_token;
      if (!(in >> re_token >> im_token))
        throw Error(Errc::invalid_input, "matrix text: expected " + std::to_string(m * m) +
                                             " complex entries");
      a(j, k) = Complex(parse_double(re_token), parse_double(im_token));
    }
  if (in >> token) throw Error(Errc::invalid_input, "matrix text: trailing data");
  return Matrix(std::move(a));
}

std::string pattern_to_json(const Pattern& p) {
  json cells = json::array();
  for (const Cell& c : p.cells()) cells.push_back({c.row, c.col});
  return json{{"n", p.box()}, {"cells", std::move(cells)}}.dump();
}

Pattern pattern_from_json(std::string_view text) {
  const json doc = parse_json(text, "pattern JSON");
  try {
    std::vector<Cell> cells;
    for (const json& c : doc.at("cells")) {
      if (c.size() != 2) throw Error(Errc::invalid_input, "pattern JSON: cells are [row, col] pairs");
      cells.push_back({c[0].get<std::size_t>(), c[1].get<std::size_t>()});
    }
    return Pattern(doc.at("n").get<std::size_t>(), std::move(cells));
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_input, std::string("pattern JSON: ") + e.what());
  }
}

std::string seq_to_json(const RealSeq& x) {
  return json(std::vector<double>(x.values().begin(), x.values().end())).dump();
}

RealSeq seq_from_json(std::string_view text, double tolerance) {
  const json doc = parse_json(text, "sequence JSON");
  try {
    return RealSeq(doc.get<std::vector<double>>(), tolerance);
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_input, std::string("sequence JSON: ") + e.what());
  }
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    if (const auto slash = token.find('/'); slash != std::string_view::npos)
      out.push_back(parse_double(token.substr(0, slash)) / parse_double(token.substr(slash + 1)));
    else
      out.push_back(parse_double(token));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (double v : parse_number_list(text)) {
    if (!(v >= 0.0) || v != std::floor(v) || v > 1e15)
      throw Error(Errc::invalid_input, "expected a nonnegative integer, got " + std::to_string(v));
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::string blowup_report_to_json(const BlowupReport& report) { return blowup_json(report).dump(); }

std::string hankel_report_to_json(const HankelReport& report) {
  json out = blowup_json(report.blowup);
  out["q"] = report.q;
  out["trials"] = report.trials;
  out["seed"] = report.seed;
  out["cell_counts"] = report.cell_counts;
  out["monotone_lengths"] = report.monotone_lengths;
  out["witness_bounds"] = report.witness_bounds;
  out["bounded_heuristic"] = report.bounded;
  return out.dump();
}

}  // namespace schurpat::io
