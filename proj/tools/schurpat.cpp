// schurpat command-line front end. Talks to the library only through the C
// interface in schurpat/schurpat.h.

#include <cerrno>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurpat/schurpat.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

// Thrown to unwind to main with an exit code; the message has been printed.
struct Exit {
  int code;
};

[[noreturn]] void die(int code, const std::string& reason, const std::string& message) {
  std::cerr << "schurpat: " << reason << ": " << message << '\n';
  throw Exit{code};
}

int exit_code_for(schurpat_status s) {
  switch (s) {
    case SCHURPAT_OK: return kExitOk;
    case SCHURPAT_INTERNAL:
    case SCHURPAT_NULL_ARGUMENT:
    case SCHURPAT_BUFFER_TOO_SMALL: return kExitInternal;
    default: return kExitDomain;
  }
}

// Library failures while computing a result.
void check(schurpat_status s) {
  if (s != SCHURPAT_OK) die(exit_code_for(s), schurpat_status_name(s), schurpat_last_error());
}

// Library failures while interpreting user input count as usage errors.
void check_input(schurpat_status s) {
  if (s == SCHURPAT_OK) return;
  die(s == SCHURPAT_INTERNAL ? kExitInternal : kExitUsage, schurpat_status_name(s), schurpat_last_error());
}

struct Free {
  void operator()(schurpat_matrix* p) const { schurpat_matrix_free(p); }
  void operator()(schurpat_pattern* p) const { schurpat_pattern_free(p); }
  void operator()(schurpat_report* p) const { schurpat_report_free(p); }
  void operator()(schurpat_check_report* p) const { schurpat_check_report_free(p); }
  void operator()(char* p) const { schurpat_string_free(p); }
};

template <typename T>
using Owned = std::unique_ptr<T, Free>;

std::string take_string(char* raw) {
  Owned<char> holder(raw);
  return raw ? std::string(raw) : std::string();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> numbers(const std::string& text, const char* flag) {
  std::size_t count = 0;
  std::vector<double> out(text.size() + 1);
  const auto s = schurpat_parse_numbers(text.c_str(), out.data(), out.size(), &count);
  if (s != SCHURPAT_OK)
    die(kExitUsage, "invalid_input", std::string(flag) + ": " + schurpat_last_error());
  out.resize(count);
  return out;
}

double number(const std::string& text, const char* flag) {
  const auto v = numbers(text, flag);
  if (v.size() != 1) die(kExitUsage, "invalid_input", std::string(flag) + " expects one number");
  return v[0];
}

std::vector<std::size_t> sizes_from(const std::string& text, const char* flag) {
  std::vector<std::size_t> out;
  for (double v : numbers(text, flag)) {
    if (!(v >= 0.0) || v != std::floor(v) || v > 1e9)
      die(kExitUsage, "invalid_input", std::string(flag) + ": expected nonnegative integers");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::string read_source(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) die(kExitUsage, "invalid_input", "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

schurpat_norm parse_norm(const std::string& text) {
  schurpat_norm norm{};
  check_input(schurpat_norm_parse(text.c_str(), &norm));
  return norm;
}

std::string norm_name(const schurpat_norm& norm) {
  char* out = nullptr;
  check(schurpat_norm_to_string(&norm, &out));
  return take_string(out);
}

// --- options shared across subcommands -------------------------------------

struct Common {
  std::uint64_t seed = 0;
  std::string output;
  std::string format;
};

struct PatternSource {
  std::string file;
  std::string gen;
  std::size_t n = 8;
  std::string offsets = "0";
  std::string sums = "0";
  std::string q = "2";
  double density = 0.3;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--pattern", file, "Pattern JSON file, or - for stdin");
    auto* g = cmd->add_option("--gen", gen, "Generate the pattern instead")
                  ->check(CLI::IsMember({"diag", "full", "toeplitz", "hankel", "lacunary", "random"}));
    f->excludes(g);
    cmd->add_option("--n", n, "Box size for --gen")->capture_default_str();
    cmd->add_option("--offsets", offsets, "Toeplitz offsets j-k, comma separated")->capture_default_str();
    cmd->add_option("--sums", sums, "Hankel sums j+k, comma separated")->capture_default_str();
    cmd->add_option("--q", q, "Lacunary base")->capture_default_str();
    cmd->add_option("--density", density, "Cell probability for --gen random")->capture_default_str();
  }

  bool stochastic() const { return gen == "random"; }

  Owned<schurpat_pattern> load(std::uint64_t seed) const {
    schurpat_pattern* p = nullptr;
    if (!file.empty()) {
      check_input(schurpat_pattern_from_json(read_source(file).c_str(), &p));
    } else if (gen.empty()) {
      die(kExitUsage, "invalid_input", "one of --pattern or --gen is required");
    } else if (gen == "diag") {
      check_input(schurpat_pattern_diagonal(n, &p));
    } else if (gen == "full") {
      check_input(schurpat_pattern_full(n, &p));
    } else if (gen == "toeplitz") {
      std::vector<std::int64_t> d;
      for (double v : numbers(offsets, "--offsets")) {
        if (v != std::floor(v)) die(kExitUsage, "invalid_input", "--offsets: expected integers");
        d.push_back(static_cast<std::int64_t>(v));
      }
      check_input(schurpat_pattern_toeplitz(d.data(), d.size(), n, &p));
    } else if (gen == "hankel") {
      const auto s = sizes_from(sums, "--sums");
      check_input(schurpat_pattern_hankel(s.data(), s.size(), n, &p));
    } else if (gen == "lacunary") {
      check_input(schurpat_pattern_lacunary_hankel(number(q, "--q"), n, &p));
    } else {
      check_input(schurpat_pattern_random(n, density, seed, &p));
    }
    return Owned<schurpat_pattern>(p);
  }
};

// --- output ------------------------------------------------------------------

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  std::string str() const {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
      }
      out += '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
    return out;
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

void write_output(const Common& common, const std::string& text) {
  if (common.output.empty() || common.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(common.output, std::ios::binary);
  if (!out) die(kExitUsage, "invalid_input", "cannot write " + common.output);
  out << text;
}

bool want_json(const Common& common, bool json_default) {
  return common.format.empty() ? json_default : common.format == "json";
}

std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

ordered_json json_number(double v) {
  // JSON has no infinities; keep the value visible as a string.
  return std::isfinite(v) ? ordered_json(v) : ordered_json(fmt(v));
}

// --- commands ------------------------------------------------------------------

struct WitnessArgs {
  std::string y;
  std::string x;
  std::size_t n = 0;
  double tol = 1e-10;
};

int run_witness(const Common& common, const WitnessArgs& args) {
  const auto y = numbers(args.y, "--y");
  const auto x = numbers(args.x, "--x");
  const std::size_t n = args.n ? args.n : std::max(y.size(), x.size());

  schurpat_matrix* raw = nullptr;
  check(schurpat_kaftal_weiss_witness(y.data(), y.size(), x.data(), x.size(), n, args.tol, &raw));
  Owned<schurpat_matrix> v(raw);

  // Verification report: diagonal against y, spectrum against the intermediate
  // sequence, and singular values against x.
  double diag_error = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double re = 0.0, im = 0.0;
    check(schurpat_matrix_entry(v.get(), k, k, &re, &im));
    const double target = k < y.size() ? y[k] : 0.0;
    diag_error = std::max(diag_error, std::hypot(re - target, im));
  }
  std::vector<double> x_top(x);
  std::sort(x_top.begin(), x_top.end(), std::greater<>());
  if (x_top.size() > n) x_top.resize(n);
  std::vector<double> x_mid(std::max(x_top.size(), y.size()));
  check(schurpat_intermediate(y.data(), y.size(), x_top.data(), x_top.size(), args.tol, x_mid.data()));
  std::sort(x_mid.begin(), x_mid.end(), std::greater<>());
  std::vector<double> eig(n);
  check(schurpat_hermitian_eigenvalues(v.get(), eig.data()));
  double spectrum_error = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    spectrum_error = std::max(spectrum_error, std::abs(eig[k] - (k < x_mid.size() ? x_mid[k] : 0.0)));
  std::vector<double> mu(n);
  check(schurpat_singular_values(v.get(), mu.data()));
  bool dominated = true;
  for (std::size_t k = 0; k < n; ++k)
    dominated = dominated && mu[k] <= (k < x_top.size() ? x_top[k] : 0.0) + 1e-8;
  int submajorised = 0;
  check(schurpat_is_submajorised(mu.data(), mu.size(), x_top.data(), x_top.size(), 1e-9, &submajorised,
                                 nullptr));

  if (want_json(common, true)) {
    char* text = nullptr;
    check(schurpat_matrix_to_json(v.get(), &text));
    ordered_json out;
    out["matrix"] = ordered_json::parse(take_string(text));
    out["report"] = {{"n", n},
                     {"diagonal_error", diag_error},
                     {"spectrum_error", spectrum_error},
                     {"singular_values_dominated", dominated},
                     {"submajorised", submajorised == 1}};
    write_output(common, out.dump(2) + "\n");
  } else {
    Table t({"row", "col", "re", "im"});
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double re = 0.0, im = 0.0;
        check(schurpat_matrix_entry(v.get(), j, k, &re, &im));
        t.row({std::to_string(j), std::to_string(k), fmt(re), fmt(im)});
      }
    write_output(common, t.str());
  }
  std::cerr << "witness: n=" << n << " diagonal_error=" << fmt(diag_error)
            << " spectrum_error=" << fmt(spectrum_error) << " dominated=" << (dominated ? "yes" : "no")
            << '\n';
  return dominated && submajorised ? kExitOk : kExitInternal;
}

int run_decompose(const Common& common, const PatternSource& src, std::size_t r, std::size_t c) {
  const auto p = src.load(common.seed);
  const std::size_t size = schurpat_pattern_size(p.get());
  std::vector<schurpat_side> parts(size);
  int feasible = 0;
  check(schurpat_dd_decompose(p.get(), r, c, &feasible, parts.data()));

  std::vector<std::pair<std::size_t, std::size_t>> cells(size);
  for (std::size_t i = 0; i < size; ++i)
    check(schurpat_pattern_cell(p.get(), i, &cells[i].first, &cells[i].second));

  if (want_json(common, false)) {
    ordered_json out;
    out["n"] = schurpat_pattern_box(p.get());
    out["r"] = r;
    out["c"] = c;
    out["feasible"] = feasible == 1;
    if (src.stochastic()) out["seed"] = common.seed;
    ordered_json assignment = ordered_json::array();
    if (feasible)
      for (std::size_t i = 0; i < size; ++i)
        assignment.push_back({cells[i].first, cells[i].second, parts[i] == SCHURPAT_ROW ? "R" : "C"});
    out["assignment"] = std::move(assignment);
    if (!feasible) out["reason"] = "no_decomposition_within_budgets";
    write_output(common, out.dump(2) + "\n");
  } else {
    Table t({"row", "col", "part"});
    if (feasible)
      for (std::size_t i = 0; i < size; ++i)
        t.row({std::to_string(cells[i].first), std::to_string(cells[i].second),
               parts[i] == SCHURPAT_ROW ? "R" : "C"});
    write_output(common, t.str());
  }
  if (!feasible) {
    std::cerr << "schurpat: infeasible: no decomposition with at most " << r << " R-cells per row and "
              << c << " C-cells per column\n";
    return kExitDomain;
  }
  std::size_t in_r = 0;
  for (auto part : parts) in_r += part == SCHURPAT_ROW;
  std::cerr << "decompose: feasible, " << in_r << " cells in R, " << size - in_r << " cells in C\n";
  return kExitOk;
}

int run_cover(const Common& common, const PatternSource& src) {
  const auto p = src.load(common.seed);
  const std::size_t box = schurpat_pattern_box(p.get());
  std::vector<schurpat_side> sides(box);
  std::vector<std::size_t> indices(box);
  std::size_t count = 0;
  check(schurpat_minimal_cover(p.get(), sides.data(), indices.data(), box, &count));
  std::vector<std::size_t> rows(box), cols(box);
  std::size_t chain = 0;
  check(schurpat_monotone_diagonal(p.get(), rows.data(), cols.data(), box, &chain));

  if (want_json(common, false)) {
    ordered_json out;
    out["n"] = box;
    out["cells"] = schurpat_pattern_size(p.get());
    if (src.stochastic()) out["seed"] = common.seed;
    out["cover_size"] = count;
    ordered_json lines = ordered_json::array();
    for (std::size_t i = 0; i < count; ++i)
      lines.push_back({{"side", sides[i] == SCHURPAT_ROW ? "row" : "column"}, {"index", indices[i]}});
    out["lines"] = std::move(lines);
    ordered_json diag = ordered_json::array();
    for (std::size_t i = 0; i < chain; ++i) diag.push_back({rows[i], cols[i]});
    out["monotone_diagonal"] = std::move(diag);
    write_output(common, out.dump(2) + "\n");
  } else {
    Table t({"side", "index"});
    for (std::size_t i = 0; i < count; ++i)
      t.row({sides[i] == SCHURPAT_ROW ? "row" : "column", std::to_string(indices[i])});
    write_output(common, t.str());
  }
  std::cerr << "cover: " << count << " lines, monotone diagonal of length " << chain << '\n';
  return kExitOk;
}

int run_estimate(const Common& common, const PatternSource& src, const std::string& norm_text,
                 std::size_t trials) {
  const auto p = src.load(common.seed);
  const schurpat_norm norm = parse_norm(norm_text);
  double witness = 0.0;
  double estimate = 0.0;
  check(schurpat_witness_lower_bound(p.get(), &norm, &witness));
  check(schurpat_estimate_multiplier_norm(p.get(), &norm, trials, common.seed, &estimate));
  const std::string name = norm_name(norm);
  const std::size_t box = schurpat_pattern_box(p.get());
  const std::size_t cells = schurpat_pattern_size(p.get());

  if (want_json(common, false)) {
    ordered_json out;
    out["norm"] = name;
    out["n"] = box;
    out["cells"] = cells;
    out["trials"] = trials;
    out["seed"] = common.seed;
    out["witness_bound"] = json_number(witness);
    out["estimate"] = json_number(estimate);
    write_output(common, out.dump(2) + "\n");
  } else {
    Table t({"norm", "n", "cells", "trials", "seed", "witness_bound", "estimate"});
    t.row({name, std::to_string(box), std::to_string(cells), std::to_string(trials),
           std::to_string(common.seed), fmt(witness), fmt(estimate)});
    write_output(common, t.str());
  }
  std::cerr << "estimate: " << name << " lower bound " << fmt(estimate) << " over " << trials
            << " trials (seed " << common.seed << ")\n";
  return kExitOk;
}

std::string exponent_text(const schurpat_report* r) {
  double e = 0.0;
  return schurpat_report_exponent(r, &e) ? fmt(e) : std::string();
}

int run_blowup(const Common& common, const std::string& p_text, const std::string& sizes_text) {
  const double p = number(p_text, "--p");
  const auto sizes = sizes_from(sizes_text, "--sizes");
  schurpat_report* raw = nullptr;
  check(schurpat_diagonal_blowup(p, sizes.data(), sizes.size(), &raw));
  Owned<schurpat_report> report(raw);

  if (want_json(common, false)) {
    char* text = nullptr;
    check(schurpat_report_to_json(report.get(), &text));
    write_output(common, ordered_json::parse(take_string(text)).dump(2) + "\n");
  } else {
    Table t({"size", "ratio", "exponent"});
    const std::string e = exponent_text(report.get());
    for (std::size_t i = 0; i < schurpat_report_count(report.get()); ++i)
      t.row({std::to_string(schurpat_report_size(report.get(), i)),
             fmt(schurpat_report_ratio(report.get(), i)), e});
    write_output(common, t.str());
  }
  const std::string e = exponent_text(report.get());
  std::cerr << "blowup: p=" << fmt(p) << ", " << sizes.size() << " sizes, exponent "
            << (e.empty() ? "n/a" : e) << '\n';
  return kExitOk;
}

int run_hankel(const Common& common, const std::string& q_text, const std::string& norm_text,
               const std::string& sizes_text, std::size_t trials) {
  const double q = number(q_text, "--q");
  const schurpat_norm norm = parse_norm(norm_text);
  const auto sizes = sizes_from(sizes_text, "--sizes");
  schurpat_report* raw = nullptr;
  check(schurpat_hankel_probe(q, &norm, sizes.data(), sizes.size(), trials, common.seed, &raw));
  Owned<schurpat_report> report(raw);
  const schurpat_report* r = report.get();

  if (want_json(common, false)) {
    char* text = nullptr;
    check(schurpat_report_to_json(r, &text));
    write_output(common, ordered_json::parse(take_string(text)).dump(2) + "\n");
  } else {
    Table t({"size", "cells", "monotone_length", "witness_bound", "ratio", "exponent", "seed"});
    const std::string e = exponent_text(r);
    for (std::size_t i = 0; i < schurpat_report_count(r); ++i)
      t.row({std::to_string(schurpat_report_size(r, i)), std::to_string(schurpat_report_cell_count(r, i)),
             std::to_string(schurpat_report_monotone_length(r, i)),
             fmt(schurpat_report_witness_bound(r, i)), fmt(schurpat_report_ratio(r, i)), e,
             std::to_string(common.seed)});
    write_output(common, t.str());
  }
  std::cerr << "hankel: q=" << fmt(q) << ", " << norm_name(norm) << ", bounded (heuristic): "
            << (schurpat_report_bounded(r) ? "yes" : "no") << '\n';
  return kExitOk;
}

int run_check(const Common& common, const std::string& suite, double scale) {
  schurpat_check_report* raw = nullptr;
  check(schurpat_run_checks(suite.c_str(), common.seed, scale, &raw));
  Owned<schurpat_check_report> report(raw);
  const schurpat_check_report* r = report.get();
  const std::size_t count = schurpat_check_count(r);
  std::size_t cases = 0;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < count; ++i) {
    cases += schurpat_check_cases(r, i);
    failures += schurpat_check_failures(r, i);
  }

  if (want_json(common, false)) {
    ordered_json out;
    out["suite"] = suite;
    out["seed"] = common.seed;
    out["scale"] = scale;
    ordered_json checks = ordered_json::array();
    for (std::size_t i = 0; i < count; ++i)
      checks.push_back({{"suite", schurpat_check_suite(r, i)},
                        {"name", schurpat_check_name(r, i)},
                        {"cases", schurpat_check_cases(r, i)},
                        {"failures", schurpat_check_failures(r, i)},
                        {"detail", schurpat_check_detail(r, i)}});
    out["checks"] = std::move(checks);
    out["cases"] = cases;
    out["failures"] = failures;
    write_output(common, out.dump(2) + "\n");
  } else {
    Table t({"suite", "name", "cases", "failures", "detail"});
    for (std::size_t i = 0; i < count; ++i)
      t.row({schurpat_check_suite(r, i), schurpat_check_name(r, i),
             std::to_string(schurpat_check_cases(r, i)), std::to_string(schurpat_check_failures(r, i)),
             csv_text(schurpat_check_detail(r, i))});
    write_output(common, t.str());
  }
  std::cerr << "check: " << count << " properties, " << cases << " cases, " << failures
            << " failures (seed " << common.seed << ")\n";
  return failures == 0 ? kExitOk : kExitInternal;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("SCHURPAT_SEED");
  if (!env || !*env) return 0;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || *env == '-')
    die(kExitUsage, "invalid_input", "SCHURPAT_SEED must be a nonnegative integer");
  return v;
}

int run(int argc, char** argv) {
  CLI::App app{"Schur multiplier patterns, majorisation and Schatten quasi-norm experiments"};
  app.set_version_flag("--version", schurpat_version());
  app.require_subcommand(1);

  Common common;
  common.seed = default_seed();
  app.add_option("--seed", common.seed, "Random seed (default: $SCHURPAT_SEED or 0)")
      ->capture_default_str();
  app.add_option("-o,--output", common.output, "Write the table here instead of stdout");
  app.add_option("--format", common.format, "Output format (csv or json)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.fallthrough();

  WitnessArgs witness;
  auto* witness_cmd = app.add_subcommand("witness", "Positive matrix with diagonal y and mu <= x");
  witness_cmd->add_option("--y", witness.y, "Target diagonal, comma separated")->required();
  witness_cmd->add_option("--x", witness.x, "Dominating sequence, comma separated")->required();
  witness_cmd->add_option("--n", witness.n, "Dimension (default: longest input)");
  witness_cmd->add_option("--tol", witness.tol, "Majorisation tolerance")->capture_default_str();

  PatternSource decompose_src;
  std::size_t r_budget = 0;
  std::size_t c_budget = 0;
  auto* decompose_cmd = app.add_subcommand("decompose", "Split a pattern into row- and column-bounded parts");
  decompose_src.attach(decompose_cmd);
  decompose_cmd->add_option("--r", r_budget, "R-cells allowed per row")->required();
  decompose_cmd->add_option("--c", c_budget, "C-cells allowed per column")->required();

  PatternSource cover_src;
  auto* cover_cmd = app.add_subcommand("cover", "Minimum line cover and longest monotone diagonal");
  cover_src.attach(cover_cmd);

  PatternSource estimate_src;
  std::string estimate_norm = "operator";
  std::size_t estimate_trials = 32;
  auto* estimate_cmd = app.add_subcommand("estimate", "Monte-Carlo lower bound on a multiplier norm");
  estimate_src.attach(estimate_cmd);
  estimate_cmd->add_option("--norm", estimate_norm, "schatten:P, operator or kyfan:K")->capture_default_str();
  estimate_cmd->add_option("--trials", estimate_trials, "Number of random draws")->capture_default_str();

  std::string blowup_p;
  std::string blowup_sizes;
  auto* blowup_cmd = app.add_subcommand("blowup", "Diagonal multiplier ratios on Schatten classes");
  blowup_cmd->add_option("--p", blowup_p, "Schatten exponent in (0, 1]")->required();
  blowup_cmd->add_option("--sizes", blowup_sizes, "Increasing sizes, comma separated")->required();

  std::string hankel_q = "2";
  std::string hankel_norm = "operator";
  std::string hankel_sizes;
  std::size_t hankel_trials = 16;
  auto* hankel_cmd = app.add_subcommand("hankel", "Multiplier estimates on lacunary Hankel patterns");
  hankel_cmd->add_option("--q", hankel_q, "Lacunary base (> 1)")->capture_default_str();
  hankel_cmd->add_option("--norm", hankel_norm, "schatten:P, operator or kyfan:K")->capture_default_str();
  hankel_cmd->add_option("--sizes", hankel_sizes, "Sizes, comma separated")->required();
  hankel_cmd->add_option("--trials", hankel_trials, "Random draws per size")->capture_default_str();

  std::string suite = "all";
  double scale = 1.0;
  auto* check_cmd = app.add_subcommand("check", "Run the property-check suites");
  check_cmd->add_option("--suite", suite, "spectra, major, schur_horn, patterns, multipliers or all")
      ->check(CLI::IsMember({"all", "spectra", "major", "schur_horn", "patterns", "multipliers"}))
      ->capture_default_str();
  check_cmd->add_option("--scale", scale, "Multiplier on the number of random cases")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*witness_cmd) return run_witness(common, witness);
  if (*decompose_cmd) return run_decompose(common, decompose_src, r_budget, c_budget);
  if (*cover_cmd) return run_cover(common, cover_src);
  if (*estimate_cmd) return run_estimate(common, estimate_src, estimate_norm, estimate_trials);
  if (*blowup_cmd) return run_blowup(common, blowup_p, blowup_sizes);
  if (*hankel_cmd) return run_hankel(common, hankel_q, hankel_norm, hankel_sizes, hankel_trials);
  if (*check_cmd) return run_check(common, suite, scale);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "schurpat: internal: " << e.what() << '\n';
    return kExitInternal;
  }
}
