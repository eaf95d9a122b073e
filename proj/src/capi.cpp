#include "schurpat/schurpat.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <variant>
#include <vector>

#include "schurpat/check.hpp"
#include "schurpat/error.hpp"
#include "schurpat/io.hpp"
#include "schurpat/major.hpp"
#include "schurpat/multipliers.hpp"
#include "schurpat/patterns.hpp"
#include "schurpat/schur_horn.hpp"
#include "schurpat/spectra.hpp"

using namespace schurpat;

struct schurpat_matrix {
  Matrix value;
};

struct schurpat_pattern {
  Pattern value;
};

struct schurpat_symbol {
  MultiplierSymbol value;
};

struct schurpat_report {
  std::variant<BlowupReport, HankelReport> value;

  const BlowupReport& blowup() const {
    if (const auto* h = std::get_if<HankelReport>(&value)) return h->blowup;
    return std::get<BlowupReport>(value);
  }
  const HankelReport* hankel() const { return std::get_if<HankelReport>(&value); }
};

struct schurpat_check_report {
  std::vector<CheckResult> results;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_prefix = 0;

schurpat_status status_of(Errc code) {
  switch (code) {
    case Errc::invalid_input: return SCHURPAT_INVALID_INPUT;
    case Errc::invalid_parameter: return SCHURPAT_INVALID_PARAMETER;
    case Errc::infeasible: return SCHURPAT_INFEASIBLE;
    case Errc::degenerate_input: return SCHURPAT_DEGENERATE_INPUT;
    case Errc::invalid_map: return SCHURPAT_INVALID_MAP;
    case Errc::precondition: return SCHURPAT_PRECONDITION;
    case Errc::internal: return SCHURPAT_INTERNAL;
  }
  return SCHURPAT_INTERNAL;
}

schurpat_status fail(schurpat_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
struct NullPointer {};

template <typename Body>
schurpat_status guarded(Body&& body) {
  last_error.clear();
  last_prefix = 0;
  try {
    return body();
  } catch (const NullPointer&) {
    return fail(SCHURPAT_NULL_ARGUMENT, "required argument is NULL");
  } catch (const InfeasibleTarget& e) {
    last_prefix = e.prefix();
    return fail(status_of(e.code()), e.what());
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SCHURPAT_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SCHURPAT_INTERNAL, e.what());
  } catch (...) {
    return fail(SCHURPAT_INTERNAL, "unknown exception");
  }
}

template <typename... Ptrs>
bool any_null(const Ptrs*... ptrs) {
  return ((ptrs == nullptr) || ...);
}

schurpat_status null_argument() { return fail(SCHURPAT_NULL_ARGUMENT, "required argument is NULL"); }

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

IdealNorm to_norm(const schurpat_norm& n) {
  if (n.kind == SCHURPAT_NORM_KY_FAN) return IdealNorm::ky_fan(n.k);
  if (n.kind != SCHURPAT_NORM_SCHATTEN) throw Error(Errc::invalid_parameter, "unknown norm kind");
  return std::isinf(n.p) && n.p > 0 ? IdealNorm::operator_norm() : IdealNorm::schatten(n.p);
}

std::vector<double> to_vector(const double* x, std::size_t n) {
  if (n > 0 && x == nullptr) throw NullPointer{};
  return n == 0 ? std::vector<double>{} : std::vector<double>(x, x + n);
}

double tolerance_or_default(double tol) { return tol > 0.0 ? tol : RealSeq::kDefaultTolerance; }

Eigen::MatrixXcd dense_from(std::size_t n, const double* re, const double* im) {
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd a(m, m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index k = 0; k < m; ++k) {
      const auto idx = static_cast<std::size_t>(j * m + k);
      a(j, k) = Complex(re[idx], im ? im[idx] : 0.0);
    }
  return a;
}

template <typename Handle, typename Value>
schurpat_status emit(Handle** out, Value&& value) {
  *out = new Handle{std::forward<Value>(value)};
  return SCHURPAT_OK;
}

}  // namespace

extern "C" {

// ---------------------------------------------------------------------------
// library

const char* schurpat_version(void) { return "1.0.0"; }

const char* schurpat_status_name(schurpat_status status) {
  switch (status) {
    case SCHURPAT_OK: return "ok";
    case SCHURPAT_INVALID_INPUT: return "invalid_input";
    case SCHURPAT_INVALID_PARAMETER: return "invalid_parameter";
    case SCHURPAT_INFEASIBLE: return "infeasible";
    case SCHURPAT_DEGENERATE_INPUT: return "degenerate_input";
    case SCHURPAT_INVALID_MAP: return "invalid_map";
    case SCHURPAT_PRECONDITION: return "precondition";
    case SCHURPAT_INTERNAL: return "internal";
    case SCHURPAT_NULL_ARGUMENT: return "null_argument";
    case SCHURPAT_BUFFER_TOO_SMALL: return "buffer_too_small";
  }
  return "unknown";
}

const char* schurpat_last_error(void) { return last_error.c_str(); }

size_t schurpat_last_error_prefix(void) { return last_prefix; }

void schurpat_string_free(char* s) { delete[] s; }

schurpat_status schurpat_parse_numbers(const char* text, double* out, size_t capacity, size_t* count) {
  if (any_null(text, count)) return null_argument();
  return guarded([&] {
    const auto values = io::parse_number_list(text);
    *count = values.size();
    if (values.size() > capacity || (!values.empty() && out == nullptr))
      return fail(SCHURPAT_BUFFER_TOO_SMALL, "output buffer holds fewer than " +
                                                 std::to_string(values.size()) + " values");
    std::copy(values.begin(), values.end(), out);
    return SCHURPAT_OK;
  });
}

// ---------------------------------------------------------------------------
// norms

schurpat_status schurpat_norm_parse(const char* text, schurpat_norm* out) {
  if (any_null(text, out)) return null_argument();
  return guarded([&] {
    const IdealNorm n = IdealNorm::parse(text);
    out->kind = n.kind() == IdealNorm::Kind::ky_fan ? SCHURPAT_NORM_KY_FAN : SCHURPAT_NORM_SCHATTEN;
    out->p = n.p();
    out->k = n.k();
    return SCHURPAT_OK;
  });
}

schurpat_status schurpat_norm_to_string(const schurpat_norm* norm, char** out) {
  if (any_null(norm, out)) return null_argument();
  return guarded([&] {
    *out = copy_string(to_norm(*norm).to_string());
    return SCHURPAT_OK;
  });
}

// ---------------------------------------------------------------------------
// matrices

schurpat_status schurpat_matrix_create(size_t n, const double* re, const double* im,
                                       schurpat_matrix** out) {
  if (any_null(re, out)) return null_argument();
  return guarded([&] {
    if (n == 0 || n > kDefaultMaxDimension)
      return fail(SCHURPAT_INVALID_INPUT, "matrix dimension must be in [1, 1024]");
    return emit(out, Matrix(dense_from(n, re, im)));
  });
}

schurpat_status schurpat_matrix_from_json(const char* text, schurpat_matrix** out) {
  if (any_null(text, out)) return null_argument();
  return guarded([&] { return emit(out, io::matrix_from_json(text)); });
}

schurpat_status schurpat_matrix_to_json(const schurpat_matrix* a, char** out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] {
    *out = copy_string(io::matrix_to_json(a->value));
    return SCHURPAT_OK;
  });
}

schurpat_status schurpat_matrix_from_text(const char* text, schurpat_matrix** out) {
  if (any_null(text, out)) return null_argument();
  return guarded([&] { return emit(out, io::matrix_from_text(text)); });
}

schurpat_status schurpat_matrix_to_text(const schurpat_matrix* a, char** out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] {
    *out = copy_string(io::matrix_to_text(a->value));
    return SCHURPAT_OK;
  });
}

void schurpat_matrix_free(schurpat_matrix* a) { delete a; }

size_t schurpat_matrix_dim(const schurpat_matrix* a) { return a ? a->value.n() : 0; }

schurpat_status schurpat_matrix_entry(const schurpat_matrix* a, size_t row, size_t col, double* re,
                                      double* im) {
  if (any_null(a, re, im)) return null_argument();
  if (row >= a->value.n() || col >= a->value.n())
    return fail(SCHURPAT_INVALID_PARAMETER, "entry index outside the matrix");
  const Complex z = a->value(row, col);
  *re = z.real();
  *im = z.imag();
  return SCHURPAT_OK;
}

schurpat_status schurpat_singular_values(const schurpat_matrix* a, double* out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] {
    const auto mu = singular_values(a->value);
    std::copy(mu.values().begin(), mu.values().end(), out);
    return SCHURPAT_OK;
  });
}

schurpat_status schurpat_hermitian_eigenvalues(const schurpat_matrix* a, double* out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] {
    const auto eig = hermitian_eigenvalues(a->value);
    std::copy(eig.begin(), eig.end(), out);
    return SCHURPAT_OK;
  });
}

schurpat_status schurpat_ideal_norm(const schurpat_matrix* a, const schurpat_norm* norm, double* out) {
  if (any_null(a, norm, out)) return null_argument();
  return guarded([&] {
    *out = ideal_norm(a->value, to_norm(*norm));
    return SCHURPAT_OK;
  });
}

schurpat_status schurpat_diag_average(const schurpat_matrix* a, schurpat_matrix** out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] { return emit(out, diag_average(a->value)); });
}

// ---------------------------------------------------------------------------
// majorisation

schurpat_status schurpat_is_submajorised(const double* x, size_t nx, const double* y, size_t ny,
                                         double tol, int* result, size_t* violation) {
  if (result == nullptr) return null_argument();
  return guarded([&] {
    const double t = tolerance_or_default(tol);
    const auto v = first_submajorisation_violation(RealSeq(to_vector(x, nx), t),
                                                   RealSeq(to_vector(y, ny), t));
    *result = v ? 0 : 1;
    if (violation) *violation = v.value_or(0);
    return SCHURPAT_OK;
  });
}

schurpat_status schurpat_is_majorised(const double* x, size_t nx, const double* y, size_t ny,
                                      double tol, int* result) {
  if (result == nullptr) return null_argument();
  return guarded([&] {
    const double t = tolerance_or_default(tol);
    *result = is_majorised(RealSeq(to_vector(x, nx), t), RealSeq(to_vector(y, ny), t)) ? 1 : 0;
    return SCHURPAT_OK;
  });
}

schurpat_status schurpat_ky_fan_sum(const double* x, size_t nx, size_t k, double* out) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    *out = ky_fan_sum(RealSeq(to_vector(x, nx)), k);
    return SCHURPAT_OK;
  });
}

schurpat_status schurpat_intermediate(const double* y, size_t ny, const double* x, size_t nx,
                                      double tol, double* out) {
  if ((nx > 0 || ny > 0) && out == nullptr) return null_argument();
  return guarded([&] {
    const double t = tolerance_or_default(tol);
    const RealSeq xp = intermediate(RealSeq(to_vector(y, ny), t), RealSeq(to_vector(x, nx), t));
    std::copy(xp.values().begin(), xp.values().end(), out);
    return SCHURPAT_OK;
  });
}

schurpat_status schurpat_distortion(const double* b, size_t nb, const schurpat_norm* norm, size_t n,
                                    double* out) {
  if (any_null(norm, out)) return null_argument();
  return guarded([&] {
    *out = distortion(RealSeq(to_vector(b, nb)), to_norm(*norm), n);
    return SCHURPAT_OK;
  });
}

// ---------------------------------------------------------------------------
// Schur-Horn

schurpat_status schurpat_schur_horn(const double* diagonal, const double* spectrum, size_t n,
                                    double tol, schurpat_matrix** out, size_t* rotations) {
  if (any_null(diagonal, spectrum, out)) return null_argument();
  return guarded([&] {
    const double t = tolerance_or_default(tol);
    auto res = schur_horn_construct_traced(
        {RealSeq(to_vector(diagonal, n), t), RealSeq(to_vector(spectrum, n), t)});
    if (rotations) *rotations = res.rotations;
    return emit(out, std::move(res.matrix));
  });
}

schurpat_status schurpat_kaftal_weiss_witness(const double* y, size_t ny, const double* x, size_t nx,
                                              size_t n, double tol, schurpat_matrix** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    const double t = tolerance_or_default(tol);
    return emit(out, kaftal_weiss_witness(RealSeq(to_vector(y, ny), t), RealSeq(to_vector(x, nx), t), n));
  });
}

// ---------------------------------------------------------------------------
// patterns

schurpat_status schurpat_pattern_create(size_t box, const size_t* rows, const size_t* cols,
                                        size_t count, schurpat_pattern** out) {
  if (out == nullptr || (count > 0 && any_null(rows, cols))) return null_argument();
  return guarded([&] {
    std::vector<Cell> cells(count);
    for (std::size_t i = 0; i < count; ++i) cells[i] = {rows[i], cols[i]};
    return emit(out, Pattern(box, std::move(cells)));
  });
}

schurpat_status schurpat_pattern_diagonal(size_t n, schurpat_pattern** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { return emit(out, Pattern::diagonal(n)); });
}

schurpat_status schurpat_pattern_full(size_t n, schurpat_pattern** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { return emit(out, Pattern::full(n)); });
}

schurpat_status schurpat_pattern_toeplitz(const int64_t* offsets, size_t count, size_t n,
                                          schurpat_pattern** out) {
  if (out == nullptr || (count > 0 && offsets == nullptr)) return null_argument();
  return guarded([&] {
    return emit(out, Pattern::toeplitz(std::span<const std::int64_t>(offsets, count), n));
  });
}

schurpat_status schurpat_pattern_hankel(const size_t* sums, size_t count, size_t n,
                                        schurpat_pattern** out) {
  if (out == nullptr || (count > 0 && sums == nullptr)) return null_argument();
  return guarded([&] {
    return emit(out, Pattern::hankel(std::span<const std::size_t>(sums, count), n));
  });
}

schurpat_status schurpat_pattern_lacunary_hankel(double q, size_t n, schurpat_pattern** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { return emit(out, Pattern::lacunary_hankel(q, n)); });
}

schurpat_status schurpat_pattern_random(size_t n, double density, uint64_t seed,
                                        schurpat_pattern** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { return emit(out, Pattern::random(n, density, seed)); });
}

schurpat_status schurpat_pattern_from_json(const char* text, schurpat_pattern** out) {
  if (any_null(text, out)) return null_argument();
  return guarded([&] { return emit(out, io::pattern_from_json(text)); });
}

schurpat_status schurpat_pattern_to_json(const schurpat_pattern* p, char** out) {
  if (any_null(p, out)) return null_argument();
  return guarded([&] {
    *out = copy_string(io::pattern_to_json(p->value));
    return SCHURPAT_OK;
  });
}

schurpat_status schurpat_pattern_transform(const schurpat_pattern* p, const size_t* a, const size_t* b,
                                           size_t out_box, schurpat_pattern** out) {
  if (any_null(p, a, b, out)) return null_argument();
  return guarded([&] {
    const std::size_t box = p->value.box();
    return emit(out, transform(p->value, std::span<const std::size_t>(a, box),
                               std::span<const std::size_t>(b, box), out_box));
  });
}

void schurpat_pattern_free(schurpat_pattern* p) { delete p; }

size_t schurpat_pattern_box(const schurpat_pattern* p) { return p ? p->value.box() : 0; }

size_t schurpat_pattern_size(const schurpat_pattern* p) { return p ? p->value.size() : 0; }

schurpat_status schurpat_pattern_cell(const schurpat_pattern* p, size_t index, size_t* row,
                                      size_t* col) {
  if (any_null(p, row, col)) return null_argument();
  if (index >= p->value.size()) return fail(SCHURPAT_INVALID_PARAMETER, "cell index out of range");
  *row = p->value.cells()[index].row;
  *col = p->value.cells()[index].col;
  return SCHURPAT_OK;
}

schurpat_status schurpat_dd_decompose(const schurpat_pattern* p, size_t r, size_t c, int* feasible,
                                      schurpat_side* parts) {
  if (any_null(p, feasible)) return null_argument();
  return guarded([&] {
    const auto d = dd_decompose(p->value, r, c);
    *feasible = d ? 1 : 0;
    if (d && parts)
      for (std::size_t i = 0; i < d->parts.size(); ++i)
        parts[i] = d->parts[i] == Part::row_part ? SCHURPAT_ROW : SCHURPAT_COLUMN;
    return SCHURPAT_OK;
  });
}

schurpat_status schurpat_minimal_cover(const schurpat_pattern* p, schurpat_side* sides,
                                       size_t* indices, size_t capacity, size_t* count) {
  if (any_null(p, count)) return null_argument();
  return guarded([&] {
    const auto cover = minimal_cover(p->value);
    *count = cover.size();
    if (cover.size() > capacity || (!cover.empty() && any_null(sides, indices)))
      return fail(SCHURPAT_BUFFER_TOO_SMALL, "cover buffers too small");
    for (std::size_t i = 0; i < cover.size(); ++i) {
      sides[i] = cover[i].side == Side::row ? SCHURPAT_ROW : SCHURPAT_COLUMN;
      indices[i] = cover[i].index;
    }
    return SCHURPAT_OK;
  });
}

schurpat_status schurpat_monotone_diagonal(const schurpat_pattern* p, size_t* rows, size_t* cols,
                                           size_t capacity, size_t* count) {
  if (any_null(p, count)) return null_argument();
  return guarded([&] {
    const auto chain = extract_monotone_diagonal(p->value);
    *count = chain.size();
    if (chain.size() > capacity || (!chain.empty() && any_null(rows, cols)))
      return fail(SCHURPAT_BUFFER_TOO_SMALL, "diagonal buffers too small");
    for (std::size_t i = 0; i < chain.size(); ++i) {
      rows[i] = chain[i].row;
      cols[i] = chain[i].col;
    }
    return SCHURPAT_OK;
  });
}

// ---------------------------------------------------------------------------
// multipliers

schurpat_status schurpat_symbol_indicator(const schurpat_pattern* support, schurpat_symbol** out) {
  if (any_null(support, out)) return null_argument();
  return guarded([&] { return emit(out, MultiplierSymbol::indicator(support->value)); });
}

schurpat_status schurpat_symbol_random_signs(const schurpat_pattern* support, uint64_t seed,
                                             schurpat_symbol** out) {
  if (any_null(support, out)) return null_argument();
  return guarded([&] { return emit(out, MultiplierSymbol::random_signs(support->value, seed)); });
}

schurpat_status schurpat_symbol_create(const schurpat_pattern* support, const double* re,
                                       const double* im, schurpat_symbol** out) {
  if (any_null(support, re, out)) return null_argument();
  return guarded([&] {
    return emit(out, MultiplierSymbol::from_values(support->value,
                                                   dense_from(support->value.box(), re, im)));
  });
}

void schurpat_symbol_free(schurpat_symbol* m) { delete m; }

double schurpat_symbol_scale(const schurpat_symbol* m) { return m ? m->value.scale() : 0.0; }

schurpat_status schurpat_apply(const schurpat_symbol* m, const schurpat_matrix* a,
                               schurpat_matrix** out) {
  if (any_null(m, a, out)) return null_argument();
  return guarded([&] { return emit(out, apply(m->value, a->value)); });
}

schurpat_status schurpat_multiplier_ratio(const schurpat_symbol* m, const schurpat_matrix* a,
                                          const schurpat_norm* norm, double* out) {
  if (any_null(m, a, norm, out)) return null_argument();
  return guarded([&] {
    *out = multiplier_ratio(m->value, a->value, to_norm(*norm));
    return SCHURPAT_OK;
  });
}

schurpat_status schurpat_witness_lower_bound(const schurpat_pattern* p, const schurpat_norm* norm,
                                             double* out) {
  if (any_null(p, norm, out)) return null_argument();
  return guarded([&] {
    *out = witness_lower_bound(p->value, to_norm(*norm));
    return SCHURPAT_OK;
  });
}

schurpat_status schurpat_estimate_multiplier_norm(const schurpat_pattern* p, const schurpat_norm* norm,
                                                  size_t trials, uint64_t seed, double* out) {
  if (any_null(p, norm, out)) return null_argument();
  return guarded([&] {
    *out = estimate_multiplier_norm(p->value, to_norm(*norm), trials, seed);
    return SCHURPAT_OK;
  });
}

schurpat_status schurpat_toeplitz_transfer_check(int64_t d, double p, size_t n, double* out) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    *out = toeplitz_transfer_check(d, p, n);
    return SCHURPAT_OK;
  });
}

// ---------------------------------------------------------------------------
// reports

schurpat_status schurpat_diagonal_blowup(double p, const size_t* sizes, size_t count,
                                         schurpat_report** out) {
  if (out == nullptr || (count > 0 && sizes == nullptr)) return null_argument();
  return guarded([&] {
    *out = new schurpat_report{diagonal_blowup(p, std::span<const std::size_t>(sizes, count))};
    return SCHURPAT_OK;
  });
}

schurpat_status schurpat_hankel_probe(double q, const schurpat_norm* norm, const size_t* sizes,
                                      size_t count, size_t trials, uint64_t seed,
                                      schurpat_report** out) {
  if (any_null(norm, out) || (count > 0 && sizes == nullptr)) return null_argument();
  return guarded([&] {
    *out = new schurpat_report{
        hankel_probe(q, to_norm(*norm), std::span<const std::size_t>(sizes, count), trials, seed)};
    return SCHURPAT_OK;
  });
}

void schurpat_report_free(schurpat_report* r) { delete r; }

size_t schurpat_report_count(const schurpat_report* r) { return r ? r->blowup().sizes.size() : 0; }

size_t schurpat_report_size(const schurpat_report* r, size_t i) {
  return r && i < r->blowup().sizes.size() ? r->blowup().sizes[i] : 0;
}

double schurpat_report_ratio(const schurpat_report* r, size_t i) {
  return r && i < r->blowup().ratios.size() ? r->blowup().ratios[i] : 0.0;
}

int schurpat_report_exponent(const schurpat_report* r, double* exponent) {
  if (!r || !r->blowup().fit_exponent) return 0;
  if (exponent) *exponent = *r->blowup().fit_exponent;
  return 1;
}

size_t schurpat_report_cell_count(const schurpat_report* r, size_t i) {
  const HankelReport* h = r ? r->hankel() : nullptr;
  return h && i < h->cell_counts.size() ? h->cell_counts[i] : 0;
}

size_t schurpat_report_monotone_length(const schurpat_report* r, size_t i) {
  const HankelReport* h = r ? r->hankel() : nullptr;
  return h && i < h->monotone_lengths.size() ? h->monotone_lengths[i] : 0;
}

double schurpat_report_witness_bound(const schurpat_report* r, size_t i) {
  const HankelReport* h = r ? r->hankel() : nullptr;
  return h && i < h->witness_bounds.size() ? h->witness_bounds[i] : 0.0;
}

int schurpat_report_bounded(const schurpat_report* r) {
  const HankelReport* h = r ? r->hankel() : nullptr;
  return h && h->bounded ? 1 : 0;
}

schurpat_status schurpat_report_to_json(const schurpat_report* r, char** out) {
  if (any_null(r, out)) return null_argument();
  return guarded([&] {
    const HankelReport* h = r->hankel();
    *out = copy_string(h ? io::hankel_report_to_json(*h) : io::blowup_report_to_json(r->blowup()));
    return SCHURPAT_OK;
  });
}

// ---------------------------------------------------------------------------
// checks

schurpat_status schurpat_run_checks(const char* suite, uint64_t seed, double scale,
                                    schurpat_check_report** out) {
  if (any_null(suite, out)) return null_argument();
  return guarded([&] {
    *out = new schurpat_check_report{run_checks(suite, seed, scale)};
    return SCHURPAT_OK;
  });
}

void schurpat_check_report_free(schurpat_check_report* r) { delete r; }

size_t schurpat_check_count(const schurpat_check_report* r) { return r ? r->results.size() : 0; }

const char* schurpat_check_suite(const schurpat_check_report* r, size_t i) {
  return r && i < r->results.size() ? r->results[i].suite.c_str() : "";
}

const char* schurpat_check_name(const schurpat_check_report* r, size_t i) {
  return r && i < r->results.size() ? r->results[i].name.c_str() : "";
}

size_t schurpat_check_cases(const schurpat_check_report* r, size_t i) {
  return r && i < r->results.size() ? r->results[i].cases : 0;
}

size_t schurpat_check_failures(const schurpat_check_report* r, size_t i) {
  return r && i < r->results.size() ? r->results[i].failures : 0;
}

const char* schurpat_check_detail(const schurpat_check_report* r, size_t i) {
  return r && i < r->results.size() ? r->results[i].detail.c_str() : "";
}

}  // extern "C"
