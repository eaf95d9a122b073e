#pragma once

#include <cstddef>

#include "schurpat/major.hpp"
#include "schurpat/spectra.hpp"

namespace schurpat {

/// Target diagonal (any order) and target spectrum for a Hermitian matrix.
/// Shorter sequences are zero-padded to the common length.
struct SpectrumDiagonalPair {
  RealSeq diagonal;
  RealSeq spectrum;
};

struct SchurHornResult {
  Matrix matrix;
  /// Number of plane reflections applied, zero-angle placements included.
  std::size_t rotations;
};

/// Real symmetric matrix with the prescribed diagonal and spectrum.
///
/// Starts from diag(spectrum) and places the diagonal targets largest first.
/// Each placement picks the tightest straddling pair of active diagonal
/// entries a_i <= t <= a_j (adjacent in sorted order) and applies a Givens
/// reflection in the (i, j) plane that sets entry j to t exactly and leaves
/// a_i + a_j - t on entry i. The untouched active block stays diagonal, so
/// each placement removes one index; n - 1 placements fix all n entries.
/// A final symmetric permutation puts each target at the caller's position.
///
/// Throws InfeasibleTarget (Errc::infeasible) carrying the first violated
/// prefix length when the diagonal is not majorised by the spectrum.
SchurHornResult schur_horn_construct_traced(const SpectrumDiagonalPair& pair);

inline Matrix schur_horn_construct(const SpectrumDiagonalPair& pair) {
  return schur_horn_construct_traced(pair).matrix;
}

/// Positive semidefinite V of dimension n with diag(V) = y (zero-padded) and
/// mu(V) <= x* entrywise: the spectrum comes from intermediate(y, x) and the
/// matrix from schur_horn_construct.
Matrix kaftal_weiss_witness(const RealSeq& y, const RealSeq& x, std::size_t n);

}  // namespace schurpat
