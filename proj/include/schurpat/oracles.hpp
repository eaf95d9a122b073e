#pragma once

// Independent reference computations: exhaustive searches and alternative
// algebraic routes used to cross-check the main algorithms. None of these
// call into the code paths they are meant to check.

#include <cstddef>
#include <vector>

#include "schurpat/patterns.hpp"
#include "schurpat/random.hpp"
#include "schurpat/spectra.hpp"

namespace schurpat::oracle {

/// sqrt of the eigenvalues of A^* A from a Hermitian eigensolver, nonincreasing.
std::vector<double> singular_values_via_gram(const Matrix& a);

/// feasible[r][c] for r, c <= max_budget, by trying all 2^|P| R/C splits.
/// Patterns are limited to 24 cells.
std::vector<std::vector<bool>> dd_feasibility_table(const Pattern& p, std::size_t max_budget);

/// Minimum number of lines covering P by trying every subset of rows.
/// Boxes are limited to 20.
std::size_t min_cover_size(const Pattern& p);

/// Longest chain strictly increasing in both coordinates, over all subsets
/// of cells. Patterns are limited to 24 cells.
std::size_t longest_chain(const Pattern& p);

/// Applies `count` random T-transforms (convex mixes of two coordinates);
/// the result is majorised by the input.
std::vector<double> t_transform_mix(std::vector<double> y, std::size_t count, Rng& rng);

/// max N(a) over nonincreasing a >= 0 on the grid step * Z^n with a
/// submajorised by b (b zero-padded to n).
double distortion_grid(const std::vector<double>& b, const IdealNorm& norm, std::size_t n,
                       double step);

}  // namespace schurpat::oracle
