#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace schurpat {

struct Cell {
  std::size_t row;
  std::size_t col;
  auto operator<=>(const Cell&) const = default;
};

/// Finite set of cells inside an n x n box. Cells are kept sorted
/// (row-major) and unique.
class Pattern {
 public:
  /// Sorts and removes duplicates; throws Errc::invalid_input for cells
  /// outside the box.
  Pattern(std::size_t box, std::vector<Cell> cells);

  static Pattern empty(std::size_t n) { return Pattern(n, {}); }
  static Pattern full(std::size_t n);
  static Pattern diagonal(std::size_t n);
  /// {(j, k) : j - k in offsets}
  static Pattern toeplitz(std::span<const std::int64_t> offsets, std::size_t n);
  /// {(j, k) : j + k in sums}
  static Pattern hankel(std::span<const std::size_t> sums, std::size_t n);
  /// hankel({floor(q^m) : m >= 0, floor(q^m) < 2n - 1}, n), q > 1.
  static Pattern lacunary_hankel(double q, std::size_t n);
  /// Each cell independently with probability `density`.
  static Pattern random(std::size_t n, double density, std::uint64_t seed);

  std::size_t box() const noexcept { return box_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool is_empty() const noexcept { return cells_.empty(); }
  std::span<const Cell> cells() const noexcept { return cells_; }

  bool contains(Cell c) const;
  bool is_subset_of(const Pattern& other) const;
  /// Union inside the larger of the two boxes.
  Pattern unite(const Pattern& other) const;

  std::vector<std::size_t> row_degrees() const;
  std::vector<std::size_t> col_degrees() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::size_t box_;
  std::vector<Cell> cells_;
};

enum class Part : std::uint8_t { row_part, column_part };

/// Split of a pattern into R (at most r_budget cells per row) and C (at most
/// c_budget cells per column). parts[i] belongs to cells[i].
struct Decomposition {
  std::size_t r_budget;
  std::size_t c_budget;
  std::vector<Cell> cells;
  std::vector<Part> parts;

  /// Checks coverage of exactly `p`'s cells and both per-line budgets.
  bool is_valid_for(const Pattern& p) const;
};

/// Decides whether P = R u C with per-row bound r on R and per-column bound c
/// on C, via max flow: source -> row (capacity max(0, deg - r)), row -> col
/// per cell (capacity 1), col -> sink (capacity c). Saturating flow exists iff
/// a decomposition does; cells carrying flow go to C.
std::optional<Decomposition> dd_decompose(const Pattern& p, std::size_t r, std::size_t c);

enum class Side : std::uint8_t { row, column };

struct Line {
  Side side;
  std::size_t index;
  auto operator<=>(const Line&) const = default;
};

/// Minimum set of rows and columns covering every cell (Konig cover from a
/// Hopcroft-Karp maximum matching). Rows are listed before columns.
std::vector<Line> minimal_cover(const Pattern& p);

/// Longest chain of cells strictly increasing in both coordinates.
std::vector<Cell> extract_monotone_diagonal(const Pattern& p);

/// Image {(a(j), b(k))} of the pattern inside a box of size `out_box`.
/// `a` and `b` must have one entry per index of the source box.
Pattern transform(const Pattern& p, std::span<const std::size_t> a,
                  std::span<const std::size_t> b, std::size_t out_box);

}  // namespace schurpat
