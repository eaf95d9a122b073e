#include "schurpat/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "graph.hpp"
#include "schurpat/error.hpp"
#include "schurpat/random.hpp"

namespace schurpat {

Pattern::Pattern(std::size_t box, std::vector<Cell> cells) : box_(box), cells_(std::move(cells)) {
  if (box_ == 0) throw Error(Errc::invalid_input, "pattern box must be at least 1");
  for (const Cell& c : cells_)
    if (c.row >= box_ || c.col >= box_)
      throw Error(Errc::invalid_input, "cell (" + std::to_string(c.row) + ", " +
                                           std::to_string(c.col) + ") lies outside the " +
                                           std::to_string(box_) + "x" + std::to_string(box_) +
                                           " box");
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

Pattern Pattern::full(std::size_t n) {
  std::vector<Cell> cells;
  cells.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) cells.push_back({j, k});
  return Pattern(n, std::move(cells));
}

Pattern Pattern::diagonal(std::size_t n) {
  std::vector<Cell> cells;
  cells.reserve(n);
  for (std::size_t k = 0; k < n; ++k) cells.push_back({k, k});
  return Pattern(n, std::move(cells));
}

Pattern Pattern::toeplitz(std::span<const std::int64_t> offsets, std::size_t n) {
  std::vector<Cell> cells;
  const auto size = static_cast<std::int64_t>(n);
  for (std::int64_t d : offsets) {
    if (d >= size || -d >= size) continue;
    for (std::int64_t k = std::max<std::int64_t>(0, -d); k < std::min(size, size - d); ++k)
      cells.push_back({static_cast<std::size_t>(k + d), static_cast<std::size_t>(k)});
  }
  return Pattern(n, std::move(cells));
}

Pattern Pattern::hankel(std::span<const std::size_t> sums, std::size_t n) {
  std::vector<Cell> cells;
  for (std::size_t s : sums) {
    if (n == 0 || s > 2 * (n - 1)) continue;
    const std::size_t lo = s >= n ? s - (n - 1) : 0;
    const std::size_t hi = std::min(s, n - 1);
    for (std::size_t j = lo; j <= hi; ++j) cells.push_back({j, s - j});
  }
  return Pattern(n, std::move(cells));
}

Pattern Pattern::lacunary_hankel(double q, std::size_t n) {
  if (!(q > 1.0) || !std::isfinite(q))
    throw Error(Errc::invalid_parameter, "lacunary base must be a finite number above 1");
  std::set<std::size_t> sums;
  const double limit = 2.0 * static_cast<double>(n) - 1.0;
  for (double power = 1.0; std::floor(power) < limit; power *= q)
    sums.insert(static_cast<std::size_t>(std::floor(power)));
  const std::vector<std::size_t> list(sums.begin(), sums.end());
  return hankel(list, n);
}

Pattern Pattern::random(std::size_t n, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0))
    throw Error(Errc::invalid_parameter, "density must lie in [0, 1]");
  Rng rng = make_rng(seed);
  std::vector<Cell> cells;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (uniform01(rng) < density) cells.push_back({j, k});
  return Pattern(n, std::move(cells));
}

bool Pattern::contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

bool Pattern::is_subset_of(const Pattern& other) const {
  return std::includes(other.cells_.begin(), other.cells_.end(), cells_.begin(), cells_.end());
}

Pattern Pattern::unite(const Pattern& other) const {
  std::vector<Cell> cells;
  cells.reserve(cells_.size() + other.cells_.size());
  std::set_union(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end(),
                 std::back_inserter(cells));
  return Pattern(std::max(box_, other.box_), std::move(cells));
}

std::vector<std::size_t> Pattern::row_degrees() const {
  std::vector<std::size_t> deg(box_, 0);
  for (const Cell& c : cells_) ++deg[c.row];
  return deg;
}

std::vector<std::size_t> Pattern::col_degrees() const {
  std::vector<std::size_t> deg(box_, 0);
  for (const Cell& c : cells_) ++deg[c.col];
  return deg;
}

bool Decomposition::is_valid_for(const Pattern& p) const {
  if (parts.size() != cells.size()) return false;
  if (!std::equal(cells.begin(), cells.end(), p.cells().begin(), p.cells().end())) return false;
  std::vector<std::size_t> in_row(p.box(), 0);
  std::vector<std::size_t> in_col(p.box(), 0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (parts[i] == Part::row_part) {
      if (++in_row[cells[i].row] > r_budget) return false;
    } else if (++in_col[cells[i].col] > c_budget) {
      return false;
    }
  }
  return true;
}

std::optional<Decomposition> dd_decompose(const Pattern& p, std::size_t r, std::size_t c) {
  const std::size_t n = p.box();
  const auto deg = p.row_degrees();
  // Nodes: source, rows [1, n], columns [n + 1, 2n], sink.
  const std::size_t source = 0;
  const std::size_t sink = 2 * n + 1;
  detail::MaxFlow network(2 * n + 2);
  std::int64_t required = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (deg[j] > r) {
      const auto overflow = static_cast<std::int64_t>(deg[j] - r);
      network.add_edge(source, 1 + j, overflow);
      required += overflow;
    }
  }
  std::vector<std::size_t> cell_edge(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Cell& cell = p.cells()[i];
    cell_edge[i] = network.add_edge(1 + cell.row, 1 + n + cell.col, 1);
  }
  for (std::size_t k = 0; k < n; ++k)
    network.add_edge(1 + n + k, sink, static_cast<std::int64_t>(c));

  if (network.run(source, sink) != required) return std::nullopt;

  Decomposition out{r, c, std::vector<Cell>(p.cells().begin(), p.cells().end()), {}};
  out.parts.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    out.parts[i] = network.flow(cell_edge[i]) > 0 ? Part::column_part : Part::row_part;
  return out;
}

std::vector<Line> minimal_cover(const Pattern& p) {
  const std::size_t n = p.box();
  // Cells are sorted row-major, so the column list is already CSR by row.
  std::vector<std::size_t> offsets(n + 1, 0);
  std::vector<std::size_t> targets(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    ++offsets[p.cells()[i].row + 1];
    targets[i] = p.cells()[i].col;
  }
  for (std::size_t j = 0; j < n; ++j) offsets[j + 1] += offsets[j];

  const detail::Matching m = detail::hopcroft_karp(n, n, offsets, targets);

  // Konig: Z = vertices reachable from free rows by alternating paths.
  std::vector<char> row_in_z(n, 0);
  std::vector<char> col_in_z(n, 0);
  std::vector<std::size_t> stack;
  for (std::size_t j = 0; j < n; ++j)
    if (m.left_to_right[j] == detail::kUnmatched) {
      row_in_z[j] = 1;
      stack.push_back(j);
    }
  while (!stack.empty()) {
    const std::size_t j = stack.back();
    stack.pop_back();
    for (std::size_t e = offsets[j]; e < offsets[j + 1]; ++e) {
      const std::size_t k = targets[e];
      if (col_in_z[k]) continue;
      col_in_z[k] = 1;
      const std::size_t next = m.right_to_left[k];
      if (next != detail::kUnmatched && !row_in_z[next]) {
        row_in_z[next] = 1;
        stack.push_back(next);
      }
    }
  }

  std::vector<Line> cover;
  cover.reserve(m.size);
  for (std::size_t j = 0; j < n; ++j)
    if (!row_in_z[j]) cover.push_back({Side::row, j});
  for (std::size_t k = 0; k < n; ++k)
    if (col_in_z[k]) cover.push_back({Side::column, k});
  if (cover.size() != m.size)
    throw Error(Errc::internal, "minimal_cover: cover size differs from matching size");
  return cover;
}

std::vector<Cell> extract_monotone_diagonal(const Pattern& p) {
  // Rows ascending, columns descending within a row, so that a strictly
  // increasing run of columns never uses two cells of the same row.
  std::vector<Cell> order(p.cells().begin(), p.cells().end());
  std::sort(order.begin(), order.end(), [](const Cell& a, const Cell& b) {
    return a.row != b.row ? a.row < b.row : a.col > b.col;
  });
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> tails;  // tails[len] = index ending a chain of length len + 1
  std::vector<std::size_t> parent(order.size(), kNone);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto pos = std::lower_bound(tails.begin(), tails.end(), order[i].col,
                                      [&](std::size_t idx, std::size_t col) {
                                        return order[idx].col < col;
                                      }) -
                     tails.begin();
    if (pos > 0) parent[i] = tails[static_cast<std::size_t>(pos) - 1];
    if (static_cast<std::size_t>(pos) == tails.size())
      tails.push_back(i);
    else
      tails[static_cast<std::size_t>(pos)] = i;
  }
  std::vector<Cell> chain;
  if (tails.empty()) return chain;
  for (std::size_t i = tails.back(); i != kNone; i = parent[i]) chain.push_back(order[i]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

Pattern transform(const Pattern& p, std::span<const std::size_t> a,
                  std::span<const std::size_t> b, std::size_t out_box) {
  if (a.size() != p.box() || b.size() != p.box())
    throw Error(Errc::invalid_map, "index maps must be defined on the whole box of size " +
                                       std::to_string(p.box()));
  std::vector<Cell> image;
  image.reserve(p.size());
  for (const Cell& c : p.cells()) {
    const Cell mapped{a[c.row], b[c.col]};
    if (mapped.row >= out_box || mapped.col >= out_box)
      throw Error(Errc::invalid_map, "image cell (" + std::to_string(mapped.row) + ", " +
                                         std::to_string(mapped.col) + ") leaves the " +
                                         std::to_string(out_box) + "x" +
                                         std::to_string(out_box) + " box");
    image.push_back(mapped);
  }
  return Pattern(out_box, std::move(image));
}

}  // namespace schurpat
