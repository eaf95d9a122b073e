#pragma once

// Flow and matching kernels behind the pattern decision procedures.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace schurpat::detail {

/// Dinic blocking-flow max flow on an adjacency-list residual graph.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes);

  /// Returns an edge id usable with flow().
  std::size_t add_edge(std::size_t from, std::size_t to, std::int64_t capacity);
  std::int64_t run(std::size_t source, std::size_t sink);
  std::int64_t flow(std::size_t edge) const;

 private:
  struct Edge {
    std::size_t to;
    std::int64_t capacity;
    std::int64_t original;
  };

  bool build_levels(std::size_t source, std::size_t sink);
  std::int64_t push(std::size_t node, std::size_t sink, std::int64_t limit);

  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

inline constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

struct Matching {
  std::vector<std::size_t> left_to_right;
  std::vector<std::size_t> right_to_left;
  std::size_t size = 0;
};

/// Hopcroft-Karp on a bipartite graph given in CSR form: the neighbours of
/// left vertex u are targets[offsets[u] .. offsets[u + 1]).
Matching hopcroft_karp(std::size_t left, std::size_t right, std::span<const std::size_t> offsets,
                       std::span<const std::size_t> targets);

}  // namespace schurpat::detail
