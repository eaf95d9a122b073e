#include "graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace schurpat::detail {

MaxFlow::MaxFlow(std::size_t nodes) : adjacency_(nodes), level_(nodes), cursor_(nodes) {}

std::size_t MaxFlow::add_edge(std::size_t from, std::size_t to, std::int64_t capacity) {
  const std::size_t id = edges_.size();
  edges_.push_back({to, capacity, capacity});
  edges_.push_back({from, 0, 0});
  adjacency_[from].push_back(id);
  adjacency_[to].push_back(id + 1);
  return id;
}

bool MaxFlow::build_levels(std::size_t source, std::size_t sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<std::size_t> frontier;
  level_[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t id : adjacency_[u]) {
      const Edge& e = edges_[id];
      if (e.capacity > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[u] + 1;
        frontier.push(e.to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t MaxFlow::push(std::size_t node, std::size_t sink, std::int64_t limit) {
  if (node == sink) return limit;
  for (std::size_t& k = cursor_[node]; k < adjacency_[node].size(); ++k) {
    const std::size_t id = adjacency_[node][k];
    Edge& e = edges_[id];
    if (e.capacity <= 0 || level_[e.to] != level_[node] + 1) continue;
    const std::int64_t pushed = push(e.to, sink, std::min(limit, e.capacity));
    if (pushed > 0) {
      e.capacity -= pushed;
      edges_[id ^ 1].capacity += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(std::size_t source, std::size_t sink) {
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (const std::int64_t pushed =
               push(source, sink, std::numeric_limits<std::int64_t>::max()))
      total += pushed;
  }
  return total;
}

std::int64_t MaxFlow::flow(std::size_t edge) const {
  return edges_[edge].original - edges_[edge].capacity;
}

Matching hopcroft_karp(std::size_t left, std::size_t right, std::span<const std::size_t> offsets,
                       std::span<const std::size_t> targets) {
  Matching m;
  m.left_to_right.assign(left, kUnmatched);
  m.right_to_left.assign(right, kUnmatched);
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(left);
  std::vector<std::size_t> queue;
  queue.reserve(left);

  auto bfs = [&] {
    queue.clear();
    bool reachable_free = false;
    for (std::size_t u = 0; u < left; ++u) {
      if (m.left_to_right[u] == kUnmatched) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = kInf;
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t e = offsets[u]; e < offsets[u + 1]; ++e) {
        const std::size_t w = m.right_to_left[targets[e]];
        if (w == kUnmatched) {
          reachable_free = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return reachable_free;
  };

  auto dfs = [&](auto&& self, std::size_t u) -> bool {
    for (std::size_t e = offsets[u]; e < offsets[u + 1]; ++e) {
      const std::size_t v = targets[e];
      const std::size_t w = m.right_to_left[v];
      if (w == kUnmatched || (dist[w] == dist[u] + 1 && self(self, w))) {
        m.left_to_right[u] = v;
        m.right_to_left[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    for (std::size_t u = 0; u < left; ++u)
      if (m.left_to_right[u] == kUnmatched && dfs(dfs, u)) ++m.size;
  }
  return m;
}

}  // namespace schurpat::detail
