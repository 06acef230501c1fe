#pragma once

// Small unlabelled graphs on vertices 0..n-1. Links are materialised in this
// form inside the search loops, where label strings would dominate the cost.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "vdc/complex.hpp"

namespace vdc::detail {

struct LocalGraph {
  std::uint32_t n = 0;
  std::vector<EdgeIds> edges;

  std::vector<std::vector<std::uint32_t>> adjacency() const {
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (const auto& e : edges) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
    return adj;
  }

  std::vector<std::uint32_t> degrees() const {
    std::vector<std::uint32_t> d(n, 0);
    for (const auto& e : edges) {
      ++d[e[0]];
      ++d[e[1]];
    }
    return d;
  }
};

inline LocalGraph to_local(const Graph& g) { return LocalGraph{static_cast<std::uint32_t>(g.num_vertices()), g.edges()}; }

inline bool is_connected(const LocalGraph& g) {
  if (g.n == 0) return false;
  auto adj = g.adjacency();
  std::vector<char> seen(g.n, 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::uint32_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto u : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == g.n;
}

inline bool is_tree(const LocalGraph& g) { return g.n >= 1 && g.edges.size() + 1 == g.n && is_connected(g); }

/// Union-find cycle test on an arbitrary graph.
inline bool has_cycle(const LocalGraph& g) {
  std::vector<std::uint32_t> parent(g.n);
  for (std::uint32_t i = 0; i < g.n; ++i) parent[i] = i;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) {
    auto a = find(e[0]), b = find(e[1]);
    if (a == b) return true;
    parent[a] = b;
  }
  return false;
}

/// Leaf count of a star (tree of diameter <= 2), or -1 when g is not a star.
inline long star_leaves(const LocalGraph& g) {
  if (!is_tree(g)) return -1;
  if (g.n <= 2) return static_cast<long>(g.n) - 1;
  auto d = g.degrees();
  const auto hub = std::count(d.begin(), d.end(), g.n - 1);
  return hub == 1 ? static_cast<long>(g.n) - 1 : -1;
}

inline std::string rooted_code(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t v,
                               std::uint32_t parent) {
  std::vector<std::string> kids;
  for (auto u : adj[v])
    if (u != parent) kids.push_back(rooted_code(adj, u, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  s += ")";
  return s;
}

/// Centre-rooted AHU encoding; g must be a tree.
inline std::string tree_code(const LocalGraph& g) {
  auto adj = g.adjacency();
  if (g.n == 1) return "()";
  std::vector<std::uint32_t> deg(g.n);
  for (std::uint32_t v = 0; v < g.n; ++v) deg[v] = static_cast<std::uint32_t>(adj[v].size());
  std::vector<std::uint32_t> layer;
  for (std::uint32_t v = 0; v < g.n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  std::uint32_t remaining = g.n;
  std::vector<char> removed(g.n, 0);
  while (remaining > 2) {
    std::vector<std::uint32_t> next;
    for (auto v : layer) {
      removed[v] = 1;
      --remaining;
      for (auto u : adj[v])
        if (!removed[u] && --deg[u] == 1) next.push_back(u);
    }
    layer = std::move(next);
  }
  std::vector<std::uint32_t> centres;
  for (std::uint32_t v = 0; v < g.n; ++v)
    if (!removed[v]) centres.push_back(v);
  constexpr std::uint32_t none = 0xFFFFFFFFu;
  if (centres.size() == 1) return rooted_code(adj, centres[0], none);
  auto a = rooted_code(adj, centres[0], centres[1]);
  auto b = rooted_code(adj, centres[1], centres[0]);
  if (b < a) std::swap(a, b);
  return "E" + a + b;
}

/// Whether `small` is isomorphic to a (not necessarily induced) subgraph of `big`.
inline bool is_subgraph_of(const LocalGraph& small, const LocalGraph& big) {
  if (small.n > big.n || small.edges.size() > big.edges.size()) return false;
  auto sadj = small.adjacency();
  std::vector<std::vector<char>> bmat(big.n, std::vector<char>(big.n, 0));
  for (const auto& e : big.edges) bmat[e[0]][e[1]] = bmat[e[1]][e[0]] = 1;
  std::vector<std::uint32_t> map(small.n, 0);
  std::vector<char> used(big.n, 0);
  auto place = [&](auto&& self, std::uint32_t i) -> bool {
    if (i == small.n) return true;
    for (std::uint32_t b = 0; b < big.n; ++b) {
      if (used[b]) continue;
      bool ok = true;
      for (auto u : sadj[i])
        if (u < i && !bmat[map[u]][b]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used[b] = 1;
      map[i] = b;
      if (self(self, i + 1)) return true;
      used[b] = 0;
    }
    return false;
  };
  return place(place, 0);
}

}  // namespace vdc::detail
