#pragma once

// Growing reducible complexes by attaching cones over embedded trees, and the
// complexes with a single initial vertex built on top of that.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vdc/complex.hpp"
#include "vdc/constructions.hpp"
#include "vdc/reduction.hpp"
#include "vdc/shapes.hpp"
#include "vdc/tree_family.hpp"

namespace vdc {

/// All trees with at most `n` vertices up to isomorphism, smallest first.
inline std::vector<Graph> trees_up_to(std::size_t n) {
  std::vector<Graph> out;
  if (n == 0) return out;
  std::vector<Graph> level{path_graph(1)};
  for (std::size_t size = 1; size <= n && !level.empty(); ++size) {
    out.insert(out.end(), level.begin(), level.end());
    std::vector<Graph> next;
    std::set<std::string> seen;
    for (const auto& t : level)
      for (VertexId v = 0; v < t.num_vertices(); ++v) {
        auto verts = t.vertices();
        auto edges = t.edge_labels();
        const Label leaf = default_label(size);
        verts.push_back(leaf);
        edges.emplace_back(t.label(v), leaf);
        Graph g(std::move(verts), edges);
        if (seen.insert(tree_canonical_code(g)).second) next.push_back(std::move(g));
      }
    level = std::move(next);
  }
  return out;
}

/// Distinct subgraphs of `g` isomorphic to the tree `t` (labels from g).
inline std::vector<Graph> tree_embeddings(const Graph& t, const Graph& g) {
  if (!is_tree(t)) throw InvalidArgument("tree_embeddings: pattern is not a tree");
  // Vertices of t in BFS order, each with its parent.
  std::vector<VertexId> order{0};
  std::vector<std::optional<VertexId>> parent(t.num_vertices());
  std::vector<char> seen(t.num_vertices(), 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto u : t.neighbors(order[i]))
      if (!seen[u]) {
        seen[u] = 1;
        parent[u] = order[i];
        order.push_back(u);
      }
  std::vector<VertexId> image(t.num_vertices());
  std::vector<char> used(g.num_vertices(), 0);
  std::set<std::pair<std::vector<VertexId>, std::vector<EdgeIds>>> found;
  auto place = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      std::vector<VertexId> vs(image.begin(), image.end());
      std::sort(vs.begin(), vs.end());
      std::vector<EdgeIds> es;
      for (const auto& e : t.edges()) es.push_back(detail::make_edge(image[e[0]], image[e[1]]));
      std::sort(es.begin(), es.end());
      found.emplace(std::move(vs), std::move(es));
      return;
    }
    const VertexId x = order[i];
    auto try_vertex = [&](VertexId y) {
      if (used[y]) return;
      used[y] = 1;
      image[x] = y;
      self(self, i + 1);
      used[y] = 0;
    };
    if (!parent[x]) {
      for (VertexId y = 0; y < g.num_vertices(); ++y) try_vertex(y);
    } else {
      for (auto y : g.neighbors(image[*parent[x]])) try_vertex(y);
    }
  };
  place(place, 0);
  std::vector<Graph> out;
  for (const auto& [vs, es] : found) {
    std::vector<Label> labels;
    for (auto v : vs) labels.push_back(g.label(v));
    std::vector<EdgeIds> local;
    for (const auto& e : es) {
      const auto a = static_cast<VertexId>(std::lower_bound(vs.begin(), vs.end(), e[0]) - vs.begin());
      const auto b = static_cast<VertexId>(std::lower_bound(vs.begin(), vs.end(), e[1]) - vs.begin());
      local.push_back(detail::make_edge(a, b));
    }
    out.push_back(Graph::from_ids(std::move(labels), std::move(local)));
  }
  return out;
}

/// K together with the cone over the tree `t`, which must lie in the 1-skeleton of K.
inline Complex2 reverse_grow(const Complex2& k, const Graph& t, const Label& apex) {
  if (!is_tree(t)) throw InvalidArgument("reverse_grow: attaching graph is not a tree");
  if (k.contains(apex)) throw InvalidArgument("reverse_grow: apex '" + apex + "' already present");
  detail::require_label(apex);
  for (const auto& l : t.vertices())
    if (!k.contains(l)) throw InvalidArgument("reverse_grow: tree vertex '" + l + "' is not in the complex");
  for (const auto& [a, b] : t.edge_labels())
    if (!k.has_edge(k.require(a), k.require(b)))
      throw InvalidArgument("reverse_grow: tree edge " + a + " " + b + " is not in the complex");
  auto faces = k.faces();
  faces.push_back({apex});
  for (const auto& l : t.vertices()) faces.push_back({apex, l});
  for (const auto& [a, b] : t.edge_labels()) faces.push_back({apex, a, b});
  return Complex2::from_faces(faces);
}

/// Smallest positive integer not used as a label.
inline Label fresh_numeric_label(const Complex2& k) {
  for (std::size_t i = 1;; ++i)
    if (!k.contains(std::to_string(i))) return std::to_string(i);
}

/// Attaches a cone over the link of `v` with `w` rerouted through `v` plus the
/// edge v-w. The new apex becomes the unique initial vertex and its link is
/// the old link with an extra leaf at `w`.
inline Complex2 extend_unique_initial(const Complex2& k, const Label& v, const Label& w,
                                      const FamilySpec& f = FamilySpec::all_trees(),
                                      std::optional<Label> apex = std::nullopt) {
  const auto init = initial_vertices(k, f);
  if (init.size() != 1 || init.front() != v)
    throw InvalidArgument("extend_unique_initial: '" + v + "' is not the unique initial vertex");
  const Graph lk = link(k, v);
  if (!is_tree(lk)) throw InvalidArgument("extend_unique_initial: link of '" + v + "' is not a tree");
  if (!lk.contains(w)) throw InvalidArgument("extend_unique_initial: '" + w + "' is not in the link of '" + v + "'");
  std::vector<Label> verts{v, w};
  for (const auto& x : lk.vertices())
    if (x != w) verts.push_back(x);
  std::vector<std::pair<Label, Label>> edges{{v, w}};
  for (auto [a, b] : lk.edge_labels()) {
    if (a == w) a = v;
    if (b == w) b = v;
    edges.emplace_back(a, b);
  }
  return reverse_grow(k, Graph(std::move(verts), edges), apex ? *apex : fresh_numeric_label(k));
}

struct UniqueSearchOptions {
  std::uint64_t seed = 1;
  std::size_t budget = 1000;        // growth trials
  std::size_t max_vertices = 14;    // per trial
  std::optional<Graph> unique_link; // required shape of the unique initial vertex's link
  double explore = 0.15;            // chance of a uniformly random move instead of the best one
};

struct UniqueSearchResult {
  Complex2 complex;  // the unique initial vertex is labelled "1"
  std::size_t trial = 0;
};

namespace detail {

inline std::vector<Graph> growth_trees(const FamilySpec& f, std::size_t max_size = 5) {
  std::vector<Graph> out;
  for (auto& t : trees_up_to(max_size))
    if (f.contains(t)) out.push_back(std::move(t));
  return out;
}

/// Relabels so that `first` becomes "1" and the rest follow in growth order.
inline Complex2 number_vertices(const Complex2& k, const std::vector<Label>& growth_order, const Label& first) {
  std::map<Label, Label> rename{{first, "1"}};
  std::size_t next = 2;
  for (const auto& l : growth_order)
    if (l != first) rename[l] = std::to_string(next++);
  return relabel(k, rename);
}

}  // namespace detail

/// Randomised growth from a point by cones over trees of F, each step taking
/// the attachment that leaves the fewest initial vertices. Every grown
/// complex is F-reducible by construction; the first one with a single
/// initial vertex (of the requested link shape) is returned.
inline std::optional<UniqueSearchResult> search_unique_initial(const FamilySpec& f, const UniqueSearchOptions& opts) {
  if (!f.trees_only() || !is_subtree_closed(f) || !f.contains(path_graph(3)))
    throw InvalidArgument("search_unique_initial: family must be subtree-closed and contain P3");
  const auto trees = detail::growth_trees(f);
  std::mt19937_64 rng(opts.seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  for (std::size_t trial = 0; trial < opts.budget; ++trial) {
    Complex2 k = Complex2::point("1");
    std::vector<Label> order{"1"};
    while (k.num_vertices() < opts.max_vertices) {
      const Label apex = std::to_string(k.num_vertices() + 1);
      const Graph skeleton = k.one_skeleton();
      std::vector<Graph> moves;
      for (const auto& t : trees)
        for (auto& e : tree_embeddings(t, skeleton)) moves.push_back(std::move(e));
      if (moves.empty()) break;
      std::vector<std::size_t> best;
      std::size_t best_count = SIZE_MAX;
      std::optional<std::size_t> winner;
      for (std::size_t i = 0; i < moves.size() && !winner; ++i) {
        const Complex2 grown = reverse_grow(k, moves[i], apex);
        const std::size_t c = initial_vertices(grown, f).size();
        if (c == 1 && (!opts.unique_link || isomorphic(moves[i], *opts.unique_link))) winner = i;
        if (c < best_count) {
          best_count = c;
          best.clear();
        }
        if (c == best_count) best.push_back(i);
      }
      std::size_t chosen;
      if (winner) chosen = *winner;
      else if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < opts.explore) chosen = pick(moves.size());
      else chosen = best[pick(best.size())];
      k = reverse_grow(k, moves[chosen], apex);
      order.push_back(apex);
      if (winner) return UniqueSearchResult{detail::number_vertices(k, order, apex), trial};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// A complex on which the greedy algorithm can choose badly

inline FamilySpec paths_to_p4() {
  return FamilySpec::explicit_trees({path_graph(1), path_graph(2), path_graph(3), path_graph(4)});
}

/// Relabels a complex whose only initial vertex is `v` so that v becomes "1"
/// and a vertex `t` of its link becomes "10", choosing the smallest `t` such
/// that the link of v with an extra leaf at t is in F and the complex reduces
/// to t. Other vertices get the remaining numbers in label order.
inline std::optional<Complex2> prepare_trap_base(const Complex2& k, const FamilySpec& f = paths_to_p4(),
                                                 const SearchOptions& opts = {}) {
  const auto init = initial_vertices(k, f);
  if (init.size() != 1) throw InvalidArgument("prepare_trap_base: complex must have exactly one initial vertex");
  const Label& v = init.front();
  const Graph lk = link(k, v);
  for (const auto& t : lk.vertices()) {
    auto verts = lk.vertices();
    auto edges = lk.edge_labels();
    const Label leaf = fresh_label(verts, "leaf");
    verts.push_back(leaf);
    edges.emplace_back(t, leaf);
    if (!f.contains(Graph(verts, edges))) continue;
    if (!reduce_to_target(k, f, t, opts)) continue;
    std::map<Label, Label> rename{{v, "1"}, {t, "10"}};
    std::size_t next = 2;
    for (const auto& l : k.vertices()) {
      if (l == v || l == t) continue;
      if (next == 10) ++next;
      rename[l] = std::to_string(next++);
    }
    return relabel(k, rename);
  }
  return std::nullopt;
}

/// Two copies of the base, vertices A and B, and triangles {1,10,A},
/// {1,A,B}, {1',A,B}.
inline Complex2 greedy_trap(const Complex2& base, const FamilySpec& f = paths_to_p4(), const SearchOptions& opts = {}) {
  if (!base.contains("1") || !base.contains("10")) throw InvalidArgument("greedy_trap: base needs vertices 1 and 10");
  if (base.contains("A") || base.contains("B")) throw InvalidArgument("greedy_trap: base already uses A or B");
  const auto init = initial_vertices(base, f);
  if (init.size() != 1 || init.front() != "1") throw InvalidArgument("greedy_trap: 1 must be the only initial vertex");
  if (!link(base, "1").contains("10")) throw InvalidArgument("greedy_trap: 10 must be adjacent to 1");
  if (!reduce_to_target(base, f, "10", opts)) throw InvalidArgument("greedy_trap: base does not reduce to 10");
  const Complex2 both = disjoint_union(base, base);
  const std::string prime = disjoint_suffix(base.vertices(), base.vertices());
  auto faces = both.faces();
  faces.push_back({"1", "10", "A"});
  faces.push_back({"1", "A", "B"});
  faces.push_back({"1" + prime, "A", "B"});
  return Complex2::from_faces(faces);
}

}  // namespace vdc
