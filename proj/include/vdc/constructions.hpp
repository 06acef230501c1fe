#pragma once

// Exact-cover gadgets, cone equivalences, 2-trees and their blocks, and the
// growth constructions behind complexes with a single initial vertex.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vdc/complex.hpp"
#include "vdc/degree_set.hpp"
#include "vdc/face_list.hpp"
#include "vdc/graph_core.hpp"
#include "vdc/reduction.hpp"
#include "vdc/tree_family.hpp"

namespace vdc {

/// Label derived from `base` (primes appended) that is not used in `taken`.
inline Label fresh_label(const std::vector<Label>& taken, Label base = "apex") {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += '\'';
  return base;
}

// ---------------------------------------------------------------------------
// Exact cover by d-sets

struct X3CInstance {
  std::vector<Label> elements;
  std::vector<std::vector<Label>> blocks;  // blocks[i] is B<i+1>

  /// Common block size; 0 when there are no blocks.
  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }

  void validate() const {
    std::set<Label> s(elements.begin(), elements.end());
    if (s.size() != elements.size()) throw InvalidArgument("x3c: repeated element");
    for (const auto& e : elements) detail::require_label(e);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const auto& b = blocks[i];
      const std::string name = "B" + std::to_string(i + 1);
      if (b.size() < 3) throw InvalidArgument("x3c: " + name + " has fewer than 3 elements");
      if (b.size() != block_size()) throw InvalidArgument("x3c: blocks have different sizes");
      std::set<Label> bs(b.begin(), b.end());
      if (bs.size() != b.size()) throw InvalidArgument("x3c: " + name + " repeats an element");
      for (const auto& x : b)
        if (!s.count(x)) throw InvalidArgument("x3c: " + name + " uses unknown element '" + x + "'");
    }
  }
};

inline std::string block_name(std::size_t i) { return "B" + std::to_string(i + 1); }

/// `elements: x1 x2 ...` followed by `block: xi xj xk` lines.
inline X3CInstance parse_x3c(std::string_view text) {
  X3CInstance inst;
  bool have_elements = false;
  std::size_t lineno = 0;
  for (auto line : detail::split_lines(text)) {
    ++lineno;
    auto tok = detail::split_ws(detail::strip_comment(line));
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    const std::vector<Label> rest(tok.begin() + 1, tok.end());
    for (const auto& l : rest)
      if (!is_valid_label(l)) throw ParseError(where + "malformed token '" + l + "'");
    if (tok[0] == "elements:") {
      if (have_elements) throw ParseError(where + "second elements line");
      inst.elements = rest;
      have_elements = true;
    } else if (tok[0] == "block:") {
      if (!have_elements) throw ParseError(where + "block before the elements line");
      inst.blocks.push_back(rest);
    } else {
      throw ParseError(where + "expected 'elements:' or 'block:'");
    }
  }
  if (!have_elements) throw ParseError("missing elements line");
  try {
    inst.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return inst;
}

/// Vertices x, x', x'' per element and B1, B2, ... per block; edges x-x',
/// x-x'' and x-B whenever x lies in B.
inline Graph x3c_gadget(const X3CInstance& inst) {
  inst.validate();
  std::vector<Label> verts;
  std::vector<std::pair<Label, Label>> edges;
  for (const auto& x : inst.elements) {
    verts.insert(verts.end(), {x, x + "'", x + "''"});
    edges.emplace_back(x, x + "'");
    edges.emplace_back(x, x + "''");
  }
  for (std::size_t i = 0; i < inst.blocks.size(); ++i) {
    verts.push_back(block_name(i));
    for (const auto& x : inst.blocks[i]) edges.emplace_back(x, block_name(i));
  }
  std::set<Label> distinct(verts.begin(), verts.end());
  if (distinct.size() != verts.size()) throw InvalidArgument("x3c gadget: element labels clash with gadget labels");
  return Graph(std::move(verts), edges);
}

/// Lexicographically first exact cover as 0-based block indices.
inline std::optional<std::vector<std::size_t>> x3c_brute_force(const X3CInstance& inst) {
  inst.validate();
  std::map<Label, std::size_t> index;
  for (std::size_t i = 0; i < inst.elements.size(); ++i) index[inst.elements[i]] = i;
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& b : inst.blocks) {
    std::vector<std::size_t> ids;
    for (const auto& x : b) ids.push_back(index.at(x));
    blocks.push_back(ids);
  }
  std::vector<char> used(inst.elements.size(), 0);
  std::size_t covered = 0;
  std::vector<std::size_t> chosen;
  auto dfs = [&](auto&& self, std::size_t i) -> bool {
    if (covered == inst.elements.size()) return true;
    if (i == blocks.size()) return false;
    bool fits = true;
    for (auto x : blocks[i]) fits = fits && !used[x];
    if (fits) {
      for (auto x : blocks[i]) used[x] = 1;
      covered += blocks[i].size();
      chosen.push_back(i);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
      covered -= blocks[i].size();
      for (auto x : blocks[i]) used[x] = 0;
    }
    return self(self, i + 1);
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return chosen;
}

inline bool is_exact_cover(const X3CInstance& inst, const std::vector<std::size_t>& cover) {
  std::map<Label, int> hits;
  for (auto i : cover) {
    if (i >= inst.blocks.size()) return false;
    for (const auto& x : inst.blocks[i]) ++hits[x];
  }
  for (const auto& x : inst.elements)
    if (hits[x] != 1) return false;
  return hits.size() == inst.elements.size();
}

/// Blocks whose gadget vertex is a sink of the orientation induced by `w`.
inline std::vector<std::size_t> cover_from_witness(const X3CInstance& inst, const GraphReductionWitness& w) {
  const Graph g = x3c_gadget(inst);
  const DegreeSet a{0, inst.block_size()};
  if (auto problem = check_graph_witness(g, a, w)) throw InvalidArgument("cover_from_witness: " + *problem);
  const auto report = check_acyclic(g, orientation_from_witness(g, w));
  std::vector<std::size_t> cover;
  for (std::size_t i = 0; i < inst.blocks.size(); ++i)
    if (report.out_degree.at(block_name(i)) == 0) cover.push_back(i);
  if (!is_exact_cover(inst, cover)) throw Error("cover_from_witness: sink blocks do not form an exact cover");
  return cover;
}

// ---------------------------------------------------------------------------
// Cones over graphs

struct ConeEquivalence {
  bool double_cone_reducible = false;  // C(G + G) is S_A-reducible
  bool cone_reducible_to_apex = false; // CG is S_A-reducible to its apex
  bool graph_reducible = false;        // G is A-reducible

  bool all_equal() const {
    return double_cone_reducible == cone_reducible_to_apex && cone_reducible_to_apex == graph_reducible;
  }
};

inline ConeEquivalence cone_equivalence_check(const Graph& g, const DegreeSet& a, const SearchOptions& opts = {}) {
  if (g.empty()) throw InvalidArgument("cone_equivalence_check: empty graph");
  const FamilySpec f = FamilySpec::stars_with_leaf_counts(a);
  ConeEquivalence r;
  const Graph doubled = disjoint_union(g, g);
  r.double_cone_reducible = decide_reducible(cone(doubled, fresh_label(doubled.vertices())), f, opts).has_value();
  const Label apex = fresh_label(g.vertices());
  r.cone_reducible_to_apex = reduce_to_target(cone(g, apex), f, apex, opts).has_value();
  r.graph_reducible = a_reducible(g, a, opts).has_value();
  return r;
}

// ---------------------------------------------------------------------------
// 2-trees

namespace detail {

inline Label edge_node(const Complex2& k, const EdgeIds& e) { return "e_" + k.label(e[0]) + "_" + k.label(e[1]); }

inline Label triangle_node(const Complex2& k, const TriangleIds& t) {
  return "t_" + k.label(t[0]) + "_" + k.label(t[1]) + "_" + k.label(t[2]);
}

/// Edge-triangle incidence as adjacency over indices: edges first, then triangles.
struct Incidence {
  std::size_t edges = 0;
  std::vector<std::vector<std::size_t>> adj;
};

inline Incidence edge_triangle_incidence(const Complex2& k) {
  Incidence inc;
  inc.edges = k.num_edges();
  inc.adj.resize(k.num_edges() + k.num_triangles());
  const auto& es = k.edges();
  for (std::size_t t = 0; t < k.num_triangles(); ++t) {
    const auto& tri = k.triangles()[t];
    for (const EdgeIds e : {EdgeIds{tri[0], tri[1]}, EdgeIds{tri[0], tri[2]}, EdgeIds{tri[1], tri[2]}}) {
      const auto i = static_cast<std::size_t>(std::lower_bound(es.begin(), es.end(), e) - es.begin());
      inc.adj[i].push_back(inc.edges + t);
      inc.adj[inc.edges + t].push_back(i);
    }
  }
  return inc;
}

inline std::vector<std::size_t> component_ids(const std::vector<std::vector<std::size_t>>& adj, std::size_t& count) {
  std::vector<std::size_t> comp(adj.size(), SIZE_MAX);
  count = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (comp[s] != SIZE_MAX) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto u : v < adj.size() ? adj[v] : std::vector<std::size_t>{})
        if (comp[u] == SIZE_MAX) {
          comp[u] = count;
          stack.push_back(u);
        }
    }
    ++count;
  }
  return comp;
}

}  // namespace detail

/// The bipartite edge-triangle adjacency graph. Nodes are named e_<a>_<b>
/// and t_<a>_<b>_<c>.
inline Graph adjacency_graph_12(const Complex2& k) {
  std::vector<Label> nodes;
  for (const auto& e : k.edges()) nodes.push_back(detail::edge_node(k, e));
  for (const auto& t : k.triangles()) nodes.push_back(detail::triangle_node(k, t));
  const auto inc = detail::edge_triangle_incidence(k);
  std::vector<std::pair<Label, Label>> edges;
  for (std::size_t i = 0; i < inc.edges; ++i)
    for (auto t : inc.adj[i]) edges.emplace_back(nodes[i], nodes[t]);
  return Graph(std::move(nodes), edges);
}

struct Block {
  Complex2 complex;
  bool is_2tree = false;
};

struct TwoTreeReport {
  bool connected = false;
  bool a12_is_tree = false;  // the adjacency graph is a tree
  bool is_2tree = false;     // connected, adjacency graph a tree, and V = T + 2
  Graph a12;
  std::vector<Block> blocks;
  /// One edge per pair of distinct blocks through a common vertex (labels are block indices).
  std::vector<std::array<std::size_t, 3>> block_multigraph;  // {block, block, vertex id}
  /// Blocks and the vertices lying in two or more blocks form a tree.
  bool block_structure_is_tree = false;
  /// Connected, every block a 2-tree, and the block structure a tree.
  bool reducible = false;
};

namespace detail {

// A connected 2-complex whose adjacency graph is a tree may still close up at
// a vertex (a strip of triangles whose ends share only a vertex); requiring
// V = T + 2 on top rules that out.
inline bool two_tree_counts(const Complex2& k) {
  if (k.num_triangles() == 0) return k.num_edges() + 1 == k.num_vertices() && k.num_vertices() <= 2;
  return k.num_vertices() == k.num_triangles() + 2 && k.num_edges() == 2 * k.num_triangles() + 1;
}

inline bool pure_or_degenerate(const Complex2& k) {
  if (k.num_triangles() == 0) return k.num_vertices() <= 2;
  const auto inc = edge_triangle_incidence(k);
  for (std::size_t i = 0; i < inc.edges; ++i)
    if (inc.adj[i].empty()) return false;
  for (VertexId v = 0; v < k.num_vertices(); ++v)
    if (k.neighbors(v).empty()) return false;
  return true;
}

inline bool two_tree_verdict(const Complex2& k) {
  const bool a12_tree = k.num_edges() == 0 || is_tree(adjacency_graph_12(k));
  return connected_components(k) == 1 && a12_tree && pure_or_degenerate(k) && two_tree_counts(k);
}

}  // namespace detail

inline TwoTreeReport block_decomposition(const Complex2& k) {
  if (k.empty()) throw InvalidArgument("block_decomposition: empty complex");
  TwoTreeReport r;
  r.connected = connected_components(k) == 1;
  r.a12 = adjacency_graph_12(k);
  r.a12_is_tree = k.num_edges() == 0 ? true : is_tree(r.a12);
  r.is_2tree = detail::two_tree_verdict(k);

  // Blocks: components of the adjacency graph that contain a triangle, bare
  // edges, and isolated vertices.
  const auto inc = detail::edge_triangle_incidence(k);
  std::size_t ncomp = 0;
  const auto comp = detail::component_ids(inc.adj, ncomp);
  std::vector<std::vector<std::vector<Label>>> faces(ncomp);
  for (std::size_t i = 0; i < inc.edges; ++i) {
    const auto& e = k.edges()[i];
    faces[comp[i]].push_back({k.label(e[0]), k.label(e[1])});
  }
  for (std::size_t t = 0; t < k.num_triangles(); ++t) {
    const auto& tri = k.triangles()[t];
    faces[comp[inc.edges + t]].push_back({k.label(tri[0]), k.label(tri[1]), k.label(tri[2])});
  }
  std::vector<std::vector<std::size_t>> blocks_of(k.num_vertices());
  for (auto& f : faces) {
    Block b{Complex2::from_faces(f), false};
    b.is_2tree = detail::two_tree_verdict(b.complex);
    for (const auto& l : b.complex.vertices()) blocks_of[k.require(l)].push_back(r.blocks.size());
    r.blocks.push_back(std::move(b));
  }
  for (VertexId v = 0; v < k.num_vertices(); ++v)
    if (k.neighbors(v).empty()) {
      blocks_of[v].push_back(r.blocks.size());
      r.blocks.push_back({Complex2::point(k.label(v)), true});
    }

  // Block-vertex incidence: blocks, plus one node per vertex in >= 2 blocks.
  std::vector<std::vector<std::size_t>> inc2(r.blocks.size());
  std::size_t links = 0;
  for (VertexId v = 0; v < k.num_vertices(); ++v) {
    const auto& bs = blocks_of[v];
    if (bs.size() < 2) continue;
    const std::size_t node = inc2.size();
    inc2.emplace_back();
    for (auto b : bs) {
      inc2[node].push_back(b);
      inc2[b].push_back(node);
      ++links;
    }
    for (std::size_t i = 0; i < bs.size(); ++i)
      for (std::size_t j = i + 1; j < bs.size(); ++j) r.block_multigraph.push_back({bs[i], bs[j], v});
  }
  std::size_t c = 0;
  detail::component_ids(inc2, c);
  r.block_structure_is_tree = c == 1 && links + 1 == inc2.size();
  bool all_blocks = true;
  for (const auto& b : r.blocks) all_blocks = all_blocks && b.is_2tree;
  r.reducible = r.connected && all_blocks && r.block_structure_is_tree;
  return r;
}

inline TwoTreeReport is_2tree(const Complex2& k) { return block_decomposition(k); }

}  // namespace vdc
