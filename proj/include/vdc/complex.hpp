#pragma once

// Finite simple graphs and simplicial complexes of dimension at most two.
//
// Both types store their vertex labels sorted lexicographically; a vertex id
// is the rank of its label in that order, so id order and label order agree
// everywhere. Faces are stored explicitly (no Hasse diagram) and kept sorted.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vdc/error.hpp"
#include "vdc/vertex_set.hpp"

namespace vdc {

using Label = std::string;
using VertexId = std::uint32_t;
using EdgeIds = std::array<VertexId, 2>;
using TriangleIds = std::array<VertexId, 3>;

/// Labels are non-empty tokens over [A-Za-z0-9_'].
inline bool is_valid_label(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '\'';
  });
}

namespace detail {

inline void require_label(std::string_view s) {
  if (!is_valid_label(s)) throw ParseError("invalid vertex label '" + std::string(s) + "'");
}

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline EdgeIds make_edge(VertexId a, VertexId b) { return a < b ? EdgeIds{a, b} : EdgeIds{b, a}; }

inline TriangleIds make_triangle(VertexId a, VertexId b, VertexId c) {
  TriangleIds t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Maps an arbitrary label collection onto sorted unique ids.
class LabelIndex {
 public:
  explicit LabelIndex(std::vector<Label> labels) : labels_(std::move(labels)) { sort_unique(labels_); }
  VertexId id(const Label& l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    return static_cast<VertexId>(it - labels_.begin());
  }
  std::vector<Label> release() && { return std::move(labels_); }

 private:
  std::vector<Label> labels_;
};

}  // namespace detail

/// Finite simple undirected graph with labelled vertices.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<Label> vertices, const std::vector<std::pair<Label, Label>>& edges) {
    for (const auto& v : vertices) detail::require_label(v);
    for (const auto& [a, b] : edges) {
      detail::require_label(a);
      detail::require_label(b);
      if (a == b) throw InvalidArgument("loop at vertex '" + a + "'");
      vertices.push_back(a);
      vertices.push_back(b);
    }
    detail::LabelIndex index(std::move(vertices));
    std::vector<EdgeIds> ids;
    ids.reserve(edges.size());
    for (const auto& [a, b] : edges) ids.push_back(detail::make_edge(index.id(a), index.id(b)));
    *this = from_ids(std::move(index).release(), std::move(ids));
  }

  /// Fast path: `labels` sorted and unique, edges given by id.
  static Graph from_ids(std::vector<Label> labels, std::vector<EdgeIds> edges) {
    Graph g;
    g.labels_ = std::move(labels);
    for (auto& e : edges) e = detail::make_edge(e[0], e[1]);
    detail::sort_unique(edges);
    g.edges_ = std::move(edges);
    g.adj_.assign(g.labels_.size(), {});
    for (const auto& e : g.edges_) {
      g.adj_[e[0]].push_back(e[1]);
      g.adj_[e[1]].push_back(e[0]);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
  }

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::vector<Label>& vertices() const { return labels_; }
  const std::vector<EdgeIds>& edges() const { return edges_; }
  const Label& label(VertexId v) const { return labels_[v]; }

  std::optional<VertexId> find(std::string_view l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l) return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
  }
  bool contains(std::string_view l) const { return find(l).has_value(); }

  VertexId require(std::string_view l) const {
    auto id = find(l);
    if (!id) throw InvalidArgument("vertex '" + std::string(l) + "' is not in the graph");
    return *id;
  }

  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  std::size_t degree(VertexId v) const { return adj_[v].size(); }
  bool adjacent(VertexId a, VertexId b) const {
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  std::vector<std::pair<Label, Label>> edge_labels() const {
    std::vector<std::pair<Label, Label>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(labels_[e[0]], labels_[e[1]]);
    return out;
  }

  bool operator==(const Graph& o) const { return labels_ == o.labels_ && edges_ == o.edges_; }

 private:
  std::vector<Label> labels_;
  std::vector<EdgeIds> edges_;
  std::vector<std::vector<VertexId>> adj_;
};

/// Simplicial complex of dimension at most two, closed under taking faces.
class Complex2 {
 public:
  Complex2() = default;

  /// Downward closure of the listed faces. Faces of size 1..3 with distinct
  /// labels; listing non-maximal faces is allowed.
  static Complex2 from_faces(const std::vector<std::vector<Label>>& faces) {
    std::vector<Label> all;
    for (const auto& f : faces) {
      if (f.size() > 3) throw ParseError("face of size " + std::to_string(f.size()) + " exceeds dimension 2");
      for (const auto& l : f) detail::require_label(l);
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
          if (f[i] == f[j]) throw ParseError("face repeats label '" + f[i] + "'");
      all.insert(all.end(), f.begin(), f.end());
    }
    detail::LabelIndex index(std::move(all));
    std::vector<EdgeIds> edges;
    std::vector<TriangleIds> tris;
    for (const auto& f : faces) {
      if (f.size() == 2) edges.push_back(detail::make_edge(index.id(f[0]), index.id(f[1])));
      if (f.size() == 3) tris.push_back(detail::make_triangle(index.id(f[0]), index.id(f[1]), index.id(f[2])));
    }
    return from_ids(std::move(index).release(), std::move(edges), std::move(tris));
  }

  static Complex2 from_graph(const Graph& g) { return from_ids(g.vertices(), g.edges(), {}); }

  static Complex2 point(const Label& l) { return from_faces({{l}}); }

  /// Fast path: `labels` sorted and unique; missing edges of triangles are added.
  static Complex2 from_ids(std::vector<Label> labels, std::vector<EdgeIds> edges, std::vector<TriangleIds> tris) {
    Complex2 k;
    k.labels_ = std::move(labels);
    for (auto& t : tris) {
      std::sort(t.begin(), t.end());
      edges.push_back({t[0], t[1]});
      edges.push_back({t[0], t[2]});
      edges.push_back({t[1], t[2]});
    }
    for (auto& e : edges) e = detail::make_edge(e[0], e[1]);
    detail::sort_unique(edges);
    detail::sort_unique(tris);
    k.edges_ = std::move(edges);
    k.triangles_ = std::move(tris);
    k.adj_.assign(k.labels_.size(), {});
    for (const auto& e : k.edges_) {
      k.adj_[e[0]].push_back(e[1]);
      k.adj_[e[1]].push_back(e[0]);
    }
    for (auto& a : k.adj_) std::sort(a.begin(), a.end());
    return k;
  }

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_triangles() const { return triangles_.size(); }
  std::size_t num_faces() const { return labels_.size() + edges_.size() + triangles_.size(); }
  bool empty() const { return labels_.empty(); }
  int dimension() const { return !triangles_.empty() ? 2 : !edges_.empty() ? 1 : labels_.empty() ? -1 : 0; }

  const std::vector<Label>& vertices() const { return labels_; }
  const std::vector<EdgeIds>& edges() const { return edges_; }
  const std::vector<TriangleIds>& triangles() const { return triangles_; }
  const Label& label(VertexId v) const { return labels_[v]; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }

  std::optional<VertexId> find(std::string_view l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l) return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
  }
  bool contains(std::string_view l) const { return find(l).has_value(); }

  VertexId require(std::string_view l) const {
    auto id = find(l);
    if (!id) throw InvalidArgument("vertex '" + std::string(l) + "' is not in the complex");
    return *id;
  }

  bool has_edge(VertexId a, VertexId b) const {
    return std::binary_search(edges_.begin(), edges_.end(), detail::make_edge(a, b));
  }
  bool has_triangle(VertexId a, VertexId b, VertexId c) const {
    return std::binary_search(triangles_.begin(), triangles_.end(), detail::make_triangle(a, b, c));
  }

  /// Faces as label lists (each sorted), in order vertices, edges, triangles.
  std::vector<std::vector<Label>> faces() const {
    std::vector<std::vector<Label>> out;
    for (const auto& l : labels_) out.push_back({l});
    for (const auto& e : edges_) out.push_back({labels_[e[0]], labels_[e[1]]});
    for (const auto& t : triangles_) out.push_back({labels_[t[0]], labels_[t[1]], labels_[t[2]]});
    return out;
  }

  /// Maximal faces, each sorted, the list sorted lexicographically.
  std::vector<std::vector<Label>> maximal_faces() const {
    std::vector<char> vertex_covered(labels_.size(), 0);
    std::vector<char> edge_covered(edges_.size(), 0);
    auto edge_index = [&](VertexId a, VertexId b) {
      return static_cast<std::size_t>(
          std::lower_bound(edges_.begin(), edges_.end(), detail::make_edge(a, b)) - edges_.begin());
    };
    for (const auto& t : triangles_) {
      edge_covered[edge_index(t[0], t[1])] = 1;
      edge_covered[edge_index(t[0], t[2])] = 1;
      edge_covered[edge_index(t[1], t[2])] = 1;
    }
    for (const auto& e : edges_) vertex_covered[e[0]] = vertex_covered[e[1]] = 1;
    std::vector<std::vector<Label>> out;
    for (VertexId v = 0; v < labels_.size(); ++v)
      if (!vertex_covered[v]) out.push_back({labels_[v]});
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (!edge_covered[i]) out.push_back({labels_[edges_[i][0]], labels_[edges_[i][1]]});
    for (const auto& t : triangles_) out.push_back({labels_[t[0]], labels_[t[1]], labels_[t[2]]});
    std::sort(out.begin(), out.end());
    return out;
  }

  Graph one_skeleton() const { return Graph::from_ids(labels_, edges_); }

  bool operator==(const Complex2& o) const {
    return labels_ == o.labels_ && edges_ == o.edges_ && triangles_ == o.triangles_;
  }

 private:
  std::vector<Label> labels_;
  std::vector<EdgeIds> edges_;
  std::vector<TriangleIds> triangles_;
  std::vector<std::vector<VertexId>> adj_;
};

// ---------------------------------------------------------------------------
// Elementary operations

/// Link of `v`: neighbours of v, with {a,b} an edge whenever {v,a,b} is a triangle.
inline Graph link(const Complex2& k, std::string_view v) {
  const VertexId id = k.require(v);
  std::vector<Label> verts;
  for (VertexId u : k.neighbors(id)) verts.push_back(k.label(u));
  std::vector<std::pair<Label, Label>> edges;
  for (const auto& t : k.triangles()) {
    if (t[0] == id) edges.emplace_back(k.label(t[1]), k.label(t[2]));
    else if (t[1] == id) edges.emplace_back(k.label(t[0]), k.label(t[2]));
    else if (t[2] == id) edges.emplace_back(k.label(t[0]), k.label(t[1]));
  }
  return Graph(std::move(verts), edges);
}

/// Subcomplex spanned by the vertices in `keep` (all faces inside the set).
inline Complex2 induced_subcomplex(const Complex2& k, const VertexSet& keep) {
  std::vector<VertexId> remap(k.num_vertices(), 0);
  std::vector<Label> labels;
  for (VertexId v = 0; v < k.num_vertices(); ++v) {
    if (keep.test(v)) {
      remap[v] = static_cast<VertexId>(labels.size());
      labels.push_back(k.label(v));
    }
  }
  std::vector<EdgeIds> edges;
  for (const auto& e : k.edges())
    if (keep.test(e[0]) && keep.test(e[1])) edges.push_back({remap[e[0]], remap[e[1]]});
  std::vector<TriangleIds> tris;
  for (const auto& t : k.triangles())
    if (keep.test(t[0]) && keep.test(t[1]) && keep.test(t[2])) tris.push_back({remap[t[0]], remap[t[1]], remap[t[2]]});
  return Complex2::from_ids(std::move(labels), std::move(edges), std::move(tris));
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<VertexId> remap(g.num_vertices(), 0);
  std::vector<Label> labels;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (keep.test(v)) {
      remap[v] = static_cast<VertexId>(labels.size());
      labels.push_back(g.label(v));
    }
  }
  std::vector<EdgeIds> edges;
  for (const auto& e : g.edges())
    if (keep.test(e[0]) && keep.test(e[1])) edges.push_back({remap[e[0]], remap[e[1]]});
  return Graph::from_ids(std::move(labels), std::move(edges));
}

/// K \ v: every face not containing v.
inline Complex2 delete_vertex(const Complex2& k, std::string_view v) {
  VertexSet keep(k.num_vertices(), true);
  keep.reset(k.require(v));
  return induced_subcomplex(k, keep);
}

inline Graph delete_vertex(const Graph& g, std::string_view v) {
  VertexSet keep(g.num_vertices(), true);
  keep.reset(g.require(v));
  return induced_subgraph(g, keep);
}

/// Cone over a complex of dimension at most one.
inline Complex2 cone(const Complex2& k, const Label& apex) {
  detail::require_label(apex);
  if (k.contains(apex)) throw InvalidArgument("cone apex '" + apex + "' already present");
  if (k.num_triangles() != 0) throw InvalidArgument("cannot cone a complex that contains a triangle");
  std::vector<std::vector<Label>> faces = k.faces();
  const std::size_t base = faces.size();
  for (std::size_t i = 0; i < base; ++i) {
    auto f = faces[i];
    f.push_back(apex);
    faces.push_back(std::move(f));
  }
  faces.push_back({apex});
  return Complex2::from_faces(faces);
}

inline Complex2 cone(const Graph& g, const Label& apex) { return cone(Complex2::from_graph(g), apex); }

/// Smallest k >= 1 such that every label of `rhs` with k primes appended avoids `lhs`.
inline std::string disjoint_suffix(const std::vector<Label>& lhs, const std::vector<Label>& rhs) {
  std::string suffix = "'";
  for (;;) {
    bool clash = false;
    for (const auto& l : rhs)
      if (std::binary_search(lhs.begin(), lhs.end(), l + suffix)) {
        clash = true;
        break;
      }
    if (!clash) return suffix;
    suffix += '\'';
  }
}

/// Disjoint union; the labels of `rhs` are primed until they avoid those of `lhs`.
inline Complex2 disjoint_union(const Complex2& lhs, const Complex2& rhs) {
  const std::string suffix = disjoint_suffix(lhs.vertices(), rhs.vertices());
  std::vector<std::vector<Label>> faces = lhs.faces();
  for (auto f : rhs.faces()) {
    for (auto& l : f) l += suffix;
    faces.push_back(std::move(f));
  }
  return Complex2::from_faces(faces);
}

inline Graph disjoint_union(const Graph& lhs, const Graph& rhs) {
  const std::string suffix = disjoint_suffix(lhs.vertices(), rhs.vertices());
  std::vector<Label> verts = lhs.vertices();
  auto edges = lhs.edge_labels();
  for (const auto& v : rhs.vertices()) verts.push_back(v + suffix);
  for (const auto& [a, b] : rhs.edge_labels()) edges.emplace_back(a + suffix, b + suffix);
  return Graph(std::move(verts), edges);
}

inline long euler_characteristic(const Complex2& k) {
  return static_cast<long>(k.num_vertices()) - static_cast<long>(k.num_edges()) +
         static_cast<long>(k.num_triangles());
}

/// Barycentric subdivision together with the face each new vertex stands for.
struct Subdivision {
  Complex2 complex;
  std::map<std::vector<Label>, Label> barycenter;  // face of K (sorted labels) -> vertex of sd K
};

/// Vertices of sd K are named by joining the face's labels with '_'. If that
/// naming is ambiguous (labels that themselves contain '_'), faces are named
/// f0, f1, ... in face order instead.
inline Subdivision barycentric_subdivision_with_map(const Complex2& k) {
  if (k.empty()) throw InvalidArgument("barycentric subdivision of the empty complex");
  const auto faces = k.faces();
  auto join = [](const std::vector<Label>& f) {
    std::string s;
    for (const auto& l : f) s += (s.empty() ? "" : "_") + l;
    return s;
  };
  std::vector<Label> names;
  names.reserve(faces.size());
  for (const auto& f : faces) names.push_back(join(f));
  {
    auto sorted = names;
    detail::sort_unique(sorted);
    if (sorted.size() != names.size())
      for (std::size_t i = 0; i < names.size(); ++i) names[i] = "f" + std::to_string(i);
  }
  Subdivision out;
  for (std::size_t i = 0; i < faces.size(); ++i) out.barycenter.emplace(faces[i], names[i]);

  std::vector<std::vector<Label>> chains;
  const auto& L = k.vertices();
  for (const auto& e : k.edges())
    for (VertexId v : e) chains.push_back({out.barycenter.at({L[v]}), out.barycenter.at({L[e[0]], L[e[1]]})});
  for (const auto& t : k.triangles()) {
    const Label bt = out.barycenter.at({L[t[0]], L[t[1]], L[t[2]]});
    for (int i = 0; i < 3; ++i) {
      const VertexId v = t[i];
      chains.push_back({out.barycenter.at({L[v]}), bt});
      for (int j = 0; j < 3; ++j) {
        if (j == i) continue;
        const VertexId w = t[j];
        const Label be = out.barycenter.at({L[std::min(v, w)], L[std::max(v, w)]});
        chains.push_back({out.barycenter.at({L[v]}), be, bt});
      }
    }
  }
  for (const auto& n : names) chains.push_back({n});
  out.complex = Complex2::from_faces(chains);
  return out;
}

inline Complex2 barycentric_subdivision(const Complex2& k) { return barycentric_subdivision_with_map(k).complex; }

/// Applies a label map (must be injective on the vertices of `k`).
inline Complex2 relabel(const Complex2& k, const std::map<Label, Label>& rename) {
  auto faces = k.faces();
  for (auto& f : faces)
    for (auto& l : f) {
      auto it = rename.find(l);
      if (it != rename.end()) l = it->second;
    }
  Complex2 out = Complex2::from_faces(faces);
  if (out.num_vertices() != k.num_vertices()) throw InvalidArgument("relabelling is not injective");
  return out;
}

/// Number of connected components of the 1-skeleton.
inline std::size_t connected_components(const Graph& g) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::size_t comps = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
  }
  return comps;
}

inline std::size_t connected_components(const Complex2& k) { return connected_components(k.one_skeleton()); }

}  // namespace vdc
