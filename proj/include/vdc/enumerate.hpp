#pragma once

// Exhaustive generation of small graphs and complexes up to isomorphism.

#include <map>
#include <set>
#include <vector>

#include "vdc/canonical.hpp"
#include "vdc/complex.hpp"
#include "vdc/growth.hpp"
#include "vdc/shapes.hpp"

namespace vdc {

/// Graphs on exactly n vertices (labels a, b, ...) up to isomorphism, by
/// adding one edge at a time and keeping one graph per canonical form.
inline std::vector<Graph> graphs_up_to_iso(std::size_t n) {
  std::vector<Graph> out;
  std::vector<Graph> level{discrete_graph(n)};
  while (!level.empty()) {
    out.insert(out.end(), level.begin(), level.end());
    std::vector<Graph> next;
    std::set<CanonicalKey> seen;
    for (const auto& g : level)
      for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) {
          if (g.adjacent(a, b)) continue;
          auto edges = g.edges();
          edges.push_back({a, b});
          Graph h = Graph::from_ids(g.vertices(), std::move(edges));
          if (seen.insert(canonical_form(h)).second) next.push_back(std::move(h));
        }
    level = std::move(next);
  }
  return out;
}

/// 2-complexes with exactly n vertices up to isomorphism: for each graph,
/// triangles on its 3-cliques are added one at a time with canonical dedup.
inline std::vector<Complex2> complexes_up_to_iso(std::size_t n) {
  std::vector<Complex2> out;
  for (const auto& g : graphs_up_to_iso(n)) {
    std::vector<TriangleIds> cliques;
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b)
        for (VertexId c = b + 1; c < n; ++c)
          if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) cliques.push_back({a, b, c});
    std::vector<Complex2> level{Complex2::from_graph(g)};
    while (!level.empty()) {
      out.insert(out.end(), level.begin(), level.end());
      std::vector<Complex2> next;
      std::set<CanonicalKey> seen;
      for (const auto& k : level)
        for (const auto& t : cliques) {
          if (k.has_triangle(t[0], t[1], t[2])) continue;
          auto tris = k.triangles();
          tris.push_back(t);
          Complex2 h = Complex2::from_ids(k.vertices(), k.edges(), std::move(tris));
          if (seen.insert(canonical_form(h)).second) next.push_back(std::move(h));
        }
      level = std::move(next);
    }
  }
  return out;
}

/// All complexes on 1..max_n vertices.
inline std::vector<Complex2> complexes_up_to(std::size_t max_n) {
  std::vector<Complex2> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto part = complexes_up_to_iso(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

/// 2-trees with 1..max_triangles triangles, grown by gluing a triangle with a
/// fresh vertex onto an existing edge.
inline std::vector<Complex2> two_trees_up_to(std::size_t max_triangles) {
  std::vector<Complex2> out;
  if (max_triangles == 0) return out;
  std::vector<Complex2> level{full_triangle()};
  for (std::size_t t = 1; t <= max_triangles && !level.empty(); ++t) {
    out.insert(out.end(), level.begin(), level.end());
    if (t == max_triangles) break;
    std::vector<Complex2> next;
    std::set<CanonicalKey> seen;
    for (const auto& k : level)
      for (const auto& e : k.edges()) {
        auto faces = k.faces();
        const Label fresh = default_label(k.num_vertices());
        faces.push_back({k.label(e[0]), k.label(e[1]), fresh});
        Complex2 h = Complex2::from_faces(faces);
        if (seen.insert(canonical_form(h)).second) next.push_back(std::move(h));
      }
    level = std::move(next);
  }
  return out;
}

/// Every F-reducible complex with at most max_n vertices, for a family given
/// by its members. Reversing a reduction attaches a cone over an embedded
/// member, so growing from a point in all possible ways reaches them all.
inline std::vector<Complex2> reducible_complexes(const std::vector<Graph>& members, std::size_t max_n) {
  std::vector<Complex2> out;
  if (max_n == 0) return out;
  std::vector<Complex2> level{Complex2::point(default_label(0))};
  for (std::size_t n = 1; n <= max_n && !level.empty(); ++n) {
    out.insert(out.end(), level.begin(), level.end());
    if (n == max_n) break;
    std::vector<Complex2> next;
    std::set<CanonicalKey> seen;
    for (const auto& k : level) {
      const Graph skeleton = k.one_skeleton();
      for (const auto& t : members)
        for (const auto& e : tree_embeddings(t, skeleton)) {
          Complex2 h = reverse_grow(k, e, default_label(n));
          if (seen.insert(canonical_form(h)).second) next.push_back(std::move(h));
        }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace vdc
