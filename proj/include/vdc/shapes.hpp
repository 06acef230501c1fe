#pragma once

// Small named graphs and complexes used throughout the tests and the CLI.

#include <string>
#include <vector>

#include "vdc/complex.hpp"

namespace vdc {

/// a, b, ..., z, then v26, v27, ...
inline Label default_label(std::size_t i) {
  if (i < 26) return Label(1, static_cast<char>('a' + i));
  return "v" + std::to_string(i);
}

inline std::vector<Label> default_labels(std::size_t n) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(default_label(i));
  return out;
}

/// Path with n vertices (P1 is a point, P2 an edge).
inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<Label, Label>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(default_label(i), default_label(i + 1));
  return Graph(default_labels(n), edges);
}

/// Star with `leaves` leaves around centre 'a'; star_graph(0) is a point.
inline Graph star_graph(std::size_t leaves) {
  std::vector<std::pair<Label, Label>> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(default_label(0), default_label(i));
  return Graph(default_labels(leaves + 1), edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Label, Label>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(default_label(i), default_label((i + 1) % n));
  return Graph(default_labels(n), edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Label, Label>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(default_label(i), default_label(j));
  return Graph(default_labels(n), edges);
}

inline Graph discrete_graph(std::size_t n) { return Graph(default_labels(n), {}); }

inline Complex2 full_triangle() { return Complex2::from_faces({{"a", "b", "c"}}); }

inline Complex2 hollow_triangle() { return Complex2::from_faces({{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

inline Complex2 tetrahedron_boundary() {
  return Complex2::from_faces({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}

}  // namespace vdc
