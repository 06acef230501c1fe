#pragma once

// Canonical labelling of small complexes and graphs by colour refinement
// followed by exhaustive individualisation. The key is the face list of the
// complex under the lexicographically smallest labelling reached at a leaf of
// the search tree, so equal keys always mean isomorphic objects. Completeness
// (isomorphic => equal keys) is guaranteed up to kCanonicalExactBound vertices;
// beyond that canonical_form() refuses and callers fall back to
// label_sorted_key(), which is only stable under identity.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "vdc/complex.hpp"

namespace vdc {

inline constexpr std::size_t kCanonicalExactBound = 16;

struct CanonicalKey {
  std::string code;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const { return std::hash<std::string>{}(k.code); }
};

namespace detail {

/// Vertex-coloured complex on vertices 0..n-1.
struct CompactComplex {
  std::uint32_t n = 0;
  std::vector<EdgeIds> edges;          // sorted, a < b
  std::vector<TriangleIds> triangles;  // sorted, a < b < c
  std::vector<std::uint32_t> colors;   // initial colouring; empty means uniform
};

inline std::vector<std::uint32_t> compress_colors(const std::vector<std::uint32_t>& c) {
  std::vector<std::uint32_t> vals = c;
  sort_unique(vals);
  std::vector<std::uint32_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    out[i] = static_cast<std::uint32_t>(std::lower_bound(vals.begin(), vals.end(), c[i]) - vals.begin());
  return out;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const CompactComplex& c) : c_(c), nbr_(c.n), link_(c.n) {
    for (const auto& e : c.edges) {
      nbr_[e[0]].push_back(e[1]);
      nbr_[e[1]].push_back(e[0]);
    }
    for (const auto& t : c.triangles) {
      link_[t[0]].push_back({t[1], t[2]});
      link_[t[1]].push_back({t[0], t[2]});
      link_[t[2]].push_back({t[0], t[1]});
    }
    base_colors_ = c.colors.empty() ? std::vector<std::uint32_t>(c.n, 0) : compress_colors(c.colors);
  }

  std::vector<std::uint16_t> run(bool exhaustive) {
    exhaustive_ = exhaustive;
    best_.clear();
    auto col = base_colors_;
    search(col);
    return best_;
  }

 private:
  std::size_t refine(std::vector<std::uint32_t>& col) const {
    std::size_t classes = count_classes(col);
    std::vector<std::vector<std::uint32_t>> sig(c_.n);
    for (;;) {
      for (std::uint32_t v = 0; v < c_.n; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(col[v]);
        s.push_back(static_cast<std::uint32_t>(nbr_[v].size()));
        s.push_back(static_cast<std::uint32_t>(link_[v].size()));
        const std::size_t mark = s.size();
        for (auto u : nbr_[v]) s.push_back(col[u]);
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark), s.end());
        const std::size_t mark2 = s.size();
        for (const auto& p : link_[v]) {
          auto a = col[p[0]], b = col[p[1]];
          if (a > b) std::swap(a, b);
          s.push_back(a * c_.n + b);
        }
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark2), s.end());
      }
      auto order = sig;
      sort_unique(order);
      for (std::uint32_t v = 0; v < c_.n; ++v)
        col[v] = static_cast<std::uint32_t>(std::lower_bound(order.begin(), order.end(), sig[v]) - order.begin());
      if (order.size() == classes) return classes;
      classes = order.size();
    }
  }

  static std::size_t count_classes(const std::vector<std::uint32_t>& col) {
    auto v = col;
    sort_unique(v);
    return v.size();
  }

  bool has_edge(std::uint32_t a, std::uint32_t b) const {
    return std::binary_search(c_.edges.begin(), c_.edges.end(), make_edge(a, b));
  }
  bool has_triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
    return std::binary_search(c_.triangles.begin(), c_.triangles.end(), make_triangle(a, b, c));
  }

  // Whether the transposition (u v) maps faces to faces.
  bool swap_is_automorphism(std::uint32_t u, std::uint32_t v) const {
    auto img = [&](std::uint32_t x) { return x == u ? v : x == v ? u : x; };
    for (std::uint32_t x : {u, v}) {
      for (auto y : nbr_[x])
        if (!has_edge(img(x), img(y))) return false;
      for (const auto& p : link_[x])
        if (!has_triangle(img(x), img(p[0]), img(p[1]))) return false;
    }
    return true;
  }

  void leaf(const std::vector<std::uint32_t>& col) {
    std::vector<std::uint16_t> code;
    code.reserve(3 + c_.n + 2 * c_.edges.size() + 3 * c_.triangles.size());
    code.push_back(static_cast<std::uint16_t>(c_.n));
    code.push_back(static_cast<std::uint16_t>(c_.edges.size()));
    code.push_back(static_cast<std::uint16_t>(c_.triangles.size()));
    std::vector<std::uint32_t> inverse(c_.n);
    for (std::uint32_t v = 0; v < c_.n; ++v) inverse[col[v]] = v;
    for (std::uint32_t i = 0; i < c_.n; ++i) code.push_back(static_cast<std::uint16_t>(base_colors_[inverse[i]]));
    std::vector<EdgeIds> es;
    es.reserve(c_.edges.size());
    for (const auto& e : c_.edges) es.push_back(make_edge(col[e[0]], col[e[1]]));
    std::sort(es.begin(), es.end());
    for (const auto& e : es) {
      code.push_back(static_cast<std::uint16_t>(e[0]));
      code.push_back(static_cast<std::uint16_t>(e[1]));
    }
    std::vector<TriangleIds> ts;
    ts.reserve(c_.triangles.size());
    for (const auto& t : c_.triangles) ts.push_back(make_triangle(col[t[0]], col[t[1]], col[t[2]]));
    std::sort(ts.begin(), ts.end());
    for (const auto& t : ts)
      for (auto x : t) code.push_back(static_cast<std::uint16_t>(x));
    if (best_.empty() || code < best_) best_ = std::move(code);
  }

  void search(std::vector<std::uint32_t> col) {
    const std::size_t classes = refine(col);
    if (classes == c_.n) {
      leaf(col);
      return;
    }
    // First non-singleton cell in colour order.
    std::vector<std::uint32_t> count(c_.n, 0);
    for (auto x : col) ++count[x];
    std::uint32_t target = 0;
    while (count[target] < 2) ++target;
    std::vector<std::uint32_t> reps;
    for (std::uint32_t v = 0; v < c_.n; ++v) {
      if (col[v] != target) continue;
      bool twin = false;
      for (auto r : reps)
        if (swap_is_automorphism(r, v)) {
          twin = true;
          break;
        }
      if (!twin) reps.push_back(v);
      if (!exhaustive_) break;
    }
    for (auto v : reps) {
      std::vector<std::uint32_t> next(c_.n);
      for (std::uint32_t x = 0; x < c_.n; ++x) next[x] = 2 * col[x] + (x == v ? 0 : 1);
      search(compress_colors(next));
    }
  }

  const CompactComplex& c_;
  std::vector<std::vector<std::uint32_t>> nbr_;
  std::vector<std::vector<std::array<std::uint32_t, 2>>> link_;
  std::vector<std::uint32_t> base_colors_;
  std::vector<std::uint16_t> best_;
  bool exhaustive_ = true;
};

inline std::string pack(const std::vector<std::uint16_t>& code) {
  std::string s;
  s.reserve(code.size() * 2);
  for (auto x : code) {
    s.push_back(static_cast<char>(x & 0xFF));
    s.push_back(static_cast<char>(x >> 8));
  }
  return s;
}

inline CanonicalKey canonical_key(const CompactComplex& c) {
  return CanonicalKey{pack(Canonicalizer(c).run(true))};
}

inline CompactComplex compact(const Complex2& k) {
  return CompactComplex{static_cast<std::uint32_t>(k.num_vertices()), k.edges(), k.triangles(), {}};
}

}  // namespace detail

inline CanonicalKey canonical_form(const Complex2& k) {
  if (k.num_vertices() > kCanonicalExactBound)
    throw CanonicalBoundExceeded("canonical form is exact only up to " + std::to_string(kCanonicalExactBound) +
                                 " vertices (got " + std::to_string(k.num_vertices()) + ")");
  return detail::canonical_key(detail::compact(k));
}

inline CanonicalKey canonical_form(const Graph& g) { return canonical_form(Complex2::from_graph(g)); }

/// Face list by label rank. Stable only under identity; the fallback key.
inline CanonicalKey label_sorted_key(const Complex2& k) {
  std::string s;
  for (const auto& f : k.faces()) {
    for (const auto& l : f) s += l + ' ';
    s += '\n';
  }
  return CanonicalKey{std::move(s)};
}

inline bool isomorphic(const Complex2& a, const Complex2& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
      a.num_triangles() != b.num_triangles())
    return false;
  const bool small = a.num_vertices() <= kCanonicalExactBound;
  if (small) return canonical_form(a) == canonical_form(b);
  // Larger objects: exhaustive search is still exact, just unbounded in cost.
  return detail::canonical_key(detail::compact(a)) == detail::canonical_key(detail::compact(b));
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return isomorphic(Complex2::from_graph(a), Complex2::from_graph(b));
}

}  // namespace vdc
