#pragma once

// Graph families F that parameterise F-reducibility: all trees, the star
// families S_n and S_A, explicit finite lists of trees, and the hereditary
// classes of small discrete graphs.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vdc/complex.hpp"
#include "vdc/degree_set.hpp"
#include "vdc/detail/local_graph.hpp"
#include "vdc/face_list.hpp"
#include "vdc/shapes.hpp"

namespace vdc {

// ---------------------------------------------------------------------------
// Tree predicates

inline bool is_tree(const Graph& g) { return detail::is_tree(detail::to_local(g)); }

/// Centre of a star. Absent for the single edge, whose endpoints are
/// interchangeable; for the one-point graph it is the point itself.
struct StarShape {
  std::optional<Label> centre;
  std::size_t leaves = 0;
};

inline std::optional<StarShape> is_star(const Graph& g) {
  const long leaves = detail::star_leaves(detail::to_local(g));
  if (leaves < 0) return std::nullopt;
  if (g.num_vertices() == 1) return StarShape{g.label(0), 0};
  if (g.num_vertices() == 2) return StarShape{std::nullopt, 1};
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) != 1) return StarShape{g.label(v), static_cast<std::size_t>(leaves)};
  return std::nullopt;
}

inline std::optional<std::size_t> star_leaf_count(const Graph& g) {
  const long leaves = detail::star_leaves(detail::to_local(g));
  if (leaves < 0) return std::nullopt;
  return static_cast<std::size_t>(leaves);
}

/// Equal codes exactly for isomorphic trees.
inline std::string tree_canonical_code(const Graph& g) {
  const auto local = detail::to_local(g);
  if (!detail::is_tree(local)) throw InvalidArgument("tree_canonical_code: graph is not a tree");
  return detail::tree_code(local);
}

// ---------------------------------------------------------------------------
// FamilySpec

class FamilySpec {
 public:
  struct AllTrees {};
  struct StarsAtMost {
    std::optional<std::size_t> max_leaves;  // nullopt: every star
  };
  struct StarsWithLeafCounts {
    DegreeSet leaf_counts;
  };
  struct ExplicitTrees {
    std::vector<Graph> members;
    std::set<std::string> codes;
  };
  struct HereditaryDiscrete {
    std::size_t max_vertices;  // edgeless graphs with at most this many vertices, empty graph included
  };
  using Variant = std::variant<AllTrees, StarsAtMost, StarsWithLeafCounts, ExplicitTrees, HereditaryDiscrete>;

  static FamilySpec all_trees() { return FamilySpec(AllTrees{}); }
  static FamilySpec stars_at_most(std::optional<std::size_t> n) { return FamilySpec(StarsAtMost{n}); }
  static FamilySpec stars_with_leaf_counts(DegreeSet a) { return FamilySpec(StarsWithLeafCounts{std::move(a)}); }
  static FamilySpec hereditary_discrete(std::size_t n) { return FamilySpec(HereditaryDiscrete{n}); }

  /// Trees listed up to isomorphism; duplicates are dropped.
  static FamilySpec explicit_trees(const std::vector<Graph>& trees) {
    ExplicitTrees e;
    for (const auto& t : trees) {
      if (!is_tree(t)) throw InvalidArgument("explicit tree family contains a graph that is not a tree");
      if (e.codes.insert(tree_canonical_code(t)).second) e.members.push_back(t);
    }
    return FamilySpec(std::move(e));
  }

  const Variant& variant() const { return v_; }

  bool contains(const detail::LocalGraph& g) const {
    return std::visit(
        [&](const auto& f) -> bool {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, AllTrees>) {
            return detail::is_tree(g);
          } else if constexpr (std::is_same_v<T, StarsAtMost>) {
            const long l = detail::star_leaves(g);
            return l >= 0 && (!f.max_leaves || static_cast<std::size_t>(l) <= *f.max_leaves);
          } else if constexpr (std::is_same_v<T, StarsWithLeafCounts>) {
            const long l = detail::star_leaves(g);
            return l >= 0 && f.leaf_counts.contains(static_cast<std::size_t>(l));
          } else if constexpr (std::is_same_v<T, ExplicitTrees>) {
            return detail::is_tree(g) && f.codes.count(detail::tree_code(g)) != 0;
          } else {
            return g.edges.empty() && g.n <= f.max_vertices;
          }
        },
        v_);
  }

  bool contains(const Graph& g) const { return contains(detail::to_local(g)); }

  /// Every member is a tree. Reductions along such families preserve the
  /// Euler characteristic and connectivity.
  bool trees_only() const { return !std::holds_alternative<HereditaryDiscrete>(v_); }

  /// Whether no graph containing `g` as a subgraph can be a member.
  bool excludes_all_supergraphs(const detail::LocalGraph& g) const {
    return std::visit(
        [&](const auto& f) -> bool {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, HereditaryDiscrete>) {
            return !g.edges.empty() || g.n > f.max_vertices;
          } else {
            if (detail::has_cycle(g)) return true;
            if constexpr (std::is_same_v<T, AllTrees>) {
              return false;
            } else if constexpr (std::is_same_v<T, ExplicitTrees>) {
              for (const auto& m : f.members)
                if (detail::is_subgraph_of(g, detail::to_local(m))) return false;
              return true;
            } else {
              // Inside a star every edge meets the centre.
              std::optional<std::size_t> bound;
              if constexpr (std::is_same_v<T, StarsAtMost>) bound = f.max_leaves;
              else bound = f.leaf_counts.max();
              if (bound && g.n > *bound + 1) return true;
              if (g.edges.size() <= 1) return false;
              for (std::uint32_t c : g.edges[0]) {
                bool all = true;
                for (const auto& e : g.edges)
                  if (e[0] != c && e[1] != c) {
                    all = false;
                    break;
                  }
                if (all) return false;
              }
              return true;
            }
          }
        },
        v_);
  }

  std::string describe() const {
    return std::visit(
        [](const auto& f) -> std::string {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, AllTrees>) {
            return "all-trees";
          } else if constexpr (std::is_same_v<T, StarsAtMost>) {
            return "stars:" + (f.max_leaves ? std::to_string(*f.max_leaves) : std::string("inf"));
          } else if constexpr (std::is_same_v<T, StarsWithLeafCounts>) {
            return "stars-in:" + f.leaf_counts.to_string();
          } else if constexpr (std::is_same_v<T, ExplicitTrees>) {
            std::string s = "trees:{";
            for (std::size_t i = 0; i < f.members.size(); ++i) {
              if (i) s += ",";
              s += "[" + format_inline(f.members[i]) + "]";
            }
            return s + "}";
          } else {
            return "discrete:" + std::to_string(f.max_vertices);
          }
        },
        v_);
  }

 private:
  explicit FamilySpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

inline bool contains(const FamilySpec& f, const Graph& g) { return f.contains(g); }

// ---------------------------------------------------------------------------
// Subtree closure and the star / P4 dichotomy

/// Every tree obtained by deleting one leaf of a member is again a member.
inline bool is_subtree_closed(const FamilySpec& f) {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FamilySpec::AllTrees> || std::is_same_v<T, FamilySpec::StarsAtMost>) {
          return true;
        } else if constexpr (std::is_same_v<T, FamilySpec::StarsWithLeafCounts>) {
          return v.leaf_counts.is_initial_segment();
        } else if constexpr (std::is_same_v<T, FamilySpec::ExplicitTrees>) {
          for (const auto& t : v.members) {
            if (t.num_vertices() < 2) continue;
            for (VertexId x = 0; x < t.num_vertices(); ++x) {
              if (t.degree(x) != 1) continue;
              if (!v.codes.count(tree_canonical_code(delete_vertex(t, t.label(x))))) return false;
            }
          }
          return true;
        } else {
          return false;
        }
      },
      f.variant());
}

struct Dichotomy {
  enum class Kind { StarForm, ContainsP4 };
  Kind kind;
  std::optional<std::size_t> n;  // for StarForm: F = S_n, nullopt meaning n = infinity

  bool operator==(const Dichotomy&) const = default;
};

/// A subtree-closed family of trees is either S_n or contains P4.
inline Dichotomy classify_dichotomy(const FamilySpec& f) {
  if (!is_subtree_closed(f)) throw InvalidArgument("classify_dichotomy: family is not subtree-closed");
  return std::visit(
      [](const auto& v) -> Dichotomy {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FamilySpec::AllTrees>) {
          return {Dichotomy::Kind::ContainsP4, std::nullopt};
        } else if constexpr (std::is_same_v<T, FamilySpec::StarsAtMost>) {
          return {Dichotomy::Kind::StarForm, v.max_leaves};
        } else if constexpr (std::is_same_v<T, FamilySpec::StarsWithLeafCounts>) {
          return {Dichotomy::Kind::StarForm, v.leaf_counts.max()};
        } else if constexpr (std::is_same_v<T, FamilySpec::ExplicitTrees>) {
          if (v.members.empty()) throw InvalidArgument("classify_dichotomy: empty family");
          if (v.codes.count(tree_canonical_code(path_graph(4)))) return {Dichotomy::Kind::ContainsP4, std::nullopt};
          std::size_t n = 0;
          for (const auto& t : v.members) n = std::max(n, *star_leaf_count(t));
          return {Dichotomy::Kind::StarForm, n};
        } else {
          throw InvalidArgument("classify_dichotomy: not a family of trees");
        }
      },
      f.variant());
}

// ---------------------------------------------------------------------------
// Text syntax

/// `point`, `edge`, `P<k>` (path on k vertices) or `star<k>` / `S<k>` (k leaves).
inline Graph named_tree(std::string_view name) {
  auto number = [&](std::string_view digits) -> std::size_t {
    if (digits.empty()) throw ParseError("malformed tree name '" + std::string(name) + "'");
    std::size_t v = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw ParseError("malformed tree name '" + std::string(name) + "'");
      v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
  };
  if (name == "point") return path_graph(1);
  if (name == "edge") return path_graph(2);
  if (name.rfind("star", 0) == 0) return star_graph(number(name.substr(4)));
  if (name.rfind("S", 0) == 0) return star_graph(number(name.substr(1)));
  if (name.rfind("P", 0) == 0) {
    const auto k = number(name.substr(1));
    if (k == 0) throw ParseError("P0 is not a tree");
    return path_graph(k);
  }
  throw ParseError("unknown tree name '" + std::string(name) + "'");
}

/// Trees from a face-list document, one per `---`-separated block.
inline std::vector<Graph> parse_tree_list(std::string_view text) {
  std::vector<Graph> out;
  std::string block;
  auto flush = [&] {
    if (!parse_faces(block).empty()) out.push_back(parse_graph(block));
    block.clear();
  };
  for (auto line : detail::split_lines(text)) {
    auto content = detail::split_ws(detail::strip_comment(line));
    if (content.size() == 1 && content[0] == "---") {
      flush();
      continue;
    }
    block += std::string(line) + "\n";
  }
  flush();
  return out;
}

/// `all-trees` | `stars:<n|inf>` | `stars-in:{a,b,...}` | `trees:<file>` |
/// `trees:{name,...}` | `discrete:<n>`.
inline FamilySpec parse_family(std::string_view spec) {
  auto after = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (spec.rfind(prefix, 0) == 0) return spec.substr(prefix.size());
    return std::nullopt;
  };
  auto count = [&](std::string_view digits) -> std::size_t {
    if (digits.empty()) throw ParseError("malformed family '" + std::string(spec) + "'");
    std::size_t v = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw ParseError("malformed family '" + std::string(spec) + "'");
      v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
  };
  if (spec == "all-trees") return FamilySpec::all_trees();
  if (auto rest = after("stars-in:")) return FamilySpec::stars_with_leaf_counts(DegreeSet::parse(*rest));
  if (auto rest = after("stars:")) {
    if (*rest == "inf") return FamilySpec::stars_at_most(std::nullopt);
    return FamilySpec::stars_at_most(count(*rest));
  }
  if (auto rest = after("discrete:")) return FamilySpec::hereditary_discrete(count(*rest));
  if (auto rest = after("trees:")) {
    if (!rest->empty() && rest->front() == '{') {
      if (rest->back() != '}') throw ParseError("unterminated tree list in '" + std::string(spec) + "'");
      std::vector<Graph> trees;
      auto body = rest->substr(1, rest->size() - 2);
      std::size_t start = 0;
      while (start <= body.size()) {
        auto end = body.find(',', start);
        if (end == std::string_view::npos) end = body.size();
        auto name = detail::split_ws(body.substr(start, end - start));
        if (name.size() != 1) throw ParseError("malformed tree list in '" + std::string(spec) + "'");
        trees.push_back(named_tree(name[0]));
        start = end + 1;
      }
      return FamilySpec::explicit_trees(trees);
    }
    return FamilySpec::explicit_trees(parse_tree_list(read_file(std::string(*rest))));
  }
  throw ParseError("unknown family '" + std::string(spec) + "'");
}

}  // namespace vdc
