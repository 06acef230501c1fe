#pragma once

// F-reducibility of 2-complexes: initial vertices, the greedy algorithm, the
// exact backtracking decision, reduction to a prescribed vertex,
// nonevasiveness and the star-centre swap automorphism.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vdc/canonical.hpp"
#include "vdc/complex.hpp"
#include "vdc/detail/local_graph.hpp"
#include "vdc/detail/search.hpp"
#include "vdc/tree_family.hpp"

namespace vdc {

struct ReductionStep {
  Label vertex;
  Graph link;  // link at the moment of removal

  bool operator==(const ReductionStep&) const = default;
};

struct ReductionWitness {
  std::vector<ReductionStep> steps;
  Complex2 final_complex;  // one point for complete reductions

  bool operator==(const ReductionWitness&) const = default;
};

enum class GreedyVerdict { Reduced, Stuck };

struct GreedyOutcome {
  ReductionWitness witness;  // partial when stuck; final_complex is the stuck complex
  GreedyVerdict verdict = GreedyVerdict::Stuck;
};

namespace detail {

/// Index view of a complex for fast link evaluation on vertex subsets.
class ComplexWorkspace {
 public:
  explicit ComplexWorkspace(const Complex2& k) : k_(k), link_pairs_(k.num_vertices()) {
    for (const auto& t : k.triangles()) {
      link_pairs_[t[0]].push_back({t[1], t[2]});
      link_pairs_[t[1]].push_back({t[0], t[2]});
      link_pairs_[t[2]].push_back({t[0], t[1]});
    }
  }

  const Complex2& complex() const { return k_; }
  std::size_t size() const { return k_.num_vertices(); }

  /// Link of v in the subcomplex spanned by `alive`; `members` receives the
  /// global ids of the link's vertices in local order.
  LocalGraph link(const VertexSet& alive, VertexId v, std::vector<VertexId>* members = nullptr) const {
    LocalGraph g;
    const auto& nb = k_.neighbors(v);
    std::vector<std::uint32_t> local(nb.size(), 0);
    for (std::size_t i = 0; i < nb.size(); ++i)
      if (alive.test(nb[i])) {
        local[i] = g.n++;
        if (members) members->push_back(nb[i]);
      }
    auto pos = [&](VertexId u) {
      return local[static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), u) - nb.begin())];
    };
    for (const auto& p : link_pairs_[v])
      if (alive.test(p[0]) && alive.test(p[1])) g.edges.push_back(make_edge(pos(p[0]), pos(p[1])));
    return g;
  }

  Graph link_graph(const VertexSet& alive, VertexId v) const {
    std::vector<VertexId> members;
    const LocalGraph g = link(alive, v, &members);
    std::vector<Label> labels;
    for (auto m : members) labels.push_back(k_.label(m));
    return Graph::from_ids(std::move(labels), g.edges);
  }

  CompactComplex state(const VertexSet& alive, std::optional<VertexId> marked = std::nullopt) const {
    CompactComplex c;
    std::vector<std::uint32_t> remap(k_.num_vertices(), 0);
    alive.for_each([&](std::size_t v) {
      remap[v] = c.n++;
      if (marked) c.colors.push_back(v == *marked ? 1 : 0);
    });
    for (const auto& e : k_.edges())
      if (alive.test(e[0]) && alive.test(e[1])) c.edges.push_back({remap[e[0]], remap[e[1]]});
    for (const auto& t : k_.triangles())
      if (alive.test(t[0]) && alive.test(t[1]) && alive.test(t[2]))
        c.triangles.push_back({remap[t[0]], remap[t[1]], remap[t[2]]});
    return c;
  }

 private:
  const Complex2& k_;
  std::vector<std::vector<std::array<VertexId, 2>>> link_pairs_;
};

class ComplexReductionPolicy {
 public:
  ComplexReductionPolicy(const ComplexWorkspace& ws, const FamilySpec& f, std::optional<VertexId> target)
      : ws_(ws), f_(f), target_(target) {}

  std::size_t size() const { return ws_.size(); }
  bool removable(const VertexSet& alive, VertexId v) const {
    if (target_ && v == *target_) return false;
    return f_.contains(ws_.link(alive, v));
  }
  bool terminal(const VertexSet&, std::size_t count) const { return count == 1; }
  CompactComplex state(const VertexSet& alive) const { return ws_.state(alive, target_); }

 private:
  const ComplexWorkspace& ws_;
  const FamilySpec& f_;
  std::optional<VertexId> target_;
};

inline ReductionWitness make_witness(const ComplexWorkspace& ws, const std::vector<VertexId>& order) {
  ReductionWitness w;
  VertexSet alive(ws.size(), true);
  for (VertexId v : order) {
    w.steps.push_back({ws.complex().label(v), ws.link_graph(alive, v)});
    alive.reset(v);
  }
  w.final_complex = induced_subcomplex(ws.complex(), alive);
  return w;
}

inline void require_nonempty(const Complex2& k, const char* op) {
  if (k.empty()) throw InvalidArgument(std::string(op) + ": the empty complex is not a valid input");
}

// Reductions along trees keep the Euler characteristic and the number of
// components, so a complex that is not connected with chi = 1 never reaches a point.
inline bool tree_reduction_obstructed(const Complex2& k, const FamilySpec& f) {
  return f.trees_only() && (euler_characteristic(k) != 1 || connected_components(k) != 1);
}

}  // namespace detail

/// Vertices whose link lies in F, in label order.
inline std::vector<Label> initial_vertices(const Complex2& k, const FamilySpec& f) {
  detail::require_nonempty(k, "initial_vertices");
  detail::ComplexWorkspace ws(k);
  VertexSet alive(k.num_vertices(), true);
  std::vector<Label> out;
  for (VertexId v = 0; v < k.num_vertices(); ++v)
    if (f.contains(ws.link(alive, v))) out.push_back(k.label(v));
  return out;
}

/// Removes the smallest initial vertex at every step (or `first_choice` at
/// the first step) until one point remains or no vertex is initial.
inline GreedyOutcome greedy_reduce(const Complex2& k, const FamilySpec& f,
                                   const std::optional<Label>& first_choice = std::nullopt) {
  detail::require_nonempty(k, "greedy_reduce");
  detail::ComplexWorkspace ws(k);
  VertexSet alive(k.num_vertices(), true);
  std::size_t count = k.num_vertices();
  std::vector<VertexId> order;
  if (first_choice) {
    const VertexId v = k.require(*first_choice);
    if (!f.contains(ws.link(alive, v)))
      throw InvalidArgument("greedy_reduce: first choice '" + *first_choice + "' is not initial");
    if (count > 1) {
      order.push_back(v);
      alive.reset(v);
      --count;
    }
  }
  while (count > 1) {
    std::optional<VertexId> next;
    for (VertexId v = 0; v < k.num_vertices() && !next; ++v)
      if (alive.test(v) && f.contains(ws.link(alive, v))) next = v;
    if (!next) break;
    order.push_back(*next);
    alive.reset(*next);
    --count;
  }
  GreedyOutcome out;
  out.witness = detail::make_witness(ws, order);
  out.verdict = count == 1 ? GreedyVerdict::Reduced : GreedyVerdict::Stuck;
  return out;
}

/// Exact decision by backtracking over initial vertices in label order.
inline std::optional<ReductionWitness> decide_reducible(const Complex2& k, const FamilySpec& f,
                                                        const SearchOptions& opts = {}) {
  detail::require_nonempty(k, "decide_reducible");
  if (detail::tree_reduction_obstructed(k, f)) return std::nullopt;
  detail::ComplexWorkspace ws(k);
  detail::ComplexReductionPolicy policy(ws, f, std::nullopt);
  auto order = detail::ExactSearch(policy, opts).run(VertexSet(k.num_vertices(), true));
  if (!order) return std::nullopt;
  return detail::make_witness(ws, *order);
}

/// Reduction that never removes `target` and ends at the one-point complex on it.
inline std::optional<ReductionWitness> reduce_to_target(const Complex2& k, const FamilySpec& f, const Label& target,
                                                        const SearchOptions& opts = {}) {
  detail::require_nonempty(k, "reduce_to_target");
  const VertexId t = k.require(target);
  if (detail::tree_reduction_obstructed(k, f)) return std::nullopt;
  detail::ComplexWorkspace ws(k);
  detail::ComplexReductionPolicy policy(ws, f, t);
  auto order = detail::ExactSearch(policy, opts).run(VertexSet(k.num_vertices(), true));
  if (!order) return std::nullopt;
  return detail::make_witness(ws, *order);
}

/// Nonevasive 2-complexes are exactly the reducible ones along all trees.
inline std::optional<ReductionWitness> nonevasive(const Complex2& k, const SearchOptions& opts = {}) {
  return decide_reducible(k, FamilySpec::all_trees(), opts);
}

/// Replays a witness from `k`; returns a description of the first problem, or
/// nullopt when every step removes a present vertex whose recorded link is its
/// actual link and lies in F. With `complete` the reduction must end at one
/// point. Reductions along trees must also preserve the Euler characteristic.
inline std::optional<std::string> check_witness(const Complex2& k, const FamilySpec& f, const ReductionWitness& w,
                                                bool complete = true) {
  Complex2 cur = k;
  const long chi = euler_characteristic(k);
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const auto& s = w.steps[i];
    const std::string where = "step " + std::to_string(i + 1) + " (" + s.vertex + "): ";
    if (!cur.contains(s.vertex)) return where + "vertex not present";
    const Graph actual = link(cur, s.vertex);
    if (!(actual == s.link)) return where + "recorded link differs from the actual link";
    if (!f.contains(actual)) return where + "link is not in the family";
    cur = delete_vertex(cur, s.vertex);
    if (f.trees_only() && euler_characteristic(cur) != chi) return where + "Euler characteristic changed";
  }
  if (!(cur == w.final_complex)) return std::string("final complex differs from the replayed one");
  if (complete && cur.num_vertices() != 1) return std::string("reduction does not end at a point");
  return std::nullopt;
}

/// For v whose link is a star other than the single edge, with centre w:
/// returns w when the link of w is also a star and swapping v and w maps
/// faces to faces.
inline std::optional<Label> swap_automorphism(const Complex2& k, const Label& v) {
  const auto star = is_star(link(k, v));
  if (!star || !star->centre)
    throw InvalidArgument("swap_automorphism: link of '" + v + "' is not a star with a centre");
  const Label& w = *star->centre;
  if (!is_star(link(k, w))) return std::nullopt;
  std::map<Label, Label> swap{{v, w}, {w, v}};
  if (!(relabel(k, swap) == k)) return std::nullopt;
  return w;
}

struct InitialHistogram {
  std::size_t total = 0;
  std::map<std::size_t, std::size_t> by_link_size;  // link vertex count -> number of initial vertices
};

inline InitialHistogram count_initial_distribution(const Complex2& k, const FamilySpec& f) {
  InitialHistogram h;
  if (k.empty()) return h;
  detail::ComplexWorkspace ws(k);
  VertexSet alive(k.num_vertices(), true);
  for (VertexId v = 0; v < k.num_vertices(); ++v) {
    const auto l = ws.link(alive, v);
    if (f.contains(l)) {
      ++h.total;
      ++h.by_link_size[l.n];
    }
  }
  return h;
}

}  // namespace vdc
