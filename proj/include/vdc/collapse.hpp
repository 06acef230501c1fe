#pragma once

// Elementary collapses, greedy collapsibility, and the comparison of
// collapsibility with reductions of the barycentric subdivision.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vdc/complex.hpp"
#include "vdc/reduction.hpp"
#include "vdc/shapes.hpp"
#include "vdc/tree_family.hpp"

namespace vdc {

using Face = std::vector<Label>;  // sorted labels

struct CollapseStep {
  Face free_face;
  Face coface;

  bool operator==(const CollapseStep&) const = default;
};

struct CollapseWitness {
  std::vector<CollapseStep> steps;
  Complex2 final_complex;
};

struct CollapseOutcome {
  CollapseWitness witness;  // partial when stuck
  bool collapsible = false;
};

namespace detail {

/// Face set kept as a plain ordered set; fine at the sizes involved.
class FaceSet {
 public:
  explicit FaceSet(const Complex2& k) {
    for (auto& f : k.faces()) faces_.insert(std::move(f));
  }

  std::size_t size() const { return faces_.size(); }
  bool contains(const Face& f) const { return faces_.count(f) != 0; }

  /// Faces strictly containing `f`.
  std::vector<Face> cofaces(const Face& f) const {
    std::vector<Face> out;
    for (const auto& g : faces_)
      if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) out.push_back(g);
    return out;
  }

  /// Free pairs in lexicographic order of (face, coface).
  std::vector<CollapseStep> free_pairs() const {
    std::vector<CollapseStep> out;
    for (const auto& f : faces_) {
      if (f.size() == 3) continue;
      auto up = cofaces(f);
      if (up.size() == 1 && up.front().size() == f.size() + 1) out.push_back({f, up.front()});
    }
    return out;
  }

  void erase(const Face& f) { faces_.erase(f); }

  Complex2 complex() const { return Complex2::from_faces({faces_.begin(), faces_.end()}); }

  /// A single vertex and nothing else.
  bool is_point() const { return faces_.size() == 1 && faces_.begin()->size() == 1; }

 private:
  std::set<Face> faces_;
};

}  // namespace detail

/// Pairs (sigma, tau) where tau is the only face strictly containing sigma and
/// has one more vertex.
inline std::vector<CollapseStep> free_faces(const Complex2& k) { return detail::FaceSet(k).free_pairs(); }

/// Performs the lexicographically smallest elementary collapse until none is
/// left. In dimension two this decides collapsibility.
inline CollapseOutcome greedy_collapse(const Complex2& k) {
  if (k.empty()) throw InvalidArgument("greedy_collapse: empty complex");
  detail::FaceSet s(k);
  CollapseOutcome out;
  while (!s.is_point()) {
    const auto pairs = s.free_pairs();
    if (pairs.empty()) break;
    s.erase(pairs.front().free_face);
    s.erase(pairs.front().coface);
    out.witness.steps.push_back(pairs.front());
  }
  out.witness.final_complex = s.complex();
  out.collapsible = s.is_point();
  return out;
}

/// Replays a collapse sequence; reports the first invalid step. Every step
/// must keep the Euler characteristic.
inline std::optional<std::string> check_collapse(const Complex2& k, const CollapseWitness& w, bool complete = true) {
  detail::FaceSet s(k);
  const long chi = euler_characteristic(k);
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const auto& st = w.steps[i];
    const std::string where = "collapse " + std::to_string(i + 1) + ": ";
    if (!s.contains(st.free_face) || !s.contains(st.coface)) return where + "face not present";
    const auto up = s.cofaces(st.free_face);
    if (up.size() != 1 || up.front() != st.coface || st.coface.size() != st.free_face.size() + 1)
      return where + "face is not free in the recorded coface";
    s.erase(st.free_face);
    s.erase(st.coface);
    if (euler_characteristic(s.complex()) != chi) return where + "Euler characteristic changed";
  }
  if (!(s.complex() == w.final_complex)) return std::string("final complex differs from the replayed one");
  if (complete && !s.is_point()) return std::string("collapses do not end at a point");
  return std::nullopt;
}

/// The family {point, P3, P5}.
inline FamilySpec subdivision_family() {
  return FamilySpec::explicit_trees({path_graph(1), path_graph(3), path_graph(5)});
}

struct SdReport {
  bool collapsible = false;                 // K collapses to a point
  std::optional<bool> sd_restricted;        // sd K is {point, P3, P5}-reducible; nullopt: budget exceeded
  std::optional<bool> sd_nonevasive;        // nullopt: budget exceeded
  bool sd_collapsible = false;

  bool decided() const { return sd_restricted.has_value() && sd_nonevasive.has_value(); }
  bool all_equal() const {
    return decided() && collapsible == *sd_restricted && collapsible == *sd_nonevasive && collapsible == sd_collapsible;
  }
};

inline SdReport sd_equivalence_report(const Complex2& k, const SearchOptions& opts = {}) {
  if (k.empty()) throw InvalidArgument("sd_equivalence_report: empty complex");
  const Complex2 sd = barycentric_subdivision(k);
  SdReport r;
  r.collapsible = greedy_collapse(k).collapsible;
  try {
    r.sd_restricted = decide_reducible(sd, subdivision_family(), opts).has_value();
  } catch (const BudgetExceeded&) {
  }
  try {
    r.sd_nonevasive = nonevasive(sd, opts).has_value();
  } catch (const BudgetExceeded&) {
  }
  r.sd_collapsible = greedy_collapse(sd).collapsible;
  return r;
}

/// Translates collapses of K into removals in sd K: a free edge in a triangle
/// becomes the edge's barycentre (link P3) and then the triangle's (link P5);
/// a free vertex in an edge becomes the vertex and then the edge's barycentre
/// (both with a one-point link).
inline ReductionWitness simulate_collapse_in_sd(const Complex2& k, const CollapseWitness& w) {
  if (auto problem = check_collapse(k, w, false)) throw InvalidArgument("simulate_collapse_in_sd: " + *problem);
  const auto sub = barycentric_subdivision_with_map(k);
  const FamilySpec f = subdivision_family();
  Complex2 cur = sub.complex;
  ReductionWitness out;
  auto remove = [&](const Face& face) {
    const Label& b = sub.barycenter.at(face);
    Graph lk = link(cur, b);
    if (!f.contains(lk)) throw Error("simulate_collapse_in_sd: barycentre " + b + " has a link outside {point, P3, P5}");
    cur = delete_vertex(cur, b);
    out.steps.push_back({b, std::move(lk)});
  };
  for (const auto& st : w.steps) {
    remove(st.free_face);
    remove(st.coface);
  }
  out.final_complex = cur;
  return out;
}

}  // namespace vdc
