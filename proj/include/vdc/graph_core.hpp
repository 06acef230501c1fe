#pragma once

// A-reducibility of graphs and its correspondence with acyclic orientations.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vdc/complex.hpp"
#include "vdc/degree_set.hpp"
#include "vdc/detail/search.hpp"

namespace vdc {

struct GraphRemoval {
  Label vertex;
  std::size_t degree = 0;

  bool operator==(const GraphRemoval&) const = default;
};

/// Removals in order. A reduction stops at one surviving vertex; when 0 is
/// an admissible degree the survivor is removed as well (degree 0) and
/// `final_removed` is set, so that every vertex carries an out-degree in A.
struct GraphReductionWitness {
  std::vector<GraphRemoval> removals;
  bool final_removed = false;

  bool operator==(const GraphReductionWitness&) const = default;
};

struct Arc {
  Label tail;
  Label head;

  bool operator==(const Arc&) const = default;
};

/// One arc per edge of a fixed graph.
using Orientation = std::vector<Arc>;

namespace detail {

class GraphReductionPolicy {
 public:
  GraphReductionPolicy(const Graph& g, const DegreeSet& a) : g_(g), a_(a) {}

  std::size_t size() const { return g_.num_vertices(); }
  bool removable(const VertexSet& alive, VertexId v) const { return a_.contains(degree(alive, v)); }
  bool terminal(const VertexSet&, std::size_t count) const { return count == 1; }
  // With 0 in A an isolated vertex can always go first: any reduction that
  // would have kept it as the last point simply stops one step earlier.
  std::optional<VertexId> forced(const VertexSet& alive, std::size_t) const {
    if (!a_.contains(0)) return std::nullopt;
    std::optional<VertexId> out;
    alive.for_each([&](std::size_t v) {
      if (!out && degree(alive, static_cast<VertexId>(v)) == 0) out = static_cast<VertexId>(v);
    });
    return out;
  }
  CompactComplex state(const VertexSet& alive) const {
    CompactComplex c;
    std::vector<std::uint32_t> remap(g_.num_vertices(), 0);
    alive.for_each([&](std::size_t v) { remap[v] = c.n++; });
    for (const auto& e : g_.edges())
      if (alive.test(e[0]) && alive.test(e[1])) c.edges.push_back({remap[e[0]], remap[e[1]]});
    return c;
  }

  std::size_t degree(const VertexSet& alive, VertexId v) const {
    std::size_t d = 0;
    for (auto u : g_.neighbors(v))
      if (alive.test(u)) ++d;
    return d;
  }

 private:
  const Graph& g_;
  const DegreeSet& a_;
};

}  // namespace detail

/// Exhaustive search for an A-reduction of G to one vertex.
inline std::optional<GraphReductionWitness> a_reducible(const Graph& g, const DegreeSet& a,
                                                        const SearchOptions& opts = {}) {
  if (g.empty()) throw InvalidArgument("a_reducible: the empty graph is not a valid input");
  detail::GraphReductionPolicy policy(g, a);
  VertexSet all(g.num_vertices(), true);
  auto order = detail::ExactSearch(policy, opts).run(all);
  if (!order) return std::nullopt;
  GraphReductionWitness w;
  VertexSet alive = all;
  for (VertexId v : *order) {
    w.removals.push_back({g.label(v), policy.degree(alive, v)});
    alive.reset(v);
  }
  if (a.contains(0)) {
    alive.for_each([&](std::size_t v) { w.removals.push_back({g.label(static_cast<VertexId>(v)), 0}); });
    w.final_removed = true;
  }
  return w;
}

/// Replays a witness; reports the first mismatch or nullopt when valid for A.
inline std::optional<std::string> check_graph_witness(const Graph& g, const DegreeSet& a,
                                                      const GraphReductionWitness& w) {
  VertexSet alive(g.num_vertices(), true);
  std::size_t count = g.num_vertices();
  for (std::size_t i = 0; i < w.removals.size(); ++i) {
    const auto& r = w.removals[i];
    const auto v = g.find(r.vertex);
    const std::string where = "removal " + std::to_string(i + 1) + " (" + r.vertex + "): ";
    if (!v || !alive.test(*v)) return where + "vertex not present";
    std::size_t d = 0;
    for (auto u : g.neighbors(*v))
      if (alive.test(u)) ++d;
    if (d != r.degree) return where + "recorded degree " + std::to_string(r.degree) + ", actual " + std::to_string(d);
    if (!a.contains(d)) return where + "degree not in " + a.to_string();
    alive.reset(*v);
    --count;
  }
  if (count != (w.final_removed ? 0u : 1u)) return std::string("witness does not reduce the graph to a point");
  return std::nullopt;
}

/// Directs every edge away from the endpoint that is removed first.
inline Orientation orientation_from_witness(const Graph& g, const GraphReductionWitness& w) {
  VertexSet alive(g.num_vertices(), true);
  std::size_t count = g.num_vertices();
  Orientation o;
  for (const auto& r : w.removals) {
    const auto v = g.find(r.vertex);
    if (!v || !alive.test(*v)) throw InvalidArgument("orientation_from_witness: '" + r.vertex + "' not present");
    std::size_t d = 0;
    for (auto u : g.neighbors(*v))
      if (alive.test(u)) {
        ++d;
        o.push_back({r.vertex, g.label(u)});
      }
    if (d != r.degree)
      throw InvalidArgument("orientation_from_witness: degree mismatch at '" + r.vertex + "' (recorded " +
                            std::to_string(r.degree) + ", actual " + std::to_string(d) + ")");
    alive.reset(*v);
    --count;
  }
  if (count > 1) throw InvalidArgument("orientation_from_witness: witness leaves more than one vertex");
  return o;
}

struct AcyclicityReport {
  bool acyclic = false;
  std::map<Label, std::size_t> out_degree;
};

namespace detail {

/// Out-neighbour lists by vertex id; validates that `o` orients exactly the edges of g.
inline std::vector<std::vector<VertexId>> arcs_by_tail(const Graph& g, const Orientation& o) {
  std::vector<std::vector<VertexId>> out(g.num_vertices());
  std::vector<EdgeIds> seen;
  for (const auto& arc : o) {
    const auto t = g.find(arc.tail), h = g.find(arc.head);
    if (!t || !h || !g.adjacent(*t, *h))
      throw InvalidArgument("orientation arc " + arc.tail + " -> " + arc.head + " is not an edge of the graph");
    seen.push_back(make_edge(*t, *h));
    out[*t].push_back(*h);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw InvalidArgument("orientation orients an edge twice");
  if (seen.size() != g.num_edges()) throw InvalidArgument("orientation leaves an edge unoriented");
  return out;
}

}  // namespace detail

inline AcyclicityReport check_acyclic(const Graph& g, const Orientation& o) {
  const auto out = detail::arcs_by_tail(g, o);
  AcyclicityReport r;
  std::vector<std::size_t> indeg(g.num_vertices(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    r.out_degree[g.label(v)] = out[v].size();
    for (auto h : out[v]) ++indeg[h];
  }
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const VertexId v = ready.back();
    ready.pop_back();
    ++seen;
    for (auto h : out[v])
      if (--indeg[h] == 0) ready.push_back(h);
  }
  r.acyclic = seen == g.num_vertices();
  return r;
}

/// Removes sources, smallest label first. Returns nullopt when some vertex
/// other than a single final sink has out-degree outside A; throws when the
/// orientation has a directed cycle.
inline std::optional<GraphReductionWitness> witness_from_orientation(const Graph& g, const Orientation& o,
                                                                     const DegreeSet& a) {
  if (g.empty()) throw InvalidArgument("witness_from_orientation: empty graph");
  const auto report = check_acyclic(g, o);
  if (!report.acyclic) throw InvalidArgument("witness_from_orientation: orientation is cyclic");
  const auto out = detail::arcs_by_tail(g, o);
  std::vector<std::size_t> indeg(g.num_vertices(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (auto h : out[v]) ++indeg[h];
  VertexSet alive(g.num_vertices(), true);
  std::size_t count = g.num_vertices();
  GraphReductionWitness w;
  while (count > 1) {
    VertexId src = 0;
    while (!alive.test(src) || indeg[src] != 0) ++src;
    if (!a.contains(out[src].size())) return std::nullopt;
    w.removals.push_back({g.label(src), out[src].size()});
    alive.reset(src);
    --count;
    for (auto h : out[src]) --indeg[h];
  }
  VertexId last = 0;
  while (!alive.test(last)) ++last;
  if (!out[last].empty()) return std::nullopt;  // unreachable for acyclic input
  if (a.contains(0)) {
    w.removals.push_back({g.label(last), 0});
    w.final_removed = true;
  }
  return w;
}

/// Least n with G {0..n}-reducible: the largest degree met when repeatedly
/// removing a vertex of minimum degree (smallest label on ties).
inline std::size_t degeneracy(const Graph& g) {
  if (g.empty()) throw InvalidArgument("degeneracy: empty graph");
  std::vector<std::size_t> deg(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) deg[v] = g.degree(v);
  std::vector<char> removed(g.num_vertices(), 0);
  std::size_t worst = 0;
  for (std::size_t step = 0; step + 1 < g.num_vertices(); ++step) {
    VertexId best = 0;
    bool found = false;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      if (!removed[v] && (!found || deg[v] < deg[best])) {
        best = v;
        found = true;
      }
    worst = std::max(worst, deg[best]);
    removed[best] = 1;
    for (auto u : g.neighbors(best))
      if (!removed[u]) --deg[u];
  }
  return worst;
}

inline std::string format_orientation(const Orientation& o) {
  std::string s;
  for (const auto& arc : o) s += arc.tail + " -> " + arc.head + "\n";
  return s;
}

inline Orientation parse_orientation(std::string_view text) {
  Orientation o;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
    std::vector<std::string> tok;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) tok.emplace_back(line.substr(i, j - i));
      i = j;
    }
    if (tok.empty()) continue;
    if (tok.size() != 3 || tok[1] != "->" || !is_valid_label(tok[0]) || !is_valid_label(tok[2]))
      throw ParseError("line " + std::to_string(lineno) + ": expected 'tail -> head'");
    o.push_back({tok[0], tok[2]});
  }
  return o;
}

}  // namespace vdc
