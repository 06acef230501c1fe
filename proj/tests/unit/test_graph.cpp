#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vdc/vdc.hpp"

using namespace vdc;

namespace {

Graph gr(std::string_view text) { return parse_graph(text); }

std::vector<DegreeSet> subsets_of_0_to_3() {
  std::vector<DegreeSet> out;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::set<std::size_t> s;
    for (std::size_t d = 0; d < 4; ++d)
      if (mask >> d & 1) s.insert(d);
    out.emplace_back(s);
  }
  return out;
}

std::vector<Graph> graphs_up_to(std::size_t n) {
  std::vector<Graph> out;
  for (std::size_t i = 1; i <= n; ++i) {
    auto part = graphs_up_to_iso(i);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool is_forest(const Graph& g) { return g.num_edges() + connected_components(g) == g.num_vertices(); }

}  // namespace

TEST_CASE("degree sets") {
  CHECK(DegreeSet::parse("{0,3}") == DegreeSet{0, 3});
  CHECK(DegreeSet::parse("0..2") == DegreeSet::range(0, 2));
  CHECK(DegreeSet::parse("{1}").contains(1));
  CHECK_FALSE(DegreeSet::parse("{1}").contains(0));
  CHECK(DegreeSet::parse("{0,3}").to_string() == "{0,3}");
  CHECK_THROWS_AS(DegreeSet::parse("{}"), ParseError);
  CHECK_THROWS_AS(DegreeSet::parse("{a}"), ParseError);
  CHECK_THROWS_AS(DegreeSet::parse("0,3"), ParseError);
}

TEST_CASE("A-reducibility examples") {
  const DegreeSet a02{0, 2};
  const auto single = a_reducible(discrete_graph(1), DegreeSet{1});
  REQUIRE(single);
  CHECK(single->removals.empty());
  CHECK_FALSE(single->final_removed);

  // The 3-cycle loses a vertex and becomes an edge with two degree-1 ends.
  CHECK_FALSE(a_reducible(cycle_graph(3), a02));
  const auto c4 = a_reducible(cycle_graph(4), a02);
  REQUIRE(c4);
  CHECK_FALSE(check_graph_witness(cycle_graph(4), a02, *c4));
  CHECK(c4->removals.size() == 4);  // 2, 2, 0 and then the last point too
  CHECK(c4->final_removed);
  const auto o = orientation_from_witness(cycle_graph(4), *c4);
  std::multiset<std::size_t> degrees;
  for (const auto& [v, d] : check_acyclic(cycle_graph(4), o).out_degree) degrees.insert(d);
  CHECK(degrees == std::multiset<std::size_t>{0, 0, 2, 2});

  CHECK_FALSE(a_reducible(cycle_graph(3), DegreeSet{1}));
  CHECK_THROWS_AS(a_reducible(Graph(), a02), InvalidArgument);
}

TEST_CASE("A-reducibility matches acyclic orientations") {
  const auto sets = subsets_of_0_to_3();
  for (const auto& g : graphs_up_to(6))
    for (const auto& a : sets) {
      const auto w = a_reducible(g, a);
      CHECK(w.has_value() == oracle::a_reducible_by_orientations(g, a));
      if (!w) continue;
      CHECK_FALSE(check_graph_witness(g, a, *w));
      const auto o = orientation_from_witness(g, *w);
      const auto report = check_acyclic(g, o);
      CHECK(report.acyclic);
      const auto back = witness_from_orientation(g, o, a);
      REQUIRE(back);
      CHECK_FALSE(check_graph_witness(g, a, *back));
    }
}

TEST_CASE("A-reducibility matches acyclic orientations on seven vertices") {
  const DegreeSet a02{0, 2}, a03{0, 3}, a1{1};
  for (const auto& g : graphs_up_to_iso(7))
    for (const auto& a : {a02, a03, a1}) CHECK(a_reducible(g, a).has_value() == oracle::a_reducible_by_orientations(g, a));
}

TEST_CASE("monotonicity in A") {
  const auto sets = subsets_of_0_to_3();
  for (const auto& g : graphs_up_to(6)) {
    std::map<std::string, bool> verdict;
    for (const auto& a : sets) verdict[a.to_string()] = a_reducible(g, a).has_value();
    for (const auto& a1 : sets)
      for (const auto& a2 : sets)
        if (a1.subset_of(a2) && verdict[a1.to_string()]) CHECK(verdict[a2.to_string()]);
  }
}

TEST_CASE("trees and forests") {
  for (const auto& g : graphs_up_to(7)) {
    CHECK(a_reducible(g, DegreeSet{1}).has_value() == is_tree(g));
    CHECK(a_reducible(g, DegreeSet{0, 1}).has_value() == is_forest(g));
  }
}

TEST_CASE("orientations from witnesses") {
  const Graph path = gr("a b\nb c");
  const GraphReductionWitness w{{{"a", 1}, {"b", 1}}, false};
  CHECK_FALSE(check_graph_witness(path, DegreeSet{1}, w));
  const auto o = orientation_from_witness(path, w);
  CHECK(o == Orientation{{"a", "b"}, {"b", "c"}});
  CHECK(check_acyclic(path, o).out_degree.at("c") == 0);

  const Graph edge = gr("u v");
  const auto oe = orientation_from_witness(edge, {{{"v", 1}}, false});
  CHECK(oe == Orientation{{"v", "u"}});

  const GraphReductionWitness wrong{{{"b", 1}}, false};
  CHECK(check_graph_witness(path, DegreeSet{1}, wrong));
  CHECK_THROWS_AS(orientation_from_witness(path, wrong), InvalidArgument);
}

TEST_CASE("witnesses from orientations") {
  const Graph path = gr("a b\nb c");
  const auto w = witness_from_orientation(path, {{"a", "b"}, {"b", "c"}}, DegreeSet{1});
  REQUIRE(w);
  CHECK(*w == GraphReductionWitness{{{"a", 1}, {"b", 1}}, false});
  CHECK(witness_from_orientation(path, {{"a", "b"}, {"c", "b"}}, DegreeSet{1}));
  CHECK_FALSE(witness_from_orientation(path, {{"b", "a"}, {"b", "c"}}, DegreeSet{1}));
  const Graph tri = cycle_graph(3);
  const Orientation cyclic{{"a", "b"}, {"b", "c"}, {"c", "a"}};
  CHECK_FALSE(check_acyclic(tri, cyclic).acyclic);
  CHECK_THROWS_AS(witness_from_orientation(tri, cyclic, DegreeSet{0, 1}), InvalidArgument);
  CHECK_THROWS_AS(check_acyclic(tri, {{"a", "b"}}), InvalidArgument);
  CHECK_THROWS_AS(check_acyclic(tri, {{"a", "b"}, {"b", "a"}, {"b", "c"}}), InvalidArgument);
}

TEST_CASE("any orientation of a tree is acyclic") {
  for (const auto& t : trees_up_to(6)) {
    Orientation o;
    for (const auto& [a, b] : t.edge_labels()) o.push_back({b, a});
    CHECK(check_acyclic(t, o).acyclic);
  }
}

TEST_CASE("orientation text round trip") {
  const Orientation o{{"x1", "x1'"}, {"x1", "B1"}};
  CHECK(format_orientation(o) == "x1 -> x1'\nx1 -> B1\n");
  CHECK(parse_orientation(format_orientation(o)) == o);
  CHECK_THROWS_AS(parse_orientation("a b\n"), ParseError);
}

TEST_CASE("degeneracy") {
  CHECK(degeneracy(complete_graph(4)) == 3);
  CHECK(degeneracy(cycle_graph(5)) == 2);
  CHECK(degeneracy(path_graph(5)) == 1);
  CHECK(degeneracy(discrete_graph(3)) == 0);
  CHECK_THROWS_AS(degeneracy(Graph()), InvalidArgument);
  for (const auto& g : graphs_up_to(7)) {
    const auto d = degeneracy(g);
    CHECK(d == oracle::degeneracy(g));
    CHECK(a_reducible(g, DegreeSet::range(0, d)).has_value());
    if (d > 0) CHECK_FALSE(a_reducible(g, DegreeSet::range(0, d - 1)).has_value());
  }
}

TEST_CASE("parallel and budgeted searches") {
  const Graph g = disjoint_union(complete_graph(4), cycle_graph(5));
  SearchOptions par;
  par.parallel = true;
  CHECK(a_reducible(g, DegreeSet{0, 2, 3}, par).has_value() == a_reducible(g, DegreeSet{0, 2, 3}).has_value());
  SearchOptions tiny;
  tiny.time_budget = std::chrono::milliseconds(0);
  Graph big = cycle_graph(4);
  for (int i = 0; i < 5; ++i) big = disjoint_union(big, cycle_graph(5));
  CHECK_THROWS_AS(a_reducible(big, DegreeSet{0, 3}, tiny), BudgetExceeded);
}
