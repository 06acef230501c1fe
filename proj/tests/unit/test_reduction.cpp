#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vdc/vdc.hpp"

using namespace vdc;

namespace {

Complex2 cx(std::string_view text) { return parse_complex(text); }

FamilySpec paths(std::vector<std::size_t> sizes) {
  std::vector<Graph> t;
  for (auto n : sizes) t.push_back(path_graph(n));
  return FamilySpec::explicit_trees(t);
}

bool diameter_at_most_two(const Graph& g) {
  for (VertexId a = 0; a < g.num_vertices(); ++a)
    for (VertexId b = a + 1; b < g.num_vertices(); ++b) {
      if (g.adjacent(a, b)) continue;
      bool common = false;
      for (auto c : g.neighbors(a)) common = common || g.adjacent(c, b);
      if (!common) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("family membership") {
  const auto all = FamilySpec::all_trees();
  for (const auto& t : trees_up_to(6))
    if (t.num_vertices() == 6) CHECK(all.contains(t));
  CHECK_FALSE(all.contains(cycle_graph(4)));
  CHECK_FALSE(all.contains(Graph()));
  CHECK_FALSE(FamilySpec::stars_at_most(3).contains(path_graph(4)));
  const auto s03 = FamilySpec::stars_with_leaf_counts(DegreeSet{0, 3});
  CHECK(s03.contains(star_graph(3)));
  CHECK(s03.contains(path_graph(1)));
  CHECK_FALSE(s03.contains(path_graph(2)));
  CHECK(FamilySpec::hereditary_discrete(2).contains(Graph()));
  CHECK(FamilySpec::hereditary_discrete(2).contains(discrete_graph(2)));
  CHECK_FALSE(FamilySpec::hereditary_discrete(2).contains(discrete_graph(3)));
  CHECK_FALSE(FamilySpec::hereditary_discrete(2).contains(path_graph(2)));
}

TEST_CASE("bounded stars are the small trees of diameter two") {
  for (std::size_t n = 0; n <= 7; ++n)
    for (const auto& g : graphs_up_to_iso(n == 0 ? 1 : n))
      for (std::size_t k = 0; k <= 4; ++k)
        CHECK(FamilySpec::stars_at_most(k).contains(g) ==
              (is_tree(g) && diameter_at_most_two(g) && g.num_vertices() <= k + 1));
}

TEST_CASE("stars and their centres") {
  const auto s4 = is_star(star_graph(4));
  REQUIRE(s4);
  CHECK(s4->centre == star_graph(4).label(0));
  CHECK(s4->leaves == 4);
  const auto e = is_star(path_graph(2));
  REQUIRE(e);
  CHECK_FALSE(e->centre);
  CHECK(star_leaf_count(path_graph(2)) == 1);
  CHECK_FALSE(is_star(path_graph(4)));
  CHECK(is_star(path_graph(1))->leaves == 0);
}

TEST_CASE("tree codes") {
  CHECK(tree_canonical_code(path_graph(4)) == tree_canonical_code(parse_graph("q r\np q\nr s")));
  CHECK(tree_canonical_code(path_graph(4)) != tree_canonical_code(star_graph(3)));
  std::set<std::string> six;
  for (const auto& t : trees_up_to(6))
    if (t.num_vertices() == 6) six.insert(tree_canonical_code(t));
  CHECK(six.size() == 6);
  CHECK_THROWS_AS(tree_canonical_code(cycle_graph(3)), InvalidArgument);
}

TEST_CASE("subtree closure and the dichotomy") {
  CHECK(is_subtree_closed(paths({1, 2, 3})));
  CHECK_FALSE(is_subtree_closed(paths({1, 3})));
  CHECK(is_subtree_closed(paths({1, 2, 3, 4})));
  using K = Dichotomy::Kind;
  CHECK(classify_dichotomy(FamilySpec::stars_at_most(5)) == Dichotomy{K::StarForm, 5});
  CHECK(classify_dichotomy(FamilySpec::all_trees()).kind == K::ContainsP4);
  CHECK(classify_dichotomy(paths({1, 2, 3, 4})).kind == K::ContainsP4);
  CHECK(classify_dichotomy(paths({1, 2, 3})) == Dichotomy{K::StarForm, 2});
  CHECK_THROWS_AS(classify_dichotomy(paths({1, 3})), InvalidArgument);

  // Every subtree-closed family of trees up to 5 vertices gets exactly one tag.
  const auto trees = trees_up_to(5);
  for (unsigned mask = 1; mask < (1u << trees.size()); ++mask) {
    std::vector<Graph> members;
    for (std::size_t i = 0; i < trees.size(); ++i)
      if (mask >> i & 1) members.push_back(trees[i]);
    const auto f = FamilySpec::explicit_trees(members);
    if (!is_subtree_closed(f)) continue;
    const auto d = classify_dichotomy(f);
    const bool has_p4 = f.contains(path_graph(4));
    CHECK((d.kind == K::ContainsP4) == has_p4);
    if (!has_p4) {
      for (std::size_t k = 0; k <= *d.n; ++k) CHECK(f.contains(star_graph(k)));
      for (const auto& t : trees_up_to(6)) CHECK(f.contains(t) == FamilySpec::stars_at_most(d.n).contains(t));
    }
  }
}

TEST_CASE("family syntax") {
  CHECK(parse_family("all-trees").contains(path_graph(5)));
  CHECK(parse_family("stars:inf").contains(star_graph(9)));
  CHECK_FALSE(parse_family("stars:2").contains(star_graph(3)));
  CHECK(parse_family("stars-in:{0,3}").contains(star_graph(3)));
  CHECK(parse_family("discrete:1").contains(discrete_graph(1)));
  CHECK(parse_family("trees:{point,edge,P3,P4}").contains(path_graph(4)));
  CHECK_FALSE(parse_family("trees:{point,edge,P3,P4}").contains(star_graph(3)));
  CHECK(parse_tree_list("a\n---\na b\n---\na b\nb c\n").size() == 3);
  CHECK_THROWS_AS(parse_family("stars:x"), ParseError);
  CHECK_THROWS_AS(parse_family("bogus"), ParseError);
  CHECK_THROWS_AS(parse_family("trees:{P0}"), ParseError);
  CHECK_THROWS_AS(parse_family("trees:{point"), ParseError);
}

TEST_CASE("initial vertices") {
  const auto all = FamilySpec::all_trees();
  CHECK(initial_vertices(full_triangle(), all) == std::vector<Label>{"a", "b", "c"});
  CHECK(initial_vertices(hollow_triangle(), all).empty());
  CHECK(initial_vertices(tetrahedron_boundary(), all).empty());
  CHECK(count_initial_distribution(full_triangle(), all).total == 3);
  CHECK_THROWS_AS(initial_vertices(Complex2(), all), InvalidArgument);
}

TEST_CASE("greedy reduction") {
  const auto g = greedy_reduce(full_triangle(), FamilySpec::stars_at_most(std::nullopt));
  CHECK(g.verdict == GreedyVerdict::Reduced);
  CHECK(g.witness.steps.size() == 2);
  const auto c = greedy_reduce(cone(path_graph(3), "p"), FamilySpec::stars_at_most(1));
  CHECK(c.verdict == GreedyVerdict::Reduced);
  CHECK_FALSE(check_witness(cone(path_graph(3), "p"), FamilySpec::stars_at_most(1), c.witness));
  const auto stuck = greedy_reduce(hollow_triangle(), FamilySpec::all_trees());
  CHECK(stuck.verdict == GreedyVerdict::Stuck);
  CHECK(stuck.witness.final_complex == hollow_triangle());
  CHECK_THROWS_AS(greedy_reduce(hollow_triangle(), FamilySpec::all_trees(), Label("a")), InvalidArgument);
}

TEST_CASE("exact decisions") {
  const auto all = FamilySpec::all_trees();
  const auto p = decide_reducible(Complex2::point("v"), all);
  REQUIRE(p);
  CHECK(p->steps.empty());
  CHECK_FALSE(decide_reducible(tetrahedron_boundary(), all));
  const Graph c3 = cycle_graph(3), c4 = cycle_graph(4);
  CHECK_FALSE(decide_reducible(cone(disjoint_union(c3, c3), "z"), parse_family("stars-in:{0,2}")));
  CHECK(decide_reducible(cone(disjoint_union(c4, c4), "z"), parse_family("stars-in:{0,2}")));
  CHECK_THROWS_AS(decide_reducible(Complex2(), all), InvalidArgument);
}

TEST_CASE("exact decisions match the removal-order oracle") {
  const std::vector<FamilySpec> families{FamilySpec::all_trees(),          FamilySpec::stars_at_most(1),
                                         FamilySpec::stars_at_most(2),     paths({1, 2}),
                                         paths({1, 3}),                    paths({1, 2, 3, 4}),
                                         parse_family("stars-in:{0,2}"),   FamilySpec::hereditary_discrete(1)};
  for (const auto& k : complexes_up_to(5))
    for (const auto& f : families) {
      const auto w = decide_reducible(k, f);
      CHECK(w.has_value() == oracle::reducible(k, f));
      if (w) CHECK_FALSE(check_witness(k, f, *w));
    }
}

TEST_CASE("family monotonicity on decisions") {
  const std::vector<FamilySpec> chain{paths({1}), paths({1, 2}), paths({1, 2, 3}), paths({1, 2, 3, 4}),
                                      FamilySpec::all_trees()};
  for (const auto& k : complexes_up_to(5))
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (decide_reducible(k, chain[i])) CHECK(decide_reducible(k, chain[i + 1]));
}

TEST_CASE("reduction to a target") {
  const auto stars = FamilySpec::stars_at_most(std::nullopt);
  const auto tri = full_triangle();
  for (const auto& v : tri.vertices()) {
    const auto w = reduce_to_target(tri, stars, v);
    REQUIRE(w);
    CHECK(w->final_complex == Complex2::point(v));
  }
  // Removing a vertex of the 3-cycle leaves an edge, whose ends have degree 1.
  const auto cg = cone(cycle_graph(3), "apex");
  CHECK_FALSE(reduce_to_target(cg, parse_family("stars-in:{0,2}"), "apex"));
  CHECK(reduce_to_target(cone(cycle_graph(4), "apex"), parse_family("stars-in:{0,2}"), "apex"));

  // A single edge reduces to either end along {point}.
  const auto edge = cx("a b");
  CHECK(reduce_to_target(edge, paths({1}), "a"));
  CHECK(reduce_to_target(edge, FamilySpec::stars_at_most(0), "b"));
  CHECK_THROWS_AS(reduce_to_target(edge, paths({1}), "z"), InvalidArgument);

  for (const auto& k : complexes_up_to(4))
    for (const auto& v : k.vertices())
      CHECK(reduce_to_target(k, paths({1, 2}), v).has_value() == oracle::reducible_to(k, paths({1, 2}), v));
}

TEST_CASE("nonevasiveness") {
  for (const auto& t : trees_up_to(5)) CHECK(nonevasive(cone(t, "apex")));
  CHECK_FALSE(nonevasive(tetrahedron_boundary()));
  CHECK(nonevasive(barycentric_subdivision(full_triangle())));
}

TEST_CASE("witness validation catches tampering") {
  const auto all = FamilySpec::all_trees();
  const auto k = cx("a b c\nb c d");
  auto w = *decide_reducible(k, all);
  CHECK_FALSE(check_witness(k, all, w));
  auto bad_link = w;
  bad_link.steps[0].link = path_graph(5);
  CHECK(check_witness(k, all, bad_link));
  auto bad_final = w;
  bad_final.final_complex = Complex2::point("zz");
  CHECK(check_witness(k, all, bad_final));
  auto partial = w;
  partial.steps.pop_back();
  CHECK(check_witness(k, all, partial, true));
}

TEST_CASE("witness text round trip") {
  const auto all = FamilySpec::all_trees();
  const auto k = cone(path_graph(4), "p");
  const auto w = *decide_reducible(k, all);
  const auto parsed = parse_witness(format_witness("reducible", w));
  CHECK(parsed.verdict == "reducible");
  CHECK(parsed.has_final);
  CHECK(parsed.witness == w);
  CHECK_THROWS_AS(parse_witness("a b c\n"), ParseError);
}

TEST_CASE("swap automorphisms") {
  const auto k = cx("v w a\nv w b");
  CHECK(swap_automorphism(k, "v") == Label("w"));
  CHECK_THROWS_AS(swap_automorphism(full_triangle(), "a"), InvalidArgument);
  // w lies in a triangle without v, so the transposition is not an automorphism.
  const auto broken = cx("v w a\nv w b\nw a c");
  CHECK_FALSE(swap_automorphism(broken, "v"));

  // Whenever an automorphism is reported, check it face by face.
  for (const auto& c : complexes_up_to(5))
    for (const auto& v : c.vertices()) {
      const auto s = is_star(link(c, v));
      if (!s || !s->centre || s->leaves < 2) continue;
      const auto w = swap_automorphism(c, v);
      if (!w) continue;
      std::set<std::vector<Label>> faces, swapped;
      for (auto f : c.faces()) {
        std::sort(f.begin(), f.end());
        faces.insert(f);
        for (auto& l : f) l = l == v ? *w : l == *w ? v : l;
        std::sort(f.begin(), f.end());
        swapped.insert(f);
      }
      CHECK(faces == swapped);
    }
}

TEST_CASE("greedy verdicts agree with exact ones for stars and discrete links") {
  std::vector<FamilySpec> families;
  for (std::size_t n = 0; n <= 3; ++n) {
    families.push_back(FamilySpec::stars_at_most(n));
    families.push_back(FamilySpec::hereditary_discrete(n));
  }
  for (const auto& k : complexes_up_to(5))
    for (const auto& f : families) {
      const bool exact = decide_reducible(k, f).has_value();
      for (const auto& v : initial_vertices(k, f))
        CHECK((greedy_reduce(k, f, v).verdict == GreedyVerdict::Reduced) == exact);
    }
}

TEST_CASE("budgets and parallel search") {
  const auto sd = barycentric_subdivision(tetrahedron_boundary());
  SearchOptions par;
  par.parallel = true;
  const auto k = barycentric_subdivision(cx("a b c\nb c d\nc d e"));
  CHECK(decide_reducible(k, FamilySpec::all_trees(), par).has_value() ==
        decide_reducible(k, FamilySpec::all_trees()).has_value());
  SearchOptions tiny;
  tiny.time_budget = std::chrono::milliseconds(0);
  CHECK_THROWS_AS(decide_reducible(barycentric_subdivision(cx("a b c\nb c d\nc d e\nd e f")),
                                   FamilySpec::stars_at_most(std::nullopt), tiny),
                  BudgetExceeded);
  CHECK_FALSE(nonevasive(sd));
}
