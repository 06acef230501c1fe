#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vdc/vdc.hpp"

using namespace vdc;

namespace {

Complex2 cx(std::string_view text) { return parse_complex(text); }

const std::string kFixtures = VDC_FIXTURES;

Complex2 dunce_hat() { return parse_complex(read_file(kFixtures + "/dunce_hat.cx")); }

}  // namespace

TEST_CASE("free faces") {
  const auto t = free_faces(full_triangle());
  CHECK(t.size() == 3);
  for (const auto& p : t) {
    CHECK(p.free_face.size() == 2);
    CHECK(p.coface.size() == 3);
  }
  CHECK(free_faces(hollow_triangle()).empty());
  CHECK(free_faces(tetrahedron_boundary()).empty());
  const auto edge = free_faces(cx("a b"));
  CHECK(edge.size() == 2);
}

TEST_CASE("the dunce hat fixture") {
  const auto d = dunce_hat();
  CHECK(euler_characteristic(d) == 1);
  CHECK(free_faces(d).empty());
  CHECK_FALSE(greedy_collapse(d).collapsible);
  // Every edge lies in two or three triangles, and exactly the three edges of
  // the identified side lie in three.
  std::size_t triple = 0;
  for (const auto& e : d.edges()) {
    std::size_t n = 0;
    for (const auto& t : d.triangles())
      if (std::count(t.begin(), t.end(), e[0]) && std::count(t.begin(), t.end(), e[1])) ++n;
    CHECK(n >= 2);
    if (n == 3) ++triple;
  }
  CHECK(triple == 3);
  CHECK(connected_components(d) == 1);
}

TEST_CASE("greedy collapse") {
  const auto t = greedy_collapse(full_triangle());
  CHECK(t.collapsible);
  CHECK(t.witness.steps.size() == 3);
  CHECK_FALSE(check_collapse(full_triangle(), t.witness));
  CHECK_FALSE(greedy_collapse(tetrahedron_boundary()).collapsible);
  CHECK(greedy_collapse(Complex2::point("p")).witness.steps.empty());
  CHECK_THROWS_AS(greedy_collapse(Complex2()), InvalidArgument);
}

TEST_CASE("collapse witnesses are checked") {
  auto w = greedy_collapse(full_triangle()).witness;
  auto bad = w;
  std::swap(bad.steps[0], bad.steps[1]);
  bad.steps[0].coface = {"a", "b"};
  CHECK(check_collapse(full_triangle(), bad));
  auto partial = w;
  partial.steps.pop_back();
  CHECK(check_collapse(full_triangle(), partial, true));
}

TEST_CASE("greedy collapse agrees with exhaustive search and every first move") {
  for (const auto& k : complexes_up_to(5)) {
    const auto g = greedy_collapse(k);
    CHECK(g.collapsible == oracle::collapsible(k));
    if (!g.collapsible) CHECK(free_faces(g.witness.final_complex).empty());
    // Any first collapse leads to the same verdict.
    for (const auto& p : free_faces(k)) {
      detail::FaceSet faces(k);
      faces.erase(p.free_face);
      faces.erase(p.coface);
      CHECK(greedy_collapse(faces.complex()).collapsible == g.collapsible);
    }
  }
}

TEST_CASE("the P5 link in a subdivided triangle") {
  const auto sub = barycentric_subdivision_with_map(full_triangle());
  Complex2 s = sub.complex;
  const Label edge = sub.barycenter.at({"a", "b"});
  const Label face = sub.barycenter.at({"a", "b", "c"});
  CHECK(isomorphic(link(s, edge), path_graph(3)));
  s = delete_vertex(s, edge);
  CHECK(isomorphic(link(s, face), path_graph(5)));
}

TEST_CASE("subdivision reports") {
  const auto t = sd_equivalence_report(full_triangle());
  CHECK(t.collapsible);
  CHECK(t.sd_restricted == true);
  CHECK(t.sd_nonevasive == true);
  CHECK(t.sd_collapsible);
  for (const auto& k : {hollow_triangle(), tetrahedron_boundary(), dunce_hat()}) {
    const auto r = sd_equivalence_report(k);
    CHECK(r.all_equal());
    CHECK_FALSE(r.collapsible);
  }
  for (const auto& k : complexes_up_to(4)) CHECK(sd_equivalence_report(k).all_equal());
}

TEST_CASE("budget overruns are reported, not passed") {
  SearchOptions tiny;
  tiny.time_budget = std::chrono::milliseconds(0);
  const auto k = cx("a b c\nb c d\nc d e\nd e f\ne f g");
  const auto r = sd_equivalence_report(k, tiny);
  if (!r.decided()) CHECK_FALSE(r.all_equal());
}

TEST_CASE("collapses simulated in the subdivision") {
  const auto t = greedy_collapse(full_triangle());
  const auto w = simulate_collapse_in_sd(full_triangle(), t.witness);
  CHECK(w.steps.size() == 6);
  CHECK(w.final_complex.num_vertices() == 1);
  const auto sd = barycentric_subdivision(full_triangle());
  CHECK_FALSE(check_witness(sd, subdivision_family(), w));

  const auto e = greedy_collapse(cx("a b"));
  const auto we = simulate_collapse_in_sd(cx("a b"), e.witness);
  CHECK(we.steps.size() == 2);
  for (const auto& s : we.steps) CHECK(s.link.num_vertices() == 1);

  const auto p = simulate_collapse_in_sd(Complex2::point("v"), greedy_collapse(Complex2::point("v")).witness);
  CHECK(p.steps.empty());

  for (const auto& k : complexes_up_to(5)) {
    const auto c = greedy_collapse(k);
    if (!c.collapsible) continue;
    const auto ws = simulate_collapse_in_sd(k, c.witness);
    const auto s = barycentric_subdivision(k);
    CHECK_FALSE(check_witness(s, subdivision_family(), ws));
    CHECK_FALSE(check_witness(s, FamilySpec::all_trees(), ws));
  }
}
