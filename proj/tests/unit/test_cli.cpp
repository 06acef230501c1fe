#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "vdc/cli.hpp"

using namespace vdc;

namespace {

const std::string kFixtures = VDC_FIXTURES;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("vdc_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("cli: reduce") {
  const auto r = run({"reduce", "--family", "all-trees", fixture("triangle.cx")});
  CHECK(r.code == 0);
  CHECK(r.out == "verdict: reducible\n1 : 2 3\n2 : 3\nfinal: 3\n");
  const auto no = run({"reduce", "--family", "all-trees", fixture("hollow_triangle.cx")});
  CHECK(no.code == 1);
  CHECK(first_line(no.out) == "verdict: not-reducible");
  const auto missing = run({"reduce", "--family", "stars-in:{0,3}", "missing.cx"});
  CHECK(missing.code == 2);
  CHECK(run({"reduce", "--family", "nonsense", fixture("triangle.cx")}).code == 2);
  CHECK(run({"reduce", fixture("triangle.cx")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli: greedy and target options") {
  const auto g = run({"reduce", "--family", "stars:inf", "--greedy", "--first", "2", fixture("triangle.cx")});
  CHECK(g.code == 0);
  CHECK(g.out == "verdict: reduced\n2 : 1 3\n1 : 3\nfinal: 3\n");
  const auto t = run({"reduce", "--family", "stars:inf", "--target", "1", fixture("triangle.cx")});
  CHECK(t.code == 0);
  CHECK(t.out.find("final: 1\n") != std::string::npos);
  CHECK(run({"reduce", "--family", "all-trees", "--greedy", "--first", "1", fixture("hollow_triangle.cx")}).code == 2);
  CHECK(run({"reduce", "--family", "all-trees", "--first", "1", fixture("triangle.cx")}).code == 2);
}

TEST_CASE("cli: x3c") {
  const auto r = run({"x3c-check", fixture("small_cover.x3c")});
  CHECK(r.code == 0);
  CHECK(r.out.find("brute force: {B1,B3}") != std::string::npos);
  CHECK(r.out.find("cover from witness: {B1,B3}") != std::string::npos);
  const auto g = run({"gadget", fixture("small_cover.x3c")});
  CHECK(g.code == 0);
  const auto graph = parse_graph(g.out);
  CHECK(graph.num_vertices() == 21);
  CHECK(graph.num_edges() == 21);
  const auto none = temp_file("none.x3c", "elements: a b c d e f\nblock: a b c\nblock: c d e\n");
  const auto n = run({"x3c-check", none});
  CHECK(n.code == 1);
  CHECK(first_line(n.out) == "verdict: no-cover");
}

TEST_CASE("cli: json output") {
  const auto r = run({"--json", "x3c-check", fixture("small_cover.x3c")});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "cover");
  CHECK(j["brute_force"] == nlohmann::json({"B1", "B3"}));
  CHECK(j["gadget"]["vertices"] == 21);
  const auto s = nlohmann::json::parse(run({"--json", "sd-report", fixture("triangle.cx")}).out);
  CHECK(s["collapsible"] == true);
  CHECK(s["sd_nonevasive"] == true);
}

TEST_CASE("cli: collapse and subdivision") {
  const auto c = run({"collapse", fixture("dunce_hat.cx")});
  CHECK(c.code == 1);
  CHECK(first_line(c.out) == "verdict: stuck");
  const auto s = run({"sd", fixture("triangle.cx")});
  CHECK(s.code == 0);
  CHECK(parse_complex(s.out).num_vertices() == 7);
  const auto r = run({"sd-report", fixture("tetrahedron_boundary.cx")});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "verdict: equal");
  CHECK(r.out.find("collapsible: no") != std::string::npos);
}

TEST_CASE("cli: graphs") {
  const auto k4 = temp_file("k4.cx", "a b\na c\na d\nb c\nb d\nc d\n");
  const auto d = run({"degeneracy", k4});
  CHECK(d.code == 0);
  CHECK(d.out == "verdict: 3\n");
  const auto o = run({"orient", "--degrees", "0..3", k4});
  CHECK(o.code == 0);
  const auto body = o.out.substr(o.out.find('\n') + 1);
  const auto orientation = parse_orientation(body.substr(0, body.find("# removals")));
  CHECK(check_acyclic(parse_graph(read_file(k4)), orientation).acyclic);
  const auto file = temp_file("k4.orient", body.substr(0, body.find("# removals")));
  CHECK(run({"orient", "--degrees", "0..3", "--orientation", file, k4}).code == 0);
  CHECK(run({"orient", "--degrees", "{0,3}", k4}).code == 1);
  const auto c4 = temp_file("c4.cx", "a b\nb c\nc d\na d\n");
  const auto ce = run({"cone-equiv", "--degrees", "{0,2}", c4});
  CHECK(ce.code == 0);
  CHECK(ce.out == "verdict: equal\ndouble cone reducible: yes\ncone reducible to apex: yes\ngraph reducible: yes\n");
}

TEST_CASE("cli: 2-trees and blocks") {
  CHECK(run({"two-tree", fixture("triangle.cx")}).code == 0);
  const auto bow = temp_file("bow.cx", "a b c\na d e\n");
  CHECK(run({"two-tree", bow}).code == 1);
  const auto b = run({"blocks", bow});
  CHECK(b.code == 0);
  CHECK(b.out.find("meet 0 1 at a") != std::string::npos);
}

TEST_CASE("cli: initial vertices and searches") {
  const auto i = run({"initial", "--family", "all-trees", fixture("triangle.cx")});
  CHECK(i.code == 0);
  CHECK(first_line(i.out) == "verdict: 3");
  const std::vector<std::string> args{"search-unique", "--family", "trees:{point,edge,P3}", "--seed", "3",
                                      "--budget", "200"};
  const auto s = run(args);
  CHECK(s.code == 0);
  CHECK(run(args).out == s.out);
  const auto k = parse_complex(s.out.substr(s.out.find('\n') + 1));
  CHECK(initial_vertices(k, parse_family("trees:{point,edge,P3}")) == std::vector<Label>{"1"});
  CHECK(run({"search-unique", "--family", "stars:1"}).code == 2);

  const auto t = run({"greedy-trap", "--base", fixture("trap_base.cx")});
  CHECK(t.code == 0);
  CHECK(first_line(t.out) == "verdict: trap");
}

TEST_CASE("cli: printed witnesses verify") {
  const auto k = temp_file("strip.cx", "a b c\nb c d\nc d e\nd e f\n");
  for (const auto& family : {"all-trees", "stars:inf", "trees:{point,edge}"}) {
    const auto r = run({"reduce", "--family", family, k});
    REQUIRE(r.code == 0);
    const auto w = temp_file("strip.witness", r.out);
    const auto v = run({"verify", "--family", family, k, w});
    CHECK(v.code == 0);
    CHECK(v.out == "verdict: valid\n");
  }
  const auto stuck = run({"reduce", "--family", "all-trees", "--greedy", fixture("dunce_hat.cx")});
  CHECK(stuck.code == 1);
  CHECK(run({"verify", "--family", "all-trees", fixture("dunce_hat.cx"), temp_file("dh.witness", stuck.out)}).code ==
        0);
  const auto forged = temp_file("forged.witness", "verdict: reducible\na : b\nfinal: b c d, c d e, d e f\n");
  const auto f = run({"verify", "--family", "all-trees", k, forged});
  CHECK(f.code == 1);
  CHECK(first_line(f.out) == "verdict: invalid");
}

TEST_CASE("cli: output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"reduce", "--family", "all-trees", fixture("dunce_hat.cx")},
        std::vector<std::string>{"--json", "blocks", fixture("triangle.cx")},
        std::vector<std::string>{"greedy-trap", "--seed", "2"}})
    CHECK(run(args).out == run(args).out);
}
