#pragma once

// The `vdc` command line. Exit codes: 0 true / found, 1 false / not found,
// 2 usage or input error.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vdc/vdc.hpp"

namespace vdc::cli {

using json = nlohmann::ordered_json;

inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kError = 2;

namespace detail {

inline json faces_json(const Complex2& k) { return k.maximal_faces(); }
inline json graph_json(const Graph& g) { return Complex2::from_graph(g).maximal_faces(); }

inline json witness_json(const ReductionWitness& w) {
  json steps = json::array();
  for (const auto& s : w.steps) steps.push_back({{"vertex", s.vertex}, {"link", graph_json(s.link)}});
  return {{"steps", steps}, {"final", faces_json(w.final_complex)}};
}

inline std::string cover_text(const std::vector<std::size_t>& cover) {
  std::string s = "{";
  for (std::size_t i = 0; i < cover.size(); ++i) s += (i ? "," : "") + block_name(cover[i]);
  return s + "}";
}

inline json cover_json(const std::vector<std::size_t>& cover) {
  json a = json::array();
  for (auto i : cover) a.push_back(block_name(i));
  return a;
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string bool_text(const std::optional<bool>& b) { return b ? yes_no(*b) : "budget-exceeded"; }

inline json bool_json(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

struct Common {
  bool json_out = false;
  bool parallel = false;
  long budget_ms = 0;

  SearchOptions search() const {
    SearchOptions o;
    o.parallel = parallel;
    if (budget_ms > 0) o.time_budget = std::chrono::milliseconds(budget_ms);
    return o;
  }
};

inline Complex2 load_complex(const std::string& path) { return parse_complex(read_file(path)); }
inline Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Vertex decompositions of 2-complexes and graphs", "vdc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "vdc 1.0.0");
  Common common;
  app.add_flag("--json", common.json_out, "Print a JSON report instead of text");
  app.add_flag("--parallel", common.parallel, "Evaluate top-level search branches concurrently");
  app.add_option("--budget-ms", common.budget_ms, "Abort exact searches after this many milliseconds");

  std::function<int()> action;
  auto add = [&](const std::string& name, const std::string& desc) {
    auto* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  // reduce
  std::string family = "all-trees", file, first, target;
  bool greedy = false;
  auto* reduce = add("reduce", "Decide F-reducibility and print a witness");
  reduce->add_option("--family", family, "Family of links")->required();
  reduce->add_flag("--greedy", greedy, "Use the greedy algorithm");
  reduce->add_option("--first", first, "First vertex for the greedy algorithm");
  reduce->add_option("--target", target, "Vertex the reduction must end at");
  reduce->add_option("complex", file, "Face-list file")->required();
  reduce->callback([&] {
    action = [&] {
      const FamilySpec f = parse_family(family);
      const Complex2 k = load_complex(file);
      if (greedy) {
        if (!target.empty()) throw InvalidArgument("--target cannot be combined with --greedy");
        const auto g = greedy_reduce(k, f, first.empty() ? std::nullopt : std::optional<Label>(first));
        const bool ok = g.verdict == GreedyVerdict::Reduced;
        if (common.json_out) {
          out << json{{"verdict", ok ? "reduced" : "stuck"}, {"witness", witness_json(g.witness)}}.dump(2) << "\n";
        } else {
          out << format_witness(ok ? "reduced" : "stuck", g.witness);
        }
        return ok ? kTrue : kFalse;
      }
      if (!first.empty()) throw InvalidArgument("--first requires --greedy");
      const auto w = target.empty() ? decide_reducible(k, f, common.search())
                                    : reduce_to_target(k, f, target, common.search());
      if (common.json_out) {
        json j{{"verdict", w ? "reducible" : "not-reducible"}};
        if (w) j["witness"] = witness_json(*w);
        out << j.dump(2) << "\n";
      } else if (w) {
        out << format_witness("reducible", *w);
      } else {
        out << "verdict: not-reducible\n";
      }
      return w ? kTrue : kFalse;
    };
  });

  // initial
  auto* initial = add("initial", "List the initial vertices");
  initial->add_option("--family", family, "Family of links")->required();
  initial->add_option("complex", file, "Face-list file")->required();
  initial->callback([&] {
    action = [&] {
      const FamilySpec f = parse_family(family);
      const Complex2 k = load_complex(file);
      const auto v = initial_vertices(k, f);
      if (common.json_out) {
        json links = json::object();
        for (const auto& x : v) links[x] = graph_json(link(k, x));
        out << json{{"verdict", v.size()}, {"initial", v}, {"links", links}}.dump(2) << "\n";
      } else {
        out << "verdict: " << v.size() << "\n";
        for (const auto& x : v) out << x << " : " << format_inline(link(k, x)) << "\n";
      }
      return v.empty() ? kFalse : kTrue;
    };
  });

  // search-unique
  UniqueSearchOptions uopts;
  std::string shape;
  auto* search = add("search-unique", "Search for a reducible complex with one initial vertex");
  search->add_option("--family", family, "Family of links")->required();
  search->add_option("--budget", uopts.budget, "Number of growth trials");
  search->add_option("--seed", uopts.seed, "Random seed");
  search->add_option("--max-vertices", uopts.max_vertices, "Vertex limit per trial");
  search->add_option("--link", shape, "Required link of the initial vertex (point, edge, P<k>, star<k>)");
  search->callback([&] {
    action = [&] {
      const FamilySpec f = parse_family(family);
      if (!shape.empty()) uopts.unique_link = named_tree(shape);
      const auto r = search_unique_initial(f, uopts);
      if (common.json_out) {
        json j{{"verdict", r ? "found" : "not-found"}, {"seed", uopts.seed}};
        if (r) {
          j["trial"] = r->trial;
          j["complex"] = faces_json(r->complex);
          j["initial_link"] = graph_json(link(r->complex, "1"));
        }
        out << j.dump(2) << "\n";
      } else if (r) {
        out << "verdict: found\n# seed " << uopts.seed << ", trial " << r->trial << ", initial vertex 1 with link "
            << format_inline(link(r->complex, "1")) << "\n"
            << format_complex(r->complex);
      } else {
        out << "verdict: not-found\n";
      }
      return r ? kTrue : kFalse;
    };
  });

  // greedy-trap
  std::string base_file;
  UniqueSearchOptions topts;
  topts.unique_link = path_graph(3);
  auto* trap = add("greedy-trap", "Assemble a complex on which a greedy first choice gets stuck");
  trap->add_option("--base", base_file, "Base complex with a single initial vertex (otherwise searched)");
  trap->add_option("--seed", topts.seed, "Random seed for the base search");
  trap->add_option("--budget", topts.budget, "Growth trials for the base search");
  trap->callback([&] {
    action = [&] {
      const FamilySpec f = paths_to_p4();
      Complex2 found;
      if (!base_file.empty()) {
        found = load_complex(base_file);
      } else {
        auto r = search_unique_initial(f, topts);
        if (!r) {
          out << (common.json_out ? "{\"verdict\": \"no-base\"}\n" : "verdict: no-base\n");
          return kFalse;
        }
        found = r->complex;
      }
      const auto base = prepare_trap_base(found, f, common.search());
      if (!base) throw InvalidArgument("base complex does not reduce to a suitable neighbour of its initial vertex");
      const Complex2 k = greedy_trap(*base, f, common.search());
      const auto exact = decide_reducible(k, f, common.search());
      const auto g = greedy_reduce(k, f, Label("A"));
      const bool stuck = g.verdict == GreedyVerdict::Stuck;
      const auto left = initial_vertices(delete_vertex(k, "A"), f);
      const bool ok = exact && stuck && left.empty() && link(k, "A").num_vertices() == 4;
      if (common.json_out) {
        out << json{{"verdict", ok ? "trap" : "no-trap"},
                    {"base", faces_json(*base)},
                    {"complex", faces_json(k)},
                    {"reducible", exact.has_value()},
                    {"link_A", graph_json(link(k, "A"))},
                    {"greedy_from_A", stuck ? "stuck" : "reduced"},
                    {"initial_after_A", left}}
                   .dump(2)
            << "\n";
      } else {
        out << "verdict: " << (ok ? "trap" : "no-trap") << "\n"
            << "# reducible: " << yes_no(exact.has_value()) << "\n"
            << "# link of A: " << format_inline(link(k, "A")) << "\n"
            << "# greedy starting at A: " << (stuck ? "stuck" : "reduced") << " after "
            << g.witness.steps.size() << " removals\n"
            << "# initial vertices once A is removed: " << left.size() << "\n"
            << format_complex(k);
      }
      return ok ? kTrue : kFalse;
    };
  });

  // gadget / x3c-check
  auto* gadget = add("gadget", "Print the graph of an exact-cover instance");
  gadget->add_option("instance", file, "Instance file")->required();
  gadget->callback([&] {
    action = [&] {
      const Graph g = x3c_gadget(parse_x3c(read_file(file)));
      if (common.json_out) out << json{{"vertices", g.vertices()}, {"edges", graph_json(g)}}.dump(2) << "\n";
      else out << format_graph(g);
      return kTrue;
    };
  });

  auto* x3c = add("x3c-check", "Compare brute-force exact cover with reducibility of the gadget");
  x3c->add_option("instance", file, "Instance file")->required();
  x3c->callback([&] {
    action = [&] {
      const X3CInstance inst = parse_x3c(read_file(file));
      const Graph g = x3c_gadget(inst);
      const DegreeSet a{0, inst.block_size() == 0 ? 3 : inst.block_size()};
      const auto brute = x3c_brute_force(inst);
      const auto w = g.empty() ? std::optional<GraphReductionWitness>() : a_reducible(g, a, common.search());
      std::optional<std::vector<std::size_t>> extracted;
      if (w) extracted = cover_from_witness(inst, *w);
      const bool agree = brute.has_value() == w.has_value();
      const char* verdict = !agree ? "mismatch" : brute ? "cover" : "no-cover";
      if (common.json_out) {
        json j{{"verdict", verdict},
               {"gadget", {{"vertices", g.num_vertices()}, {"edges", g.num_edges()}}},
               {"degrees", a.to_string()},
               {"reducible", w.has_value()},
               {"brute_force", brute ? cover_json(*brute) : json(nullptr)},
               {"cover_from_witness", extracted ? cover_json(*extracted) : json(nullptr)}};
        out << j.dump(2) << "\n";
      } else {
        out << "verdict: " << verdict << "\n"
            << "gadget: " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n"
            << a.to_string() << "-reducible: " << yes_no(w.has_value()) << "\n"
            << "brute force: " << (brute ? cover_text(*brute) : "none") << "\n"
            << "cover from witness: " << (extracted ? cover_text(*extracted) : "none") << "\n";
      }
      return agree && brute ? kTrue : kFalse;
    };
  });

  // cone-equiv
  std::string degrees;
  auto* cone_cmd = add("cone-equiv", "Evaluate the three cone conditions for a graph");
  cone_cmd->add_option("--degrees", degrees, "Degree set, e.g. {0,2} or 0..3")->required();
  cone_cmd->add_option("graph", file, "Face-list file of a graph")->required();
  cone_cmd->callback([&] {
    action = [&] {
      const auto r = cone_equivalence_check(load_graph(file), DegreeSet::parse(degrees), common.search());
      if (common.json_out) {
        out << json{{"verdict", r.all_equal() ? "equal" : "differ"},
                    {"double_cone", r.double_cone_reducible},
                    {"cone_to_apex", r.cone_reducible_to_apex},
                    {"graph", r.graph_reducible}}
                   .dump(2)
            << "\n";
      } else {
        out << "verdict: " << (r.all_equal() ? "equal" : "differ") << "\n"
            << "double cone reducible: " << yes_no(r.double_cone_reducible) << "\n"
            << "cone reducible to apex: " << yes_no(r.cone_reducible_to_apex) << "\n"
            << "graph reducible: " << yes_no(r.graph_reducible) << "\n";
      }
      return r.all_equal() ? kTrue : kFalse;
    };
  });

  // two-tree / blocks
  auto* two = add("two-tree", "Recognise 2-trees");
  two->add_option("complex", file, "Face-list file")->required();
  two->callback([&] {
    action = [&] {
      const auto r = is_2tree(load_complex(file));
      if (common.json_out) {
        out << json{{"verdict", r.is_2tree ? "2-tree" : "not-2-tree"},
                    {"connected", r.connected},
                    {"a12_is_tree", r.a12_is_tree},
                    {"a12_nodes", r.a12.num_vertices()},
                    {"a12_edges", r.a12.num_edges()}}
                   .dump(2)
            << "\n";
      } else {
        out << "verdict: " << (r.is_2tree ? "2-tree" : "not-2-tree") << "\n"
            << "connected: " << yes_no(r.connected) << "\n"
            << "edge-triangle graph: " << r.a12.num_vertices() << " nodes, " << r.a12.num_edges() << " edges, "
            << (r.a12_is_tree ? "a tree" : "not a tree") << "\n";
      }
      return r.is_2tree ? kTrue : kFalse;
    };
  });

  auto* blocks = add("blocks", "Split a complex into maximal 2-trees");
  blocks->add_option("complex", file, "Face-list file")->required();
  blocks->callback([&] {
    action = [&] {
      const Complex2 k = load_complex(file);
      const auto r = block_decomposition(k);
      if (common.json_out) {
        json bs = json::array();
        for (const auto& b : r.blocks) bs.push_back({{"faces", faces_json(b.complex)}, {"is_2tree", b.is_2tree}});
        json mg = json::array();
        for (const auto& e : r.block_multigraph) mg.push_back({e[0], e[1], k.label(static_cast<VertexId>(e[2]))});
        out << json{{"verdict", r.reducible ? "reducible" : "not-reducible"}, {"blocks", bs}, {"multigraph", mg},
                    {"block_structure_is_tree", r.block_structure_is_tree}}
                   .dump(2)
            << "\n";
      } else {
        out << "verdict: " << (r.reducible ? "reducible" : "not-reducible") << "\n";
        for (std::size_t i = 0; i < r.blocks.size(); ++i)
          out << "block " << i << (r.blocks[i].is_2tree ? "" : " (not a 2-tree)") << ": "
              << format_inline(r.blocks[i].complex) << "\n";
        for (const auto& e : r.block_multigraph)
          out << "meet " << e[0] << " " << e[1] << " at " << k.label(static_cast<VertexId>(e[2])) << "\n";
        out << "block structure: " << (r.block_structure_is_tree ? "tree" : "not a tree") << "\n";
      }
      return r.reducible ? kTrue : kFalse;
    };
  });

  // sd / sd-report / collapse
  auto* sd = add("sd", "Print the barycentric subdivision");
  sd->add_option("complex", file, "Face-list file")->required();
  sd->callback([&] {
    action = [&] {
      const Complex2 s = barycentric_subdivision(load_complex(file));
      if (common.json_out) out << json{{"complex", faces_json(s)}}.dump(2) << "\n";
      else out << format_complex(s);
      return kTrue;
    };
  });

  auto* sdr = add("sd-report", "Compare collapsibility with reductions of the subdivision");
  sdr->add_option("complex", file, "Face-list file")->required();
  sdr->callback([&] {
    action = [&] {
      const auto r = sd_equivalence_report(load_complex(file), common.search());
      const char* verdict = !r.decided() ? "undecided" : r.all_equal() ? "equal" : "differ";
      if (common.json_out) {
        out << json{{"verdict", verdict},
                    {"collapsible", r.collapsible},
                    {"sd_point_p3_p5_reducible", bool_json(r.sd_restricted)},
                    {"sd_nonevasive", bool_json(r.sd_nonevasive)},
                    {"sd_collapsible", r.sd_collapsible}}
                   .dump(2)
            << "\n";
      } else {
        out << "verdict: " << verdict << "\n"
            << "collapsible: " << yes_no(r.collapsible) << "\n"
            << "sd {point,P3,P5}-reducible: " << bool_text(r.sd_restricted) << "\n"
            << "sd nonevasive: " << bool_text(r.sd_nonevasive) << "\n"
            << "sd collapsible: " << yes_no(r.sd_collapsible) << "\n";
      }
      return r.all_equal() ? kTrue : kFalse;
    };
  });

  auto* col = add("collapse", "Collapse greedily");
  col->add_option("complex", file, "Face-list file")->required();
  col->callback([&] {
    action = [&] {
      const auto r = greedy_collapse(load_complex(file));
      auto face = [](const Face& f) {
        std::string s;
        for (const auto& l : f) s += (s.empty() ? "" : " ") + l;
        return s;
      };
      if (common.json_out) {
        json steps = json::array();
        for (const auto& s : r.witness.steps) steps.push_back({s.free_face, s.coface});
        out << json{{"verdict", r.collapsible ? "collapsible" : "stuck"},
                    {"steps", steps},
                    {"final", faces_json(r.witness.final_complex)}}
                   .dump(2)
            << "\n";
      } else {
        out << "verdict: " << (r.collapsible ? "collapsible" : "stuck") << "\n";
        for (const auto& s : r.witness.steps) out << face(s.free_face) << " -> " << face(s.coface) << "\n";
        out << "final: " << format_inline(r.witness.final_complex) << "\n";
      }
      return r.collapsible ? kTrue : kFalse;
    };
  });

  // degeneracy / orient
  auto* dg = add("degeneracy", "Degeneracy of a graph");
  dg->add_option("graph", file, "Face-list file of a graph")->required();
  dg->callback([&] {
    action = [&] {
      const auto d = degeneracy(load_graph(file));
      if (common.json_out) out << json{{"verdict", d}}.dump(2) << "\n";
      else out << "verdict: " << d << "\n";
      return kTrue;
    };
  });

  std::string orientation_file;
  auto* orient = add("orient", "A-reducibility through acyclic orientations");
  orient->add_option("--degrees", degrees, "Degree set, e.g. {0,3}")->required();
  orient->add_option("--orientation", orientation_file, "Check this orientation instead of searching");
  orient->add_option("graph", file, "Face-list file of a graph")->required();
  orient->callback([&] {
    action = [&] {
      const Graph g = load_graph(file);
      const DegreeSet a = DegreeSet::parse(degrees);
      std::optional<GraphReductionWitness> w;
      Orientation o;
      if (!orientation_file.empty()) {
        o = parse_orientation(read_file(orientation_file));
        w = witness_from_orientation(g, o, a);
      } else {
        w = a_reducible(g, a, common.search());
        if (w) o = orientation_from_witness(g, *w);
      }
      if (common.json_out) {
        json j{{"verdict", w ? "reducible" : "not-reducible"}};
        if (w) {
          json arcs = json::array();
          for (const auto& arc : o) arcs.push_back({arc.tail, arc.head});
          json rem = json::array();
          for (const auto& r : w->removals) rem.push_back({r.vertex, r.degree});
          j["orientation"] = arcs;
          j["removals"] = rem;
          j["final_removed"] = w->final_removed;
        }
        out << j.dump(2) << "\n";
      } else {
        out << "verdict: " << (w ? "reducible" : "not-reducible") << "\n";
        if (w) out << format_orientation(o) << "# removals\n" << format_graph_witness(*w);
      }
      return w ? kTrue : kFalse;
    };
  });

  // verify
  std::string witness_file;
  auto* verify = add("verify", "Re-validate a printed reduction witness");
  verify->add_option("--family", family, "Family of links")->required();
  verify->add_option("complex", file, "Face-list file")->required();
  verify->add_option("witness", witness_file, "Witness printed by 'vdc reduce'")->required();
  verify->callback([&] {
    action = [&] {
      const FamilySpec f = parse_family(family);
      const Complex2 k = load_complex(file);
      auto parsed = parse_witness(read_file(witness_file));
      if (!parsed.has_final) {
        Complex2 cur = k;
        for (const auto& s : parsed.witness.steps)
          if (cur.contains(s.vertex)) cur = delete_vertex(cur, s.vertex);
        parsed.witness.final_complex = cur;
      }
      const bool complete = parsed.verdict != "stuck";
      const auto problem = check_witness(k, f, parsed.witness, complete);
      if (common.json_out) {
        out << json{{"verdict", problem ? "invalid" : "valid"}, {"problem", problem ? json(*problem) : json(nullptr)}}
                   .dump(2)
            << "\n";
      } else {
        out << "verdict: " << (problem ? "invalid" : "valid") << "\n";
        if (problem) out << *problem << "\n";
      }
      return problem ? kFalse : kTrue;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kTrue : kError;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kTrue : kError;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kTrue;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kError;
  }
  if (!action) return kError;
  try {
    return action();
  } catch (const BudgetExceeded& e) {
    err << "vdc: " << e.what() << "\n";
    return kError;
  } catch (const Error& e) {
    err << "vdc: " << e.what() << "\n";
    return kError;
  }
}

inline int main(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args, out, err);
}

}  // namespace vdc::cli
