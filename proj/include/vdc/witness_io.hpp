#pragma once

// Text form of reduction witnesses:
//
//   verdict: reducible
//   a : b c
//   b : c
//   final: c
//
// One removal per line as `<vertex> : <link as maximal faces, comma separated>`.

#include <optional>
#include <string>
#include <string_view>

#include "vdc/complex.hpp"
#include "vdc/face_list.hpp"
#include "vdc/graph_core.hpp"
#include "vdc/reduction.hpp"

namespace vdc {

inline std::string format_witness_lines(const ReductionWitness& w) {
  std::string out;
  for (const auto& s : w.steps) out += s.vertex + " : " + format_inline(s.link) + "\n";
  out += "final: " + format_inline(w.final_complex) + "\n";
  return out;
}

inline std::string format_witness(const std::string& verdict, const ReductionWitness& w) {
  return "verdict: " + verdict + "\n" + format_witness_lines(w);
}

struct ParsedWitness {
  std::optional<std::string> verdict;
  ReductionWitness witness;
  bool has_final = false;
};

inline ParsedWitness parse_witness(std::string_view text) {
  ParsedWitness p;
  std::size_t lineno = 0;
  for (auto raw : detail::split_lines(text)) {
    ++lineno;
    std::string_view line = detail::strip_comment(raw);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (line.rfind("verdict:", 0) == 0) {
      auto v = detail::split_ws(line.substr(8));
      if (v.size() != 1) throw ParseError(where + "malformed verdict");
      p.verdict = v.front();
      continue;
    }
    if (line.rfind("final:", 0) == 0) {
      p.witness.final_complex = parse_inline_complex(line.substr(6));
      p.has_final = true;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(where + "expected '<vertex> : <link>'");
    auto head = detail::split_ws(line.substr(0, colon));
    if (head.size() != 1 || !is_valid_label(head.front())) throw ParseError(where + "malformed vertex");
    const Complex2 lk = parse_inline_complex(line.substr(colon + 1));
    if (lk.num_triangles() != 0) throw ParseError(where + "a link is a graph");
    p.witness.steps.push_back({head.front(), lk.one_skeleton()});
  }
  return p;
}

inline std::string format_graph_witness(const GraphReductionWitness& w) {
  std::string out;
  for (const auto& r : w.removals) out += r.vertex + " : " + std::to_string(r.degree) + "\n";
  if (w.final_removed) out += "final: removed\n";
  return out;
}

}  // namespace vdc
