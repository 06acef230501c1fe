#pragma once

// Face-list text format: one face per line, labels separated by whitespace,
// '#' starts a comment, blank lines are ignored. Output lists maximal faces
// only, labels sorted within a face and lines sorted.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "vdc/complex.hpp"

namespace vdc {

namespace detail {

inline std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  return line;
}

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace detail

/// Raw faces of a face-list document, validated token by token.
inline std::vector<std::vector<Label>> parse_faces(std::string_view text) {
  std::vector<std::vector<Label>> faces;
  std::size_t lineno = 0;
  for (auto line : detail::split_lines(text)) {
    ++lineno;
    auto tokens = detail::split_ws(detail::strip_comment(line));
    if (tokens.empty()) continue;
    for (const auto& t : tokens)
      if (!is_valid_label(t))
        throw ParseError("line " + std::to_string(lineno) + ": malformed token '" + t + "'");
    if (tokens.size() > 3)
      throw ParseError("line " + std::to_string(lineno) + ": face of size " + std::to_string(tokens.size()) +
                       " exceeds dimension 2");
    faces.push_back(std::move(tokens));
  }
  return faces;
}

inline Complex2 parse_complex(std::string_view text) { return Complex2::from_faces(parse_faces(text)); }

inline Graph parse_graph(std::string_view text) {
  const Complex2 k = parse_complex(text);
  if (k.num_triangles() != 0) throw ParseError("graph input contains a face of size 3");
  return k.one_skeleton();
}

inline std::string format_faces(const std::vector<std::vector<Label>>& faces) {
  std::string out;
  for (const auto& f : faces) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ' ';
      out += f[i];
    }
    out += '\n';
  }
  return out;
}

inline std::string format_complex(const Complex2& k) { return format_faces(k.maximal_faces()); }

inline std::string format_graph(const Graph& g) { return format_complex(Complex2::from_graph(g)); }

/// Maximal faces on a single line, faces separated by ", ".
inline std::string format_inline(const Complex2& k) {
  std::string out;
  for (const auto& f : k.maximal_faces()) {
    if (!out.empty()) out += ", ";
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ' ';
      out += f[i];
    }
  }
  return out;
}

inline std::string format_inline(const Graph& g) { return format_inline(Complex2::from_graph(g)); }

inline Complex2 parse_inline_complex(std::string_view text) {
  std::vector<std::vector<Label>> faces;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto tokens = detail::split_ws(text.substr(start, end - start));
    if (!tokens.empty()) {
      for (const auto& t : tokens)
        if (!is_valid_label(t)) throw ParseError("malformed token '" + t + "'");
      faces.push_back(std::move(tokens));
    }
    start = end + 1;
  }
  return Complex2::from_faces(faces);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace vdc
