#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "vdc/error.hpp"

namespace vdc {

/// A nonempty set of natural numbers: finitely many values, optionally
/// together with every number from some bound upwards.
class DegreeSet {
 public:
  DegreeSet(std::initializer_list<std::size_t> values) : values_(values) { check(); }
  explicit DegreeSet(std::set<std::size_t> values, std::optional<std::size_t> unbounded_from = std::nullopt)
      : values_(std::move(values)), unbounded_from_(unbounded_from) {
    if (unbounded_from_) values_.erase(values_.lower_bound(*unbounded_from_), values_.end());
    check();
  }

  /// {lo, lo+1, ..., hi}
  static DegreeSet range(std::size_t lo, std::size_t hi) {
    std::set<std::size_t> v;
    for (std::size_t i = lo; i <= hi; ++i) v.insert(i);
    return DegreeSet(std::move(v));
  }
  static DegreeSet at_least(std::size_t lo) { return DegreeSet({}, lo); }

  /// Accepts `{a,b,...}`, `lo..hi` and `lo..`.
  static DegreeSet parse(std::string_view s) {
    auto number = [&](std::string_view t) -> std::size_t {
      if (t.empty()) throw ParseError("empty number in degree set '" + std::string(s) + "'");
      std::size_t v = 0;
      for (char c : t) {
        if (c < '0' || c > '9') throw ParseError("malformed degree set '" + std::string(s) + "'");
        v = v * 10 + static_cast<std::size_t>(c - '0');
      }
      return v;
    };
    auto trim = [](std::string_view t) {
      while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
      while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
      return t;
    };
    std::string_view t = trim(s);
    if (auto dots = t.find(".."); dots != std::string_view::npos) {
      const std::size_t lo = number(trim(t.substr(0, dots)));
      auto rest = trim(t.substr(dots + 2));
      if (rest.empty()) return at_least(lo);
      const std::size_t hi = number(rest);
      if (hi < lo) throw ParseError("empty range '" + std::string(s) + "'");
      return range(lo, hi);
    }
    if (t.size() < 2 || t.front() != '{' || t.back() != '}')
      throw ParseError("degree set must look like {0,3} or 0..n, got '" + std::string(s) + "'");
    t = t.substr(1, t.size() - 2);
    std::set<std::size_t> vals;
    std::size_t start = 0;
    while (start <= t.size()) {
      auto end = t.find(',', start);
      if (end == std::string_view::npos) end = t.size();
      vals.insert(number(trim(t.substr(start, end - start))));
      start = end + 1;
    }
    return DegreeSet(std::move(vals));
  }

  bool contains(std::size_t d) const { return values_.count(d) != 0 || (unbounded_from_ && d >= *unbounded_from_); }

  /// Whether every member of *this is a member of `o`.
  bool subset_of(const DegreeSet& o) const {
    for (auto v : values_)
      if (!o.contains(v)) return false;
    if (unbounded_from_) {
      if (!o.unbounded_from_) return false;
      for (std::size_t d = *unbounded_from_; d < *o.unbounded_from_; ++d)
        if (!o.contains(d)) return false;
    }
    return true;
  }

  /// Whether the set is {0,...,n} or all of N.
  bool is_initial_segment() const {
    std::size_t expect = 0;
    for (auto v : values_) {
      if (v != expect) return false;
      ++expect;
    }
    return !unbounded_from_ || *unbounded_from_ == expect;
  }

  const std::set<std::size_t>& finite_values() const { return values_; }
  std::optional<std::size_t> unbounded_from() const { return unbounded_from_; }

  /// Largest member, or nullopt when the set is unbounded.
  std::optional<std::size_t> max() const {
    if (unbounded_from_) return std::nullopt;
    return *values_.rbegin();
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto v : values_) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    if (unbounded_from_) s += std::string(first ? "" : ",") + std::to_string(*unbounded_from_) + "..";
    return s + "}";
  }

  bool operator==(const DegreeSet&) const = default;

 private:
  void check() const {
    if (values_.empty() && !unbounded_from_) throw InvalidArgument("degree set must be nonempty");
  }

  std::set<std::size_t> values_;
  std::optional<std::size_t> unbounded_from_;
};

}  // namespace vdc
