#pragma once

// Exhaustive vertex-removal search shared by complex F-reducibility and graph
// A-reducibility. States are sets of surviving vertices; failed states are
// memoised both by identity and, when small enough, by canonical key so that
// isomorphic dead ends are pruned once.

#include <atomic>
#include <chrono>
#include <future>
#include <mutex>
#include <optional>
#include <unordered_set>
#include <vector>

#include "vdc/canonical.hpp"
#include "vdc/error.hpp"
#include "vdc/vertex_set.hpp"

namespace vdc {

struct SearchStats {
  std::size_t states = 0;         // states expanded
  std::size_t memo_hits = 0;      // states pruned by the dead-state memo
  std::size_t degraded_keys = 0;  // states too large for an exact canonical key
};

struct SearchOptions {
  /// Evaluate the root's branches concurrently (shared memo).
  bool parallel = false;
  /// Abort with BudgetExceeded once exceeded.
  std::optional<std::chrono::milliseconds> time_budget;
  /// Canonical-key memo on states up to this many vertices.
  std::size_t canonical_bound = kCanonicalExactBound;
  SearchStats* stats = nullptr;
};

namespace detail {

/// Policy interface:
///   std::size_t size() const;
///   bool removable(const VertexSet& alive, VertexId v) const;
///   bool terminal(const VertexSet& alive, std::size_t count) const;
///   CompactComplex state(const VertexSet& alive) const;
/// and optionally
///   std::optional<VertexId> forced(const VertexSet& alive, std::size_t count) const;
/// naming a removal that never turns a solvable state into an unsolvable one.
template <class Policy>
class ExactSearch {
 public:
  ExactSearch(const Policy& policy, const SearchOptions& opts)
      : policy_(policy), opts_(opts), start_(std::chrono::steady_clock::now()) {}

  /// Removal order reaching a terminal state, if one exists.
  std::optional<std::vector<VertexId>> run(VertexSet alive) {
    const std::size_t count = alive.count();
    std::vector<VertexId> order;
    std::optional<std::vector<VertexId>> result;
    if (!opts_.parallel) {
      if (dfs(alive, count, order)) result = order;
    } else {
      result = run_parallel(alive, count);
    }
    if (opts_.stats) {
      opts_.stats->states += states_;
      opts_.stats->memo_hits += hits_;
      opts_.stats->degraded_keys += degraded_;
    }
    return result;
  }

 private:
  std::optional<std::vector<VertexId>> run_parallel(VertexSet alive, std::size_t count) {
    concurrent_ = true;
    if (policy_.terminal(alive, count)) return std::vector<VertexId>{};
    std::vector<VertexId> branches;
    alive.for_each([&](std::size_t v) {
      if (policy_.removable(alive, static_cast<VertexId>(v))) branches.push_back(static_cast<VertexId>(v));
    });
    std::vector<std::future<std::optional<std::vector<VertexId>>>> futures;
    for (VertexId v : branches) {
      futures.push_back(std::async(std::launch::async, [this, alive, count, v]() mutable {
        alive.reset(v);
        std::vector<VertexId> order{v};
        if (dfs(alive, count - 1, order)) return std::optional<std::vector<VertexId>>(order);
        return std::optional<std::vector<VertexId>>();
      }));
    }
    std::optional<std::vector<VertexId>> first;
    for (auto& f : futures) {
      auto r = f.get();
      if (r && !first) first = std::move(r);
    }
    return first;
  }

  bool dfs(VertexSet& alive, std::size_t count, std::vector<VertexId>& order) {
    if (policy_.terminal(alive, count)) return true;
    if (count <= 1) return false;
    if constexpr (requires { policy_.forced(alive, count); }) {
      if (const auto f = policy_.forced(alive, count)) {
        alive.reset(*f);
        order.push_back(*f);
        if (dfs(alive, count - 1, order)) return true;
        alive.set(*f);
        order.pop_back();
        return false;
      }
    }
    if (is_dead_mask(alive)) return false;
    std::optional<CanonicalKey> key;
    if (count <= opts_.canonical_bound) {
      key = canonical_key(policy_.state(alive));
      if (is_dead_key(*key)) {
        mark_dead(alive, std::nullopt);
        return false;
      }
    } else {
      bump(degraded_);
    }
    const std::size_t expanded = states_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (opts_.time_budget && (expanded & 255) == 1 &&
        std::chrono::steady_clock::now() - start_ >= *opts_.time_budget)
      throw BudgetExceeded("exact search exceeded its time budget");
    for (std::size_t v = 0; v < policy_.size(); ++v) {
      if (!alive.test(v) || !policy_.removable(alive, static_cast<VertexId>(v))) continue;
      alive.reset(v);
      order.push_back(static_cast<VertexId>(v));
      const bool ok = dfs(alive, count - 1, order);
      alive.set(v);
      if (ok) return true;
      order.pop_back();
    }
    mark_dead(alive, key);
    return false;
  }

  bool is_dead_mask(const VertexSet& s) {
    std::unique_lock lock(mutex_, std::defer_lock);
    if (concurrent_) lock.lock();
    if (dead_masks_.count(s)) {
      bump(hits_);
      return true;
    }
    return false;
  }

  bool is_dead_key(const CanonicalKey& k) {
    std::unique_lock lock(mutex_, std::defer_lock);
    if (concurrent_) lock.lock();
    if (dead_keys_.count(k)) {
      bump(hits_);
      return true;
    }
    return false;
  }

  void mark_dead(const VertexSet& s, const std::optional<CanonicalKey>& k) {
    std::unique_lock lock(mutex_, std::defer_lock);
    if (concurrent_) lock.lock();
    dead_masks_.insert(s);
    if (k) dead_keys_.insert(*k);
  }

  static void bump(std::atomic<std::size_t>& counter) { counter.fetch_add(1, std::memory_order_relaxed); }

  const Policy& policy_;
  SearchOptions opts_;
  std::chrono::steady_clock::time_point start_;
  bool concurrent_ = false;
  std::mutex mutex_;
  std::unordered_set<VertexSet, VertexSetHash> dead_masks_;
  std::unordered_set<CanonicalKey, CanonicalKeyHash> dead_keys_;
  std::atomic<std::size_t> states_{0};
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> degraded_{0};
};

}  // namespace detail
}  // namespace vdc
