#pragma once

// Exact DFS search for paths and cycles of a prescribed ORDER (vertex count).
// A path of order k has k vertices and k-1 edges; a cycle of length l has l
// vertices. Absence results are exact; exceeding the node budget throws.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qext/graph.hpp"

namespace qext {

struct PathWitness {
  std::vector<Vertex> vertices;
  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

struct CycleWitness {
  std::vector<Vertex> vertices;
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

struct EndpointConstraint {
  enum class Mode { none, ends_in, ends_avoid };
  Mode mode = Mode::none;
  VertexSet ends;    // ends_in
  Vertex avoid = 0;  // ends_avoid

  static EndpointConstraint none() { return {}; }
  static EndpointConstraint ends_in(VertexSet a) {
    if (a.empty()) throw std::invalid_argument("ends_in requires a nonempty vertex set");
    return {Mode::ends_in, std::move(a), 0};
  }
  static EndpointConstraint ends_avoid(Vertex v) { return {Mode::ends_avoid, {}, v}; }

  /// Vertices allowed as either endpoint.
  Bitset endpoint_mask(std::size_t n) const {
    Bitset m(n);
    switch (mode) {
      case Mode::none: m.set_all(); break;
      case Mode::ends_in:
        for (auto v : ends.members)
          if (v < n) m.set(v);
        break;
      case Mode::ends_avoid:
        m.set_all();
        if (avoid < n) m.reset(avoid);
        break;
    }
    return m;
  }
  bool admits(Vertex v) const {
    switch (mode) {
      case Mode::ends_in: return ends.contains(v);
      case Mode::ends_avoid: return v != avoid;
      default: return true;
    }
  }
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("subgraph search exceeded its budget of " + std::to_string(budget) +
                           " expansions") {}
};

namespace detail {

class PathSearch {
 public:
  PathSearch(const Graph& g, std::size_t order, Bitset inner, Bitset ends, std::uint64_t budget,
             std::uint64_t& expansions)
      : g_(g), order_(order), inner_(std::move(inner)), ends_(std::move(ends)), budget_(budget),
        expansions_(expansions), visited_(g.order()) {}

  /// Search paths starting at `start`; path_ holds the witness on success.
  bool from(Vertex start) {
    path_.assign(1, start);
    visited_.clear();
    visited_.set(start);
    if (order_ == 1) return ends_.test(start);
    return extend();
  }

  const std::vector<Vertex>& path() const { return path_; }

 private:
  bool extend() {
    const Vertex last = path_.back();
    const std::size_t remaining = order_ - path_.size();
    if (remaining == 1) {
      Bitset cand = g_.neighbors(last) & ends_;
      cand.subtract(visited_);
      if (cand.none()) return false;
      charge();
      path_.push_back(cand.first());
      return true;
    }
    Bitset free = inner_;
    free.subtract(visited_);
    Bitset cand = g_.neighbors(last) & free;
    if (cand.none()) return false;
    if (remaining >= 3) {
      // The rest of the path lives in the component of `last` within the
      // free interior vertices, plus one endpoint adjacent to it.
      Bitset allowed = free;
      allowed.set(last);
      Bitset reach = reachable_within(g_, last, allowed);
      if (reach.count() < remaining) return false;
      Bitset end_free = ends_;
      end_free.subtract(visited_);
      bool end_ok = false;
      reach.for_each([&](std::size_t u) {
        if (!end_ok && u != last && (g_.neighbors(u) & end_free).any()) end_ok = true;
      });
      if (!end_ok) return false;
    }
    for (auto v = cand.first(); v < g_.order(); v = cand.next(v + 1)) {
      charge();
      path_.push_back(v);
      visited_.set(v);
      if (extend()) return true;
      visited_.reset(v);
      path_.pop_back();
    }
    return false;
  }

  void charge() {
    if (++expansions_ > budget_) throw BudgetExceeded(budget_);
  }

  const Graph& g_;
  std::size_t order_;
  Bitset inner_;
  Bitset ends_;
  std::uint64_t budget_;
  std::uint64_t& expansions_;
  Bitset visited_;
  std::vector<Vertex> path_;
};

}  // namespace detail

/// A path on `order` vertices whose two endpoints satisfy `c`. Endpoints are
/// tried in ascending order, so witnesses are deterministic.
inline std::optional<PathWitness> find_constrained_path(const Graph& g, std::size_t order,
                                                        const EndpointConstraint& c = {},
                                                        std::uint64_t budget = kDefaultSearchBudget) {
  if (order < 1) throw std::invalid_argument("path order must be >= 1");
  const std::size_t n = g.order();
  if (order > n) return std::nullopt;
  Bitset ends = c.endpoint_mask(n);
  Bitset inner(n);
  inner.set_all();
  std::uint64_t spent = 0;
  detail::PathSearch search(g, order, inner, ends, budget, spent);
  for (auto s = ends.first(); s < n; s = ends.next(s + 1))
    if (search.from(s)) return PathWitness{search.path()};
  return std::nullopt;
}

/// A path on `order` vertices from s to t (s != t).
inline std::optional<PathWitness> find_path_between(const Graph& g, Vertex s, Vertex t,
                                                    std::size_t order,
                                                    std::uint64_t budget = kDefaultSearchBudget) {
  const std::size_t n = g.order();
  if (s >= n || t >= n) throw std::out_of_range("path endpoint out of range");
  if (s == t || order < 2 || order > n) return std::nullopt;
  Bitset inner(n);
  inner.set_all();
  inner.reset(t);
  Bitset ends(n);
  ends.set(t);
  std::uint64_t spent = 0;
  detail::PathSearch search(g, order, std::move(inner), std::move(ends), budget, spent);
  if (search.from(s)) return PathWitness{search.path()};
  return std::nullopt;
}

/// A cycle on l vertices. The witness starts at the cycle's smallest vertex.
inline std::optional<CycleWitness> find_cycle_of_length(const Graph& g, std::size_t l,
                                                        std::uint64_t budget = kDefaultSearchBudget) {
  if (l < 3) throw std::invalid_argument("cycle length must be >= 3");
  const std::size_t n = g.order();
  if (l > n) return std::nullopt;
  std::uint64_t spent = 0;
  for (Vertex s = 0; s + l <= n; ++s) {
    // Cycles whose smallest vertex is s: walk from s through vertices above s
    // and close at a neighbour of s.
    Bitset above(n);
    for (Vertex v = s + 1; v < n; ++v) above.set(v);
    Bitset ends = g.neighbors(s) & above;
    if (ends.count() < 2) continue;
    detail::PathSearch search(g, l, std::move(above), std::move(ends), budget, spent);
    if (search.from(s)) return CycleWitness{search.path()};
  }
  return std::nullopt;
}

inline std::optional<CycleWitness> is_hamiltonian(const Graph& g,
                                                  std::uint64_t budget = kDefaultSearchBudget) {
  if (g.order() < 3) throw std::invalid_argument("Hamiltonicity requires n >= 3");
  return find_cycle_of_length(g, g.order(), budget);
}

inline bool is_valid_path(const Graph& g, const PathWitness& w, std::size_t order,
                          const EndpointConstraint& c = {}) {
  const auto& vs = w.vertices;
  if (vs.size() != order || vs.empty()) return false;
  std::vector<bool> seen(g.order(), false);
  for (auto v : vs) {
    if (v >= g.order() || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i)
    if (!g.adjacent(vs[i], vs[i + 1])) return false;
  return c.admits(vs.front()) && c.admits(vs.back());
}

inline bool is_valid_cycle(const Graph& g, const CycleWitness& w, std::size_t length) {
  const auto& vs = w.vertices;
  if (vs.size() != length || length < 3) return false;
  if (!is_valid_path(g, PathWitness{vs}, length)) return false;
  return g.adjacent(vs.back(), vs.front());
}

}  // namespace qext
