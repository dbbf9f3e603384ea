#pragma once

// Hill climbing for large q(G) over graphs of fixed order that avoid a set of
// cycle lengths. Each restart owns its own RNG stream (seed + restart index),
// so results do not depend on thread scheduling.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qext/constructions.hpp"
#include "qext/enumeration.hpp"
#include "qext/graph.hpp"
#include "qext/spectral.hpp"
#include "qext/subgraph_search.hpp"

namespace qext {

struct SearchOptions {
  std::size_t n = 0;
  std::vector<std::size_t> forbidden;  // cycle lengths, each >= 3
  std::size_t budget = 10000;          // move evaluations per restart
  std::size_t restarts = 8;
  std::uint64_t seed = 0;
  std::optional<Graph> seed_graph;     // starting point of restart 0
  std::size_t jobs = 1;
};

struct SearchTie {
  std::string graph6;
  double q = 0.0;
  friend bool operator==(const SearchTie&, const SearchTie&) = default;
};

struct SearchResult {
  Graph best;
  double q = 0.0;
  std::pair<double, double> q_interval{0.0, 0.0};
  bool feasible = false;
  std::uint64_t seed = 0;
  std::size_t restarts = 0;
  std::size_t accepted_moves = 0;
  std::optional<std::string> matched_family;  // "s_nk:k" or "s_nk_plus:k"
  std::vector<SearchTie> ties;                // distinct graphs within kTieWindow of best
  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

inline constexpr double kSearchTolerance = 1e-8;
inline constexpr double kFinalTolerance = 1e-12;
inline constexpr double kTieWindow = 1e-6;

/// True if g has a cycle of any forbidden length.
inline bool has_forbidden_cycle(const Graph& g, const std::vector<std::size_t>& forbidden) {
  for (auto l : forbidden)
    if (find_cycle_of_length(g, l)) return true;
  return false;
}

/// Named family g is isomorphic to, for n <= kCanonicalLimit.
inline std::optional<std::string> match_family(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || n > kCanonicalLimit) return std::nullopt;
  for (std::size_t k = 1; k < n; ++k) {
    if (isomorphic(g, s_nk(n, k))) return "s_nk:" + std::to_string(k);
    if (n >= k + 2 && isomorphic(g, s_nk_plus(n, k))) return "s_nk_plus:" + std::to_string(k);
  }
  return std::nullopt;
}

namespace detail {

// Adding uv closes a cycle of length l exactly when some u-v path has l vertices.
inline bool addition_feasible(const Graph& g, Vertex u, Vertex v,
                              const std::vector<std::size_t>& forbidden) {
  for (auto l : forbidden)
    if (find_path_between(g, u, v, l)) return false;
  return true;
}

inline std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

inline Graph random_feasible_graph(std::size_t n, const std::vector<std::size_t>& forbidden,
                                   std::mt19937_64& rng) {
  auto pairs = all_pairs(n);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution coin(0.5);
  Graph g(n);
  for (auto [u, v] : pairs)
    if (coin(rng) && addition_feasible(g, u, v, forbidden)) g = g.with_edge_toggled(u, v);
  return g;
}

struct RestartResult {
  Graph best;
  double q = 0.0;
  std::size_t accepted = 0;
  std::string key;  // tie-break key
};

inline std::string ordering_key(const Graph& g) {
  if (g.order() <= kCanonicalLimit) {
    auto b = canonical_form(g).bytes;
    return std::string(b.begin(), b.end());
  }
  return write_graph6(g);
}

inline RestartResult climb(const SearchOptions& opt, std::size_t restart) {
  std::mt19937_64 rng(opt.seed + restart);
  Graph g = restart == 0 && opt.seed_graph ? *opt.seed_graph
                                           : random_feasible_graph(opt.n, opt.forbidden, rng);
  double q = g.size() == 0 ? 0.0 : q_index(g, kSearchTolerance).q;
  std::size_t accepted = 0;
  std::size_t evaluations = 0;
  auto pairs = all_pairs(opt.n);
  bool improved = true;
  while (improved && evaluations < opt.budget) {
    improved = false;
    std::shuffle(pairs.begin(), pairs.end(), rng);
    for (auto [u, v] : pairs) {
      if (evaluations >= opt.budget) break;
      ++evaluations;
      if (!g.adjacent(u, v) && !addition_feasible(g, u, v, opt.forbidden)) continue;
      Graph h = g.with_edge_toggled(u, v);
      double qh = h.size() == 0 ? 0.0 : q_index(h, kSearchTolerance).q;
      if (qh > q + kSearchTolerance) {
        g = std::move(h);
        q = qh;
        ++accepted;
        improved = true;
        break;
      }
    }
  }
  double final_q = g.size() == 0 ? 0.0 : q_index(g, kFinalTolerance).q;
  return {g, final_q, accepted, ordering_key(g)};
}

}  // namespace detail

/// Maximize q(G) over graphs on n vertices with no cycle of a forbidden length.
inline SearchResult maximize_q_forbidden_cycles(const SearchOptions& opt) {
  if (opt.n < 3) throw std::invalid_argument("search requires n >= 3");
  if (opt.forbidden.empty()) throw std::invalid_argument("search requires a forbidden length");
  for (auto l : opt.forbidden)
    if (l < 3) throw std::invalid_argument("forbidden cycle lengths must be >= 3");
  if (opt.budget < 1 || opt.restarts < 1)
    throw std::invalid_argument("budget and restarts must be >= 1");
  if (opt.seed_graph) {
    if (opt.seed_graph->order() != opt.n)
      throw std::invalid_argument("seed graph order differs from n");
    if (has_forbidden_cycle(*opt.seed_graph, opt.forbidden))
      throw std::invalid_argument("seed graph contains a forbidden cycle");
  }

  std::vector<detail::RestartResult> runs(opt.restarts);
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opt.jobs, opt.restarts));
  if (jobs == 1) {
    for (std::size_t r = 0; r < opt.restarts; ++r) runs[r] = detail::climb(opt, r);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (std::size_t t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t r = t; r < opt.restarts; r += jobs) runs[r] = detail::climb(opt, r);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // q values closer than the final solver tolerance count as equal; the key decides.
  const detail::RestartResult* best = &runs[0];
  for (const auto& r : runs) {
    if (r.q > best->q + 1e-9 || (std::abs(r.q - best->q) <= 1e-9 && r.key < best->key)) best = &r;
  }

  SearchResult out;
  out.best = best->best;
  out.seed = opt.seed;
  out.restarts = opt.restarts;
  for (const auto& r : runs) out.accepted_moves += r.accepted;

  if (out.best.size() == 0) {
    out.q = 0.0;
    out.q_interval = {0.0, 0.0};
  } else {
    auto fin = q_index(out.best, kFinalTolerance);
    out.q = fin.q;
    out.q_interval = {fin.q - fin.residual, fin.q + fin.residual};
  }
  out.feasible = !has_forbidden_cycle(out.best, opt.forbidden);
  if (!out.feasible) throw std::logic_error("search produced a graph with a forbidden cycle");
  out.matched_family = match_family(out.best);

  std::vector<std::pair<std::string, const detail::RestartResult*>> tied;
  for (const auto& r : runs) {
    if (r.q < best->q - kTieWindow) continue;
    if (std::any_of(tied.begin(), tied.end(), [&](const auto& t) { return t.first == r.key; }))
      continue;
    tied.emplace_back(r.key, &r);
  }
  std::sort(tied.begin(), tied.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [key, r] : tied)
    if (r->best.order() <= kGraph6Limit) out.ties.push_back({write_graph6(r->best), r->q});
  return out;
}

}  // namespace qext
