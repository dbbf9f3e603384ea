#pragma once

// Graph-dependent upper bounds on q(G) and the closed-form formula registry.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "qext/constructions.hpp"
#include "qext/graph.hpp"

namespace qext {

enum class BoundRelation { upper_bound_on_q, edge_count_bound, sandwich_pair };

inline std::string_view to_string(BoundRelation r) {
  switch (r) {
    case BoundRelation::upper_bound_on_q: return "upper_bound_on_q";
    case BoundRelation::edge_count_bound: return "edge_count_bound";
    default: return "sandwich_pair";
  }
}

struct BoundValue {
  std::string name;
  double value = 0.0;
  BoundRelation relation = BoundRelation::upper_bound_on_q;
  friend bool operator==(const BoundValue&, const BoundValue&) = default;
};

/// max over u with d_u > 0 of d_u + (Σ_{v~u} d_v) / d_u. Isolated vertices are skipped.
inline BoundValue merris_bound(const Graph& g) {
  if (g.size() == 0) throw std::invalid_argument("merris bound undefined for an edgeless graph");
  double best = 0.0;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) == 0) continue;
    double d = static_cast<double>(g.degree(u));
    best = std::max(best, d + static_cast<double>(neighbor_degree_sum(g, u)) / d);
  }
  return {"merris", best, BoundRelation::upper_bound_on_q};
}

/// 2m/(n-1) + n - 2.
inline BoundValue das_bound(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("das bound requires n >= 2");
  double n = static_cast<double>(g.order());
  return {"das", 2.0 * static_cast<double>(g.size()) / (n - 1.0) + n - 2.0,
          BoundRelation::upper_bound_on_q};
}

/// max over edges uv of d_u + d_v.
inline BoundValue edge_degree_bound(const Graph& g) {
  if (g.size() == 0) throw std::invalid_argument("edge-degree bound undefined for an edgeless graph");
  std::size_t best = 0;
  for (auto [u, v] : g.edges()) best = std::max(best, g.degree(u) + g.degree(v));
  return {"edge_degree", static_cast<double>(best), BoundRelation::upper_bound_on_q};
}

// Integral edge-count bounds, exact.

/// max{kn - k(k+1)/2, C(2k,2) + (n-2k)}: connected, n >= 2k+2, no path of order 2k+2.
inline std::int64_t kopylov_i_bound(std::int64_t n, std::int64_t k) {
  return std::max(k * n - k * (k + 1) / 2, (2 * k) * (2 * k - 1) / 2 + (n - 2 * k));
}

/// max{kn - k(k+1)/2 + 1, C(2k+1,2) + (n-2k-1)}: connected, n >= 2k+3, no path of order 2k+3.
inline std::int64_t kopylov_ii_bound(std::int64_t n, std::int64_t k) {
  return std::max(k * n - k * (k + 1) / 2 + 1, (2 * k + 1) * (2 * k) / 2 + (n - 2 * k - 1));
}

/// Twice the path bound kn/2.
inline std::int64_t egp_bound_twice(std::int64_t n, std::int64_t k) { return k * n; }

/// Twice the cycle bound k(n-1)/2.
inline std::int64_t egc_bound_twice(std::int64_t n, std::int64_t k) { return k * (n - 1); }

/// Edge counts strictly above C(n-1,2)+1 force a Hamiltonian cycle.
inline std::int64_t ore_threshold(std::int64_t n) { return (n - 1) * (n - 2) / 2 + 1; }

struct Sandwich {
  double lower = 0.0;
  double upper = 0.0;
  friend bool operator==(const Sandwich&, const Sandwich&) = default;
};

using FormulaValue = std::variant<double, Sandwich>;

inline double closed_form_snk(double n, double k) {
  double s = n + 2 * k - 2;
  return 0.5 * (s + std::sqrt(s * s - 8 * (k * k - k)));
}

inline Sandwich prop1_sandwich(double n, double k) {
  double s = n + 2 * k - 2;
  double c = 2 * (k * k - k);
  return {s - c / (n + 2 * k - 3), s - c / (n + 2 * k + 2)};
}

inline constexpr std::string_view kFormulaIds[] = {
    "closed_form_snk", "prop1_sandwich", "kopylov_i", "kopylov_ii", "egp", "egc", "ore_threshold",
};

inline FormulaValue formula_value(std::string_view id, const Params& params) {
  auto get = [&](std::string_view name) -> std::int64_t {
    auto it = params.find(name);
    if (it == params.end())
      throw std::invalid_argument(std::string(id) + ": missing parameter '" + std::string(name) +
                                  "'");
    return it->second;
  };
  auto d = [](std::int64_t v) { return static_cast<double>(v); };
  if (id == "closed_form_snk") return closed_form_snk(d(get("n")), d(get("k")));
  if (id == "prop1_sandwich") return prop1_sandwich(d(get("n")), d(get("k")));
  if (id == "kopylov_i") return d(kopylov_i_bound(get("n"), get("k")));
  if (id == "kopylov_ii") return d(kopylov_ii_bound(get("n"), get("k")));
  if (id == "egp") return d(egp_bound_twice(get("n"), get("k"))) / 2.0;
  if (id == "egc") return d(egc_bound_twice(get("n"), get("k"))) / 2.0;
  if (id == "ore_threshold") return d(ore_threshold(get("n")));
  throw std::invalid_argument("unknown formula id '" + std::string(id) + "'");
}

}  // namespace qext
