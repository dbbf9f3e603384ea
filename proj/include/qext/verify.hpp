#pragma once

// Mechanical checkers: each statement is evaluated on one concrete instance
// and reported as holds / equality_case / violated / precondition_unmet /
// indeterminate. Spectral thresholds always go through certified_compare.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include "qext/bounds.hpp"
#include "qext/constructions.hpp"
#include "qext/enumeration.hpp"
#include "qext/graph.hpp"
#include "qext/spectral.hpp"
#include "qext/subgraph_search.hpp"

namespace qext {

enum class Statement {
  egp,
  egc,
  kopylov_i,
  kopylov_ii,
  ore,
  ni,
  lemma1,
  lemma2,
  lemma3,
  cor1,
  cor2,
  theorem1,
  theorem1_corollary,
  prop1,
  theorem1_probe,
};

inline constexpr std::pair<Statement, std::string_view> kStatementNames[] = {
    {Statement::egp, "egp"},
    {Statement::egc, "egc"},
    {Statement::kopylov_i, "kopylov_i"},
    {Statement::kopylov_ii, "kopylov_ii"},
    {Statement::ore, "ore"},
    {Statement::ni, "ni"},
    {Statement::lemma1, "lemma1"},
    {Statement::lemma2, "lemma2"},
    {Statement::lemma3, "lemma3"},
    {Statement::cor1, "cor1"},
    {Statement::cor2, "cor2"},
    {Statement::theorem1, "theorem1"},
    {Statement::theorem1_corollary, "theorem1_corollary"},
    {Statement::prop1, "prop1"},
    {Statement::theorem1_probe, "theorem1_probe"},
};

inline std::string_view to_string(Statement s) {
  for (auto [st, name] : kStatementNames)
    if (st == s) return name;
  return "?";
}

inline std::optional<Statement> parse_statement(std::string_view s) {
  for (auto [st, name] : kStatementNames)
    if (name == s) return st;
  return std::nullopt;
}

enum class CheckStatus { holds, equality_case, violated, precondition_unmet, indeterminate };

inline constexpr std::pair<CheckStatus, std::string_view> kStatusNames[] = {
    {CheckStatus::holds, "holds"},
    {CheckStatus::equality_case, "equality_case"},
    {CheckStatus::violated, "violated"},
    {CheckStatus::precondition_unmet, "precondition_unmet"},
    {CheckStatus::indeterminate, "indeterminate"},
};

inline std::string_view to_string(CheckStatus s) {
  for (auto [st, name] : kStatusNames)
    if (st == s) return name;
  return "?";
}

inline std::optional<CheckStatus> parse_status(std::string_view s) {
  for (auto [st, name] : kStatusNames)
    if (name == s) return st;
  return std::nullopt;
}

using Witness = std::variant<std::monostate, PathWitness, CycleWitness, VertexSet>;

struct CheckOutcome {
  Statement statement = Statement::egp;
  CheckStatus status = CheckStatus::precondition_unmet;
  double lhs = 0.0;
  double rhs = 0.0;
  Witness witness;
  std::string note;

  friend bool operator==(const CheckOutcome&, const CheckOutcome&) = default;
};

/// Statement parameters; which fields are required depends on the statement.
struct CheckParams {
  std::optional<std::int64_t> k;
  std::optional<Vertex> v;                // lemma2 distinguished vertex
  std::optional<Vertex> w;                // cor2 / lemma3 hub
  std::optional<std::int64_t> p;          // lemma3 / cor1 block count
  std::optional<std::int64_t> n;          // prop1 / theorem1_probe order
  std::optional<VertexSet> part_a;        // ni
  std::optional<VertexSet> attachment;    // lemma3, labels in 0..2kp-1
  std::vector<Graph> blocks;              // lemma3 F parts; default K_2k
};

/// Eigen-solver tolerance used by every spectral check.
inline constexpr double kCheckTolerance = 1e-12;
/// Slack for spectral equality cases.
inline constexpr double kSpectralEqualitySlack = 1e-9;

namespace detail {

inline std::int64_t need_k(const CheckParams& p, Statement s, std::int64_t min_k) {
  if (!p.k)
    throw std::invalid_argument(std::string(to_string(s)) + ": missing parameter k");
  if (*p.k < min_k)
    throw std::invalid_argument(std::string(to_string(s)) + ": requires k >= " +
                                std::to_string(min_k));
  return *p.k;
}

inline CheckOutcome make(Statement s, CheckStatus st, double lhs, double rhs, std::string note = {},
                         Witness w = {}) {
  return CheckOutcome{s, st, lhs, rhs, std::move(w), std::move(note)};
}

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

/// Every component of g isomorphic to `part`.
inline bool all_components_match(const Graph& g, const Graph& part) {
  for (const auto& c : components(g))
    if (!isomorphic(induced_subgraph(g, c), part)) return false;
  return true;
}

/// Copies of K_k sharing one vertex (zero copies: K_1).
inline bool is_windmill(const Graph& g, std::int64_t k) {
  const std::size_t n = g.order();
  if (n == 0 || (n - 1) % static_cast<std::size_t>(k - 1) != 0) return false;
  const std::size_t copies = (n - 1) / static_cast<std::size_t>(k - 1);
  if (n <= kCanonicalLimit) return isomorphic(g, windmill(static_cast<std::size_t>(k), copies));
  for (Vertex h = 0; h < n; ++h) {
    if (g.degree(h) != n - 1) continue;
    if (all_components_match(remove_vertex(g, h), complete_graph(static_cast<std::size_t>(k - 1))))
      return true;
  }
  return false;
}

/// Copies of K_2k plus one K_2k+v whose pendant is v.
inline bool is_lemma2_exception(const Graph& g, std::int64_t k, Vertex v) {
  if (g.degree(v) != 1) return false;
  const Graph clique = complete_graph(static_cast<std::size_t>(2 * k));
  const Graph kite = kite_pendant(static_cast<std::size_t>(k));
  for (const auto& c : components(g)) {
    Graph part = induced_subgraph(g, c);
    if (c.contains(v)) {
      if (part.order() != kite.order() || part.size() != kite.size()) return false;
      // v pendant and the rest complete pins the kite down exactly.
      std::vector<Vertex> rest;
      for (auto u : c.members)
        if (u != v) rest.push_back(u);
      if (!is_complete(induced_subgraph(g, VertexSet(rest)))) return false;
    } else if (!isomorphic(part, clique)) {
      return false;
    }
  }
  return true;
}

template <class Fn>
CheckOutcome guard_budget(Statement s, Fn&& fn) {
  try {
    return fn();
  } catch (const BudgetExceeded& e) {
    return make(s, CheckStatus::indeterminate, 0, 0, e.what());
  } catch (const ConvergenceError& e) {
    return make(s, CheckStatus::indeterminate, e.best().q, 0, e.what());
  }
}

inline CheckOutcome spectral_strict_below(Statement s, const Graph& g, double threshold,
                                          std::string context) {
  auto r = q_index(g, kCheckTolerance);
  auto cmp = certified_compare(r, threshold);
  std::string note = std::move(context) + "q=" + fmt(r.q) + " residual=" + fmt(r.residual) +
                     " threshold=" + fmt(threshold);
  switch (cmp.verdict) {
    case Verdict::lt: return make(s, CheckStatus::holds, r.q, threshold, note);
    case Verdict::ge: return make(s, CheckStatus::violated, r.q, threshold, note);
    default: return make(s, CheckStatus::indeterminate, r.q, threshold, note);
  }
}

inline CheckOutcome check_egp(const Graph& g, const CheckParams& p) {
  const auto k = need_k(p, Statement::egp, 1);
  const auto n = static_cast<std::int64_t>(g.order());
  const auto e = static_cast<std::int64_t>(g.size());
  const double rhs = static_cast<double>(k * n) / 2.0;
  if (auto path = find_constrained_path(g, static_cast<std::size_t>(k + 2)))
    return make(Statement::egp, CheckStatus::precondition_unmet, double(e), rhs,
                "contains a path of order k+2", *path);
  const auto bound = egp_bound_twice(n, k);
  if (2 * e > bound)
    return make(Statement::egp, CheckStatus::violated, double(e), rhs, "e(G) > kn/2");
  if (2 * e < bound) return make(Statement::egp, CheckStatus::holds, double(e), rhs);
  if (all_components_match(g, complete_graph(static_cast<std::size_t>(k + 1))))
    return make(Statement::egp, CheckStatus::equality_case, double(e), rhs,
                "disjoint copies of K_{k+1}");
  return make(Statement::egp, CheckStatus::violated, double(e), rhs,
              "e(G) = kn/2 but G is not a disjoint union of K_{k+1}");
}

// The hypothesis is read as "no cycle of length k+1 or more". With a single
// forbidden length the bound fails already for C_4 at k = 2.
inline CheckOutcome check_egc(const Graph& g, const CheckParams& p) {
  const auto k = need_k(p, Statement::egc, 2);
  const auto n = static_cast<std::int64_t>(g.order());
  const auto e = static_cast<std::int64_t>(g.size());
  const double rhs = static_cast<double>(k * (n - 1)) / 2.0;
  if (n == 0) return make(Statement::egc, CheckStatus::precondition_unmet, 0, 0, "empty graph");
  for (auto l = static_cast<std::size_t>(k + 1); l <= g.order(); ++l)
    if (auto c = find_cycle_of_length(g, l))
      return make(Statement::egc, CheckStatus::precondition_unmet, double(e), rhs,
                  "contains a cycle of length " + std::to_string(l) + " > k", *c);
  const auto bound = egc_bound_twice(n, k);
  if (2 * e > bound)
    return make(Statement::egc, CheckStatus::violated, double(e), rhs, "e(G) > k(n-1)/2");
  if (2 * e < bound) return make(Statement::egc, CheckStatus::holds, double(e), rhs);
  if (is_windmill(g, k))
    return make(Statement::egc, CheckStatus::equality_case, double(e), rhs,
                "copies of K_k sharing a single vertex");
  return make(Statement::egc, CheckStatus::violated, double(e), rhs,
              "e(G) = k(n-1)/2 but G is not copies of K_k sharing a single vertex");
}

inline CheckOutcome check_kopylov(Statement s, const Graph& g, const CheckParams& p) {
  const auto k = need_k(p, s, 1);
  const bool second = s == Statement::kopylov_ii;
  const auto n = static_cast<std::int64_t>(g.order());
  const auto e = static_cast<std::int64_t>(g.size());
  const auto bound = second ? kopylov_ii_bound(n, k) : kopylov_i_bound(n, k);
  const auto path_order = 2 * k + (second ? 3 : 2);
  if (!is_connected(g))
    return make(s, CheckStatus::precondition_unmet, double(e), double(bound), "disconnected");
  if (n < path_order)
    return make(s, CheckStatus::precondition_unmet, double(e), double(bound),
                "n < " + std::to_string(path_order));
  if (auto path = find_constrained_path(g, static_cast<std::size_t>(path_order)))
    return make(s, CheckStatus::precondition_unmet, double(e), double(bound),
                "contains a path of order " + std::to_string(path_order), *path);
  if (e > bound) return make(s, CheckStatus::violated, double(e), double(bound), "e(G) > bound");
  return make(s, CheckStatus::holds, double(e), double(bound), e == bound ? "bound attained" : "");
}

inline CheckOutcome check_ore(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  const auto e = static_cast<std::int64_t>(g.size());
  if (n < 3) return make(Statement::ore, CheckStatus::precondition_unmet, double(e), 0, "n < 3");
  const auto t = ore_threshold(n);
  if (e <= t)
    return make(Statement::ore, CheckStatus::precondition_unmet, double(e), double(t),
                "e(G) <= C(n-1,2)+1");
  if (auto c = is_hamiltonian(g))
    return make(Statement::ore, CheckStatus::holds, double(e), double(t), "Hamiltonian", *c);
  return make(Statement::ore, CheckStatus::violated, double(e), double(t),
              "edge count above threshold but no Hamiltonian cycle");
}

inline CheckOutcome check_ni(const Graph& g, const CheckParams& p) {
  const auto k = need_k(p, Statement::ni, 1);
  if (!p.part_a || p.part_a->empty())
    throw std::invalid_argument("ni: missing or empty vertex set A");
  const std::size_t n = g.order();
  for (auto u : p.part_a->members)
    if (u >= n) throw std::invalid_argument("ni: vertex of A out of range");
  Bitset a = p.part_a->to_bitset(n);
  Bitset b(n);
  b.set_all();
  b.subtract(a);
  const auto lhs = static_cast<std::int64_t>(2 * edges_within(g, a) + edges_between(g, a, b));
  const auto rhs = (2 * k - 1) * static_cast<std::int64_t>(a.count()) +
                   k * static_cast<std::int64_t>(b.count());
  if (lhs <= rhs)
    return make(Statement::ni, CheckStatus::precondition_unmet, double(lhs), double(rhs),
                "2e(A)+e(A,B) <= (2k-1)|A|+k|B|");
  auto path = find_constrained_path(g, static_cast<std::size_t>(2 * k + 1),
                                    EndpointConstraint::ends_in(*p.part_a));
  if (path) return make(Statement::ni, CheckStatus::holds, double(lhs), double(rhs), "", *path);
  return make(Statement::ni, CheckStatus::violated, double(lhs), double(rhs),
              "no path of order 2k+1 with both ends in A");
}

inline CheckOutcome check_lemma1(const Graph& g, const CheckParams& p) {
  const auto k = need_k(p, Statement::lemma1, 1);
  if (auto path = find_constrained_path(g, static_cast<std::size_t>(2 * k + 1)))
    return make(Statement::lemma1, CheckStatus::precondition_unmet, 0, 0,
                "contains a path of order 2k+1", *path);
  // Report the tightest component of order != 2k.
  std::optional<std::pair<std::int64_t, std::int64_t>> worst;
  VertexSet worst_set;
  for (const auto& c : components(g)) {
    const auto order = static_cast<std::int64_t>(c.size());
    if (order == 2 * k) continue;
    const auto e = static_cast<std::int64_t>(edges_within(g, c.to_bitset(g.order())));
    const auto cap = (k - 1) * order;
    if (!worst || e - cap > worst->first - worst->second) {
      worst = {e, cap};
      worst_set = c;
    }
  }
  if (!worst)
    return make(Statement::lemma1, CheckStatus::holds, 0, 0, "every component has order 2k");
  if (worst->first > worst->second)
    return make(Statement::lemma1, CheckStatus::violated, double(worst->first),
                double(worst->second), "component with e(H) > (k-1)v(H)", worst_set);
  return make(Statement::lemma1, CheckStatus::holds, double(worst->first), double(worst->second),
              "", worst_set);
}

inline CheckOutcome check_lemma2(const Graph& g, const CheckParams& p) {
  const auto k = need_k(p, Statement::lemma2, 1);
  if (!p.v) throw std::invalid_argument("lemma2: missing parameter v");
  const Vertex v = *p.v;
  if (v >= g.order()) throw std::invalid_argument("lemma2: v out of range");
  if (auto path = find_constrained_path(g, static_cast<std::size_t>(2 * k + 1),
                                        EndpointConstraint::ends_avoid(v)))
    return make(Statement::lemma2, CheckStatus::precondition_unmet, 0, 0,
                "contains a path of order 2k+1 with both ends different from v", *path);
  const auto n = static_cast<std::int64_t>(g.order());
  const auto lhs = 2 * static_cast<std::int64_t>(g.size()) - static_cast<std::int64_t>(g.degree(v));
  const auto rhs = (2 * k - 1) * (n - 1);
  if (lhs <= rhs) return make(Statement::lemma2, CheckStatus::holds, double(lhs), double(rhs));
  if (is_lemma2_exception(g, k, v))
    return make(Statement::lemma2, CheckStatus::holds, double(lhs), double(rhs),
                "exceptional structure: copies of K_2k plus one K_2k+v");
  return make(Statement::lemma2, CheckStatus::violated, double(lhs), double(rhs),
              "2e(G)-d_v > (2k-1)(n-1) outside the exceptional structure");
}

/// G = F ∪ H with the attachment vertices of F joined to w; F occupies labels
/// 0..2kp-1 and H follows.
inline Graph lemma3_graph(const Graph& host, std::int64_t k, std::int64_t p, Vertex w,
                          const std::vector<Graph>& blocks, const VertexSet& attachment) {
  const std::size_t block_order = static_cast<std::size_t>(2 * k);
  std::vector<Graph> parts;
  if (blocks.empty())
    parts.assign(static_cast<std::size_t>(p), complete_graph(block_order));
  else
    parts = blocks;
  parts.push_back(host);
  Graph base = disjoint_union(parts);
  const std::size_t f_order = block_order * static_cast<std::size_t>(p);
  GraphBuilder b(base.order());
  for (auto [x, y] : base.edges()) b.add_edge(x, y);
  for (auto a : attachment.members) b.add_edge(a, f_order + w);
  return b.build();
}

inline CheckOutcome check_lemma3(const Graph& host, const CheckParams& prm) {
  const auto k = need_k(prm, Statement::lemma3, 2);
  if (!prm.p || *prm.p < 0) throw std::invalid_argument("lemma3: missing or negative p");
  if (!prm.w) throw std::invalid_argument("lemma3: missing parameter w");
  const auto p = *prm.p;
  const auto m = static_cast<std::int64_t>(host.order());
  if (m < 1) throw std::invalid_argument("lemma3: H must have order >= 1");
  if (*prm.w >= host.order()) throw std::invalid_argument("lemma3: w out of range");
  if (!prm.blocks.empty()) {
    if (static_cast<std::int64_t>(prm.blocks.size()) != p)
      throw std::invalid_argument("lemma3: number of blocks differs from p");
    for (const auto& bl : prm.blocks)
      if (static_cast<std::int64_t>(bl.order()) != 2 * k)
        throw std::invalid_argument("lemma3: every block must have order 2k");
  }
  VertexSet attach = prm.attachment.value_or(VertexSet{});
  for (auto a : attach.members)
    if (static_cast<std::int64_t>(a) >= 2 * k * p)
      throw std::invalid_argument("lemma3: attachment vertex outside F");

  const auto n = 2 * k * p + m;
  if (n < 6 * k + 13)
    return make(Statement::lemma3, CheckStatus::precondition_unmet, 0, 0, "n < 6k+13");

  const double hyp_threshold = double(m + 2 * k - 2) + 6.0 * double(p * k) / double(n + 3);
  auto qh = q_index(host, kCheckTolerance);
  const double slack_h = std::max(qh.residual, kSpectralEqualitySlack);
  if (qh.q - hyp_threshold > slack_h)
    return make(Statement::lemma3, CheckStatus::precondition_unmet, qh.q, hyp_threshold,
                "q(H) exceeds m+2k-2+6pk/(n+3)");
  const bool hyp_equal = std::abs(qh.q - hyp_threshold) <= slack_h;

  Graph g = lemma3_graph(host, k, p, *prm.w, prm.blocks, attach);
  const double bound = double(n + 2 * k - 2);
  auto qg = q_index(g, kCheckTolerance);
  const double slack_g = std::max(qg.residual, kSpectralEqualitySlack);
  std::string note = "q(H)=" + fmt(qh.q) + " hypothesis=" + fmt(hyp_threshold) +
                     " q(G)=" + fmt(qg.q) + " residual=" + fmt(qg.residual);
  if (hyp_equal) {
    if (std::abs(qg.q - bound) <= slack_g)
      return make(Statement::lemma3, CheckStatus::equality_case, qg.q, bound, note);
    return make(Statement::lemma3, CheckStatus::violated, qg.q, bound,
                note + " (equality in the hypothesis without equality in q(G))");
  }
  auto cmp = certified_compare(qg, bound);
  if (cmp.verdict == Verdict::lt) return make(Statement::lemma3, CheckStatus::holds, qg.q, bound, note);
  if (qg.q - bound > slack_g)
    return make(Statement::lemma3, CheckStatus::violated, qg.q, bound, note);
  return make(Statement::lemma3, CheckStatus::indeterminate, qg.q, bound, note);
}

inline CheckOutcome check_cor1(const CheckParams& prm) {
  const auto k = need_k(prm, Statement::cor1, 2);
  if (!prm.p || *prm.p < 0) throw std::invalid_argument("cor1: missing or negative p");
  const auto n = 2 * (*prm.p + 1) * k + 2;
  if (n < 6 * k + 13)
    return make(Statement::cor1, CheckStatus::precondition_unmet, 0, double(n + 2 * k - 2),
                "n = " + std::to_string(n) + " < 6k+13");
  Graph g = corollary1_graph(static_cast<std::size_t>(k), static_cast<std::size_t>(*prm.p));
  return spectral_strict_below(Statement::cor1, g, double(n + 2 * k - 2),
                               "n=" + std::to_string(n) + " ");
}

inline CheckOutcome check_cor2(const Graph& g, const CheckParams& prm) {
  const auto k = need_k(prm, Statement::cor2, 2);
  if (!prm.w) throw std::invalid_argument("cor2: missing parameter w");
  if (*prm.w >= g.order()) throw std::invalid_argument("cor2: w out of range");
  const auto n = static_cast<std::int64_t>(g.order());
  if (n < 6 * k + 13)
    return make(Statement::cor2, CheckStatus::precondition_unmet, 0, double(n + 2 * k - 2),
                "n < 6k+13");
  Graph rest = remove_vertex(g, *prm.w);
  for (const auto& c : components(rest)) {
    const auto order = static_cast<std::int64_t>(c.size());
    const auto e = static_cast<std::int64_t>(edges_within(rest, c.to_bitset(rest.order())));
    if (order != 2 * k && e > (k - 1) * order)
      return make(Statement::cor2, CheckStatus::precondition_unmet, double(e),
                  double((k - 1) * order), "component of G-w with v(C) != 2k and e(C) > (k-1)v(C)");
  }
  return spectral_strict_below(Statement::cor2, g, double(n + 2 * k - 2), "");
}

inline CheckOutcome check_theorem1(Statement s, const Graph& g, const CheckParams& prm) {
  const auto k = need_k(prm, s, 2);
  const auto n = static_cast<std::int64_t>(g.order());
  const double threshold = double(n + 2 * k - 2);
  if (n <= 6 * k * k)
    return make(s, CheckStatus::precondition_unmet, 0, threshold, "n <= 6k^2");
  auto r = q_index(g, kCheckTolerance);
  auto cmp = certified_compare(r, threshold);
  if (cmp.verdict == Verdict::lt)
    return make(s, CheckStatus::precondition_unmet, r.q, threshold, "q(G) < n+2k-2");
  if (cmp.verdict == Verdict::indeterminate)
    return make(s, CheckStatus::indeterminate, r.q, threshold,
                "q(G) within residual of n+2k-2; hypothesis undecided");
  const std::size_t first = s == Statement::theorem1 ? static_cast<std::size_t>(2 * k + 1) : 3;
  const std::size_t last = static_cast<std::size_t>(2 * k + 2);
  CycleWitness longest;
  for (std::size_t l = first; l <= last; ++l) {
    auto c = find_cycle_of_length(g, l);
    if (!c)
      return make(s, CheckStatus::violated, r.q, threshold,
                  "no cycle of length " + std::to_string(l));
    longest = *c;
  }
  return make(s, CheckStatus::holds, r.q, threshold,
              "cycles of lengths " + std::to_string(first) + ".." + std::to_string(last) + " found",
              longest);
}

}  // namespace detail

/// Evaluate one statement on one instance.
///
/// lemma3 treats `g` as the graph H and builds G from the parameters; cor1
/// builds its graph from k and p and ignores `g`.
inline CheckOutcome check_statement(Statement s, const Graph& g, const CheckParams& params) {
  return detail::guard_budget(s, [&]() -> CheckOutcome {
    switch (s) {
      case Statement::egp: return detail::check_egp(g, params);
      case Statement::egc: return detail::check_egc(g, params);
      case Statement::kopylov_i:
      case Statement::kopylov_ii: return detail::check_kopylov(s, g, params);
      case Statement::ore: return detail::check_ore(g);
      case Statement::ni: return detail::check_ni(g, params);
      case Statement::lemma1: return detail::check_lemma1(g, params);
      case Statement::lemma2: return detail::check_lemma2(g, params);
      case Statement::lemma3: return detail::check_lemma3(g, params);
      case Statement::cor1: return detail::check_cor1(params);
      case Statement::cor2: return detail::check_cor2(g, params);
      case Statement::theorem1:
      case Statement::theorem1_corollary: return detail::check_theorem1(s, g, params);
      default:
        throw std::invalid_argument("statement '" + std::string(to_string(s)) +
                                    "' is not checked per graph");
    }
  });
}

// Construction-level checks ---------------------------------------------------

struct Prop1Values {
  double lower = 0.0;
  double q_snk = 0.0;
  double q_snk_plus = 0.0;
  double upper = 0.0;
  double residual = 0.0;  // max residual of the two eigensolves
};

/// lower < q(S_{n,k}) < q(S+_{n,k}) < upper, each link strict by more than
/// ten times the eigensolver residual.
inline CheckOutcome check_prop1(std::int64_t n, std::int64_t k, Prop1Values* values = nullptr) {
  const auto s = Statement::prop1;
  if (k < 2 || n <= 5 * k * k)
    return detail::make(s, CheckStatus::precondition_unmet, 0, 0, "requires k >= 2 and n > 5k^2");
  auto sandwich = prop1_sandwich(double(n), double(k));
  auto a = q_index(s_nk(static_cast<std::size_t>(n), static_cast<std::size_t>(k)), kCheckTolerance);
  auto b = q_index(s_nk_plus(static_cast<std::size_t>(n), static_cast<std::size_t>(k)),
                   kCheckTolerance);
  Prop1Values v{sandwich.lower, a.q, b.q, sandwich.upper, std::max(a.residual, b.residual)};
  if (values) *values = v;
  const double need = 10.0 * v.residual;
  const double gaps[] = {v.q_snk - v.lower, v.q_snk_plus - v.q_snk, v.upper - v.q_snk_plus};
  std::string note = "lower=" + detail::fmt(v.lower) + " q(S)=" + detail::fmt(v.q_snk) +
                     " q(S+)=" + detail::fmt(v.q_snk_plus) + " upper=" + detail::fmt(v.upper) +
                     " residual=" + detail::fmt(v.residual);
  auto status = CheckStatus::holds;
  for (double gap : gaps) {
    if (gap > need) continue;
    if (gap < -need) return detail::make(s, CheckStatus::violated, v.q_snk_plus, v.upper, note);
    status = CheckStatus::indeterminate;
  }
  return detail::make(s, status, v.q_snk_plus, v.upper, note);
}

/// Checks that S_{n,k} and S+_{n,k} stay below n+2k-2 and that K_n, which
/// meets the threshold, has every cycle length 3..2k+2.
inline CheckOutcome theorem1_construction_probe(std::int64_t n, std::int64_t k) {
  const auto s = Statement::theorem1_probe;
  const double threshold = double(n + 2 * k - 2);
  if (k < 2 || n <= 6 * k * k)
    return detail::make(s, CheckStatus::precondition_unmet, 0, threshold, "requires n > 6k^2");
  return detail::guard_budget(s, [&]() -> CheckOutcome {
    const auto un = static_cast<std::size_t>(n), uk = static_cast<std::size_t>(k);
    auto a = q_index(s_nk(un, uk), kCheckTolerance);
    auto b = q_index(s_nk_plus(un, uk), kCheckTolerance);
    auto c = q_index(complete_graph(un), kCheckTolerance);
    std::string note = "q(S)=" + detail::fmt(a.q) + " q(S+)=" + detail::fmt(b.q) +
                       " q(K_n)=" + detail::fmt(c.q);
    auto va = certified_compare(a, threshold).verdict;
    auto vb = certified_compare(b, threshold).verdict;
    auto vc = certified_compare(c, threshold).verdict;
    if (va == Verdict::ge || vb == Verdict::ge || vc == Verdict::lt)
      return detail::make(s, CheckStatus::violated, b.q, threshold, note);
    if (va != Verdict::lt || vb != Verdict::lt || vc != Verdict::ge)
      return detail::make(s, CheckStatus::indeterminate, b.q, threshold, note);
    Graph kn = complete_graph(un);
    CycleWitness longest;
    for (std::size_t l = 3; l <= 2 * uk + 2; ++l) {
      auto cyc = find_cycle_of_length(kn, l);
      if (!cyc)
        return detail::make(s, CheckStatus::violated, b.q, threshold,
                            note + " K_n lacks a cycle of length " + std::to_string(l));
      longest = *cyc;
    }
    return detail::make(s, CheckStatus::holds, b.q, threshold, note, longest);
  });
}

// Suites ----------------------------------------------------------------------

struct StatusCounts {
  std::size_t instances = 0;
  std::size_t holds = 0;
  std::size_t equality_case = 0;
  std::size_t violated = 0;
  std::size_t precondition_unmet = 0;
  std::size_t indeterminate = 0;

  void add(CheckStatus s) {
    ++instances;
    switch (s) {
      case CheckStatus::holds: ++holds; break;
      case CheckStatus::equality_case: ++equality_case; break;
      case CheckStatus::violated: ++violated; break;
      case CheckStatus::precondition_unmet: ++precondition_unmet; break;
      case CheckStatus::indeterminate: ++indeterminate; break;
    }
  }
  void merge(const StatusCounts& o) {
    instances += o.instances;
    holds += o.holds;
    equality_case += o.equality_case;
    violated += o.violated;
    precondition_unmet += o.precondition_unmet;
    indeterminate += o.indeterminate;
  }
  friend bool operator==(const StatusCounts&, const StatusCounts&) = default;
};

struct SuiteViolation {
  Statement statement = Statement::egp;
  std::string graph6;  // canonical labeling when n <= kCanonicalLimit
  std::string params;
  CheckOutcome outcome;
  friend bool operator==(const SuiteViolation&, const SuiteViolation&) = default;
};

struct SuiteReport {
  std::vector<Statement> statements;
  StatusCounts totals;
  std::map<std::string, StatusCounts> per_statement;
  std::vector<SuiteViolation> violations;
  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

struct SuiteOptions {
  std::vector<Statement> statements;
  std::size_t n_min = 1;
  std::size_t n_max = 7;
  std::vector<std::int64_t> k_values{1, 2, 3};
  std::optional<std::vector<Graph>> corpus;  // replaces native enumeration
  std::uint64_t seed = 0;
  std::size_t ni_exhaustive_limit = 6;       // all bipartitions up to this order
  std::size_t ni_samples = 50;               // seeded samples above it
  std::size_t jobs = 1;
};

namespace detail {

inline std::int64_t min_k(Statement s) {
  switch (s) {
    case Statement::egc:
    case Statement::cor2:
    case Statement::theorem1:
    case Statement::theorem1_corollary: return 2;
    default: return 1;
  }
}

struct InstanceResult {
  Statement statement;
  std::string params;
  CheckOutcome outcome;
};

inline std::string describe(const CheckParams& p) {
  std::string s;
  auto add = [&](const std::string& kv) { s += (s.empty() ? "" : " ") + kv; };
  if (p.k) add("k=" + std::to_string(*p.k));
  if (p.v) add("v=" + std::to_string(*p.v));
  if (p.w) add("w=" + std::to_string(*p.w));
  if (p.part_a) {
    std::string a;
    for (auto u : p.part_a->members) a += (a.empty() ? "" : ",") + std::to_string(u);
    add("A={" + a + "}");
  }
  return s;
}

inline std::vector<VertexSet> ni_parts(std::size_t n, std::size_t graph_index,
                                       const SuiteOptions& opt) {
  std::vector<VertexSet> out;
  if (n == 0) return out;
  if (n <= opt.ni_exhaustive_limit) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Vertex> a;
      for (std::size_t u = 0; u < n; ++u)
        if ((mask >> u) & 1U) a.push_back(u);
      out.emplace_back(std::move(a));
    }
    return out;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(graph_index)};
  std::mt19937_64 rng(seq);
  std::bernoulli_distribution coin(0.5);
  while (out.size() < opt.ni_samples) {
    std::vector<Vertex> a;
    for (std::size_t u = 0; u < n; ++u)
      if (coin(rng)) a.push_back(u);
    if (!a.empty()) out.emplace_back(std::move(a));
  }
  return out;
}

inline std::vector<InstanceResult> run_graph(const Graph& g, std::size_t index,
                                             const SuiteOptions& opt) {
  std::vector<InstanceResult> out;
  auto run = [&](Statement s, const CheckParams& p) {
    out.push_back({s, describe(p), check_statement(s, g, p)});
  };
  for (auto s : opt.statements) {
    if (s == Statement::ore) {
      run(s, {});
      continue;
    }
    std::vector<VertexSet> parts;
    if (s == Statement::ni) parts = ni_parts(g.order(), index, opt);
    for (auto k : opt.k_values) {
      if (k < min_k(s)) continue;
      CheckParams p;
      p.k = k;
      switch (s) {
        case Statement::lemma2:
          for (Vertex v = 0; v < g.order(); ++v) {
            p.v = v;
            run(s, p);
          }
          break;
        case Statement::cor2:
          for (Vertex w = 0; w < g.order(); ++w) {
            p.w = w;
            run(s, p);
          }
          break;
        case Statement::ni:
          for (const auto& a : parts) {
            p.part_a = a;
            run(s, p);
          }
          break;
        default: run(s, p);
      }
    }
  }
  return out;
}

}  // namespace detail

/// Apply every statement to every graph (native enumeration of orders
/// n_min..n_max, or the corpus) and every admissible parameter choice.
/// Results are reduced in graph order, independent of `jobs`.
inline SuiteReport run_suite(const SuiteOptions& opt) {
  for (auto s : opt.statements) {
    if (s == Statement::lemma3 || s == Statement::cor1 || s == Statement::prop1 ||
        s == Statement::theorem1_probe)
      throw std::invalid_argument("statement '" + std::string(to_string(s)) +
                                  "' is construction-driven and cannot run in a suite");
  }
  std::vector<Graph> graphs;
  if (opt.corpus) {
    graphs = *opt.corpus;
  } else {
    if (opt.n_max > kEnumerationLimit)
      throw std::invalid_argument("n_max " + std::to_string(opt.n_max) +
                                  " exceeds native enumeration limit; supply a graph6 corpus");
    for (std::size_t n = opt.n_min; n <= opt.n_max; ++n)
      for_each_nonisomorphic(n, [&](const Graph& g) { graphs.push_back(g); });
  }

  std::vector<std::vector<detail::InstanceResult>> results(graphs.size());
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opt.jobs, graphs.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) results[i] = detail::run_graph(graphs[i], i, opt);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (std::size_t t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < graphs.size(); i += jobs)
            results[i] = detail::run_graph(graphs[i], i, opt);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  SuiteReport report;
  report.statements = opt.statements;
  for (auto s : opt.statements) report.per_statement[std::string(to_string(s))];
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (auto& r : results[i]) {
      report.totals.add(r.outcome.status);
      report.per_statement[std::string(to_string(r.statement))].add(r.outcome.status);
      if (r.outcome.status == CheckStatus::violated) {
        const Graph& g = graphs[i];
        std::string g6 = g.order() <= kCanonicalLimit ? write_graph6(canonical_graph(g))
                         : g.order() <= kGraph6Limit ? write_graph6(g)
                                                     : std::string("n=" + std::to_string(g.order()));
        report.violations.push_back({r.statement, std::move(g6), r.params, r.outcome});
      }
    }
  }
  return report;
}

}  // namespace qext
