#pragma once

// Named graph families with fixed vertex labelings.
//
//   s_nk(n,k)            K_k ∨ (n-k isolated); 0..k-1 form the dominating clique.
//   s_nk_plus(n,k)       s_nk plus the edge {k, k+1}.
//   windmill(k,c)        c copies of K_k sharing hub 0; order c(k-1)+1.
//   kite_pendant(k)      K_2k on 0..2k-1 plus pendant 2k attached to 0.
//   corollary1(k,p)      K_1 ∨ (p K_2k ∪ K_{2k+1}); apex 0, order 2(p+1)k+2.
//   lemma2_exception     `copies` blocks of K_2k, then one kite_pendant(k) block;
//                        the pendant is the last vertex.
//   complete, path, cycle, star (K_{1,n-1}, center 0), edgeless.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qext/graph.hpp"

namespace qext {

enum class Family {
  s_nk,
  s_nk_plus,
  windmill,
  kite_pendant,
  corollary1,
  lemma2_exception,
  complete,
  path,
  cycle,
  star,
  edgeless,
};

inline constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::s_nk, "s_nk"},
    {Family::s_nk_plus, "s_nk_plus"},
    {Family::windmill, "windmill"},
    {Family::kite_pendant, "kite_pendant"},
    {Family::corollary1, "corollary1"},
    {Family::lemma2_exception, "lemma2_exception"},
    {Family::complete, "complete"},
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::star, "star"},
    {Family::edgeless, "edgeless"},
};

inline std::string_view to_string(Family f) {
  for (auto [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  for (auto [fam, name] : kFamilyNames)
    if (name == s) return fam;
  return std::nullopt;
}

using Params = std::map<std::string, std::int64_t, std::less<>>;

struct ConstructionSpec {
  Family family = Family::edgeless;
  Params params;
};

inline Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

inline Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
  return b.build();
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
  return b.build();
}

inline Graph star_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("star requires n >= 1");
  GraphBuilder b(n);
  for (Vertex u = 1; u < n; ++u) b.add_edge(0, u);
  return b.build();
}

inline Graph s_nk(std::size_t n, std::size_t k) {
  if (!(n > k && k >= 1)) throw std::invalid_argument("s_nk requires n > k >= 1");
  return join(complete_graph(k), Graph(n - k));
}

inline Graph s_nk_plus(std::size_t n, std::size_t k) {
  if (!(n > k && k >= 1)) throw std::invalid_argument("s_nk_plus requires n > k >= 1");
  if (n < k + 2) throw std::invalid_argument("s_nk_plus requires n >= k+2");
  return s_nk(n, k).with_edge_toggled(k, k + 1);
}

inline Graph windmill(std::size_t k, std::size_t copies) {
  if (k < 2) throw std::invalid_argument("windmill requires k >= 2");
  const std::size_t n = copies * (k - 1) + 1;
  GraphBuilder b(n);
  for (std::size_t c = 0; c < copies; ++c) {
    std::vector<Vertex> block{0};
    for (std::size_t i = 0; i < k - 1; ++i) block.push_back(1 + c * (k - 1) + i);
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) b.add_edge(block[i], block[j]);
  }
  return b.build();
}

inline Graph kite_pendant(std::size_t k) {
  if (k < 1) throw std::invalid_argument("kite_pendant requires k >= 1");
  GraphBuilder b(2 * k + 1);
  for (Vertex u = 0; u < 2 * k; ++u)
    for (Vertex v = u + 1; v < 2 * k; ++v) b.add_edge(u, v);
  b.add_edge(0, 2 * k);
  return b.build();
}

inline Graph corollary1_graph(std::size_t k, std::size_t p) {
  if (k < 2) throw std::invalid_argument("corollary1 requires k >= 2");
  std::vector<Graph> parts(p, complete_graph(2 * k));
  parts.push_back(complete_graph(2 * k + 1));
  return join(Graph(1), disjoint_union(parts));
}

inline Graph lemma2_exception(std::size_t k, std::size_t copies) {
  if (k < 1) throw std::invalid_argument("lemma2_exception requires k >= 1");
  std::vector<Graph> parts(copies, complete_graph(2 * k));
  parts.push_back(kite_pendant(k));
  return disjoint_union(parts);
}

namespace detail {

inline std::int64_t require_param(const ConstructionSpec& spec, std::string_view name) {
  auto it = spec.params.find(name);
  if (it == spec.params.end())
    throw std::invalid_argument(std::string(to_string(spec.family)) + ": missing parameter '" +
                                std::string(name) + "'");
  return it->second;
}

inline void require(bool ok, const ConstructionSpec& spec, std::string_view constraint) {
  if (!ok)
    throw std::invalid_argument(std::string(to_string(spec.family)) + ": constraint violated: " +
                                std::string(constraint));
}

}  // namespace detail

inline Graph build_construction(const ConstructionSpec& spec) {
  using detail::require;
  using detail::require_param;
  auto as_size = [](std::int64_t v) { return static_cast<std::size_t>(v); };
  switch (spec.family) {
    case Family::s_nk:
    case Family::s_nk_plus: {
      auto n = require_param(spec, "n");
      auto k = require_param(spec, "k");
      require(n > k && k >= 1, spec, "n > k >= 1");
      if (spec.family == Family::s_nk) return s_nk(as_size(n), as_size(k));
      require(n >= k + 2, spec, "n >= k+2");
      return s_nk_plus(as_size(n), as_size(k));
    }
    case Family::windmill: {
      auto k = require_param(spec, "k");
      auto c = require_param(spec, "c");
      require(k >= 2, spec, "k >= 2");
      require(c >= 0, spec, "c >= 0");
      return windmill(as_size(k), as_size(c));
    }
    case Family::kite_pendant: {
      auto k = require_param(spec, "k");
      require(k >= 1, spec, "k >= 1");
      return kite_pendant(as_size(k));
    }
    case Family::corollary1: {
      auto k = require_param(spec, "k");
      auto p = require_param(spec, "p");
      require(k >= 2, spec, "k >= 2");
      require(p >= 0, spec, "p >= 0");
      if (auto it = spec.params.find("n"); it != spec.params.end())
        require(it->second == 2 * (p + 1) * k + 2, spec, "n = 2(p+1)k+2");
      return corollary1_graph(as_size(k), as_size(p));
    }
    case Family::lemma2_exception: {
      auto k = require_param(spec, "k");
      auto copies = require_param(spec, "copies");
      require(k >= 1, spec, "k >= 1");
      require(copies >= 0, spec, "copies >= 0");
      return lemma2_exception(as_size(k), as_size(copies));
    }
    case Family::complete:
    case Family::path:
    case Family::cycle:
    case Family::star:
    case Family::edgeless: {
      auto n = require_param(spec, "n");
      require(n >= 0, spec, "n >= 0");
      switch (spec.family) {
        case Family::complete: return complete_graph(as_size(n));
        case Family::path: return path_graph(as_size(n));
        case Family::cycle:
          require(n >= 3, spec, "n >= 3");
          return cycle_graph(as_size(n));
        case Family::star:
          require(n >= 1, spec, "n >= 1");
          return star_graph(as_size(n));
        default: return Graph(as_size(n));
      }
    }
  }
  throw std::invalid_argument("unknown construction family");
}

}  // namespace qext
