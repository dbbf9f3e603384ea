#pragma once

// Immutable simple undirected graphs over dense vertex indices 0..n-1.
//
// Adjacency is stored as packed bit rows shared through shared_ptr, so
// toggling an edge produces a new Graph that copies only the two rows it
// touches. Graph values are immutable and safe to share across threads.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qext {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kMaxVertices = 512;

/// Fixed-width bitset sized at runtime; one word per 64 vertices.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t bits() const { return nbits_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void set_all() {
    std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
    trim();
  }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  bool any() const { return !none(); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// this &= ~o
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  std::size_t intersection_count(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  /// Index of the first set bit at or after `from`, or bits() if none.
  std::size_t next(std::size_t from) const {
    if (from >= nbits_) return nbits_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) {
        std::size_t idx = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
        return idx < nbits_ ? idx : nbits_;
      }
      if (++wi == words_.size()) return nbits_;
      w = words_[wi];
    }
  }
  std::size_t first() const { return next(0); }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        fn((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  void trim() {
    if (nbits_ & 63) words_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A sorted, duplicate-free set of vertex indices.
struct VertexSet {
  std::vector<Vertex> members;

  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> m) : members(std::move(m)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  bool contains(Vertex v) const {
    return std::binary_search(members.begin(), members.end(), v);
  }
  Bitset to_bitset(std::size_t n) const {
    Bitset b(n);
    for (auto v : members) b.set(v);
    return b;
  }
  static VertexSet from_bitset(const Bitset& b) { return VertexSet(b.to_vector()); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

class Graph {
 public:
  /// The empty graph of order 0.
  Graph() = default;

  /// Edgeless graph of order n.
  explicit Graph(std::size_t n) : n_(check_order(n)), degree_(n, 0) {
    auto empty_row = std::make_shared<const Bitset>(n);
    rows_.assign(n, empty_row);
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u]->test(v); }
  std::size_t degree(Vertex u) const { return degree_[u]; }
  const Bitset& neighbors(Vertex u) const { return *rows_[u]; }
  std::span<const std::size_t> degrees() const { return degree_; }

  std::size_t max_degree() const {
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
  }
  std::size_t min_degree() const {
    return degree_.empty() ? 0 : *std::min_element(degree_.begin(), degree_.end());
  }

  /// Edges (u,v) with u < v, in row-major order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
      for (auto v = rows_[u]->next(u + 1); v < n_; v = rows_[u]->next(v + 1))
        out.emplace_back(u, v);
    }
    return out;
  }

  /// Copy with the pair {u,v} toggled; only the two affected rows are copied.
  Graph with_edge_toggled(Vertex u, Vertex v) const {
    check_pair(u, v);
    Graph g = *this;
    auto ru = std::make_shared<Bitset>(*rows_[u]);
    auto rv = std::make_shared<Bitset>(*rows_[v]);
    bool had = ru->test(v);
    ru->flip(v);
    rv->flip(u);
    g.rows_[u] = std::move(ru);
    g.rows_[v] = std::move(rv);
    if (had) {
      --g.degree_[u];
      --g.degree_[v];
      --g.m_;
    } else {
      ++g.degree_[u];
      ++g.degree_[v];
      ++g.m_;
    }
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_ || a.m_ != b.m_) return false;
    for (Vertex u = 0; u < a.n_; ++u)
      if (a.rows_[u] != b.rows_[u] && *a.rows_[u] != *b.rows_[u]) return false;
    return true;
  }

 private:
  friend class GraphBuilder;

  static std::size_t check_order(std::size_t n) {
    if (n > kMaxVertices)
      throw std::invalid_argument("graph order " + std::to_string(n) + " exceeds limit " +
                                  std::to_string(kMaxVertices));
    return n;
  }
  void check_pair(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_)
      throw std::out_of_range("vertex pair (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range for order " + std::to_string(n_));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::shared_ptr<const Bitset>> rows_;
  std::vector<std::size_t> degree_;
};

/// Mutable staging area; freeze with build(). Duplicate edges are ignored.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : n_(Graph::check_order(n)), rows_(n, Bitset(n)) {}

  std::size_t order() const { return n_; }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_)
      throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an index outside 0.." + std::to_string(n_ == 0 ? 0 : n_ - 1));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
    return *this;
  }
  bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }

  Graph build() const {
    Graph g;
    g.n_ = n_;
    g.degree_.resize(n_);
    g.rows_.reserve(n_);
    std::size_t twice_m = 0;
    for (Vertex u = 0; u < n_; ++u) {
      g.degree_[u] = rows_[u].count();
      twice_m += g.degree_[u];
      g.rows_.push_back(std::make_shared<const Bitset>(rows_[u]));
    }
    g.m_ = twice_m / 2;
    return g;
  }

 private:
  std::size_t n_;
  std::vector<Bitset> rows_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// G ∨ H: vertices of G keep labels 0..v(G)-1, H's are shifted by v(G).
inline Graph join(const Graph& g, const Graph& h) {
  const std::size_t a = g.order();
  GraphBuilder b(a + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(a + u, a + v);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < h.order(); ++v) b.add_edge(u, a + v);
  return b.build();
}

/// Parts are laid out consecutively in the given order.
inline Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.order();
  GraphBuilder b(total);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges()) b.add_edge(offset + u, offset + v);
    offset += p.order();
  }
  return b.build();
}

inline Graph disjoint_union(std::initializer_list<Graph> parts) {
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

/// Vertices reachable from `start` inside `allowed` (start must be allowed).
inline Bitset reachable_within(const Graph& g, Vertex start, const Bitset& allowed) {
  Bitset seen(g.order());
  Bitset frontier(g.order());
  seen.set(start);
  frontier.set(start);
  while (frontier.any()) {
    Bitset next(g.order());
    frontier.for_each([&](std::size_t u) { next |= g.neighbors(u); });
    next &= allowed;
    next.subtract(seen);
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

/// Connected components ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  Bitset all(g.order());
  all.set_all();
  Bitset unseen = all;
  for (auto s = unseen.first(); s < g.order(); s = unseen.next(s + 1)) {
    Bitset comp = reachable_within(g, s, all);
    unseen.subtract(comp);
    out.push_back(VertexSet::from_bitset(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

/// Σ_{v∈Γ(u)} d_v.
inline std::size_t neighbor_degree_sum(const Graph& g, Vertex u) {
  if (u >= g.order())
    throw std::out_of_range("vertex " + std::to_string(u) + " out of range for order " +
                            std::to_string(g.order()));
  std::size_t s = 0;
  g.neighbors(u).for_each([&](std::size_t v) { s += g.degree(v); });
  return s;
}

/// e(X): edges with both ends in X.
inline std::size_t edges_within(const Graph& g, const Bitset& x) {
  std::size_t twice = 0;
  x.for_each([&](std::size_t u) { twice += g.neighbors(u).intersection_count(x); });
  return twice / 2;
}

/// e(X,Y) for disjoint X and Y.
inline std::size_t edges_between(const Graph& g, const Bitset& x, const Bitset& y) {
  std::size_t c = 0;
  x.for_each([&](std::size_t u) { c += g.neighbors(u).intersection_count(y); });
  return c;
}

/// Subgraph induced by `keep`, relabeled in ascending order of original index.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> index(g.order(), g.order());
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep.members[i]] = i;
  GraphBuilder b(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    Vertex u = keep.members[i];
    g.neighbors(u).for_each([&](std::size_t v) {
      if (index[v] < keep.size() && index[v] > i) b.add_edge(i, index[v]);
    });
  }
  return b.build();
}

/// G - w, with vertices above w shifted down by one.
inline Graph remove_vertex(const Graph& g, Vertex w) {
  if (w >= g.order()) throw std::out_of_range("vertex " + std::to_string(w) + " out of range");
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != w) keep.push_back(u);
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

inline bool is_regular(const Graph& g) { return g.min_degree() == g.max_degree(); }

/// Two-coloring by BFS; empty optional if an odd cycle exists.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      bool bad = false;
      g.neighbors(u).for_each([&](std::size_t v) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          bad = true;
        }
      });
      if (bad) return std::nullopt;
    }
  }
  return color;
}

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

/// Connected bipartite graph whose degrees are constant on each side.
inline bool is_semiregular_bipartite(const Graph& g) {
  auto coloring = two_coloring(g);
  if (!coloring || !is_connected(g)) return false;
  std::size_t side_degree[2] = {SIZE_MAX, SIZE_MAX};
  for (Vertex u = 0; u < g.order(); ++u) {
    auto& d = side_degree[(*coloring)[u]];
    if (d == SIZE_MAX) d = g.degree(u);
    if (d != g.degree(u)) return false;
  }
  return true;
}

inline bool is_complete(const Graph& g) {
  return 2 * g.size() == g.order() * (g.order() == 0 ? 0 : g.order() - 1);
}

}  // namespace qext
