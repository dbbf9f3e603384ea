#pragma once

// Canonical forms, isomorph-free generation of small graphs, and graph6 I/O.
//
// The adjacency bit string of a labeled graph lists a(i,j) column by column,
// a(0,1); a(0,2), a(1,2); a(0,3), ... (the graph6 order). The canonical form
// is the lexicographically smallest such string over all relabelings that
// place vertices in nondecreasing degree order; two graphs share a form iff
// they are isomorphic. It is stored as one byte holding n followed by the bit
// string packed MSB-first.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <istream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qext/graph.hpp"

namespace qext {

inline constexpr std::size_t kCanonicalLimit = 10;
inline constexpr std::size_t kEnumerationLimit = 8;
inline constexpr std::size_t kGraph6Limit = 62;

struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  std::size_t order() const { return bytes.empty() ? 0 : bytes[0]; }
  Graph to_graph() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes <=> b.bytes;
  }
};

namespace detail {

struct SmallGraph {
  std::size_t n = 0;
  std::array<std::uint16_t, kCanonicalLimit> adj{};
  std::array<std::size_t, kCanonicalLimit> deg{};
};

inline SmallGraph to_small(const Graph& g) {
  SmallGraph s;
  s.n = g.order();
  for (Vertex u = 0; u < s.n; ++u) {
    g.neighbors(u).for_each([&](std::size_t v) { s.adj[u] |= std::uint16_t(1U << v); });
    s.deg[u] = g.degree(u);
  }
  return s;
}

/// Branch-and-bound over degree-respecting relabelings. Slot j receives a
/// vertex whose degree equals the j-th smallest degree; after slot j is
/// filled, column j of the relabeled bit string is fixed.
class Canonicalizer {
 public:
  explicit Canonicalizer(const SmallGraph& g) : g_(g) {
    sorted_deg_.assign(g.deg.begin(), g.deg.begin() + static_cast<long>(g.n));
    std::sort(sorted_deg_.begin(), sorted_deg_.end());
  }

  /// Columns of the minimal relabeled bit string.
  std::vector<std::uint16_t> minimize() {
    cur_.assign(g_.n, 0);
    best_.assign(g_.n, 0);
    sigma_.assign(g_.n, 0);
    used_ = 0;
    has_best_ = false;
    if (g_.n > 0) minimize_rec(0, false);
    return best_;
  }

  /// True iff the identity labeling is degree-sorted and minimal.
  bool is_self_canonical() {
    for (std::size_t i = 0; i < g_.n; ++i)
      if (g_.deg[i] != sorted_deg_[i]) return false;
    best_.assign(g_.n, 0);
    for (std::size_t j = 0; j < g_.n; ++j) best_[j] = column_of_identity(j);
    sigma_.assign(g_.n, 0);
    used_ = 0;
    smaller_found_ = false;
    check_rec(0);
    return !smaller_found_;
  }

 private:
  std::uint16_t column(std::size_t j, std::size_t u) const {
    std::uint16_t col = 0;
    for (std::size_t i = 0; i < j; ++i)
      col = static_cast<std::uint16_t>((col << 1) | ((g_.adj[sigma_[i]] >> u) & 1U));
    return col;
  }
  std::uint16_t column_of_identity(std::size_t j) const {
    std::uint16_t col = 0;
    for (std::size_t i = 0; i < j; ++i)
      col = static_cast<std::uint16_t>((col << 1) | ((g_.adj[i] >> j) & 1U));
    return col;
  }

  bool minimize_rec(std::size_t j, bool tied) {
    if (j == g_.n) {
      if (!has_best_ || !tied) {
        best_ = cur_;
        has_best_ = true;
        return true;
      }
      return false;
    }
    bool updated = false;
    for (std::size_t u = 0; u < g_.n; ++u) {
      if ((used_ >> u) & 1U || g_.deg[u] != sorted_deg_[j]) continue;
      std::uint16_t col = column(j, u);
      bool child_tied = false;
      if (has_best_ && tied) {
        if (col > best_[j]) continue;
        child_tied = col == best_[j];
      }
      cur_[j] = col;
      sigma_[j] = u;
      used_ |= 1U << u;
      if (minimize_rec(j + 1, child_tied)) {
        updated = true;
        tied = true;
      }
      used_ &= ~(1U << u);
    }
    return updated;
  }

  void check_rec(std::size_t j) {
    if (j == g_.n || smaller_found_) return;
    for (std::size_t u = 0; u < g_.n && !smaller_found_; ++u) {
      if ((used_ >> u) & 1U || g_.deg[u] != sorted_deg_[j]) continue;
      std::uint16_t col = column(j, u);
      if (col > best_[j]) continue;
      if (col < best_[j]) {
        smaller_found_ = true;
        return;
      }
      sigma_[j] = u;
      used_ |= 1U << u;
      check_rec(j + 1);
      used_ &= ~(1U << u);
    }
  }

  const SmallGraph& g_;
  std::vector<std::size_t> sorted_deg_;
  std::vector<std::uint16_t> cur_, best_;
  std::vector<std::size_t> sigma_;
  std::uint32_t used_ = 0;
  bool has_best_ = false;
  bool smaller_found_ = false;
};

inline CanonicalForm pack_columns(std::size_t n, const std::vector<std::uint16_t>& cols) {
  CanonicalForm f;
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  f.bytes.assign(1 + (nbits + 7) / 8, 0);
  f.bytes[0] = static_cast<std::uint8_t>(n);
  std::size_t pos = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++pos) {
      if ((cols[j] >> (j - 1 - i)) & 1U) f.bytes[1 + pos / 8] |= std::uint8_t(0x80U >> (pos % 8));
    }
  }
  return f;
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kCanonicalLimit)
    throw std::invalid_argument("canonical form limited to order " +
                                std::to_string(kCanonicalLimit) + ", got " +
                                std::to_string(g.order()));
  auto small = detail::to_small(g);
  detail::Canonicalizer c(small);
  return detail::pack_columns(g.order(), c.minimize());
}

inline Graph CanonicalForm::to_graph() const {
  const std::size_t n = order();
  GraphBuilder b(n);
  std::size_t pos = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++pos)
      if (bytes.at(1 + pos / 8) & (0x80U >> (pos % 8))) b.add_edge(i, j);
  return b.build();
}

/// The canonically relabeled copy of g.
inline Graph canonical_graph(const Graph& g) { return canonical_form(g).to_graph(); }

/// Exact isomorphism test; orders above kCanonicalLimit are only resolved by
/// cheap invariants and otherwise rejected.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<std::size_t> da(a.degrees().begin(), a.degrees().end());
  std::vector<std::size_t> db(b.degrees().begin(), b.degrees().end());
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  if (is_complete(a) || a.size() == 0) return true;
  return canonical_form(a) == canonical_form(b);
}

/// Calls fn on one representative per isomorphism class of order n, in
/// ascending canonical-form order. Each representative is its own canonical
/// labeling.
inline void for_each_nonisomorphic(std::size_t n, const std::function<void(const Graph&)>& fn) {
  if (n > kEnumerationLimit)
    throw std::invalid_argument("native enumeration limited to order " +
                                std::to_string(kEnumerationLimit));
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<std::pair<std::size_t, std::size_t>> pair_at(nbits);
  for (std::size_t j = 1, pos = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++pos) pair_at[pos] = {i, j};

  const std::uint64_t limit = std::uint64_t{1} << nbits;
  detail::SmallGraph s;
  s.n = n;
  for (std::uint64_t key = 0; key < limit; ++key) {
    s.adj.fill(0);
    s.deg.fill(0);
    for (std::size_t pos = 0; pos < nbits; ++pos) {
      if ((key >> (nbits - 1 - pos)) & 1U) {
        auto [i, j] = pair_at[pos];
        s.adj[i] |= std::uint16_t(1U << j);
        s.adj[j] |= std::uint16_t(1U << i);
        ++s.deg[i];
        ++s.deg[j];
      }
    }
    bool sorted = true;
    for (std::size_t i = 1; i < n && sorted; ++i) sorted = s.deg[i - 1] <= s.deg[i];
    if (!sorted) continue;
    detail::Canonicalizer c(s);
    if (!c.is_self_canonical()) continue;
    GraphBuilder b(n);
    for (std::size_t pos = 0; pos < nbits; ++pos)
      if ((key >> (nbits - 1 - pos)) & 1U) b.add_edge(pair_at[pos].first, pair_at[pos].second);
    fn(b.build());
  }
}

inline std::vector<Graph> enumerate_nonisomorphic(std::size_t n) {
  std::vector<Graph> out;
  for_each_nonisomorphic(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

// graph6 ---------------------------------------------------------------------

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6Limit)
    throw std::invalid_argument("graph6 writer supports n <= 62, got " + std::to_string(n));
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("graph6: empty input");
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    if (c < 63 || c > 126)
      throw Graph6Error("graph6: byte " + std::to_string(c) + " outside 63..126");
  }
  auto head = static_cast<unsigned char>(text[0]);
  if (head == 126) throw Graph6Error("graph6: extended order header (n > 62) unsupported");
  const std::size_t n = head - 63;
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - 1 < nbytes)
    throw Graph6Error("graph6: truncated payload, expected " + std::to_string(nbytes) +
                      " bytes after header, got " + std::to_string(text.size() - 1));
  if (text.size() - 1 > nbytes) throw Graph6Error("graph6: trailing bytes after payload");
  GraphBuilder b(n);
  std::size_t pos = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++pos) {
      int group = static_cast<unsigned char>(text[1 + pos / 6]) - 63;
      if ((group >> (5 - pos % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (nbits % 6 != 0) {
    int last = static_cast<unsigned char>(text.back()) - 63;
    if (last & ((1 << (6 - nbits % 6)) - 1)) throw Graph6Error("graph6: nonzero padding bits");
  }
  return b.build();
}

/// One graph per line; blank lines and trailing '\r' are ignored.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace qext
