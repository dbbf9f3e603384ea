#include "qext/graph.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qext/constructions.hpp"
#include "qext/enumeration.hpp"

namespace qext {
namespace {

TEST(BuildGraph, PathOfOrderThree) {
  Graph g = build_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.degree(2), 1u);
}

TEST(BuildGraph, CompleteAndEdgeless) {
  Graph k4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  for (Vertex u = 0; u < 4; ++u) EXPECT_EQ(k4.degree(u), 3u);
  Graph e5 = build_graph(5, {});
  EXPECT_EQ(e5.size(), 0u);
  EXPECT_EQ(e5.order(), 5u);
}

TEST(BuildGraph, DeduplicatesAndRejects) {
  Graph g = build_graph(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_THROW(build_graph(3, {{0, 3}}), std::out_of_range);
  EXPECT_THROW(build_graph(3, {{1, 1}}), std::invalid_argument);
}

TEST(BuildGraph, SymmetricIrreflexiveAndDegreeSum) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Graph g = oracle::random_graph(1 + t % 20, 0.4, rng);
    std::size_t sum = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
      EXPECT_FALSE(g.adjacent(u, u));
      std::size_t d = 0;
      for (Vertex v = 0; v < g.order(); ++v) {
        EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
        d += g.adjacent(u, v);
      }
      EXPECT_EQ(d, g.degree(u));
      sum += d;
    }
    EXPECT_EQ(sum, 2 * g.size());
  }
}

TEST(Join, Examples) {
  Graph s52 = join(complete_graph(2), Graph(3));
  EXPECT_EQ(s52.order(), 5u);
  EXPECT_EQ(s52.size(), 7u);
  EXPECT_TRUE(isomorphic(s52, s_nk(5, 2)));

  Graph wheel = join(Graph(1), cycle_graph(4));
  EXPECT_EQ(wheel.size(), 8u);
  EXPECT_EQ(wheel.degree(0), 4u);

  Graph k2 = join(Graph(1), Graph(1));
  EXPECT_TRUE(k2.adjacent(0, 1));
  EXPECT_EQ(k2.size(), 1u);
}

TEST(Join, EdgeCountProperty) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> order(0, 8);
  std::uniform_real_distribution<double> dens(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_graph(order(rng), dens(rng), rng);
    Graph h = oracle::random_graph(order(rng), dens(rng), rng);
    Graph j = join(g, h);
    ASSERT_EQ(j.order(), g.order() + h.order());
    ASSERT_EQ(j.size(), g.size() + h.size() + g.order() * h.order());
    for (auto [u, v] : h.edges()) ASSERT_TRUE(j.adjacent(g.order() + u, g.order() + v));
  }
}

TEST(DisjointUnion, Examples) {
  Graph two = disjoint_union({complete_graph(4), complete_graph(4)});
  EXPECT_EQ(two.order(), 8u);
  EXPECT_EQ(two.size(), 12u);
  EXPECT_EQ(components(two).size(), 2u);

  Graph p3 = path_graph(3);
  EXPECT_EQ(disjoint_union({p3}), p3);

  Graph mix = disjoint_union({complete_graph(3), Graph(2)});
  EXPECT_EQ(mix.order(), 5u);
  EXPECT_EQ(mix.size(), 3u);
  EXPECT_EQ(components(mix).size(), 3u);
}

TEST(Components, Examples) {
  auto c = components(disjoint_union({complete_graph(3), complete_graph(2)}));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].size(), 3u);
  EXPECT_EQ(c[1].size(), 2u);
  EXPECT_EQ(components(cycle_graph(5)).size(), 1u);
  auto singles = components(Graph(4));
  ASSERT_EQ(singles.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(singles[i].members, std::vector<Vertex>{i});
}

TEST(Components, PartitionProperty) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    Graph g = oracle::random_graph(1 + t % 15, 0.12, rng);
    auto parts = components(g);
    std::vector<int> owner(g.order(), -1);
    Vertex last_min = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      ASSERT_FALSE(parts[i].empty());
      if (i > 0) EXPECT_GT(parts[i].members.front(), last_min);
      last_min = parts[i].members.front();
      for (auto v : parts[i].members) {
        ASSERT_EQ(owner[v], -1);
        owner[v] = static_cast<int>(i);
      }
      EXPECT_TRUE(is_connected(induced_subgraph(g, parts[i])));
    }
    for (auto o : owner) EXPECT_NE(o, -1);
    for (auto [u, v] : g.edges()) EXPECT_EQ(owner[u], owner[v]);
  }
}

TEST(NeighborDegreeSum, Examples) {
  EXPECT_EQ(neighbor_degree_sum(path_graph(3), 1), 2u);
  EXPECT_EQ(neighbor_degree_sum(complete_graph(4), 2), 9u);
  EXPECT_EQ(neighbor_degree_sum(star_graph(5), 0), 4u);
  EXPECT_THROW(neighbor_degree_sum(path_graph(3), 3), std::out_of_range);
}

TEST(NeighborDegreeSum, DoubleCountingOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for_each_nonisomorphic(n, [&](const Graph& g) {
      for (Vertex u = 0; u < n; ++u) {
        Bitset nb = g.neighbors(u);
        Bitset rest(n);
        rest.set_all();
        rest.subtract(nb);
        std::size_t identity = 2 * edges_within(g, nb) + edges_between(g, nb, rest);
        ASSERT_EQ(neighbor_degree_sum(g, u), identity);
      }
    });
  }
}

TEST(Graph, EdgeToggleSharesUntouchedRows) {
  Graph g = cycle_graph(6);
  Graph h = g.with_edge_toggled(0, 3);
  EXPECT_TRUE(h.adjacent(0, 3));
  EXPECT_FALSE(g.adjacent(0, 3));
  EXPECT_EQ(h.size(), g.size() + 1);
  Graph back = h.with_edge_toggled(3, 0);
  EXPECT_EQ(back, g);
}

TEST(Graph, StructuralPredicates) {
  EXPECT_TRUE(is_regular(cycle_graph(5)));
  EXPECT_FALSE(is_bipartite(cycle_graph(5)));
  EXPECT_TRUE(is_bipartite(cycle_graph(6)));
  EXPECT_TRUE(is_semiregular_bipartite(star_graph(5)));
  EXPECT_FALSE(is_semiregular_bipartite(path_graph(4)));
  EXPECT_TRUE(is_complete(complete_graph(5)));
  EXPECT_FALSE(is_complete(s_nk(5, 2)));
}

}  // namespace
}  // namespace qext
