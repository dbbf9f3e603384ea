#include "qext/search.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "qext/bounds.hpp"
#include "qext/constructions.hpp"

namespace qext {
namespace {

double exhaustive_max(std::size_t n, std::size_t forbidden) {
  double best = 0.0;
  for_each_nonisomorphic(n, [&](const Graph& g) {
    if (g.size() == 0 || find_cycle_of_length(g, forbidden)) return;
    best = std::max(best, q_index(g, 1e-12).q);
  });
  return best;
}

void expect_feasible(const SearchResult& r, const std::vector<std::size_t>& forbidden) {
  EXPECT_TRUE(r.feasible);
  for (auto l : forbidden) EXPECT_FALSE(find_cycle_of_length(r.best, l)) << l;
}

TEST(Search, SixVerticesAgreesWithExhaustiveMaximum) {
  for (std::size_t l : {3u, 4u, 5u, 6u}) {
    SearchOptions opt;
    opt.n = 6;
    opt.forbidden = {l};
    opt.restarts = 30;
    opt.budget = 2000;
    auto r = maximize_q_forbidden_cycles(opt);
    expect_feasible(r, opt.forbidden);
    EXPECT_NEAR(r.q, exhaustive_max(6, l), 1e-8) << "forbid " << l;
  }
}

TEST(Search, SeededWithSnkNeverDropsBelowSeed) {
  SearchOptions opt;
  opt.n = 10;
  opt.forbidden = {5};
  opt.seed_graph = s_nk(10, 2);
  opt.restarts = 4;
  auto r = maximize_q_forbidden_cycles(opt);
  expect_feasible(r, opt.forbidden);
  EXPECT_GE(r.q, closed_form_snk(10, 2) - 1e-9);
}

TEST(Search, SeededWithSnkPlus) {
  SearchOptions opt;
  opt.n = 12;
  opt.forbidden = {6};
  opt.seed_graph = s_nk_plus(12, 2);
  opt.restarts = 3;
  auto r = maximize_q_forbidden_cycles(opt);
  expect_feasible(r, opt.forbidden);
  EXPECT_GE(r.q, q_index(s_nk_plus(12, 2), 1e-12).q - 1e-9);
  EXPECT_LE(r.q_interval.first, r.q);
  EXPECT_GE(r.q_interval.second, r.q);
}

TEST(Search, SeedFamilyIsRecognized) {
  // Forests only. Every spanning tree is a local maximum under single toggles,
  // so start from the star.
  SearchOptions opt;
  opt.n = 7;
  opt.forbidden = {3, 4, 5, 6, 7};
  opt.restarts = 4;
  opt.seed_graph = star_graph(7);
  auto r = maximize_q_forbidden_cycles(opt);
  EXPECT_NEAR(r.q, 7.0, 1e-9);
  ASSERT_TRUE(r.matched_family);
  EXPECT_EQ(*r.matched_family, "s_nk:1");
}

TEST(Search, DeterministicAcrossJobCounts) {
  SearchOptions opt;
  opt.n = 9;
  opt.forbidden = {4, 6};
  opt.restarts = 6;
  opt.seed = 17;
  auto a = maximize_q_forbidden_cycles(opt);
  auto b = maximize_q_forbidden_cycles(opt);
  EXPECT_EQ(a, b);
  opt.jobs = 3;
  EXPECT_EQ(maximize_q_forbidden_cycles(opt), a);
  EXPECT_TRUE(std::is_sorted(a.ties.begin(), a.ties.end(),
                             [](const SearchTie& x, const SearchTie& y) { return x.graph6 < y.graph6; }) ||
              a.ties.size() <= 1);
  for (const auto& t : a.ties) EXPECT_LE(std::abs(t.q - a.q), kTieWindow);
}

TEST(Search, RejectsBadInput) {
  SearchOptions opt;
  opt.n = 2;
  opt.forbidden = {3};
  EXPECT_THROW(maximize_q_forbidden_cycles(opt), std::invalid_argument);
  opt.n = 6;
  opt.forbidden = {2};
  EXPECT_THROW(maximize_q_forbidden_cycles(opt), std::invalid_argument);
  opt.forbidden = {3};
  opt.restarts = 0;
  EXPECT_THROW(maximize_q_forbidden_cycles(opt), std::invalid_argument);
  opt.restarts = 1;
  opt.seed_graph = complete_graph(6);
  EXPECT_THROW(maximize_q_forbidden_cycles(opt), std::invalid_argument);
  opt.seed_graph = complete_graph(5);
  EXPECT_THROW(maximize_q_forbidden_cycles(opt), std::invalid_argument);
}

}  // namespace
}  // namespace qext
