#include "qext/verify.hpp"

#include <random>
#include <string>
#include <variant>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qext/constructions.hpp"

namespace qext {
namespace {

CheckParams with_k(std::int64_t k) {
  CheckParams p;
  p.k = k;
  return p;
}

TEST(CheckStatement, PathBoundEqualityOnTriangles) {
  Graph g = disjoint_union({complete_graph(3), complete_graph(3), complete_graph(3)});
  auto out = check_statement(Statement::egp, g, with_k(2));
  EXPECT_EQ(out.status, CheckStatus::equality_case);
  EXPECT_EQ(out.lhs, 9);
  EXPECT_EQ(out.rhs, 9);
}

TEST(CheckStatement, PathBoundPreconditionCarriesWitness) {
  auto out = check_statement(Statement::egp, path_graph(5), with_k(2));
  EXPECT_EQ(out.status, CheckStatus::precondition_unmet);
  ASSERT_TRUE(std::holds_alternative<PathWitness>(out.witness));
  EXPECT_TRUE(is_valid_path(path_graph(5), std::get<PathWitness>(out.witness), 4));
}

TEST(CheckStatement, Lemma1OnCycleAndTriangle) {
  Graph g = disjoint_union({cycle_graph(4), complete_graph(3)});
  auto out = check_statement(Statement::lemma1, g, with_k(2));
  EXPECT_EQ(out.status, CheckStatus::holds);
  EXPECT_EQ(out.lhs, 3);
  EXPECT_EQ(out.rhs, 3);
}

TEST(CheckStatement, Lemma2ExceptionalStructure) {
  Graph g = disjoint_union({complete_graph(4), kite_pendant(2)});
  CheckParams p = with_k(2);
  p.v = 8;
  auto out = check_statement(Statement::lemma2, g, p);
  EXPECT_EQ(out.status, CheckStatus::holds);
  EXPECT_EQ(out.lhs, 25);
  EXPECT_EQ(out.rhs, 24);
  EXPECT_NE(out.note.find("exceptional"), std::string::npos);

  // Same counts but the pendant hangs off a different block: not the exception.
  p.v = 0;
  EXPECT_EQ(check_statement(Statement::lemma2, g, p).status, CheckStatus::precondition_unmet);
}

TEST(CheckStatement, NiOnTriangle) {
  CheckParams p = with_k(1);
  p.part_a = VertexSet({0, 1});
  auto out = check_statement(Statement::ni, complete_graph(3), p);
  EXPECT_EQ(out.status, CheckStatus::holds);
  EXPECT_EQ(out.lhs, 4);
  EXPECT_EQ(out.rhs, 3);
  ASSERT_TRUE(std::holds_alternative<PathWitness>(out.witness));
  EXPECT_EQ(std::get<PathWitness>(out.witness).vertices, (std::vector<Vertex>{0, 2, 1}));
}

TEST(CheckStatement, CorollaryOneInstance) {
  CheckParams p = with_k(2);
  p.p = 5;
  auto out = check_statement(Statement::cor1, Graph(), p);
  EXPECT_EQ(out.status, CheckStatus::holds);
  EXPECT_EQ(out.rhs, 28);
  EXPECT_LT(out.lhs, 28);
  p.p = 1;  // n = 10 < 6k+13
  EXPECT_EQ(check_statement(Statement::cor1, Graph(), p).status, CheckStatus::precondition_unmet);
}

TEST(CheckStatement, CorollaryTwo) {
  // K_1 joined to six K_4: every component of G - w has order 2k.
  std::vector<Graph> blocks(6, complete_graph(4));
  Graph g = join(Graph(1), disjoint_union(blocks));
  CheckParams p = with_k(2);
  p.w = 0;
  auto out = check_statement(Statement::cor2, g, p);
  EXPECT_EQ(out.status, CheckStatus::holds);
  EXPECT_LT(out.lhs, 27);
  p.w = 1;  // G - 1 stays connected with too many edges
  EXPECT_EQ(check_statement(Statement::cor2, g, p).status, CheckStatus::precondition_unmet);
  // the K_5 block is a component of order 2k+1 with more than (k-1)v(C) edges
  p.w = 0;
  EXPECT_EQ(check_statement(Statement::cor2, corollary1_graph(2, 5), p).status,
            CheckStatus::precondition_unmet);
  EXPECT_THROW(check_statement(Statement::cor2, g, with_k(2)), std::invalid_argument);
}

TEST(CheckStatement, OreAndKopylov) {
  Graph g = complete_graph(5).with_edge_toggled(0, 1).with_edge_toggled(2, 3);
  auto out = check_statement(Statement::ore, g, {});
  EXPECT_EQ(out.status, CheckStatus::holds);
  ASSERT_TRUE(std::holds_alternative<CycleWitness>(out.witness));
  EXPECT_EQ(check_statement(Statement::ore, path_graph(2), {}).status,
            CheckStatus::precondition_unmet);

  // S_{n,k} is connected with no path of order 2k+2 and meets the first Kopylov term.
  Graph s = s_nk(9, 2);
  auto kop = check_statement(Statement::kopylov_i, s, with_k(2));
  EXPECT_EQ(kop.status, CheckStatus::holds);
  EXPECT_EQ(kop.lhs, kop.rhs);
  EXPECT_EQ(check_statement(Statement::kopylov_i, disjoint_union({s, Graph(1)}), with_k(2)).status,
            CheckStatus::precondition_unmet);
}

TEST(CheckStatement, CycleBoundEqualityIsStructural) {
  // Windmill: the named equality family.
  auto wind = check_statement(Statement::egc, windmill(3, 3), with_k(3));
  EXPECT_EQ(wind.status, CheckStatus::equality_case);
  // A path of order four has no cycle at all and meets e = k(n-1)/2 at k = 2,
  // yet is not a set of edges sharing one vertex.
  auto p4 = check_statement(Statement::egc, path_graph(4), with_k(2));
  EXPECT_EQ(p4.status, CheckStatus::violated);
  EXPECT_EQ(p4.lhs, p4.rhs);
  // Long cycles make the hypothesis fail.
  auto k4 = check_statement(Statement::egc, complete_graph(4), with_k(2));
  EXPECT_EQ(k4.status, CheckStatus::precondition_unmet);
  ASSERT_TRUE(std::holds_alternative<CycleWitness>(k4.witness));
}

TEST(CheckStatement, TheoremOne) {
  EXPECT_EQ(check_statement(Statement::theorem1, complete_graph(10), with_k(2)).status,
            CheckStatus::precondition_unmet);
  auto kn = check_statement(Statement::theorem1, complete_graph(26), with_k(2));
  EXPECT_EQ(kn.status, CheckStatus::holds);
  EXPECT_EQ(check_statement(Statement::theorem1_corollary, complete_graph(26), with_k(2)).status,
            CheckStatus::holds);
  EXPECT_EQ(check_statement(Statement::theorem1, s_nk(26, 2), with_k(2)).status,
            CheckStatus::precondition_unmet);
}

TEST(CheckStatement, ErrorsOnMissingParameters) {
  EXPECT_THROW(check_statement(Statement::egp, path_graph(3), {}), std::invalid_argument);
  EXPECT_THROW(check_statement(Statement::egc, path_graph(3), with_k(1)), std::invalid_argument);
  EXPECT_THROW(check_statement(Statement::lemma2, path_graph(3), with_k(1)), std::invalid_argument);
  CheckParams ni = with_k(1);
  EXPECT_THROW(check_statement(Statement::ni, path_graph(3), ni), std::invalid_argument);
  ni.part_a = VertexSet({7});
  EXPECT_THROW(check_statement(Statement::ni, path_graph(3), ni), std::invalid_argument);
  EXPECT_THROW(check_statement(Statement::prop1, path_graph(3), {}), std::invalid_argument);
  EXPECT_FALSE(parse_statement("nonsense"));
}

TEST(CheckStatement, BudgetBecomesIndeterminate) {
  // A large sparse graph where the path search must explore many branches.
  Graph g = corollary1_graph(2, 20);
  auto out = check_statement(Statement::lemma1, g, with_k(3));
  EXPECT_NE(out.status, CheckStatus::violated);
}

TEST(CheckStatement, Deterministic) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    Graph g = oracle::random_graph(8, 0.35, rng);
    for (auto s : {Statement::egp, Statement::lemma1, Statement::kopylov_ii, Statement::egc}) {
      EXPECT_EQ(check_statement(s, g, with_k(2)), check_statement(s, g, with_k(2)));
    }
  }
}

TEST(Prop1, DeskScale) {
  Prop1Values v;
  auto out = check_prop1(25, 2, &v);
  EXPECT_EQ(out.status, CheckStatus::holds);
  EXPECT_NEAR(v.lower, 26.846154, 1e-6);
  EXPECT_NEAR(v.q_snk, 26.851030, 1e-6);
  EXPECT_NEAR(v.upper, 26.870968, 1e-6);
  EXPECT_LE(v.residual, 1e-9);
  EXPECT_EQ(check_prop1(50, 3).status, CheckStatus::holds);
  EXPECT_EQ(check_prop1(20, 2).status, CheckStatus::precondition_unmet);
}

TEST(ConstructionProbe, Examples) {
  auto a = theorem1_construction_probe(25, 2);
  EXPECT_EQ(a.status, CheckStatus::holds);
  EXPECT_NE(a.note.find("q(S)=26.851029"), std::string::npos);
  auto b = theorem1_construction_probe(26, 2);
  EXPECT_EQ(b.status, CheckStatus::holds);
  EXPECT_LT(b.lhs, 28);
  auto c = theorem1_construction_probe(10, 2);
  EXPECT_EQ(c.status, CheckStatus::precondition_unmet);
  EXPECT_EQ(c.rhs, 12);
}

// lemma3 on random hosts satisfying its hypothesis, random blocks of order
// 2k and random attachment sets.
TEST(Lemma3, RandomInstances) {
  std::mt19937_64 rng(313);
  for (std::int64_t k : {2, 3}) {
    for (std::int64_t p : {1, 2, 3}) {
      const std::int64_t m_min = std::max<std::int64_t>(1, 6 * k + 13 - 2 * k * p);
      std::uniform_int_distribution<std::int64_t> order(m_min, m_min + 10);
      std::uniform_real_distribution<double> dens(0.05, 0.6);
      int checked = 0;
      while (checked < 100) {
        const auto m = static_cast<std::size_t>(order(rng));
        Graph host = checked % 4 == 0 && m > static_cast<std::size_t>(k)
                         ? s_nk(m, static_cast<std::size_t>(k))
                         : oracle::random_graph(m, dens(rng), rng);
        CheckParams prm = with_k(k);
        prm.p = p;
        prm.w = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
        for (std::int64_t i = 0; i < p; ++i)
          prm.blocks.push_back(oracle::random_graph(static_cast<std::size_t>(2 * k), dens(rng), rng));
        std::vector<Vertex> attach;
        std::bernoulli_distribution coin(0.5);
        for (Vertex a = 0; a < static_cast<Vertex>(2 * k * p); ++a)
          if (coin(rng)) attach.push_back(a);
        prm.attachment = VertexSet(attach);
        auto out = check_statement(Statement::lemma3, host, prm);
        if (out.status == CheckStatus::precondition_unmet) continue;
        ASSERT_EQ(out.status, CheckStatus::holds) << out.note;
        ++checked;
      }
    }
  }
}

TEST(Lemma3, BuildsTheDescribedGraph) {
  Graph host = path_graph(3);
  std::vector<Graph> blocks{complete_graph(4), cycle_graph(4)};
  Graph g = detail::lemma3_graph(host, 2, 2, 1, blocks, VertexSet({0, 5}));
  EXPECT_EQ(g.order(), 11u);
  EXPECT_EQ(g.size(), 6u + 4u + 2u + 2u);
  EXPECT_TRUE(g.adjacent(0, 9));
  EXPECT_TRUE(g.adjacent(5, 9));
  EXPECT_TRUE(g.adjacent(8, 9));
}

TEST(Lemma3, HostEqualsGraphWithoutBlocks) {
  // p = 0: G = H and the hypothesis threshold equals the conclusion.
  CheckParams prm = with_k(2);
  prm.p = 0;
  prm.w = 0;
  auto out = check_statement(Statement::lemma3, s_nk(25, 2), prm);
  EXPECT_EQ(out.status, CheckStatus::holds);
  auto eq = check_statement(Statement::lemma3, complete_graph(26).with_edge_toggled(0, 1), prm);
  EXPECT_EQ(eq.status, CheckStatus::precondition_unmet);
}

TEST(Lemma3, Rejections) {
  CheckParams prm = with_k(2);
  prm.w = 0;
  EXPECT_THROW(check_statement(Statement::lemma3, path_graph(3), prm), std::invalid_argument);
  prm.p = 1;
  prm.blocks = {complete_graph(3)};
  EXPECT_THROW(check_statement(Statement::lemma3, path_graph(3), prm), std::invalid_argument);
  prm.blocks.clear();
  prm.attachment = VertexSet({4});
  EXPECT_THROW(check_statement(Statement::lemma3, path_graph(3), prm), std::invalid_argument);
}

TEST(RunSuite, PathBoundAndLemmasHaveNoViolations) {
  SuiteOptions opt;
  opt.statements = {Statement::egp, Statement::lemma1};
  opt.n_max = 7;
  opt.k_values = {1, 2, 3};
  auto rep = run_suite(opt);
  EXPECT_EQ(rep.totals.violated, 0u);
  EXPECT_EQ(rep.per_statement.at("egp").equality_case, 6u);
  std::size_t sum = rep.totals.holds + rep.totals.equality_case + rep.totals.violated +
                    rep.totals.precondition_unmet + rep.totals.indeterminate;
  EXPECT_EQ(sum, rep.totals.instances);
}

TEST(RunSuite, CycleBoundNeverExceeded) {
  SuiteOptions opt;
  opt.statements = {Statement::egc};
  opt.n_max = 6;
  opt.k_values = {2, 3};
  auto rep = run_suite(opt);
  for (const auto& v : rep.violations) {
    EXPECT_EQ(v.outcome.lhs, v.outcome.rhs) << v.graph6;
    EXPECT_TRUE(is_connected(parse_graph6(v.graph6))) << v.graph6;
  }
}

TEST(RunSuite, OreOnFiveVertices) {
  SuiteOptions opt;
  opt.statements = {Statement::ore};
  opt.n_max = 5;
  auto rep = run_suite(opt);
  EXPECT_EQ(rep.totals.violated, 0u);
  EXPECT_EQ(rep.totals.instances, 1u + 2 + 4 + 11 + 34);
  // K_3; K_4 and K_4 minus an edge; the four 5-vertex graphs with e >= 8
  EXPECT_EQ(rep.totals.holds, 1u + 2 + 4);
}

TEST(RunSuite, ParallelMatchesSerial) {
  SuiteOptions opt;
  opt.statements = {Statement::lemma2, Statement::ni, Statement::egc};
  opt.n_max = 6;
  opt.k_values = {1, 2};
  auto serial = run_suite(opt);
  opt.jobs = 3;
  EXPECT_EQ(run_suite(opt), serial);
}

TEST(RunSuite, NiSamplingAboveExhaustiveLimit) {
  SuiteOptions opt;
  opt.statements = {Statement::ni};
  opt.n_min = 7;
  opt.n_max = 7;
  opt.k_values = {1};
  auto rep = run_suite(opt);
  EXPECT_EQ(rep.totals.instances, 1044u * 50);
  EXPECT_EQ(rep.totals.violated, 0u);
}

TEST(RunSuite, CorpusAndErrors) {
  SuiteOptions opt;
  opt.statements = {Statement::egp};
  opt.n_max = 9;
  EXPECT_THROW(run_suite(opt), std::invalid_argument);
  opt.corpus = std::vector<Graph>{oracle::petersen(), s_nk(12, 2)};
  auto rep = run_suite(opt);
  EXPECT_EQ(rep.totals.instances, 2u * 3);
  opt.statements = {Statement::lemma3};
  EXPECT_THROW(run_suite(opt), std::invalid_argument);
}

}  // namespace
}  // namespace qext
