#include <gtest/gtest.h>

#include <algorithm>

#include "../support/fixtures.hpp"
#include "../support/generators.hpp"
#include "optrepair/io.hpp"
#include "optrepair/priorities.hpp"

using namespace optrepair;
using namespace optrepair::testing;

namespace {

// Consistent candidates that differ from D only on conflict literals; other
// literals never help an improvement, so this is enough for small fixtures.
std::vector<Database> vertex_candidates(const Instance& inst) {
  std::vector<Database> out;
  std::size_t k = inst.hypergraph().size();
  for (std::uint64_t m = 0; m < (1ull << k); ++m) {
    VertexSet kept(k);
    for (std::size_t i = 0; i < k; ++i) kept[i] = (m >> i) & 1;
    Database b = inst.repair_of(kept);
    if (satisfies(b, inst.constraints())) out.push_back(b);
  }
  return out;
}

RepairSet undominated(const PrioritizedDatabase& pdb, bool global) {
  RepairSet out;
  auto cands = vertex_candidates(pdb.instance());
  for (const auto& r : delta_repairs(pdb.instance())) {
    bool improved = std::any_of(cands.begin(), cands.end(), [&](const Database& b) {
      return global ? is_global_improvement(b, r, pdb) : is_pareto_improvement(b, r, pdb);
    });
    if (!improved) out.insert(r);
  }
  return out;
}

RepairSet completion_union(const PrioritizedDatabase& pdb) {
  RepairSet out;
  for_each_completion(pdb, {}, [&](const PriorityRelation& c) {
    PrioritizedDatabase total(pdb.instance(), c);
    auto g = undominated(total, true);
    out.insert(g.begin(), g.end());
    return true;
  });
  return out;
}

}  // namespace

TEST(Priorities, SixLiteralFixtureOptimalRepairs) {
  auto pdb = fixture_pdb("six_literals");
  // frozen from the vertex-subset oracle below
  auto p = repairs_of({"R(d,b)", "R(d,c)", "R(d,b), S(a,c), A(a), B(a)", "R(d,c), S(a,b), A(a), B(a)"});
  auto g = repairs_of({"R(d,b)", "R(d,c)", "R(d,b), S(a,c), A(a), B(a)"});
  auto c = repairs_of({"R(d,b)", "R(d,b), S(a,c), A(a), B(a)"});
  EXPECT_EQ(optimal_repairs(pdb, RepairNotion::Pareto), p);
  EXPECT_EQ(optimal_repairs(pdb, RepairNotion::Global), g);
  EXPECT_EQ(optimal_repairs(pdb, RepairNotion::Completion), c);
  EXPECT_EQ(optimal_repairs(pdb, RepairNotion::Delta), delta_repairs(pdb.instance()));
}

TEST(Priorities, SixLiteralFixtureAgreesWithDefinitionalOracle) {
  auto pdb = fixture_pdb("six_literals");
  EXPECT_EQ(optimal_repairs(pdb, RepairNotion::Pareto), undominated(pdb, false));
  EXPECT_EQ(optimal_repairs(pdb, RepairNotion::Global), undominated(pdb, true));
  EXPECT_EQ(optimal_repairs(pdb, RepairNotion::Completion), completion_union(pdb));
}

TEST(Priorities, GlobalImprovementOfTheSmallRepair) {
  auto pdb = fixture_pdb("six_literals");
  // {R(d,c)} is beaten by {R(d,b)} only via R(d,b) > R(d,c), which no edge states
  EXPECT_FALSE(is_global_improvement(db_of("R(d,b)"), db_of("R(d,c)"), pdb));
  // {R(d,c), S(a,b), A, B} is globally improved by swapping in S(a,c)
  EXPECT_TRUE(is_global_improvement(db_of("R(d,b), S(a,c), A(a), B(a)"), db_of("R(d,c), S(a,b), A(a), B(a)"), pdb));
  EXPECT_FALSE(is_pareto_improvement(db_of("R(d,b), S(a,c), A(a), B(a)"), db_of("R(d,c), S(a,b), A(a), B(a)"), pdb));
}

TEST(Priorities, CompletionWitnessForTheSmallRepair) {
  auto pdb = fixture_pdb("six_literals");
  PriorityRelation witness = pdb.priority();
  for (const char* e : {"R(d,b) > R(d,c).", "S(a,b) > S(a,c).", "S(a,b) > !B(a).", "!A(a) > S(a,c)."}) {
    auto x = parse_priority(e);
    witness.edges.insert(*x.edges.begin());
  }
  PrioritizedDatabase total(pdb.instance(), witness);
  EXPECT_TRUE(total.is_total());
  EXPECT_TRUE(is_optimal_repair(db_of("R(d,b)"), total, RepairNotion::Global));
}

TEST(Priorities, GreedyLandsInCompletionOptimalRepairs) {
  auto pdb = fixture_pdb("six_literals");
  auto c = optimal_repairs(pdb, RepairNotion::Completion);
  std::vector<Literal> order;
  for (auto v : pdb.instance().hypergraph().vertices) order.push_back(pdb.instance().universe().literal(v));
  std::sort(order.begin(), order.end());
  do {
    EXPECT_TRUE(c.count(greedy_completion_optimal(pdb, order)));
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_EQ(greedy_completion_optimal(pdb), db_of("R(d,b)"));
}

TEST(Priorities, ValidationRejectsCyclesAndUnrelatedPairs) {
  Instance inst = fixture_instance("six_literals");
  auto cyc = parse_priority("R(d,b) > R(d,c). R(d,c) > R(d,b).");
  auto d = validate_priority(cyc, inst);
  EXPECT_FALSE(d.valid);
  EXPECT_FALSE(d.cycle.empty());
  EXPECT_THROW(PrioritizedDatabase(inst, cyc), InputError);

  auto unrelated = parse_priority("R(d,b) > !A(a).");
  d = validate_priority(unrelated, inst);
  EXPECT_FALSE(d.valid);
  ASSERT_TRUE(d.bad_edge.has_value());
  EXPECT_THROW(PrioritizedDatabase(inst, unrelated), InputError);

  EXPECT_TRUE(validate_priority(parse_priority(fixture_text("six_literals", "priority.txt")), inst).valid);
}

TEST(Priorities, CompletionsAreTotalAndExtendTheRelation) {
  auto pdb = fixture_pdb("six_literals");
  EXPECT_FALSE(pdb.is_total());
  auto cs = completions(pdb);
  EXPECT_FALSE(cs.empty());
  for (const auto& c : cs) {
    PrioritizedDatabase t(pdb.instance(), c);
    EXPECT_TRUE(t.is_total());
    EXPECT_TRUE(std::includes(c.edges.begin(), c.edges.end(), pdb.priority().edges.begin(),
                              pdb.priority().edges.end()));
  }
  EXPECT_THROW(completions(pdb, Budget{22, 1}), BudgetExceeded);
}

TEST(Priorities, IntersectionFixtureRepairs) {
  auto pdb = fixture_pdb("intersection_violation");
  EXPECT_EQ(optimal_repairs(pdb, RepairNotion::Pareto), repairs_of({"A(a), B(a)", "A(a), C(a)"}));
  EXPECT_EQ(delta_repairs(pdb.instance()), repairs_of({"", "A(a), B(a)", "A(a), C(a)"}));
}

TEST(Priorities, ScoresInduceEdgesAndLevelwiseRepairs) {
  Instance inst = fixture_instance("six_literals");
  auto scored = parse_priority(
      "score R(d,b) = 3. score S(a,c) = 2. score !A(a) = 2. score S(a,b) = 1. score R(d,c) = 1. score !B(a) = 0.");
  PrioritizedDatabase pdb(inst, scored);
  EXPECT_TRUE(pdb.priority().edges.count({pos(Fact{"R", {"d", "b"}}), pos(Fact{"R", {"d", "c"}})}));
  auto detected = detect_score_structure(pdb);
  ASSERT_TRUE(detected.has_value());
  auto p = optimal_repairs(pdb, RepairNotion::Pareto);
  EXPECT_EQ(p, optimal_repairs(pdb, RepairNotion::Global));
  EXPECT_EQ(p, optimal_repairs(pdb, RepairNotion::Completion));
  EXPECT_EQ(p, delta_p_repairs(pdb));
  // !A(a) and S(a,c) tie, so dropping S(a,c) for !A(a) stays optimal
  EXPECT_EQ(p, repairs_of({"R(d,b)", "R(d,b), S(a,c), A(a), B(a)"}));

  auto levels = prioritization(scored.scores);
  ASSERT_EQ(levels.size(), 4u);
  EXPECT_EQ(levels.front(), lits_of("R(d,b)"));
  EXPECT_EQ(levels[1], lits_of("S(a,c), !A(a)"));
}

TEST(Priorities, ExplicitEdgeMustAgreeWithScores) {
  Instance inst = fixture_instance("six_literals");
  EXPECT_THROW(PrioritizedDatabase(inst, parse_priority("score R(d,c) = 1. R(d,b) > R(d,c).")), InputError);
  EXPECT_NO_THROW(PrioritizedDatabase(inst, parse_priority("score R(d,b) = 1. R(d,b) > R(d,c).")));
}

TEST(Priorities, NonLayeredRelationHasNoScoreStructure) {
  auto pdb = fixture_pdb("six_literals");
  EXPECT_FALSE(detect_score_structure(pdb).has_value());
  EXPECT_THROW(delta_p_repairs(pdb), InputError);
}

TEST(Priorities, EmptyPriorityKeepsEveryRepair) {
  Instance inst = fixture_instance("implied_conflict");
  PrioritizedDatabase pdb(inst, {});
  for (auto n : {RepairNotion::Pareto, RepairNotion::Global, RepairNotion::Completion})
    EXPECT_EQ(optimal_repairs(pdb, n), delta_repairs(inst));
}

TEST(Priorities, RandomCandidatesAgreeWithOptimalitySets) {
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    Instance inst = random_instance(rng);
    PrioritizedDatabase pdb(inst, random_priority(rng, inst));
    for (auto n : {RepairNotion::Pareto, RepairNotion::Global, RepairNotion::Completion}) {
      auto opt = optimal_repairs(pdb, n);
      for (const auto& r : delta_repairs(inst)) EXPECT_EQ(is_optimal_repair(r, pdb, n), opt.count(r) == 1);
    }
  }
}
