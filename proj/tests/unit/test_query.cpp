#include <gtest/gtest.h>

#include <map>

#include "../support/fixtures.hpp"
#include "../support/generators.hpp"
#include "optrepair/io.hpp"
#include "optrepair/query.hpp"

using namespace optrepair;
using namespace optrepair::testing;

namespace {

ConjunctiveQuery query(const std::string& text) { return parse_queries(text).at(0); }

bool yes(const PrioritizedDatabase& pdb, const std::string& q, Semantics s, RepairNotion n) {
  return !answers(pdb, query(q), s, n).tuples.empty();
}

}  // namespace

TEST(Query, EvaluateJoinsAndProjects) {
  Database db = db_of("R(a,b), R(b,c), R(c,c), S(c)");
  EXPECT_EQ(evaluate(query("q(x,z) :- R(x,y), R(y,z)."), db), (TupleSet{{"a", "c"}, {"b", "c"}, {"c", "c"}}));
  EXPECT_EQ(evaluate(query("q(x) :- R(x,y), S(y)."), db), (TupleSet{{"b"}, {"c"}}));
  EXPECT_EQ(evaluate(query("q(x) :- R(x,x)."), db), (TupleSet{{"c"}}));
  EXPECT_EQ(evaluate(query("q() :- R(\"a\",y), S(y)."), db), TupleSet{});
  EXPECT_EQ(evaluate(query("q() :- S(\"c\")."), db), TupleSet{Tuple{}});
}

TEST(Query, HoldsChecksOneTuple) {
  Database db = db_of("R(a,b)");
  auto q = query("q(x) :- R(x,y).");
  EXPECT_TRUE(holds(q, db, {"a"}));
  EXPECT_FALSE(holds(q, db, {"b"}));
  EXPECT_FALSE(holds(query("q() :- R(\"b\",y)."), db));
}

TEST(Query, SixLiteralBooleanJudgments) {
  auto pdb = fixture_pdb("six_literals");
  using S = Semantics;
  using N = RepairNotion;
  EXPECT_TRUE(yes(pdb, "qa() :- A(\"a\").", S::Brave, N::Pareto));
  EXPECT_FALSE(yes(pdb, "qa() :- A(\"a\").", S::Cqa, N::Pareto));
  EXPECT_TRUE(yes(pdb, "qrd() :- R(\"d\",y).", S::Cqa, N::Pareto));
  EXPECT_FALSE(yes(pdb, "qrd() :- R(\"d\",y).", S::Intersection, N::Pareto));
  EXPECT_FALSE(yes(pdb, "qa() :- A(\"a\").", S::Cqa, N::Global));
  // frozen from the computed sets: {R(d,b)} is completion-optimal and {R(d,c)} globally optimal
  EXPECT_FALSE(yes(pdb, "qa() :- A(\"a\").", S::Cqa, N::Completion));
  EXPECT_FALSE(yes(pdb, "qrdb() :- R(\"d\",\"b\").", S::Cqa, N::Global));
  EXPECT_TRUE(yes(pdb, "qrdb() :- R(\"d\",\"b\").", S::Cqa, N::Completion));
  EXPECT_FALSE(yes(pdb, "qrdb() :- R(\"d\",\"b\").", S::Cqa, N::Pareto));
}

TEST(Query, SixLiteralTupleAnswers) {
  auto pdb = fixture_pdb("six_literals");
  auto q = query("q(y) :- R(\"d\",y).");
  EXPECT_EQ(answers(pdb, q, Semantics::Brave, RepairNotion::Pareto).tuples, (TupleSet{{"b"}, {"c"}}));
  EXPECT_TRUE(answers(pdb, q, Semantics::Cqa, RepairNotion::Pareto).tuples.empty());
  EXPECT_EQ(answers(pdb, q, Semantics::Cqa, RepairNotion::Completion).tuples, TupleSet{{"b"}});
  auto a = answers(pdb, q, Semantics::Brave, RepairNotion::Global);
  EXPECT_EQ(a.query, "q");
  EXPECT_EQ(a.semantics, Semantics::Brave);
  EXPECT_EQ(a.notion, RepairNotion::Global);
}

TEST(Query, IntersectionCanViolateConstraints) {
  auto pdb = fixture_pdb("intersection_violation");
  Database inter = repairs_intersection(pdb, RepairNotion::Pareto);
  EXPECT_EQ(inter, db_of("A(a)"));
  EXPECT_FALSE(satisfies(inter, pdb.instance().constraints()));
  EXPECT_TRUE(yes(pdb, "q() :- A(\"a\").", Semantics::Intersection, RepairNotion::Pareto));
  // the Δ-repairs include the empty database
  EXPECT_FALSE(yes(pdb, "q() :- A(\"a\").", Semantics::Cqa, RepairNotion::Delta));
  EXPECT_TRUE(intersection_of({}).empty());
}

TEST(Query, NoRepairsMeansNoAnswers) {
  Instance inst(db_of("A"), parse_constraints("A -> false. not A -> false."), {});
  PrioritizedDatabase pdb(inst, {});
  auto q = query("q() :- A.");
  for (auto s : {Semantics::Brave, Semantics::Cqa, Semantics::Intersection})
    EXPECT_TRUE(answers(pdb, q, s, RepairNotion::Pareto).tuples.empty()) << to_string(s);
}

TEST(Query, RandomSemanticsAreNested) {
  Rng rng(5);
  for (int i = 0; i < 80; ++i) {
    RandomCase c = random_case(rng);
    Instance inst(c.db, c.constraints, c.schema);
    RepairSet rs = delta_repairs(inst);
    if (rs.empty()) continue;
    auto q = random_query(rng, c);
    auto in = answers(rs, q, Semantics::Intersection, RepairNotion::Delta).tuples;
    auto cq = answers(rs, q, Semantics::Cqa, RepairNotion::Delta).tuples;
    auto br = answers(rs, q, Semantics::Brave, RepairNotion::Delta).tuples;
    EXPECT_TRUE(std::includes(cq.begin(), cq.end(), in.begin(), in.end()));
    EXPECT_TRUE(std::includes(br.begin(), br.end(), cq.begin(), cq.end()));
    // brave is a union, CQA an intersection, over the per-repair answers
    TupleSet u;
    for (const auto& r : rs) {
      auto t = evaluate(q, r);
      u.insert(t.begin(), t.end());
      for (const auto& x : cq) EXPECT_TRUE(t.count(x));
    }
    EXPECT_EQ(br, u);
  }
}
