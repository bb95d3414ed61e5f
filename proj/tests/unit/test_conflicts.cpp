#include <gtest/gtest.h>

#include "../support/fixtures.hpp"
#include "optrepair/conflicts.hpp"
#include "optrepair/io.hpp"
#include "optrepair/repairs.hpp"

using namespace optrepair;
using namespace optrepair::testing;

namespace {

const char* kChainRules = "R(x,y), A(x) -> A(y).\nA(x), B(x) -> false.\n";

Database chain(int n) {
  Database db{Fact{"A", {"a0"}}, Fact{"B", {"a" + std::to_string(n)}}};
  for (int i = 0; i < n; ++i) db.insert(Fact{"R", {"a" + std::to_string(i), "a" + std::to_string(i + 1)}});
  return db;
}

LiteralSet as_literals(const Database& db) {
  LiteralSet out;
  for (const auto& f : db) out.insert(pos(f));
  return out;
}

}  // namespace

TEST(Conflicts, ImpliedConstraintYieldsExtraConflict) {
  Instance inst = fixture_instance("implied_conflict");
  std::set<LiteralSet> want{lits_of("A(a), !C(a)"), lits_of("B(a), !D(a)"), lits_of("A(a), B(a)")};
  EXPECT_EQ(conflicts_prime_implicants(inst), want);
  EXPECT_EQ(conflicts_hitting_sets(inst), want);
  EXPECT_TRUE(is_conflict(lits_of("A(a), B(a)"), inst));
  EXPECT_FALSE(is_conflict(lits_of("A(a), B(a), !C(a)"), inst));
  EXPECT_FALSE(is_conflict(lits_of("!C(a)"), inst));
}

TEST(Conflicts, LiteralsOutsideTheUniverseAreRejected) {
  Instance inst = fixture_instance("implied_conflict");
  EXPECT_THROW(is_conflict(lits_of("C(a)"), inst), InputError);  // C(a) is not in D, so only !C(a) is in Lits
  EXPECT_THROW(is_conflict(lits_of("A(zz)"), inst), InputError);
}

TEST(Conflicts, ChainsGiveConflictsGrowingWithTheData) {
  auto rules = parse_constraints(kChainRules);
  for (int n = 1; n <= 4; ++n) {
    Instance inst(chain(n), rules);
    auto cs = conflicts_prime_implicants(inst);
    EXPECT_TRUE(cs.count(as_literals(chain(n)))) << n;
    EXPECT_EQ(max_conflict_size(cs), static_cast<std::size_t>(n + 2)) << n;
    if (n <= 2) EXPECT_EQ(cs, conflicts_hitting_sets(inst)) << n;  // the oracle enumerates 2^|Facts|
    if (n > 2) EXPECT_THROW(conflicts_hitting_sets(inst), BudgetExceeded);
  }
}

TEST(Conflicts, EmptyDatabaseHasNoConflicts) {
  Instance inst(Database{}, parse_constraints(fixture_text("implied_conflict", "constraints.txt")));
  EXPECT_TRUE(conflicts_prime_implicants(inst).empty());
  EXPECT_TRUE(conflict_hypergraph(inst).edges.empty());
}

TEST(Conflicts, UnsatisfiableConstraintsGiveTheEmptyConflict) {
  Instance inst(Database{Fact{"A", {}}}, parse_constraints("A -> false.\nnot A -> false."));
  EXPECT_EQ(conflicts_prime_implicants(inst), std::set<LiteralSet>{LiteralSet{}});
  EXPECT_EQ(conflicts_hitting_sets(inst), std::set<LiteralSet>{LiteralSet{}});
  EXPECT_TRUE(delta_repairs(inst).empty());
}

TEST(Conflicts, HypergraphListsConflictLiterals) {
  auto h = conflict_hypergraph(fixture_instance("implied_conflict"));
  EXPECT_EQ(h.vertices.size(), 4u);
  EXPECT_EQ(h.edges.size(), 3u);
  Instance six = fixture_instance("six_literals");
  auto cs = conflicts_prime_implicants(six);
  // every conflict is binary; the six literals of the priority graph are the vertices
  EXPECT_EQ(max_conflict_size(cs), 2u);
  EXPECT_EQ(conflict_hypergraph(six).vertices.size(), 6u);
  EXPECT_EQ(cs.size(), 8u);
}

TEST(Conflicts, InequalitiesAndConstantsInBodies) {
  Database db{Fact{"P", {"a", "b"}}, Fact{"P", {"a", "c"}}, Fact{"P", {"b", "b"}}};
  Instance inst(db, parse_constraints("P(x,y), P(x,z), y != z -> false.\nP(x,\"b\"), P(\"b\",x) -> false."));
  std::set<LiteralSet> want{lits_of("P(a,b), P(a,c)"), lits_of("P(b,b)")};
  EXPECT_EQ(conflicts_prime_implicants(inst), want);
}
