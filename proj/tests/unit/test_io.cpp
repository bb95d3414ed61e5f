#include <gtest/gtest.h>

#include "../support/fixtures.hpp"
#include "../support/generators.hpp"
#include "optrepair/aic.hpp"
#include "optrepair/errors.hpp"
#include "optrepair/io.hpp"
#include "optrepair/priorities.hpp"

using namespace optrepair;
using namespace optrepair::testing;

namespace {

ParseError parse_error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError";
  return ParseError("", 0, 0, "");
}

}  // namespace

TEST(Io, ParsesFactsWithMixedConstants) {
  auto db = parse_database("P(a, 12, \"hello world\").\n# comment\nQ.  R(x).");
  Database want{Fact{"P", {"a", "12", "hello world"}}, Fact{"Q", {}}, Fact{"R", {"x"}}};
  EXPECT_EQ(db, want);
}

TEST(Io, EmptyFilesGiveEmptyValues) {
  EXPECT_TRUE(parse_database("").empty());
  EXPECT_TRUE(parse_constraints("  # nothing\n").empty());
  EXPECT_TRUE(parse_aics("").empty());
  EXPECT_TRUE(parse_queries("").empty());
  auto p = parse_priority("");
  EXPECT_TRUE(p.edges.empty());
  EXPECT_TRUE(p.scores.empty());
}

TEST(Io, SinglePositiveDenial) {
  auto cs = parse_constraints("A(x) -> false.");
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_TRUE(cs[0].is_denial());
  ASSERT_EQ(cs[0].body().size(), 1u);
  EXPECT_TRUE(cs[0].body()[0].positive);
  EXPECT_EQ(cs[0].body()[0].atom, (Atom{"A", {Term::var("x")}}));
}

TEST(Io, HeadAtomsBecomeNegatedBodyLiterals) {
  auto cs = parse_constraints("A(x), x != \"b\" -> B(x) | C(x).");
  ASSERT_EQ(cs.size(), 1u);
  const auto& b = cs[0].body();
  ASSERT_EQ(b.size(), 3u);
  EXPECT_FALSE(cs[0].is_denial());
  EXPECT_EQ(cs[0].inequalities(), (std::vector<Inequality>{{Term::var("x"), Term::constant("b")}}));
  int negatives = 0;
  for (const auto& l : b) negatives += !l.positive;
  EXPECT_EQ(negatives, 2);
}

TEST(Io, NotAndBangAreSynonymsInRuleBodies) {
  EXPECT_EQ(parse_constraints("A(x), not B(x) -> false."), parse_constraints("A(x), !B(x) -> false."));
}

TEST(Io, PriorityEdgesAndScores) {
  auto p = parse_priority("R(d,b) > !A(a).\nscore S(a,c) = 3.\nscore !B(a) = -1.");
  EXPECT_EQ(p.edges.size(), 1u);
  EXPECT_EQ(p.edges.begin()->second, neg(Fact{"A", {"a"}}));
  EXPECT_EQ(p.scores.at(pos(Fact{"S", {"a", "c"}})), 3);
  EXPECT_EQ(p.scores.at(neg(Fact{"B", {"a"}})), -1);
}

TEST(Io, DuplicateScoreIsAnError) {
  EXPECT_THROW(parse_priority("score A(a) = 1. score A(a) = 2."), ParseError);
}

TEST(Io, QueriesWithConstantsAndBooleanHeads) {
  auto qs = parse_queries("q(x) :- R(x, y), S(y, \"c\").\nb() :- A(\"a\").");
  ASSERT_EQ(qs.size(), 2u);
  EXPECT_EQ(qs[0].head(), std::vector<std::string>{"x"});
  EXPECT_TRUE(qs[1].is_boolean());
  EXPECT_EQ(qs[1].body()[0].args[0], Term::constant("a"));
}

TEST(Io, AicsWithNegationAndInequalities) {
  auto rs = parse_aics("A(x), not B(x), x != y, C(y) -> { +B(x), -A(x) }.");
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].updates().size(), 2u);
  EXPECT_FALSE(rs[0].is_normal());
  EXPECT_EQ(rs[0].inequalities().size(), 1u);
}

TEST(Io, UpdateActionsBracedOrBare) {
  auto a = parse_update_actions("{-A(a), +B(a)}");
  auto b = parse_update_actions("-A(a), +B(a)");
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].op, UpdateOp::Remove);
  EXPECT_TRUE(parse_update_actions("{}").empty());
}

TEST(Io, SchemaLines) {
  auto s = parse_schema("A/1, B/2.\nC/0.");
  EXPECT_EQ(s.arity("B"), 2u);
  EXPECT_EQ(s.arity("C"), 0u);
  EXPECT_THROW(parse_schema("A/1. A/2."), ParseError);
}

TEST(Io, ErrorsCarryPositions) {
  auto e = parse_error_of([] { parse_database("A(a).\nB(b"); });
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 4u);
  EXPECT_NE(std::string(e.what()).find("<db>:2:4"), std::string::npos);

  e = parse_error_of([] { parse_database("A(a). A(a,b)."); });
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 7u);

  e = parse_error_of([] { parse_constraints("A(x) -> false.\n  A(x), not B(y) -> false."); });
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 3u);

  e = parse_error_of([] { parse_database("A(a) @"); });
  EXPECT_EQ(e.column(), 6u);

  e = parse_error_of([] { parse_aics("A(x) -> {-B(x)}."); });
  EXPECT_EQ(e.line(), 1u);

  e = parse_error_of([] { parse_database("P(\"open)."); });
  EXPECT_EQ(e.column(), 3u);
}

TEST(Io, UnsafeRulesAreRejected) {
  EXPECT_THROW(parse_constraints("A(x), y != x -> false."), ParseError);
  EXPECT_THROW(parse_constraints("A(x) -> B(y)."), ParseError);
  EXPECT_THROW(parse_queries("q(z) :- A(x)."), ParseError);
}

TEST(Io, LiteralAndSetFormats) {
  EXPECT_EQ(format(neg(Fact{"C", {"a"}})), "!C(a)");
  EXPECT_EQ(format(LiteralSet{pos(Fact{"A", {"a"}}), neg(Fact{"C", {"a"}})}), "{A(a), !C(a)}");
  EXPECT_EQ(format(Fact{"P", {"hello world", "7", "not"}}), "P(\"hello world\",7,not)");
  EXPECT_EQ(format_constant("a\"b"), "\"a\\\"b\"");
}

TEST(Io, FixturesRoundTrip) {
  for (const char* fx : {"implied_conflict", "six_literals", "intersection_violation", "refine_min"}) {
    auto db = parse_database(fixture_text(fx, "db.txt"));
    EXPECT_EQ(parse_database(format_database(db)), db) << fx;
    auto cs = parse_constraints(fixture_text(fx, "constraints.txt"));
    auto cs_text = format_constraints(cs);
    EXPECT_EQ(parse_constraints(cs_text), cs) << fx;
    EXPECT_EQ(format_constraints(parse_constraints(cs_text)), cs_text) << fx;
    auto pr = parse_priority(fixture_text(fx, "priority.txt"));
    EXPECT_EQ(parse_priority(format_priority(pr)), pr) << fx;
  }
  auto qs = fixture_queries("six_literals");
  EXPECT_EQ(parse_queries(format_queries(qs)), qs);
  for (const char* fx : {"wf_not_founded", "circular_support", "cyclic_priority", "ternary_strict"}) {
    auto rs = parse_aics(fixture_text(fx, "aics.txt"));
    auto text = format_aics(rs);
    EXPECT_EQ(parse_aics(text), rs) << fx;
    EXPECT_EQ(format_aics(parse_aics(text)), text) << fx;
  }
  auto s = parse_schema(fixture_text("implied_conflict", "schema.txt"));
  EXPECT_EQ(parse_schema(format_schema(s)), s);
}

TEST(Io, RandomRulesRoundTrip) {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    RandomCase c = random_case(rng);
    EXPECT_EQ(parse_database(format_database(c.db)), c.db);
    EXPECT_EQ(parse_constraints(format_constraints(c.constraints)), c.constraints) << format_constraints(c.constraints);
    auto rs = random_aics(rng, c);
    EXPECT_EQ(parse_aics(format_aics(rs)), rs) << format_aics(rs);
    std::vector<ConjunctiveQuery> qs{random_query(rng, c)};
    EXPECT_EQ(parse_queries(format_queries(qs)), qs) << format_queries(qs);
  }
}
