#include <gtest/gtest.h>

#include "../support/suites.hpp"

using namespace optrepair::testing;

namespace {

std::string report(const SuiteResult& r) {
  std::string s = std::to_string(r.violations) + " violations in " + std::to_string(r.cases) + " cases";
  for (const auto& m : r.messages) s += "\n---\n" + m;
  return s;
}

class Seeded : public ::testing::TestWithParam<std::uint64_t> {};

}  // namespace

TEST_P(Seeded, OraclesAgree) {
  auto r = oracle_suite(GetParam(), 600);
  EXPECT_TRUE(r.ok()) << report(r);
}

TEST_P(Seeded, StructuralProperties) {
  auto r = property_suite(GetParam(), 600);
  EXPECT_TRUE(r.ok()) << report(r);
}

TEST_P(Seeded, DerivedPrioritiesMatchAicRepairs) {
  auto r = aic_roundtrip_suite(GetParam(), 300);
  EXPECT_TRUE(r.ok()) << report(r);
}

INSTANTIATE_TEST_SUITE_P(Seeds, Seeded, ::testing::Values(1, 42, 977, 65537, 31337));
