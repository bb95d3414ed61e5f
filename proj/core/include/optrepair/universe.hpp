#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "optrepair/model.hpp"

namespace optrepair {

using FactId = std::uint32_t;

// Facts^S_D in canonical order; fact i carries the literal of Lits^S_D that
// agrees with D (positive iff the fact is in D).
class Universe {
 public:
  Universe() = default;
  // Throws InputError if a fact of `db` is not declared in `schema`.
  Universe(const Database& db, const Schema& schema);

  std::size_t size() const { return facts_.size(); }
  const std::vector<Fact>& facts() const { return facts_; }
  const Fact& fact(FactId id) const { return facts_[id]; }
  std::optional<FactId> find(const Fact& f) const;
  bool in_db(FactId id) const { return in_db_[id]; }
  Literal literal(FactId id) const { return {facts_[id], static_cast<bool>(in_db_[id])}; }
  // Id of the fact of `l` when l belongs to Lits^S_D.
  std::optional<FactId> find_literal(const Literal& l) const;

  const std::vector<std::string>& domain() const { return domain_; }
  const Database& db() const { return db_; }
  const Schema& schema() const { return schema_; }

 private:
  Database db_;
  Schema schema_;
  std::vector<std::string> domain_;
  std::vector<Fact> facts_;
  std::vector<char> in_db_;
};

std::set<Fact> facts_universe(const Database& db, const Schema& schema);
LiteralSet lits(const Database& db, const Schema& schema);
// Λ_D(B); throws InputError if B has a fact outside Facts^S_D.
LiteralSet agreement(const Database& db, const Schema& schema, const Database& repair);
// ⟨B⟩_D; throws InputError if B is not a subset of Lits^S_D.
Database restriction(const Database& db, const Schema& schema, const LiteralSet& literals);

// Ground instances over `adom`: false inequalities drop the instance, true ones
// are erased; instances with complementary literals are never violated and are
// dropped too.
std::set<GroundConstraint> ground(const UniversalConstraint& constraint,
                                  const std::set<std::string>& adom);

bool satisfies(const Database& db, const UniversalConstraint& constraint);
bool satisfies(const Database& db, const std::vector<UniversalConstraint>& constraints);

// Calls `visit` with every assignment of `variables` to `domain` values, in
// lexicographic order. `visit` returns false to stop.
template <class Visit>
void for_each_assignment(const std::vector<std::string>& variables,
                         const std::vector<std::string>& domain, Visit&& visit);

}  // namespace optrepair

#include "optrepair/detail/assignments.hpp"
