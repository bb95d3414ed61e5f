#pragma once

#include <set>
#include <vector>

#include "optrepair/errors.hpp"
#include "optrepair/instance.hpp"

namespace optrepair {

// Conflicts from the prime implicants of the disjunction of ground bodies.
std::set<LiteralSet> conflicts_prime_implicants(const Instance& instance);
// Conflicts from the minimal hitting sets of {R Δ D | R a Δ-repair}, with the
// Δ-repairs found by exhaustive search (budgeted).
std::set<LiteralSet> conflicts_hitting_sets(const Instance& instance, const Budget& budget = {});
// Throws InputError if `literals` is not a subset of Lits^S_D.
bool is_conflict(const LiteralSet& literals, const Instance& instance);

struct ConflictHypergraph {
  std::vector<Literal> vertices;
  std::vector<LiteralSet> edges;
};
ConflictHypergraph conflict_hypergraph(const Instance& instance);

std::size_t max_conflict_size(const std::set<LiteralSet>& conflicts);

}  // namespace optrepair
