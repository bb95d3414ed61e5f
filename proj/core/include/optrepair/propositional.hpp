#pragma once

#include <cstdint>
#include <vector>

#include "optrepair/universe.hpp"

namespace optrepair {

// Propositional literal over a fact id: 2*id for the positive literal, 2*id+1
// for its negation.
using PLit = std::uint32_t;

constexpr PLit make_plit(FactId f, bool positive) { return f * 2 + (positive ? 0u : 1u); }
constexpr FactId plit_fact(PLit l) { return l / 2; }
constexpr bool plit_positive(PLit l) { return (l & 1u) == 0; }
constexpr PLit plit_negate(PLit l) { return l ^ 1u; }

// Conjunction of propositional literals, sorted and duplicate-free.
using Cube = std::vector<PLit>;

bool subsumes(const Cube& small, const Cube& big);

// Blake canonical form of the disjunction of `cubes`: all prime implicants,
// obtained by consensus closure with subsumption deletion. Consensus is taken
// only on pairs clashing on exactly one fact, so every resolvent is consistent.
std::vector<Cube> prime_implicants(std::vector<Cube> cubes);

// Removes subsumed cubes and duplicates; result sorted.
std::vector<Cube> minimize(std::vector<Cube> cubes);

// Ground bodies of `constraints` over the universe's domain as cubes. Candidate
// repairs live inside Facts^S_D, so a literal over a fact outside it has a fixed
// value: a positive one makes the instance unsatisfiable (dropped), a negative
// one is always true (erased).
std::vector<Cube> ground_cubes(const Universe& universe,
                               const std::vector<UniversalConstraint>& constraints);

// Drops cubes that contain a literal outside Lits^S_D whose complement occurs
// in no cube: consensus can never remove it, so nothing derived from such a
// cube lies inside Lits^S_D.
std::vector<Cube> prune_dead(const Universe& universe, std::vector<Cube> cubes);

}  // namespace optrepair
