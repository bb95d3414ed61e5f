#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "optrepair/aic.hpp"
#include "optrepair/priorities.hpp"

namespace optrepair {

// Universal constraints to ground denials: negative literals become facts over
// fresh predicates `<prefix>P`.
struct DenialImage {
  Database db;                                   // facts(Lits^S_D)
  std::vector<UniversalConstraint> constraints;  // one ground denial per conflict
  Schema schema;                                 // S extended with the fresh predicates
  std::string prefix;
};

Fact facts_of(const Literal& l, const std::string& prefix = "neg_");
Database facts_of(const LiteralSet& ls, const std::string& prefix = "neg_");
// Throws InputError if a fresh predicate name is already in the schema.
DenialImage to_denial(const Instance& instance, const std::string& prefix = "neg_");
// Empty when conflicts and Δ-repairs correspond under facts(·) and Λ_D.
std::vector<std::string> check_denial_image(const Instance& instance, const DenialImage& image);

// One ground rule per conflict; it may update the literals that beat no other
// literal of the conflict.
std::vector<Aic> prio_to_aics(const PrioritizedDatabase& pdb);

struct ParetoAicReport {
  RepairSet pareto, founded, grounded, justified, well_founded;
  bool holds = false;  // pareto = justified = grounded = founded ⊆ well-founded
  std::vector<std::string> discrepancies;
};
ParetoAicReport verify_pareto_aic(const PrioritizedDatabase& pdb);

// Refinements of a denial constraint: variables merged with each other or with
// a constant of `constants`, then every remaining pair of distinct terms made
// unequal. Throws BudgetExceeded above `max_terms` variables plus constants.
std::vector<UniversalConstraint> refine(const UniversalConstraint& c,
                                        const std::set<std::string>& constants,
                                        std::size_t max_terms = 10);
// `general` maps injectively onto a proper part of `specific`'s body.
bool subsumes(const UniversalConstraint& general, const UniversalConstraint& specific);
bool isomorphic(const UniversalConstraint& a, const UniversalConstraint& b);
// min(C): all refinements, minus subsumed ones, one per isomorphism class.
std::vector<UniversalConstraint> min_constraints(const std::vector<UniversalConstraint>& cs,
                                                 std::size_t max_terms = 10);
// Data-independent AICs for denial constraints whose first argument is a fact
// identifier, guarded by the stored priority predicate.
std::vector<Aic> denial_prio_to_aics(const std::vector<UniversalConstraint>& cs,
                                     const std::string& priority_predicate = "P",
                                     std::size_t max_terms = 10);

struct EtaPrio {
  std::vector<UniversalConstraint> constraints;  // C_η
  PriorityRelation priority;                     // ≻_η
  std::vector<GroundAic> min_g;
  std::set<LiteralSet> violated_bodies;          // lits(r) for violated rules of min_g
  std::vector<Literal> cycle;                    // nonempty when ≻_η is cyclic
  PropertyReport properties;
  bool acyclic() const { return cycle.empty(); }
  bool well_behaved() const {
    return properties.closed_under_resolution && properties.preserves_actions_resolution &&
           properties.preserves_actions_strengthening;
  }
};
EtaPrio aics_to_prio(const AicProblem& p);

struct AicParetoReport {
  EtaPrio eta;
  std::size_t max_conflict = 0;
  // which relation is expected: equality (binary conflicts) or founded ⊆ Pareto
  bool preconditions = false;
  bool equality_expected = false;
  RepairSet pareto, founded, grounded, justified, well_founded;
  // the guaranteed relation holds; vacuously true when nothing is guaranteed
  bool holds = false;
  std::vector<std::string> notes;
};
AicParetoReport verify_aic_pareto(const AicProblem& p);

}  // namespace optrepair
