#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "optrepair/errors.hpp"
#include "optrepair/instance.hpp"
#include "optrepair/repairs.hpp"

namespace optrepair {

// λ ≻ μ is stored as the pair (λ, μ). Optional scores turn on score mode: every
// co-conflicting pair with different scores gets the induced edge (missing
// scores count as 0).
struct PriorityRelation {
  std::set<std::pair<Literal, Literal>> edges;
  std::map<Literal, long long> scores;

  bool has_scores() const { return !scores.empty(); }
  friend bool operator==(const PriorityRelation&, const PriorityRelation&) = default;
};

struct PriorityDiagnostics {
  bool valid = true;
  std::vector<Literal> cycle;                              // l0 ≻ l1 ≻ ... ≻ l0
  std::optional<std::pair<Literal, Literal>> bad_edge;     // endpoints never co-conflict
  std::string message;
};

PriorityDiagnostics validate_priority(const PriorityRelation& priority, const Instance& instance);

enum class RepairNotion { Delta, Pareto, Global, Completion };
const char* to_string(RepairNotion n);

// Database, constraints and a validated priority. Score lines are expanded to
// edges at construction. Cheap to copy.
class PrioritizedDatabase {
 public:
  // Throws InputError when the priority is invalid or contradicts its scores.
  PrioritizedDatabase(Instance instance, PriorityRelation priority);

  const Instance& instance() const { return instance_; }
  // Effective relation (explicit plus score-induced edges); scores kept as given.
  const PriorityRelation& priority() const { return priority_; }
  // u ≻ v over hypergraph vertex numbers.
  bool prefers(std::uint32_t u, std::uint32_t v) const { return gt_[u][v] != 0; }
  bool co_conflict(std::uint32_t u, std::uint32_t v) const { return co_[u][v] != 0; }
  std::size_t size() const { return gt_.size(); }
  bool is_total() const;

 private:
  Instance instance_;
  PriorityRelation priority_;
  std::vector<std::vector<char>> gt_;
  std::vector<std::vector<char>> co_;
};

bool is_pareto_improvement(const Database& b, const Database& r, const PrioritizedDatabase& pdb);
bool is_global_improvement(const Database& b, const Database& r, const PrioritizedDatabase& pdb);

// Delta means no optimality filter.
bool is_optimal_repair(const Database& r, const PrioritizedDatabase& pdb, RepairNotion notion);
RepairSet optimal_repairs(const PrioritizedDatabase& pdb, RepairNotion notion);

// Exhaustive oracles: P/G quantify improvements over every consistent subset of
// Facts^S_D; C takes the union of globally-optimal repairs over all completions.
RepairSet optimal_repairs_bruteforce(const PrioritizedDatabase& pdb, RepairNotion notion,
                                     const Budget& budget = {});

// Greedy construction: repeatedly take an unconsidered conflict literal that no
// unconsidered literal beats, first in `tiebreak` (canonical order when empty),
// and keep it unless it closes a conflict.
Database greedy_completion_optimal(const PrioritizedDatabase& pdb,
                                   const std::vector<Literal>& tiebreak = {});

// Total acyclic extensions over co-conflicting pairs. `visit` returns false to
// stop. Throws BudgetExceeded past budget.max_completions.
void for_each_completion(const PrioritizedDatabase& pdb, const Budget& budget,
                         const std::function<bool(const PriorityRelation&)>& visit);
std::vector<PriorityRelation> completions(const PrioritizedDatabase& pdb, const Budget& budget = {});

// Score per conflict literal, or nullopt when no scoring induces the relation.
std::optional<std::map<Literal, long long>> detect_score_structure(const PrioritizedDatabase& pdb);
// Levels S1, S2, ... by descending score.
std::vector<LiteralSet> prioritization(const std::map<Literal, long long>& scores);

// Throws InputError if the priority is not score-structured. Uses the given
// scores in score mode, detected ones otherwise.
RepairSet delta_p_repairs(const PrioritizedDatabase& pdb);
RepairSet delta_p_repairs_bruteforce(const PrioritizedDatabase& pdb, const Budget& budget = {});

}  // namespace optrepair
