#pragma once

#include <set>
#include <string>
#include <vector>

#include "optrepair/errors.hpp"
#include "optrepair/priorities.hpp"

namespace optrepair {

using Tuple = std::vector<std::string>;
using TupleSet = std::set<Tuple>;

// All answer tuples (a Boolean query yields {()} when true, {} when false).
TupleSet evaluate(const ConjunctiveQuery& q, const Database& db);
bool holds(const ConjunctiveQuery& q, const Database& db, const Tuple& answer = {});

enum class Semantics { Brave, Cqa, Intersection };
const char* to_string(Semantics s);

struct AnswerSet {
  std::string query;
  Semantics semantics = Semantics::Cqa;
  RepairNotion notion = RepairNotion::Delta;
  TupleSet tuples;
};

// With zero optimal repairs every semantics answers nothing.
AnswerSet answers(const PrioritizedDatabase& pdb, const ConjunctiveQuery& q, Semantics semantics,
                  RepairNotion notion);
AnswerSet answers(const RepairSet& repairs, const ConjunctiveQuery& q, Semantics semantics,
                  RepairNotion notion);

// Intersection of the chosen optimal repairs; may violate the constraints.
Database repairs_intersection(const PrioritizedDatabase& pdb, RepairNotion notion);
Database intersection_of(const RepairSet& repairs);

}  // namespace optrepair
