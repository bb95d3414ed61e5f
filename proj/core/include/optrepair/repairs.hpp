#pragma once

#include <functional>
#include <set>

#include "optrepair/errors.hpp"
#include "optrepair/instance.hpp"

namespace optrepair {

using RepairSet = std::set<Database>;

// Enumerates maximal independent sets of the hypergraph in canonical order.
// `visit` returns false to stop early.
void for_each_mis(const IndexedHypergraph& h, const std::function<bool(const VertexSet&)>& visit);
std::vector<VertexSet> maximal_independent_sets(const IndexedHypergraph& h);

RepairSet delta_repairs(const Instance& instance);
RepairSet delta_repairs_bruteforce(const Instance& instance, const Budget& budget = {});
bool is_delta_repair(const Database& candidate, const Instance& instance);
// Maximal consistent subsets of D.
RepairSet subset_repairs(const Instance& instance, const Budget& budget = {});
// Minimal consistent supersets of D inside Facts^S_D; possibly none.
RepairSet superset_repairs(const Instance& instance, const Budget& budget = {});

}  // namespace optrepair
