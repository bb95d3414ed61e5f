#include "optrepair/conflicts.hpp"

#include <algorithm>

#include "optrepair/detail/masks.hpp"

namespace optrepair {

std::set<LiteralSet> conflicts_prime_implicants(const Instance& instance) {
  std::set<LiteralSet> out;
  for (const auto& c : instance.conflict_ids()) out.insert(instance.literals_of(c));
  return out;
}

std::set<LiteralSet> conflicts_hitting_sets(const Instance& instance, const Budget& budget) {
  detail::MaskModel m(instance, budget);
  std::vector<std::uint64_t> family;
  for (auto r : detail::brute_delta_repairs(m)) family.push_back(r ^ m.db_mask());
  std::set<LiteralSet> out;
  for (auto h : detail::minimal_hitting_sets(family, m.size())) {
    LiteralSet c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (h >> i & 1) c.insert(instance.universe().literal(static_cast<FactId>(i)));
    out.insert(std::move(c));
  }
  return out;
}

bool is_conflict(const LiteralSet& literals, const Instance& instance) {
  std::vector<FactId> ids;
  for (const auto& l : literals) {
    auto id = instance.universe().find_literal(l);
    if (!id) throw InputError("literal outside the literal universe");
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  const auto& cs = instance.conflict_ids();
  return std::binary_search(cs.begin(), cs.end(), ids);
}

ConflictHypergraph conflict_hypergraph(const Instance& instance) {
  ConflictHypergraph g;
  const auto& h = instance.hypergraph();
  for (FactId f : h.vertices) g.vertices.push_back(instance.universe().literal(f));
  for (const auto& c : instance.conflict_ids()) g.edges.push_back(instance.literals_of(c));
  return g;
}

std::size_t max_conflict_size(const std::set<LiteralSet>& conflicts) {
  std::size_t m = 0;
  for (const auto& c : conflicts) m = std::max(m, c.size());
  return m;
}

}  // namespace optrepair
