#include "optrepair/repairs.hpp"

#include <algorithm>

#include "optrepair/detail/masks.hpp"

namespace optrepair {

namespace {

class MisSearch {
 public:
  MisSearch(const IndexedHypergraph& h, const std::function<bool(const VertexSet&)>& visit)
      : h_(h), visit_(visit), in_(h.size(), false) {}

  void run() { rec(0); }

 private:
  // e \ {v} entirely inside the current set (vertices after v are still undecided
  // and therefore not in)
  bool closes(std::uint32_t e, std::uint32_t v) const {
    for (auto u : h_.edges[e])
      if (u != v && !in_[u]) return false;
    return true;
  }

  // some edge through v could still have every other vertex chosen
  bool may_block(std::uint32_t v) const {
    for (auto e : h_.incident[v]) {
      bool ok = true;
      for (auto u : h_.edges[e])
        if (u < v && !in_[u]) { ok = false; break; }
      if (ok) return true;
    }
    return false;
  }

  bool maximal() const {
    for (std::uint32_t v = 0; v < h_.size(); ++v) {
      if (in_[v]) continue;
      bool blocked = std::any_of(h_.incident[v].begin(), h_.incident[v].end(),
                                 [&](std::uint32_t e) { return closes(e, v); });
      if (!blocked) return false;
    }
    return true;
  }

  void rec(std::uint32_t v) {
    if (stop_) return;
    if (v == h_.size()) {
      if (maximal() && !visit_(in_)) stop_ = true;
      return;
    }
    bool can_include = std::none_of(h_.incident[v].begin(), h_.incident[v].end(),
                                    [&](std::uint32_t e) { return closes(e, v); });
    if (can_include) {
      in_[v] = true;
      rec(v + 1);
      in_[v] = false;
    }
    if (may_block(v)) rec(v + 1);
  }

  const IndexedHypergraph& h_;
  const std::function<bool(const VertexSet&)>& visit_;
  VertexSet in_;
  bool stop_ = false;
};

}  // namespace

void for_each_mis(const IndexedHypergraph& h, const std::function<bool(const VertexSet&)>& visit) {
  for (const auto& e : h.edges)
    if (e.empty()) return;  // nothing is independent
  MisSearch(h, visit).run();
}

std::vector<VertexSet> maximal_independent_sets(const IndexedHypergraph& h) {
  std::vector<VertexSet> out;
  for_each_mis(h, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

RepairSet delta_repairs(const Instance& instance) {
  RepairSet out;
  // an empty conflict means no candidate repair is consistent
  for (const auto& c : instance.conflict_ids())
    if (c.empty()) return out;
  for_each_mis(instance.hypergraph(), [&](const VertexSet& kept) {
    out.insert(instance.repair_of(kept));
    return true;
  });
  return out;
}

RepairSet delta_repairs_bruteforce(const Instance& instance, const Budget& budget) {
  detail::MaskModel m(instance, budget);
  RepairSet out;
  for (auto b : detail::brute_delta_repairs(m)) out.insert(m.to_db(b));
  return out;
}

bool is_delta_repair(const Database& candidate, const Instance& instance) {
  instance.check_candidate(candidate);
  for (const auto& c : instance.conflict_ids())
    if (c.empty()) return false;
  const auto& h = instance.hypergraph();
  // every literal outside the hypergraph must be kept
  for (const auto& f : candidate) {
    auto id = *instance.universe().find(f);
    if (!instance.universe().in_db(id) && !h.vertex_of(id)) return false;
  }
  for (const auto& f : instance.db()) {
    auto id = *instance.universe().find(f);
    if (!candidate.count(f) && !h.vertex_of(id)) return false;
  }
  VertexSet kept = instance.agreement_on_vertices(candidate);
  auto inside = [&](std::uint32_t e, std::uint32_t skip) {
    for (auto u : h.edges[e])
      if (u != skip && !kept[u]) return false;
    return true;
  };
  for (std::uint32_t e = 0; e < h.edges.size(); ++e)
    if (inside(e, UINT32_MAX)) return false;
  for (std::uint32_t v = 0; v < h.size(); ++v) {
    if (kept[v]) continue;
    bool blocked = std::any_of(h.incident[v].begin(), h.incident[v].end(),
                               [&](std::uint32_t e) { return inside(e, v); });
    if (!blocked) return false;
  }
  return true;
}

namespace {

// Keeps the ⊆-maximal (or minimal) members.
RepairSet extremal(const std::vector<Database>& dbs, bool maximal) {
  RepairSet out;
  for (const auto& a : dbs) {
    bool beaten = std::any_of(dbs.begin(), dbs.end(), [&](const Database& b) {
      if (b.size() == a.size()) return false;
      const Database& small = maximal ? a : b;
      const Database& big = maximal ? b : a;
      return small.size() < big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
    });
    if (!beaten) out.insert(a);
  }
  return out;
}

}  // namespace

RepairSet subset_repairs(const Instance& instance, const Budget& budget) {
  std::vector<Fact> facts(instance.db().begin(), instance.db().end());
  detail::require_within(facts.size(), budget, "database");
  std::vector<Database> consistent;
  for (std::uint64_t b = 0; b < (1ull << facts.size()); ++b) {
    Database d;
    for (std::size_t i = 0; i < facts.size(); ++i)
      if (b >> i & 1) d.insert(facts[i]);
    if (satisfies(d, instance.constraints())) consistent.push_back(std::move(d));
  }
  return extremal(consistent, true);
}

RepairSet superset_repairs(const Instance& instance, const Budget& budget) {
  std::vector<Fact> extra;
  for (const auto& f : instance.universe().facts())
    if (!instance.db().count(f)) extra.push_back(f);
  detail::require_within(extra.size(), budget, "facts outside the database");
  std::vector<Database> consistent;
  for (std::uint64_t b = 0; b < (1ull << extra.size()); ++b) {
    Database d = instance.db();
    for (std::size_t i = 0; i < extra.size(); ++i)
      if (b >> i & 1) d.insert(extra[i]);
    if (satisfies(d, instance.constraints())) consistent.push_back(std::move(d));
  }
  return extremal(consistent, false);
}

}  // namespace optrepair
