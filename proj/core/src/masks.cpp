#include "optrepair/detail/masks.hpp"

#include <algorithm>

namespace optrepair::detail {

void require_within(std::size_t n, const Budget& budget, const char* what) {
  if (n > budget.max_universe || n > 63)
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(n) +
                         " elements exceed the enumeration budget of " +
                         std::to_string(std::min<std::size_t>(budget.max_universe, 63)));
}

MaskModel::MaskModel(const Instance& instance, const Budget& budget)
    : instance_(&instance), n_(instance.universe().size()) {
  require_within(n_, budget, "fact universe");
  const auto& u = instance.universe();
  for (FactId i = 0; i < n_; ++i)
    if (u.in_db(i)) db_ |= 1ull << i;
  for (const auto& c : instance.cubes()) {
    std::uint64_t p = 0, q = 0;
    for (PLit l : c) (plit_positive(l) ? p : q) |= 1ull << plit_fact(l);
    cubes_.emplace_back(p, q);
  }
}

bool MaskModel::consistent(std::uint64_t b) const {
  for (const auto& [p, q] : cubes_)
    if ((b & p) == p && (b & q) == 0) return false;
  return true;
}

Database MaskModel::to_db(std::uint64_t b) const {
  Database out;
  for (std::size_t i = 0; i < n_; ++i)
    if (b >> i & 1) out.insert(instance_->universe().fact(static_cast<FactId>(i)));
  return out;
}

std::uint64_t MaskModel::from_db(const Database& d) const {
  std::uint64_t b = 0;
  for (const auto& f : d) {
    auto id = instance_->universe().find(f);
    if (!id) throw InputError("database contains a fact outside the fact universe");
    b |= 1ull << *id;
  }
  return b;
}

std::vector<std::uint64_t> consistent_subsets(const MaskModel& m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 0;; ++b) {
    if (m.consistent(b)) out.push_back(b);
    if (b == m.full()) break;
  }
  return out;
}

std::vector<std::uint64_t> brute_delta_repairs(const MaskModel& m) {
  std::vector<std::uint64_t> deltas;
  for (auto b : consistent_subsets(m)) deltas.push_back(b ^ m.db_mask());
  std::sort(deltas.begin(), deltas.end(), [](std::uint64_t a, std::uint64_t b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  std::vector<std::uint64_t> minimal;
  for (auto d : deltas) {
    bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                 [&](std::uint64_t k) { return (k & d) == k; });
    if (!dominated) minimal.push_back(d);
  }
  std::vector<std::uint64_t> out;
  for (auto d : minimal) out.push_back(d ^ m.db_mask());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> minimal_hitting_sets(const std::vector<std::uint64_t>& family,
                                                std::size_t n) {
  auto hits = [&](std::uint64_t h) {
    return std::all_of(family.begin(), family.end(), [&](std::uint64_t s) { return (s & h) != 0; });
  };
  std::uint64_t support = 0;
  for (auto s : family) support |= s;
  std::vector<std::uint64_t> out;
  // enumerate subsets of the support only
  std::uint64_t h = 0;
  while (true) {
    if (hits(h)) {
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i)
        if ((h >> i & 1) && hits(h & ~(1ull << i))) minimal = false;
      if (minimal) out.push_back(h);
    }
    if (h == support) break;
    h = (h - support) & support;  // next subset of support
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace optrepair::detail
