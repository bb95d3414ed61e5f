#pragma once

#include <cstdint>
#include <vector>

#include "optrepair/errors.hpp"
#include "optrepair/instance.hpp"

namespace optrepair::detail {

// Bitmask view of an instance for exhaustive oracles: bit i is fact i of the
// universe. Only usable below the budget (and below 64 facts).
class MaskModel {
 public:
  MaskModel(const Instance& instance, const Budget& budget);

  std::size_t size() const { return n_; }
  std::uint64_t db_mask() const { return db_; }
  std::uint64_t full() const { return n_ == 64 ? ~0ull : ((1ull << n_) - 1); }
  bool consistent(std::uint64_t b) const;
  // Λ_D(B) as a mask: bit i set iff B agrees with D on fact i.
  std::uint64_t agreement(std::uint64_t b) const { return ~(b ^ db_) & full(); }
  Database to_db(std::uint64_t b) const;
  std::uint64_t from_db(const Database& d) const;
  const Instance& instance() const { return *instance_; }

 private:
  const Instance* instance_;
  std::size_t n_;
  std::uint64_t db_ = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cubes_;  // (positive, negative)
};

void require_within(std::size_t n, const Budget& budget, const char* what);

// All consistent b, in increasing mask order.
std::vector<std::uint64_t> consistent_subsets(const MaskModel& m);
// Consistent b with ⊆-minimal b Δ D.
std::vector<std::uint64_t> brute_delta_repairs(const MaskModel& m);
// Minimal hitting sets of `family` over `n` bits.
std::vector<std::uint64_t> minimal_hitting_sets(const std::vector<std::uint64_t>& family,
                                                std::size_t n);

inline int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

}  // namespace optrepair::detail
