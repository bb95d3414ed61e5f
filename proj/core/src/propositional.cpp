#include "optrepair/propositional.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace optrepair {

bool subsumes(const Cube& small, const Cube& big) {
  return small.size() <= big.size() &&
         std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Cube> minimize(std::vector<Cube> cubes) {
  std::sort(cubes.begin(), cubes.end(), [](const Cube& a, const Cube& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  cubes.erase(std::unique(cubes.begin(), cubes.end()), cubes.end());
  std::vector<Cube> kept;
  for (auto& c : cubes) {
    bool dominated = false;
    for (const auto& k : kept)
      if (subsumes(k, c)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

namespace {

// Consensus of a and b when they clash on exactly one fact.
bool consensus(const Cube& a, const Cube& b, Cube& out) {
  out.clear();
  int clashes = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      if (j < b.size() && plit_fact(a[i]) == plit_fact(b[j])) {
        // a[i] is the positive and b[j] the negative literal of the same fact
        if (++clashes > 1) return false;
        ++i;
        ++j;
        continue;
      }
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      if (i < a.size() && plit_fact(a[i]) == plit_fact(b[j])) {
        if (++clashes > 1) return false;
        ++i;
        ++j;
        continue;
      }
      out.push_back(b[j++]);
    } else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  return clashes == 1;
}

bool subsumed_by_any(const std::vector<Cube>& pool, const Cube& c) {
  for (const auto& p : pool)
    if (subsumes(p, c)) return true;
  return false;
}

bool has_clash_candidates(const std::vector<Cube>& cubes) {
  std::unordered_set<PLit> seen;
  for (const auto& c : cubes)
    for (PLit l : c) seen.insert(l);
  for (PLit l : seen)
    if (seen.count(plit_negate(l))) return true;
  return false;
}

}  // namespace

std::vector<Cube> prime_implicants(std::vector<Cube> cubes) {
  std::vector<Cube> terms = minimize(std::move(cubes));
  if (!has_clash_candidates(terms)) return terms;
  std::vector<char> fresh(terms.size(), 1);
  Cube r;
  while (true) {
    std::vector<Cube> added;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (!fresh[i]) continue;
      for (std::size_t j = 0; j < terms.size(); ++j) {
        if (fresh[j] && j < i) continue;  // fresh pairs visited once
        if (!consensus(terms[i], terms[j], r)) continue;
        if (subsumed_by_any(terms, r) || subsumed_by_any(added, r)) continue;
        added.push_back(r);
      }
    }
    if (added.empty()) break;
    std::set<Cube> fresh_set(added.begin(), added.end());
    std::vector<Cube> all = std::move(terms);
    all.insert(all.end(), added.begin(), added.end());
    terms = minimize(std::move(all));
    fresh.assign(terms.size(), 0);
    for (std::size_t i = 0; i < terms.size(); ++i) fresh[i] = fresh_set.count(terms[i]) ? 1 : 0;
  }
  return terms;
}

std::vector<Cube> ground_cubes(const Universe& universe,
                               const std::vector<UniversalConstraint>& constraints) {
  std::set<Cube> out;
  for (const auto& c : constraints) {
    auto vars = c.variables();
    std::vector<std::string> v(vars.begin(), vars.end());
    for_each_assignment(v, universe.domain(), [&](const Substitution& s) {
      for (const auto& q : c.inequalities())
        if (apply(s, q.lhs).name == apply(s, q.rhs).name) return true;
      Cube cube;
      for (const auto& l : c.body()) {
        auto id = universe.find(apply(s, l.atom).to_fact());
        if (!id) {
          if (l.positive) return true;
          continue;
        }
        cube.push_back(make_plit(*id, l.positive));
      }
      std::sort(cube.begin(), cube.end());
      cube.erase(std::unique(cube.begin(), cube.end()), cube.end());
      for (std::size_t k = 1; k < cube.size(); ++k)
        if (plit_fact(cube[k]) == plit_fact(cube[k - 1])) return true;  // never violated
      out.insert(std::move(cube));
      return true;
    });
  }
  return {out.begin(), out.end()};
}

std::vector<Cube> prune_dead(const Universe& universe, std::vector<Cube> cubes) {
  auto in_lits = [&](PLit l) { return universe.in_db(plit_fact(l)) == plit_positive(l); };
  while (true) {
    std::unordered_set<PLit> present;
    for (const auto& c : cubes) present.insert(c.begin(), c.end());
    std::vector<Cube> kept;
    for (auto& c : cubes) {
      bool dead = false;
      for (PLit l : c)
        if (!in_lits(l) && !present.count(plit_negate(l))) {
          dead = true;
          break;
        }
      if (!dead) kept.push_back(std::move(c));
    }
    if (kept.size() == cubes.size()) return kept;
    cubes = std::move(kept);
  }
}

}  // namespace optrepair
