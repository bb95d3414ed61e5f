#include "optrepair/priorities.hpp"

#include <algorithm>
#include <numeric>

#include "optrepair/detail/masks.hpp"
#include "optrepair/io.hpp"

namespace optrepair {

namespace {

using Matrix = std::vector<std::vector<char>>;

std::optional<std::uint32_t> vertex_of(const Instance& inst, const Literal& l) {
  auto id = inst.universe().find_literal(l);
  if (!id) return std::nullopt;
  return inst.hypergraph().vertex_of(*id);
}

Literal vertex_literal(const Instance& inst, std::uint32_t v) {
  return inst.universe().literal(inst.hypergraph().vertices[v]);
}

Matrix co_matrix(const Instance& inst) {
  const auto& h = inst.hypergraph();
  Matrix co(h.size(), std::vector<char>(h.size(), 0));
  for (const auto& e : h.edges)
    for (auto u : e)
      for (auto v : e)
        if (u != v) co[u][v] = 1;
  return co;
}

bool reaches(const Matrix& adj, std::uint32_t from, std::uint32_t to) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<std::uint32_t> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    if (u == to) return true;
    for (std::uint32_t w = 0; w < adj.size(); ++w)
      if (adj[u][w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return false;
}

// Some cycle of `adj` as a vertex list, empty if acyclic.
std::vector<std::uint32_t> find_cycle(const Matrix& adj) {
  const auto n = static_cast<std::uint32_t>(adj.size());
  std::vector<int> color(n, 0);
  std::vector<std::uint32_t> parent(n, 0);
  std::vector<std::uint32_t> cycle;
  std::function<bool(std::uint32_t)> dfs = [&](std::uint32_t u) {
    color[u] = 1;
    for (std::uint32_t w = 0; w < n; ++w) {
      if (!adj[u][w]) continue;
      if (color[w] == 1) {
        for (auto x = u; x != w; x = parent[x]) cycle.push_back(x);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return true;
      }
      if (color[w] == 0) {
        parent[w] = u;
        if (dfs(w)) return true;
      }
    }
    color[u] = 2;
    return false;
  };
  for (std::uint32_t u = 0; u < n; ++u)
    if (color[u] == 0 && dfs(u)) break;
  return cycle;
}

bool has_empty_conflict(const Instance& inst) {
  const auto& cs = inst.conflict_ids();
  return std::any_of(cs.begin(), cs.end(), [](const auto& c) { return c.empty(); });
}

// e \ {skip} inside `in`
bool edge_inside(const IndexedHypergraph& h, std::uint32_t e, const VertexSet& in,
                 std::uint32_t skip) {
  for (auto u : h.edges[e])
    if (u != skip && !in[u]) return false;
  return true;
}

bool pareto_optimal(const PrioritizedDatabase& pdb, const VertexSet& m) {
  const auto& h = pdb.instance().hypergraph();
  for (std::uint32_t mu = 0; mu < h.size(); ++mu) {
    if (m[mu]) continue;
    VertexSet keep(h.size(), false);
    for (std::uint32_t l = 0; l < h.size(); ++l) keep[l] = m[l] && !pdb.prefers(mu, l);
    bool blocked = std::any_of(h.incident[mu].begin(), h.incident[mu].end(),
                               [&](std::uint32_t e) { return edge_inside(h, e, keep, mu); });
    if (!blocked) return false;  // {mu} plus the kept literals extends to an improvement
  }
  return true;
}

bool global_optimal(const PrioritizedDatabase& pdb, const VertexSet& m) {
  const auto& h = pdb.instance().hypergraph();
  bool improved = false;
  for_each_mis(h, [&](const VertexSet& other) {
    if (other == m) return true;
    bool all_beaten = true;
    for (std::uint32_t l = 0; l < h.size() && all_beaten; ++l) {
      if (!m[l] || other[l]) continue;
      bool beaten = false;
      for (std::uint32_t mu = 0; mu < h.size() && !beaten; ++mu)
        beaten = other[mu] && !m[mu] && pdb.prefers(mu, l);
      all_beaten = beaten;
    }
    improved = all_beaten;
    return !improved;
  });
  return !improved;
}

// Searches witness conflicts for the excluded literals whose "kept literals
// come first" arcs stay acyclic together with the priority.
bool completion_certificate(const PrioritizedDatabase& pdb, const VertexSet& m) {
  const auto& h = pdb.instance().hypergraph();
  const auto n = static_cast<std::uint32_t>(h.size());
  Matrix adj(n, std::vector<char>(n, 0));
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v) adj[u][v] = pdb.prefers(u, v);

  std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> todo;
  for (std::uint32_t l = 0; l < n; ++l) {
    if (m[l]) continue;
    std::vector<std::uint32_t> ws;
    for (auto e : h.incident[l])
      if (edge_inside(h, e, m, l)) ws.push_back(e);
    if (ws.empty()) return false;
    todo.emplace_back(l, std::move(ws));
  }
  std::sort(todo.begin(), todo.end(),
            [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });

  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == todo.size()) return true;
    const auto& [l, ws] = todo[i];
    for (auto e : ws) {
      bool cyclic = false;
      for (auto u : h.edges[e])
        if (u != l && reaches(adj, l, u)) {
          cyclic = true;
          break;
        }
      if (cyclic) continue;
      std::vector<std::uint32_t> added;
      for (auto u : h.edges[e])
        if (u != l && !adj[u][l]) {
          adj[u][l] = 1;
          added.push_back(u);
        }
      if (rec(i + 1)) return true;
      for (auto u : added) adj[u][l] = 0;
    }
    return false;
  };
  return rec(0);
}

bool optimal_on_vertices(const PrioritizedDatabase& pdb, const VertexSet& m, RepairNotion notion) {
  switch (notion) {
    case RepairNotion::Delta: return true;
    case RepairNotion::Pareto: return pareto_optimal(pdb, m);
    case RepairNotion::Global: return global_optimal(pdb, m);
    case RepairNotion::Completion: return completion_certificate(pdb, m);
  }
  return false;
}

}  // namespace

const char* to_string(RepairNotion n) {
  switch (n) {
    case RepairNotion::Delta: return "delta";
    case RepairNotion::Pareto: return "pareto";
    case RepairNotion::Global: return "global";
    case RepairNotion::Completion: return "completion";
  }
  return "?";
}

PriorityDiagnostics validate_priority(const PriorityRelation& priority, const Instance& instance) {
  PriorityDiagnostics d;
  const auto& h = instance.hypergraph();
  Matrix co = co_matrix(instance);
  Matrix adj(h.size(), std::vector<char>(h.size(), 0));
  for (const auto& [a, b] : priority.edges) {
    auto u = vertex_of(instance, a), v = vertex_of(instance, b);
    if (!u || !v || !co[*u][*v]) {
      if (u && v && *u == *v) {
        d.valid = false;
        d.cycle = {a, a};
        d.message = "priority cycle: " + format(a) + " > " + format(a);
        return d;
      }
      d.valid = false;
      d.bad_edge = {a, b};
      d.message = "priority edge " + format(a) + " > " + format(b) +
                  (!u || !v ? " mentions a literal outside every conflict"
                            : " relates literals that share no conflict");
      return d;
    }
    adj[*u][*v] = 1;
  }
  auto cyc = find_cycle(adj);
  if (!cyc.empty()) {
    d.valid = false;
    d.message = "priority cycle:";
    for (auto v : cyc) d.cycle.push_back(vertex_literal(instance, v));
    d.cycle.push_back(d.cycle.front());
    for (std::size_t i = 0; i < d.cycle.size(); ++i)
      d.message += (i ? " > " : " ") + format(d.cycle[i]);
  }
  return d;
}

PrioritizedDatabase::PrioritizedDatabase(Instance instance, PriorityRelation priority)
    : instance_(std::move(instance)), priority_(std::move(priority)) {
  co_ = co_matrix(instance_);
  const auto& h = instance_.hypergraph();
  if (priority_.has_scores()) {
    for (const auto& [l, s] : priority_.scores)
      if (!instance_.universe().find_literal(l))
        throw InputError("score given for " + format(l) + ", which is not in the literal universe");
    auto score = [&](const Literal& l) {
      auto it = priority_.scores.find(l);
      return it == priority_.scores.end() ? 0LL : it->second;
    };
    for (const auto& [a, b] : priority_.edges)
      if (score(a) <= score(b))
        throw InputError("priority edge " + format(a) + " > " + format(b) + " contradicts the scores");
    for (std::uint32_t u = 0; u < h.size(); ++u)
      for (std::uint32_t v = 0; v < h.size(); ++v)
        if (co_[u][v] && score(vertex_literal(instance_, u)) > score(vertex_literal(instance_, v)))
          priority_.edges.emplace(vertex_literal(instance_, u), vertex_literal(instance_, v));
  }
  auto diag = validate_priority(priority_, instance_);
  if (!diag.valid) throw InputError(diag.message);
  gt_.assign(h.size(), std::vector<char>(h.size(), 0));
  for (const auto& [a, b] : priority_.edges) gt_[*vertex_of(instance_, a)][*vertex_of(instance_, b)] = 1;
}

bool PrioritizedDatabase::is_total() const {
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = u + 1; v < size(); ++v)
      if (co_[u][v] && !gt_[u][v] && !gt_[v][u]) return false;
  return true;
}

namespace {

struct Diff {
  LiteralSet gained, lost;
};

Diff diff(const Database& b, const Database& r, const PrioritizedDatabase& pdb) {
  const auto& inst = pdb.instance();
  inst.check_candidate(b);
  inst.check_candidate(r);
  auto lb = agreement(inst.db(), inst.schema(), b);
  auto lr = agreement(inst.db(), inst.schema(), r);
  Diff d;
  std::set_difference(lb.begin(), lb.end(), lr.begin(), lr.end(), std::inserter(d.gained, d.gained.end()));
  std::set_difference(lr.begin(), lr.end(), lb.begin(), lb.end(), std::inserter(d.lost, d.lost.end()));
  return d;
}

}  // namespace

bool is_pareto_improvement(const Database& b, const Database& r, const PrioritizedDatabase& pdb) {
  auto d = diff(b, r, pdb);
  if (!satisfies(b, pdb.instance().constraints())) return false;
  const auto& edges = pdb.priority().edges;
  return std::any_of(d.gained.begin(), d.gained.end(), [&](const Literal& mu) {
    return std::all_of(d.lost.begin(), d.lost.end(),
                       [&](const Literal& l) { return edges.count({mu, l}) > 0; });
  });
}

bool is_global_improvement(const Database& b, const Database& r, const PrioritizedDatabase& pdb) {
  auto d = diff(b, r, pdb);
  if (!satisfies(b, pdb.instance().constraints())) return false;
  if (d.gained.empty() && d.lost.empty()) return false;
  const auto& edges = pdb.priority().edges;
  return std::all_of(d.lost.begin(), d.lost.end(), [&](const Literal& l) {
    return std::any_of(d.gained.begin(), d.gained.end(),
                       [&](const Literal& mu) { return edges.count({mu, l}) > 0; });
  });
}

bool is_optimal_repair(const Database& r, const PrioritizedDatabase& pdb, RepairNotion notion) {
  if (!is_delta_repair(r, pdb.instance())) return false;
  return optimal_on_vertices(pdb, pdb.instance().agreement_on_vertices(r), notion);
}

RepairSet optimal_repairs(const PrioritizedDatabase& pdb, RepairNotion notion) {
  RepairSet out;
  if (has_empty_conflict(pdb.instance())) return out;
  for_each_mis(pdb.instance().hypergraph(), [&](const VertexSet& m) {
    if (optimal_on_vertices(pdb, m, notion)) out.insert(pdb.instance().repair_of(m));
    return true;
  });
  return out;
}

namespace {

// Priority over fact ids of the universe.
Matrix fact_priority(const PrioritizedDatabase& pdb) {
  const auto& u = pdb.instance().universe();
  Matrix gt(u.size(), std::vector<char>(u.size(), 0));
  for (const auto& [a, b] : pdb.priority().edges) gt[*u.find_literal(a)][*u.find_literal(b)] = 1;
  return gt;
}

bool mask_improves(const Matrix& gt, std::size_t n, std::uint64_t gained, std::uint64_t lost,
                   RepairNotion notion) {
  auto beats = [&](std::size_t mu, std::uint64_t set) {
    for (std::size_t l = 0; l < n; ++l)
      if ((set >> l & 1) && !gt[mu][l]) return false;
    return true;
  };
  if (notion == RepairNotion::Pareto) {
    for (std::size_t mu = 0; mu < n; ++mu)
      if ((gained >> mu & 1) && beats(mu, lost)) return true;
    return false;
  }
  if (!gained && !lost) return false;
  for (std::size_t l = 0; l < n; ++l) {
    if (!(lost >> l & 1)) continue;
    bool ok = false;
    for (std::size_t mu = 0; mu < n && !ok; ++mu) ok = (gained >> mu & 1) && gt[mu][l];
    if (!ok) return false;
  }
  return true;
}

RepairSet brute_improvement_free(const PrioritizedDatabase& pdb, RepairNotion notion,
                                 const Budget& budget) {
  detail::MaskModel m(pdb.instance(), budget);
  auto gt = fact_priority(pdb);
  auto consistent = detail::consistent_subsets(m);
  RepairSet out;
  for (auto r : detail::brute_delta_repairs(m)) {
    auto lr = m.agreement(r);
    bool improved = std::any_of(consistent.begin(), consistent.end(), [&](std::uint64_t b) {
      auto lb = m.agreement(b);
      return mask_improves(gt, m.size(), lb & ~lr, lr & ~lb, notion);
    });
    if (!improved) out.insert(m.to_db(r));
  }
  return out;
}

}  // namespace

RepairSet optimal_repairs_bruteforce(const PrioritizedDatabase& pdb, RepairNotion notion,
                                     const Budget& budget) {
  switch (notion) {
    case RepairNotion::Delta: return delta_repairs_bruteforce(pdb.instance(), budget);
    case RepairNotion::Pareto:
    case RepairNotion::Global: return brute_improvement_free(pdb, notion, budget);
    case RepairNotion::Completion: {
      RepairSet out;
      for_each_completion(pdb, budget, [&](const PriorityRelation& total) {
        auto g = brute_improvement_free(PrioritizedDatabase(pdb.instance(), total),
                                        RepairNotion::Global, budget);
        out.insert(g.begin(), g.end());
        return true;
      });
      return out;
    }
  }
  return {};
}

Database greedy_completion_optimal(const PrioritizedDatabase& pdb,
                                   const std::vector<Literal>& tiebreak) {
  const auto& inst = pdb.instance();
  if (has_empty_conflict(inst))
    throw InputError("the constraints admit no consistent candidate repair");
  const auto& h = inst.hypergraph();
  const auto n = static_cast<std::uint32_t>(h.size());
  std::vector<std::size_t> rank(n);
  for (std::uint32_t v = 0; v < n; ++v) rank[v] = tiebreak.size() + v;
  for (std::size_t i = 0; i < tiebreak.size(); ++i)
    if (auto v = vertex_of(inst, tiebreak[i]); v && rank[*v] >= tiebreak.size()) rank[*v] = i;

  std::vector<char> considered(n, 0);
  VertexSet in(n, false);
  for (std::uint32_t step = 0; step < n; ++step) {
    std::optional<std::uint32_t> pick;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (considered[v]) continue;
      bool dominated = false;
      for (std::uint32_t u = 0; u < n && !dominated; ++u) dominated = !considered[u] && pdb.prefers(u, v);
      if (!dominated && (!pick || rank[v] < rank[*pick])) pick = v;
    }
    auto v = *pick;  // the priority is acyclic, so some literal is undominated
    considered[v] = 1;
    bool closes = std::any_of(h.incident[v].begin(), h.incident[v].end(),
                              [&](std::uint32_t e) { return edge_inside(h, e, in, v); });
    if (!closes) in[v] = true;
  }
  return inst.repair_of(in);
}

void for_each_completion(const PrioritizedDatabase& pdb, const Budget& budget,
                         const std::function<bool(const PriorityRelation&)>& visit) {
  const auto n = static_cast<std::uint32_t>(pdb.size());
  Matrix adj(n, std::vector<char>(n, 0));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> open;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v) {
      adj[u][v] = pdb.prefers(u, v);
      if (u < v && pdb.co_conflict(u, v) && !pdb.prefers(u, v) && !pdb.prefers(v, u))
        open.emplace_back(u, v);
    }
  std::size_t emitted = 0;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == open.size()) {
      if (++emitted > budget.max_completions)
        throw BudgetExceeded("more than " + std::to_string(budget.max_completions) + " completions");
      PriorityRelation total;
      for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = 0; v < n; ++v)
          if (adj[u][v])
            total.edges.emplace(vertex_literal(pdb.instance(), u), vertex_literal(pdb.instance(), v));
      if (!visit(total)) stop = true;
      return;
    }
    auto [a, b] = open[i];
    for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
      if (reaches(adj, v, u)) continue;
      adj[u][v] = 1;
      rec(i + 1);
      adj[u][v] = 0;
      if (stop) return;
    }
  };
  rec(0);
}

std::vector<PriorityRelation> completions(const PrioritizedDatabase& pdb, const Budget& budget) {
  std::vector<PriorityRelation> out;
  for_each_completion(pdb, budget, [&](const PriorityRelation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::optional<std::map<Literal, long long>> detect_score_structure(const PrioritizedDatabase& pdb) {
  const auto n = static_cast<std::uint32_t>(pdb.size());
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (pdb.co_conflict(u, v) && !pdb.prefers(u, v) && !pdb.prefers(v, u)) parent[find(u)] = find(v);

  Matrix cls(n, std::vector<char>(n, 0));
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v)
      if (pdb.prefers(u, v)) {
        if (find(u) == find(v)) return std::nullopt;
        cls[find(u)][find(v)] = 1;
      }
  if (!find_cycle(cls).empty()) return std::nullopt;

  // longest path to a sink, sinks at 1
  std::vector<long long> level(n, 0);
  std::function<long long(std::uint32_t)> depth = [&](std::uint32_t c) {
    if (level[c]) return level[c];
    long long best = 0;
    for (std::uint32_t d = 0; d < n; ++d)
      if (cls[c][d]) best = std::max(best, depth(d));
    return level[c] = best + 1;
  };
  std::map<Literal, long long> scores;
  for (std::uint32_t v = 0; v < n; ++v) scores[vertex_literal(pdb.instance(), v)] = depth(find(v));
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v)
      if (pdb.co_conflict(u, v) &&
          pdb.prefers(u, v) != (scores[vertex_literal(pdb.instance(), u)] >
                                scores[vertex_literal(pdb.instance(), v)]))
        return std::nullopt;
  return scores;
}

std::vector<LiteralSet> prioritization(const std::map<Literal, long long>& scores) {
  std::map<long long, LiteralSet, std::greater<>> by;
  for (const auto& [l, s] : scores) by[s].insert(l);
  std::vector<LiteralSet> out;
  for (auto& [s, ls] : by) out.push_back(std::move(ls));
  return out;
}

namespace {

std::map<Literal, long long> level_scores(const PrioritizedDatabase& pdb) {
  const auto& p = pdb.priority();
  std::map<Literal, long long> scores;
  if (p.has_scores()) {
    for (std::uint32_t v = 0; v < pdb.size(); ++v) {
      auto l = vertex_literal(pdb.instance(), v);
      auto it = p.scores.find(l);
      scores[l] = it == p.scores.end() ? 0 : it->second;
    }
    return scores;
  }
  auto detected = detect_score_structure(pdb);
  if (!detected) throw InputError("the priority relation is not score-structured");
  return *detected;
}

// a beats b lexicographically over the levels (given as masks)
bool lex_better(std::uint64_t a, std::uint64_t b, const std::vector<std::uint64_t>& levels) {
  for (auto s : levels) {
    auto x = a & s, y = b & s;
    if (x == y) continue;
    return (y & ~x) == 0;  // strict superset at the first differing level
  }
  return false;
}

}  // namespace

RepairSet delta_p_repairs(const PrioritizedDatabase& pdb) {
  const auto& inst = pdb.instance();
  auto levels = prioritization(level_scores(pdb));
  std::vector<VertexSet> mis;
  if (!has_empty_conflict(inst)) mis = maximal_independent_sets(inst.hypergraph());
  auto better = [&](const VertexSet& a, const VertexSet& b) {
    for (const auto& level : levels) {
      bool a_extra = false, b_extra = false;
      for (const auto& l : level) {
        auto v = *vertex_of(inst, l);
        a_extra |= a[v] && !b[v];
        b_extra |= b[v] && !a[v];
      }
      if (!a_extra && !b_extra) continue;
      return a_extra && !b_extra;
    }
    return false;
  };
  RepairSet out;
  for (const auto& m : mis) {
    bool beaten = std::any_of(mis.begin(), mis.end(), [&](const VertexSet& o) { return better(o, m); });
    if (!beaten) out.insert(inst.repair_of(m));
  }
  return out;
}

RepairSet delta_p_repairs_bruteforce(const PrioritizedDatabase& pdb, const Budget& budget) {
  detail::MaskModel m(pdb.instance(), budget);
  const auto& u = pdb.instance().universe();
  std::vector<std::uint64_t> levels;
  std::uint64_t covered = 0;
  for (const auto& level : prioritization(level_scores(pdb))) {
    std::uint64_t s = 0;
    for (const auto& l : level) s |= 1ull << *u.find_literal(l);
    levels.push_back(s);
    covered |= s;
  }
  // literals outside every conflict form an implicit lowest level
  levels.push_back(m.full() & ~covered);
  auto consistent = detail::consistent_subsets(m);
  RepairSet out;
  for (auto r : consistent) {
    auto lr = m.agreement(r);
    bool beaten = std::any_of(consistent.begin(), consistent.end(), [&](std::uint64_t b) {
      return lex_better(m.agreement(b), lr, levels);
    });
    if (!beaten) out.insert(m.to_db(r));
  }
  return out;
}

}  // namespace optrepair
