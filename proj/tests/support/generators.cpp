#include "generators.hpp"

#include <algorithm>
#include <numeric>

#include "optrepair/universe.hpp"

#include <map>

namespace optrepair::testing {

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

namespace {

const std::vector<std::string> kVars{"x", "y", "z"};

std::size_t facts_count(const Schema& s, std::size_t n) {
  std::size_t total = 0;
  for (const auto& [p, a] : s.predicates()) {
    std::size_t k = 1;
    for (std::size_t i = 0; i < a; ++i) k *= n;
    total += k;
  }
  return total;
}

// Term drawn from `vars` (possibly none) or a constant.
Term term_from(Rng& rng, const std::vector<std::string>& vars, const std::vector<std::string>& constants) {
  if (vars.empty() || coin(rng, 0.15)) return Term::constant(constants[pick(rng, 0, constants.size() - 1)]);
  return Term::var(vars[pick(rng, 0, vars.size() - 1)]);
}

Atom atom_over(Rng& rng, const Schema& s, const std::vector<std::string>& vars,
               const std::vector<std::string>& constants) {
  auto it = s.predicates().begin();
  std::advance(it, pick(rng, 0, s.predicates().size() - 1));
  Atom a{it->first, {}};
  for (std::size_t i = 0; i < it->second; ++i) a.args.push_back(term_from(rng, vars, constants));
  return a;
}

struct RandomBody {
  std::vector<BodyLiteral> lits;
  std::vector<Inequality> ineqs;
  std::vector<std::string> bound;
};

RandomBody random_body(Rng& rng, const RandomCase& c, bool with_negative) {
  RandomBody b;
  std::size_t npos = pick(rng, 1, 2);
  for (std::size_t i = 0; i < npos; ++i) {
    Atom a = atom_over(rng, c.schema, kVars, c.constants);
    for (const auto& t : a.args)
      if (t.is_variable() && std::find(b.bound.begin(), b.bound.end(), t.name) == b.bound.end())
        b.bound.push_back(t.name);
    b.lits.push_back({a, true});
  }
  if (with_negative && coin(rng, 0.4)) b.lits.push_back({atom_over(rng, c.schema, b.bound, c.constants), false});
  if (coin(rng, 0.25)) b.ineqs.push_back({term_from(rng, b.bound, c.constants), term_from(rng, b.bound, c.constants)});
  return b;
}

}  // namespace

RandomCase random_case(Rng& rng, const GenLimits& lim) {
  while (true) {
    RandomCase c;
    std::size_t nc = pick(rng, 1, lim.max_constants);
    for (std::size_t i = 0; i < nc; ++i) c.constants.push_back(std::string(1, static_cast<char>('a' + i)));
    std::size_t np = pick(rng, 1, lim.max_predicates);
    for (std::size_t i = 0; i < np; ++i) {
      std::size_t arity = std::discrete_distribution<std::size_t>({1, 4, 2})(rng);
      c.schema.declare("P" + std::to_string(i), arity);
    }
    if (facts_count(c.schema, nc) > lim.max_facts) continue;
    // every fact over the chosen constants
    Database db;
    std::vector<Fact> all;
    {
      Database probe;
      for (const auto& k : c.constants)
        for (const auto& [p, a] : c.schema.predicates())
          if (a > 0) probe.insert(Fact{p, std::vector<std::string>(a, k)});
      for (const auto& f : facts_universe(probe, c.schema)) all.push_back(f);
    }
    for (const auto& f : all)
      if (coin(rng, 0.6)) db.insert(f);
    c.db = db;
    // constants outside adom(D) would be dropped; keep the list in sync
    auto adom = active_domain(db);
    c.constants.assign(adom.begin(), adom.end());
    if (c.constants.empty()) c.constants.push_back("a");
    std::size_t ncons = pick(rng, 1, lim.max_constraints);
    for (std::size_t i = 0; i < ncons; ++i) {
      RandomBody b = random_body(rng, c, true);
      std::vector<Atom> head;
      if (coin(rng, 0.35)) head.push_back(atom_over(rng, c.schema, b.bound, c.constants));
      try {
        c.constraints.emplace_back(b.lits, b.ineqs, head);
      } catch (const InputError&) {
        // constants-only atom with a nullary predicate etc.: just skip
      }
    }
    if (c.constraints.empty()) continue;
    if (Instance(c.db, c.constraints, c.schema).conflict_ids().empty() && !coin(rng, lim.keep_conflict_free))
      continue;
    return c;
  }
}

Instance random_instance(Rng& rng, const GenLimits& lim) {
  RandomCase c = random_case(rng, lim);
  return Instance(c.db, c.constraints, c.schema);
}

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> co_pairs(const IndexedHypergraph& h) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& e : h.edges)
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) out.insert({e[i], e[j]});
  return {out.begin(), out.end()};
}

}  // namespace

PriorityRelation random_priority(Rng& rng, const Instance& inst, double density) {
  const auto& h = inst.hypergraph();
  std::vector<std::size_t> rank(h.size());
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  PriorityRelation p;
  for (auto [u, v] : co_pairs(h)) {
    if (!coin(rng, density)) continue;
    Literal a = inst.universe().literal(h.vertices[u]);
    Literal b = inst.universe().literal(h.vertices[v]);
    if (rank[u] < rank[v])
      p.edges.insert({a, b});
    else
      p.edges.insert({b, a});
  }
  return p;
}

PriorityRelation random_scores(Rng& rng, const Instance& inst, int levels) {
  PriorityRelation p;
  const auto& h = inst.hypergraph();
  for (std::size_t v = 0; v < h.size(); ++v)
    p.scores[inst.universe().literal(h.vertices[v])] = static_cast<long long>(pick(rng, 0, levels - 1));
  return p;
}

ConjunctiveQuery random_query(Rng& rng, const RandomCase& c) {
  std::size_t n = pick(rng, 1, 2);
  std::vector<Atom> body;
  std::set<std::string> vars;
  std::vector<std::string> pool{"x", "y"};
  for (std::size_t i = 0; i < n; ++i) {
    Atom a = atom_over(rng, c.schema, pool, c.constants);
    for (const auto& t : a.args)
      if (t.is_variable()) vars.insert(t.name);
    body.push_back(a);
  }
  std::vector<std::string> head;
  for (const auto& v : vars)
    if (coin(rng)) head.push_back(v);
  return ConjunctiveQuery("q", head, body);
}

std::vector<Aic> random_aics(Rng& rng, const RandomCase& c, std::size_t max_rules) {
  std::vector<Aic> out;
  std::size_t n = pick(rng, 1, max_rules);
  for (std::size_t i = 0; i < n; ++i) {
    RandomBody b = random_body(rng, c, true);
    std::vector<UpdateAtom> ups;
    for (const auto& l : b.lits)
      if (coin(rng)) ups.push_back({l.positive ? UpdateOp::Remove : UpdateOp::Add, l.atom});
    if (ups.empty()) {
      const auto& l = b.lits[pick(rng, 0, b.lits.size() - 1)];
      ups.push_back({l.positive ? UpdateOp::Remove : UpdateOp::Add, l.atom});
    }
    try {
      out.emplace_back(b.lits, b.ineqs, ups);
    } catch (const InputError&) {
    }
  }
  return out;
}

PropCase random_prop_aics(Rng& rng, bool monotone, std::size_t max_atoms, std::size_t max_rules) {
  PropCase c;
  std::size_t k = pick(rng, 2, max_atoms);
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < k; ++i) atoms.push_back("p" + std::to_string(i));
  for (const auto& a : atoms)
    if (coin(rng, 0.75)) c.db.insert(Fact{a, {}});
  std::size_t n = pick(rng, 1, max_rules);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> order = atoms;
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t len = std::min<std::size_t>(k, std::discrete_distribution<std::size_t>({0, 1, 4, 2})(rng));
    std::vector<BodyLiteral> body;
    for (std::size_t j = 0; j < len; ++j) body.push_back({Atom{order[j], {}}, monotone || coin(rng, 0.7)});
    std::vector<UpdateAtom> ups;
    for (const auto& l : body)
      if (coin(rng)) ups.push_back({l.positive ? UpdateOp::Remove : UpdateOp::Add, l.atom});
    if (ups.empty()) ups.push_back({body[0].positive ? UpdateOp::Remove : UpdateOp::Add, body[0].atom});
    c.aics.emplace_back(body, std::vector<Inequality>{}, ups);
  }
  return c;
}

std::optional<PropCase> random_resolved_aics(Rng& rng, std::size_t max_atoms, std::size_t max_rules) {
  PropCase base = random_prop_aics(rng, false, max_atoms, 3);
  std::map<LiteralSet, UpdateSet> rules;
  Schema schema;
  declare(schema, base.db);
  for (const auto& a : base.aics)
    for (const auto& l : a.body()) declare(schema, l.atom);
  for (const auto& a : base.aics)
    for (const auto& g : ground_aics({a}, Universe(base.db, schema))) rules[g.lits].insert(g.upd.begin(), g.upd.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<LiteralSet, UpdateSet>> snapshot(rules.begin(), rules.end());
    for (const auto& [l1, u1] : snapshot)
      for (const auto& [l2, u2] : snapshot)
        for (const auto& x : l1) {
          if (!x.positive || !l2.count(x.negated())) continue;
          LiteralSet res;
          for (const auto& l : l1)
            if (l != x) res.insert(l);
          for (const auto& l : l2)
            if (l != x.negated()) res.insert(l);
          if (!is_consistent(res)) continue;
          if (res.empty()) return std::nullopt;
          UpdateSet up;
          for (const auto* u : {&u1, &u2})
            for (const auto& a : *u)
              if (a.fact != x.fact) up.insert(a);
          if (up.empty()) return std::nullopt;
          auto& target = rules[res];
          for (const auto& a : up) changed |= target.insert(a).second;
          if (rules.size() > max_rules) return std::nullopt;
        }
  }
  PropCase out{base.db, {}};
  for (const auto& [l, u] : rules) out.aics.push_back(to_aic(GroundAic{l, u}));
  return out;
}

}  // namespace optrepair::testing
