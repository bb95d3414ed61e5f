#include "optrepair/bridges.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "optrepair/conflicts.hpp"
#include "optrepair/io.hpp"

namespace optrepair {

Fact facts_of(const Literal& l, const std::string& prefix) {
  if (l.positive) return l.fact;
  return {prefix + l.fact.predicate, l.fact.args};
}

Database facts_of(const LiteralSet& ls, const std::string& prefix) {
  Database out;
  for (const auto& l : ls) out.insert(facts_of(l, prefix));
  return out;
}

DenialImage to_denial(const Instance& instance, const std::string& prefix) {
  DenialImage img;
  img.prefix = prefix;
  img.schema = instance.schema();
  for (const auto& [p, n] : instance.schema().predicates()) {
    if (instance.schema().arity(prefix + p))
      throw InputError("predicate " + prefix + p + " already exists; pick another prefix");
    img.schema.declare(prefix + p, n);
  }
  const auto& u = instance.universe();
  for (FactId i = 0; i < u.size(); ++i) img.db.insert(facts_of(u.literal(i), prefix));
  for (const auto& c : conflicts_prime_implicants(instance)) {
    std::vector<BodyLiteral> body;
    for (const auto& f : facts_of(c, prefix)) body.push_back({Atom::of(f), true});
    img.constraints.emplace_back(std::move(body));
  }
  return img;
}

std::vector<std::string> check_denial_image(const Instance& instance, const DenialImage& image) {
  std::vector<std::string> out;
  Instance d(image.db, image.constraints, image.schema);
  std::set<Database> want_conf, got_conf;
  for (const auto& c : conflicts_prime_implicants(instance)) want_conf.insert(facts_of(c, image.prefix));
  for (const auto& c : conflicts_prime_implicants(d)) {
    Database f;
    for (const auto& l : c) {
      if (!l.positive) out.push_back("denial image has a conflict with negative literal " + format(l));
      f.insert(l.fact);
    }
    got_conf.insert(f);
  }
  if (want_conf != got_conf) out.push_back("conflicts differ under facts()");
  std::set<Database> want_rep;
  for (const auto& r : delta_repairs(instance))
    want_rep.insert(facts_of(agreement(instance.db(), instance.schema(), r), image.prefix));
  if (want_rep != delta_repairs(d)) out.push_back("repairs differ under facts() and agreement");
  return out;
}

std::vector<Aic> prio_to_aics(const PrioritizedDatabase& pdb) {
  std::vector<Aic> out;
  const auto& edges = pdb.priority().edges;
  for (const auto& c : conflicts_prime_implicants(pdb.instance())) {
    if (c.empty()) throw InputError("the empty conflict has no update actions");
    GroundAic g{c, {}};
    for (const auto& l : c) {
      bool beats = std::any_of(c.begin(), c.end(), [&](const Literal& m) { return edges.count({l, m}) > 0; });
      if (!beats) g.upd.insert(fix(l));
    }
    out.push_back(to_aic(g));
  }
  return out;
}

namespace {

std::string show(const RepairSet& rs) {
  std::string s = "{";
  bool first = true;
  for (const auto& r : rs) {
    s += first ? "" : ", ";
    first = false;
    s += "{";
    bool f2 = true;
    for (const auto& f : r) {
      s += (f2 ? "" : ", ") + format(f);
      f2 = false;
    }
    s += "}";
  }
  return s + "}";
}

bool subset(const RepairSet& a, const RepairSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

ParetoAicReport verify_pareto_aic(const PrioritizedDatabase& pdb) {
  ParetoAicReport r;
  AicProblem p(pdb.instance().db(), prio_to_aics(pdb), pdb.instance().schema());
  r.pareto = optimal_repairs(pdb, RepairNotion::Pareto);
  r.founded = repairs_of_kind(p, UpdateKind::Founded);
  r.grounded = repairs_of_kind(p, UpdateKind::Grounded);
  r.justified = repairs_of_kind(p, UpdateKind::Justified);
  r.well_founded = repairs_of_kind(p, UpdateKind::WellFounded);
  if (r.pareto != r.justified) r.discrepancies.push_back("pareto " + show(r.pareto) + " vs justified " + show(r.justified));
  if (r.pareto != r.grounded) r.discrepancies.push_back("pareto " + show(r.pareto) + " vs grounded " + show(r.grounded));
  if (r.pareto != r.founded) r.discrepancies.push_back("pareto " + show(r.pareto) + " vs founded " + show(r.founded));
  if (!subset(r.founded, r.well_founded))
    r.discrepancies.push_back("founded " + show(r.founded) + " not within well-founded " + show(r.well_founded));
  r.holds = r.discrepancies.empty();
  return r;
}

namespace {

struct Block {
  std::optional<std::string> constant;
  std::vector<std::string> vars;
};

Term substitute(const Term& t, const std::map<std::string, Term>& s) {
  if (!t.is_variable()) return t;
  return s.at(t.name);
}

}  // namespace

std::vector<UniversalConstraint> refine(const UniversalConstraint& c,
                                        const std::set<std::string>& constants,
                                        std::size_t max_terms) {
  auto vs = c.variables();
  std::vector<std::string> vars(vs.begin(), vs.end());
  if (vars.size() + constants.size() > max_terms)
    throw BudgetExceeded("refinement over " + std::to_string(vars.size() + constants.size()) +
                         " terms exceeds the cap of " + std::to_string(max_terms));
  std::vector<Block> blocks;
  for (const auto& k : constants) blocks.push_back({k, {}});
  std::set<UniversalConstraint> out;

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == vars.size()) {
      std::map<std::string, Term> s;
      std::set<std::string> left;
      for (const auto& b : blocks)
        for (const auto& v : b.vars) {
          if (b.constant) {
            s[v] = Term::constant(*b.constant);
          } else {
            s[v] = Term::var(b.vars.front());
            left.insert(b.vars.front());
          }
        }
      for (const auto& q : c.inequalities())
        if (substitute(q.lhs, s) == substitute(q.rhs, s)) return;
      std::vector<BodyLiteral> body;
      for (const auto& l : c.body()) {
        BodyLiteral n{{l.atom.predicate, {}}, l.positive};
        for (const auto& t : l.atom.args) n.atom.args.push_back(substitute(t, s));
        if (std::find(body.begin(), body.end(), n) == body.end()) body.push_back(std::move(n));
      }
      std::vector<Inequality> ineqs;
      for (auto a = left.begin(); a != left.end(); ++a) {
        for (auto b = std::next(a); b != left.end(); ++b) ineqs.push_back({Term::var(*a), Term::var(*b)});
        for (const auto& k : constants) ineqs.push_back({Term::var(*a), Term::constant(k)});
      }
      out.insert(UniversalConstraint(std::move(body), std::move(ineqs)));
      return;
    }
    // indices: the recursion grows `blocks`
    for (std::size_t b = 0, n = blocks.size(); b < n; ++b) {
      blocks[b].vars.push_back(vars[i]);
      rec(i + 1);
      blocks[b].vars.pop_back();
    }
    blocks.push_back({std::nullopt, {vars[i]}});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
  return {out.begin(), out.end()};
}

namespace {

std::set<Term> terms_of(const UniversalConstraint& c) {
  std::set<Term> out;
  for (const auto& l : c.body())
    for (const auto& t : l.atom.args) out.insert(t);
  for (const auto& q : c.inequalities()) {
    out.insert(q.lhs);
    out.insert(q.rhs);
  }
  return out;
}

// Injective term maps from a's body into b's body. `visit` gets the set of
// image atom indices and returns false to stop.
void for_each_embedding(const UniversalConstraint& a, const UniversalConstraint& b,
                        const std::function<bool(const std::set<std::size_t>&)>& visit) {
  std::map<Term, Term> h;
  std::set<Term> used;
  for (const auto& t : terms_of(a))
    if (!t.is_variable()) {
      h[t] = t;
      used.insert(t);
    }
  std::vector<std::size_t> image;
  bool stop = false;
  auto unequal = [&](const Term& x, const Term& y) {
    if (x == y) return false;
    if (!x.is_variable() && !y.is_variable()) return true;
    for (const auto& q : b.inequalities())
      if ((q.lhs == x && q.rhs == y) || (q.lhs == y && q.rhs == x)) return true;
    return false;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == a.body().size()) {
      for (const auto& q : a.inequalities())
        if (!unequal(h.at(q.lhs), h.at(q.rhs))) return;
      if (!visit(std::set<std::size_t>(image.begin(), image.end()))) stop = true;
      return;
    }
    const auto& la = a.body()[i];
    for (std::size_t j = 0; j < b.body().size() && !stop; ++j) {
      const auto& lb = b.body()[j];
      if (lb.positive != la.positive || lb.atom.predicate != la.atom.predicate ||
          lb.atom.args.size() != la.atom.args.size())
        continue;
      std::vector<Term> bound;
      bool ok = true;
      for (std::size_t k = 0; k < la.atom.args.size() && ok; ++k) {
        const Term& s = la.atom.args[k];
        const Term& t = lb.atom.args[k];
        if (auto it = h.find(s); it != h.end()) {
          ok = it->second == t;
        } else if (used.count(t)) {
          ok = false;
        } else {
          h[s] = t;
          used.insert(t);
          bound.push_back(s);
        }
      }
      if (ok) {
        image.push_back(j);
        rec(i + 1);
        image.pop_back();
      }
      for (const auto& s : bound) {
        used.erase(h[s]);
        h.erase(s);
      }
    }
  };
  rec(0);
}

std::size_t distinct_atoms(const UniversalConstraint& c) {
  return std::set<BodyLiteral>(c.body().begin(), c.body().end()).size();
}

}  // namespace

bool subsumes(const UniversalConstraint& general, const UniversalConstraint& specific) {
  bool found = false;
  const auto n = distinct_atoms(specific);
  for_each_embedding(general, specific, [&](const std::set<std::size_t>& img) {
    found = img.size() < n;
    return !found;
  });
  return found;
}

bool isomorphic(const UniversalConstraint& a, const UniversalConstraint& b) {
  if (distinct_atoms(a) != distinct_atoms(b) || terms_of(a).size() != terms_of(b).size() ||
      a.inequalities().size() != b.inequalities().size())
    return false;
  bool found = false;
  for_each_embedding(a, b, [&](const std::set<std::size_t>& img) {
    found = img.size() == distinct_atoms(b);
    return !found;
  });
  return found;
}

std::vector<UniversalConstraint> min_constraints(const std::vector<UniversalConstraint>& cs,
                                                 std::size_t max_terms) {
  std::set<std::string> constants;
  for (const auto& c : cs) {
    if (!c.is_denial()) throw InputError("min(C) needs denial constraints");
    auto k = c.constants();
    constants.insert(k.begin(), k.end());
  }
  std::set<UniversalConstraint> all;
  for (const auto& c : cs) {
    auto r = refine(c, constants, max_terms);
    all.insert(r.begin(), r.end());
  }
  std::vector<UniversalConstraint> out;
  for (const auto& c : all) {
    bool subsumed = std::any_of(all.begin(), all.end(), [&](const UniversalConstraint& o) {
      return !(o == c) && subsumes(o, c);
    });
    if (subsumed) continue;
    bool dup = std::any_of(out.begin(), out.end(), [&](const UniversalConstraint& o) { return isomorphic(o, c); });
    if (!dup) out.push_back(c);
  }
  return out;
}

std::vector<Aic> denial_prio_to_aics(const std::vector<UniversalConstraint>& cs,
                                     const std::string& priority_predicate, std::size_t max_terms) {
  for (const auto& c : cs)
    for (const auto& l : c.body()) {
      if (l.atom.predicate == priority_predicate)
        throw InputError("constraints may not mention the priority predicate " + priority_predicate);
      if (l.atom.args.empty())
        throw InputError("predicate " + l.atom.predicate + " has no identifier argument");
    }
  std::vector<Aic> out;
  for (const auto& c : min_constraints(cs, max_terms)) {
    const auto& body = c.body();
    for (std::size_t i = 0; i < body.size(); ++i) {
      std::vector<BodyLiteral> b = body;
      for (std::size_t j = 0; j < body.size(); ++j) {
        if (j == i) continue;
        BodyLiteral guard{{priority_predicate, {body[i].atom.args[0], body[j].atom.args[0]}}, false};
        if (std::find(b.begin(), b.end(), guard) == b.end()) b.push_back(std::move(guard));
      }
      out.emplace_back(std::move(b), c.inequalities(), std::vector<UpdateAtom>{{UpdateOp::Remove, body[i].atom}});
    }
  }
  return out;
}

EtaPrio aics_to_prio(const AicProblem& p) {
  EtaPrio e;
  for (const auto& r : p.aics()) e.constraints.push_back(r.constraint());
  e.properties = check_properties(p);
  e.min_g = min_g(p.ground());
  std::vector<const GroundAic*> viol;
  for (const auto& r : e.min_g)
    if (violated(r, p.db())) {
      viol.push_back(&r);
      e.violated_bodies.insert(r.lits);
    }
  std::set<Literal> lits;
  for (const auto* r : viol) lits.insert(r->lits.begin(), r->lits.end());
  for (const auto& l : lits)
    for (const auto& m : lits) {
      if (l == m) continue;
      bool some = false, blocked = false;
      for (const auto* r : viol) {
        if (!r->lits.count(l) || !r->lits.count(m)) continue;
        some |= r->upd.count(fix(m)) > 0;
        blocked |= r->upd.count(fix(l)) > 0;
      }
      if (some && !blocked) e.priority.edges.insert({l, m});
    }
  // cycle search over the literal graph
  std::vector<Literal> nodes(lits.begin(), lits.end());
  std::map<Literal, int> color;
  std::vector<Literal> stack;
  std::function<bool(const Literal&)> dfs = [&](const Literal& u) {
    color[u] = 1;
    stack.push_back(u);
    for (const auto& v : nodes) {
      if (!e.priority.edges.count({u, v})) continue;
      if (color[v] == 1) {
        auto it = std::find(stack.begin(), stack.end(), v);
        e.cycle.assign(it, stack.end());
        e.cycle.push_back(v);
        return true;
      }
      if (color[v] == 0 && dfs(v)) return true;
    }
    color[u] = 2;
    stack.pop_back();
    return false;
  };
  for (const auto& n : nodes)
    if (color[n] == 0 && dfs(n)) break;
  return e;
}

AicParetoReport verify_aic_pareto(const AicProblem& p) {
  AicParetoReport r;
  r.eta = aics_to_prio(p);
  r.max_conflict = max_conflict_size(conflicts_prime_implicants(p.instance()));
  r.founded = repairs_of_kind(p, UpdateKind::Founded);
  r.grounded = repairs_of_kind(p, UpdateKind::Grounded);
  r.justified = repairs_of_kind(p, UpdateKind::Justified);
  r.well_founded = repairs_of_kind(p, UpdateKind::WellFounded);
  if (!r.eta.acyclic()) {
    std::string s = "priority cycle:";
    for (std::size_t i = 0; i < r.eta.cycle.size(); ++i) s += (i ? " > " : " ") + format(r.eta.cycle[i]);
    r.notes.push_back(s);
    r.holds = true;
    return r;
  }
  try {
    PrioritizedDatabase pdb(p.instance(), r.eta.priority);
    r.pareto = optimal_repairs(pdb, RepairNotion::Pareto);
  } catch (const InputError& ex) {
    r.notes.push_back(std::string("derived priority rejected: ") + ex.what());
    r.holds = !r.eta.well_behaved();
    return r;
  }
  r.preconditions = r.eta.well_behaved();
  r.equality_expected = r.preconditions && r.max_conflict <= 2;
  for (const auto& x : r.pareto)
    if (!r.founded.count(x)) r.notes.push_back("pareto-optimal but not founded: " + show(RepairSet{x}));
  for (const auto& x : r.founded)
    if (!r.pareto.count(x)) r.notes.push_back("founded but not pareto-optimal: " + show(RepairSet{x}));
  bool collapse = r.founded == r.grounded && r.grounded == r.justified;
  if (r.equality_expected)
    r.holds = collapse && r.pareto == r.founded && subset(r.founded, r.well_founded);
  else if (r.preconditions)
    r.holds = collapse && subset(r.founded, r.pareto);
  else
    r.holds = true;  // nothing is claimed
  if (!r.preconditions) r.notes.push_back("preconditions fail; no relation is guaranteed");
  return r;
}

}  // namespace optrepair
