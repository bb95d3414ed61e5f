#include "optrepair/aic.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "optrepair/detail/masks.hpp"
#include "optrepair/io.hpp"
#include "optrepair/propositional.hpp"

namespace optrepair {

UpdateAction fix(const Literal& l) {
  return {l.positive ? UpdateOp::Remove : UpdateOp::Add, l.fact};
}

bool is_consistent(const UpdateSet& u) {
  for (auto it = u.begin(); it != u.end(); ++it) {
    auto next = std::next(it);
    if (next != u.end() && next->fact == it->fact) return false;
  }
  return true;
}

Database apply(const Database& db, const UpdateSet& u) {
  if (!is_consistent(u)) throw InputError("inconsistent set of update actions");
  Database out = db;
  for (const auto& a : u) {
    if (a.op == UpdateOp::Add)
      out.insert(a.fact);
    else
      out.erase(a.fact);
  }
  return out;
}

UpdateSet difference_update(const Database& from, const Database& to) {
  UpdateSet u;
  for (const auto& f : from)
    if (!to.count(f)) u.insert({UpdateOp::Remove, f});
  for (const auto& f : to)
    if (!from.count(f)) u.insert({UpdateOp::Add, f});
  return u;
}

Aic::Aic(std::vector<BodyLiteral> body, std::vector<Inequality> inequalities,
         std::vector<UpdateAtom> updates)
    : body_(std::move(body)), inequalities_(std::move(inequalities)), updates_(std::move(updates)) {
  check_safe(body_, inequalities_);
  if (updates_.empty()) throw InputError("an active integrity constraint needs at least one update action");
  std::sort(updates_.begin(), updates_.end());
  updates_.erase(std::unique(updates_.begin(), updates_.end()), updates_.end());
  for (const auto& u : updates_) {
    bool matches = std::any_of(body_.begin(), body_.end(), [&](const BodyLiteral& l) {
      return l.atom == u.atom && l.positive == (u.op == UpdateOp::Remove);
    });
    if (!matches)
      throw InputError(std::string("update action ") + (u.op == UpdateOp::Add ? "+" : "-") +
                       format(u.atom) + " does not fix any body literal");
  }
}

UniversalConstraint Aic::constraint() const { return UniversalConstraint(body_, inequalities_); }

Aic to_aic(const GroundAic& g) {
  std::vector<BodyLiteral> body;
  for (const auto& l : g.lits) body.push_back({Atom::of(l.fact), l.positive});
  std::vector<UpdateAtom> ups;
  for (const auto& a : g.upd) ups.push_back({a.op, Atom::of(a.fact)});
  return Aic(std::move(body), {}, std::move(ups));
}

bool violated(const GroundAic& r, const Database& db) {
  return std::all_of(r.lits.begin(), r.lits.end(),
                     [&](const Literal& l) { return static_cast<bool>(db.count(l.fact)) == l.positive; });
}

std::vector<GroundAic> ground_aics(const std::vector<Aic>& aics, const Universe& universe) {
  std::set<GroundAic> out;
  for (const auto& r : aics) {
    auto vars = r.constraint().variables();
    std::vector<std::string> v(vars.begin(), vars.end());
    for_each_assignment(v, universe.domain(), [&](const Substitution& s) {
      for (const auto& q : r.inequalities())
        if (apply(s, q.lhs).name == apply(s, q.rhs).name) return true;
      GroundAic g;
      for (const auto& l : r.body()) {
        Fact f = apply(s, l.atom).to_fact();
        if (!universe.find(f)) {
          if (l.positive) return true;  // never satisfied inside the universe
          continue;
        }
        g.lits.insert({f, l.positive});
      }
      if (!is_consistent(g.lits)) return true;
      for (const auto& u : r.updates()) {
        Fact f = apply(s, u.atom).to_fact();
        if (universe.find(f)) g.upd.insert({u.op, f});
      }
      out.insert(std::move(g));
      return true;
    });
  }
  return {out.begin(), out.end()};
}

namespace {

std::pair<std::set<BodyLiteral>, std::set<Inequality>> body_key(const Aic& r) {
  return {{r.body().begin(), r.body().end()}, {r.inequalities().begin(), r.inequalities().end()}};
}

bool includes_key(const std::pair<std::set<BodyLiteral>, std::set<Inequality>>& small,
                  const std::pair<std::set<BodyLiteral>, std::set<Inequality>>& big) {
  return std::includes(big.first.begin(), big.first.end(), small.first.begin(), small.first.end()) &&
         std::includes(big.second.begin(), big.second.end(), small.second.begin(), small.second.end());
}

}  // namespace

std::vector<Aic> normalize(const std::vector<Aic>& aics) {
  std::vector<Aic> out;
  for (const auto& r : aics)
    for (const auto& u : r.updates()) {
      Aic n(r.body(), r.inequalities(), {u});
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
    }
  return out;
}

std::vector<Aic> anti_normalize(const std::vector<Aic>& aics) {
  std::vector<Aic> out;
  std::vector<decltype(body_key(Aic()))> keys;
  for (const auto& r : aics) {
    auto k = body_key(r);
    auto it = std::find(keys.begin(), keys.end(), k);
    if (it == keys.end()) {
      keys.push_back(k);
      out.push_back(r);
      continue;
    }
    auto& merged = out[it - keys.begin()];
    auto ups = merged.updates();
    ups.insert(ups.end(), r.updates().begin(), r.updates().end());
    merged = Aic(merged.body(), merged.inequalities(), ups);
  }
  return out;
}

std::vector<Aic> min_bodies(const std::vector<Aic>& aics) {
  auto an = anti_normalize(aics);
  std::vector<Aic> out;
  for (const auto& r : an) {
    auto k = body_key(r);
    bool minimal = std::none_of(an.begin(), an.end(), [&](const Aic& o) {
      auto ko = body_key(o);
      return ko != k && includes_key(ko, k);
    });
    if (minimal) out.push_back(r);
  }
  return out;
}

std::vector<GroundAic> normalize(const std::vector<GroundAic>& g) {
  std::set<GroundAic> out;
  for (const auto& r : g)
    for (const auto& a : r.upd) out.insert({r.lits, {a}});
  return {out.begin(), out.end()};
}

std::vector<GroundAic> anti_normalize(const std::vector<GroundAic>& g) {
  std::map<LiteralSet, UpdateSet> by;
  for (const auto& r : g) by[r.lits].insert(r.upd.begin(), r.upd.end());
  std::vector<GroundAic> out;
  for (auto& [l, u] : by) out.push_back({l, u});
  return out;
}

namespace {

bool strict_subset(const LiteralSet& a, const LiteralSet& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<GroundAic> keep_minimal(const std::vector<GroundAic>& g) {
  std::vector<GroundAic> out;
  for (const auto& r : g)
    if (std::none_of(g.begin(), g.end(), [&](const GroundAic& o) { return strict_subset(o.lits, r.lits); }))
      out.push_back(r);
  return out;
}

}  // namespace

std::vector<GroundAic> min_bodies(const std::vector<GroundAic>& g) { return keep_minimal(anti_normalize(g)); }
std::vector<GroundAic> min_g(const std::vector<GroundAic>& g) { return keep_minimal(g); }

AicProblem::AicProblem(Database db, std::vector<Aic> aics, const Schema& schema, Budget budget)
    : aics_(std::move(aics)), budget_(budget) {
  std::vector<UniversalConstraint> cs;
  for (const auto& r : aics_) cs.push_back(r.constraint());
  Schema s = schema;
  for (const auto& r : aics_)
    for (const auto& u : r.updates()) declare(s, u.atom);
  instance_ = Instance(std::move(db), std::move(cs), s);
  ground_ = ground_aics(aics_, instance_.universe());
}

std::set<UpdateSet> r_updates(const AicProblem& p) {
  std::set<UpdateSet> out;
  for (const auto& r : delta_repairs(p.instance())) out.insert(difference_update(p.db(), r));
  return out;
}

std::set<UpdateSet> r_updates_bruteforce(const AicProblem& p) {
  const auto& u = p.instance().universe();
  detail::require_within(u.size(), p.budget(), "fact universe");
  // Actions without effect never occur in a minimal set, so flips suffice.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rules;
  for (const auto& r : p.ground()) {
    std::uint64_t pos = 0, neg = 0;
    for (const auto& l : r.lits) (l.positive ? pos : neg) |= 1ull << *u.find(l.fact);
    rules.emplace_back(pos, neg);
  }
  std::uint64_t dbm = 0;
  for (FactId i = 0; i < u.size(); ++i)
    if (u.in_db(i)) dbm |= 1ull << i;
  const std::uint64_t full = u.size() == 64 ? ~0ull : (1ull << u.size()) - 1;
  std::vector<std::uint64_t> good;
  for (std::uint64_t f = 0;; ++f) {
    auto b = dbm ^ f;
    bool ok = std::none_of(rules.begin(), rules.end(),
                           [&](const auto& r) { return (b & r.first) == r.first && (b & r.second) == 0; });
    if (ok) good.push_back(f);
    if (f == full) break;
  }
  std::set<UpdateSet> out;
  for (auto f : good) {
    bool minimal = std::none_of(good.begin(), good.end(),
                                [&](std::uint64_t g) { return g != f && (g & f) == g; });
    if (!minimal) continue;
    UpdateSet us;
    for (FactId i = 0; i < u.size(); ++i)
      if (f >> i & 1) us.insert({u.in_db(i) ? UpdateOp::Remove : UpdateOp::Add, u.fact(i)});
    out.insert(std::move(us));
  }
  return out;
}

bool is_r_update(const UpdateSet& u, const AicProblem& p) {
  for (const auto& a : u)
    if (!p.instance().universe().find(a.fact)) return false;
  if (!is_consistent(u)) return false;
  return is_delta_repair(optrepair::apply(p.db(), u), p.instance()) && difference_update(p.db(), optrepair::apply(p.db(), u)) == u;
}

namespace {

std::vector<UpdateAction> as_vector(const UpdateSet& u, const Budget& budget) {
  detail::require_within(u.size(), budget, "update set");
  return {u.begin(), u.end()};
}

UpdateSet subset_of(const std::vector<UpdateAction>& v, std::uint64_t mask) {
  UpdateSet out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (mask >> i & 1) out.insert(v[i]);
  return out;
}

}  // namespace

bool is_founded(const UpdateSet& u, const AicProblem& p) {
  for (const auto& a : u) {
    UpdateSet rest = u;
    rest.erase(a);
    Database b = optrepair::apply(p.db(), rest);
    bool supported = std::any_of(p.ground().begin(), p.ground().end(),
                                 [&](const GroundAic& r) { return r.upd.count(a) && violated(r, b); });
    if (!supported) return false;
  }
  return true;
}

bool is_well_founded(const UpdateSet& u, const AicProblem& p) {
  auto acts = as_vector(u, p.budget());
  const std::uint64_t all = acts.size() == 64 ? ~0ull : (1ull << acts.size()) - 1;
  std::set<std::uint64_t> dead;
  std::function<bool(std::uint64_t)> rec = [&](std::uint64_t done) {
    if (done == all) return true;
    if (dead.count(done)) return false;
    Database b = optrepair::apply(p.db(), subset_of(acts, done));
    for (std::size_t i = 0; i < acts.size(); ++i) {
      if (done >> i & 1) continue;
      bool enabled = std::any_of(p.ground().begin(), p.ground().end(), [&](const GroundAic& r) {
        return r.upd.count(acts[i]) && violated(r, b);
      });
      if (enabled && rec(done | 1ull << i)) return true;
    }
    dead.insert(done);
    return false;
  };
  return rec(0);
}

bool is_grounded(const UpdateSet& u, const AicProblem& p) {
  auto acts = as_vector(u, p.budget());
  const std::uint64_t all = acts.size() == 64 ? ~0ull : (1ull << acts.size()) - 1;
  // normal rules of N(gr_D(η)) have one action, so upd(r) ⊆ U \ V means that
  // action lies in U \ V
  for (std::uint64_t v = 0; v < all; ++v) {
    Database b = optrepair::apply(p.db(), subset_of(acts, v));
    bool found = false;
    for (const auto& r : p.ground()) {
      if (!violated(r, b)) continue;
      for (std::size_t i = 0; i < acts.size() && !found; ++i)
        found = !(v >> i & 1) && r.upd.count(acts[i]);
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

bool is_grounded_by_restriction(const UpdateSet& u, const AicProblem& p) {
  std::vector<GroundAic> restricted;
  for (const auto& r : p.ground()) {
    GroundAic g{r.lits, {}};
    for (const auto& a : r.upd)
      if (u.count(a)) g.upd.insert(a);
    if (!g.upd.empty()) restricted.push_back(std::move(g));
  }
  auto sat = [&](const Database& b) {
    return std::none_of(restricted.begin(), restricted.end(), [&](const GroundAic& r) { return violated(r, b); });
  };
  if (!is_consistent(u) || !sat(optrepair::apply(p.db(), u))) return false;
  auto acts = as_vector(u, p.budget());
  const std::uint64_t all = acts.size() == 64 ? ~0ull : (1ull << acts.size()) - 1;
  for (std::uint64_t v = 0; v < all; ++v)
    if (sat(optrepair::apply(p.db(), subset_of(acts, v)))) return false;
  return true;
}

bool is_justified(const UpdateSet& u, const AicProblem& p) {
  const Database& d = p.db();
  Database after = optrepair::apply(d, u);
  // no-effect actions over Facts^S_D, for D and D∘U
  auto in_ne = [&](const UpdateAction& a) {
    if (a.op == UpdateOp::Add) return d.count(a.fact) && after.count(a.fact);
    return !d.count(a.fact) && !after.count(a.fact);
  };
  auto acts = as_vector(u, p.budget());
  auto closed = [&](std::uint64_t mask) {
    auto member = [&](const UpdateAction& a) {
      if (in_ne(a)) return true;
      for (std::size_t i = 0; i < acts.size(); ++i)
        if ((mask >> i & 1) && acts[i] == a) return true;
      return false;
    };
    for (const auto& r : p.ground()) {
      // +α satisfies α and -α satisfies ¬α
      bool premises = std::all_of(r.lits.begin(), r.lits.end(), [&](const Literal& l) {
        if (r.upd.count(fix(l))) return true;  // updatable
        return member({l.positive ? UpdateOp::Add : UpdateOp::Remove, l.fact});
      });
      if (!premises) continue;
      if (std::none_of(r.upd.begin(), r.upd.end(), member)) return false;
    }
    return true;
  };
  const std::uint64_t all = acts.size() == 64 ? ~0ull : (1ull << acts.size()) - 1;
  if (!closed(all)) return false;
  for (std::uint64_t v = 0; v < all; ++v)
    if (closed(v)) return false;
  return true;
}

UpdateClassification classify(const UpdateSet& u, const AicProblem& p) {
  return {u, is_founded(u, p), is_well_founded(u, p), is_grounded(u, p), is_justified(u, p)};
}

std::vector<UpdateClassification> classify(const AicProblem& p) {
  std::vector<UpdateClassification> out;
  for (const auto& u : r_updates(p)) out.push_back(classify(u, p));
  return out;
}

std::set<UpdateSet> updates_of_kind(const AicProblem& p, UpdateKind kind) {
  std::set<UpdateSet> out;
  for (const auto& u : r_updates(p)) {
    bool keep = true;
    switch (kind) {
      case UpdateKind::Any: break;
      case UpdateKind::Founded: keep = is_founded(u, p); break;
      case UpdateKind::WellFounded: keep = is_well_founded(u, p); break;
      case UpdateKind::Grounded: keep = is_grounded(u, p); break;
      case UpdateKind::Justified: keep = is_justified(u, p); break;
    }
    if (keep) out.insert(u);
  }
  return out;
}

RepairSet repairs_of_kind(const AicProblem& p, UpdateKind kind) {
  RepairSet out;
  for (const auto& u : updates_of_kind(p, kind)) out.insert(optrepair::apply(p.db(), u));
  return out;
}

namespace {

std::string show(const GroundAic& r) { return format(to_aic(r)); }

}  // namespace

PropertyReport check_properties(const std::vector<GroundAic>& ground) {
  PropertyReport rep;

  // local fact numbering for the propositional consistency test
  std::map<Fact, FactId> ids;
  for (const auto& r : ground)
    for (const auto& l : r.lits) ids.emplace(l.fact, static_cast<FactId>(ids.size()));
  std::vector<Cube> cubes;
  for (const auto& r : ground) {
    Cube c;
    for (const auto& l : r.lits) c.push_back(make_plit(ids.at(l.fact), l.positive));
    std::sort(c.begin(), c.end());
    cubes.push_back(std::move(c));
  }
  for (const auto& c : prime_implicants(cubes))
    if (c.empty()) {
      rep.consistent = false;
      rep.witnesses.push_back("inconsistent: every database violates some rule");
    }

  std::set<Fact> pos, neg;
  for (const auto& r : ground)
    for (const auto& l : r.lits) (l.positive ? pos : neg).insert(l.fact);
  for (const auto& f : pos)
    if (neg.count(f)) {
      rep.monotone = false;
      rep.witnesses.push_back("not monotone: " + format(f) + " occurs with both signs");
      break;
    }

  std::map<LiteralSet, std::vector<const GroundAic*>> by_lits;
  for (const auto& r : ground) by_lits[r.lits].push_back(&r);
  if (!rep.consistent) rep.closed_under_resolution = false;
  for (const auto& r1 : ground)
    for (const auto& r2 : ground)
      for (const auto& l : r1.lits) {
        if (!l.positive || !r2.lits.count(l.negated())) continue;
        LiteralSet res;
        for (const auto& x : r1.lits)
          if (x.fact != l.fact) res.insert(x);
        for (const auto& x : r2.lits)
          if (x.fact != l.fact) res.insert(x);
        auto it = by_lits.find(res);
        if (it == by_lits.end()) {
          if (is_consistent(res) && rep.closed_under_resolution) {
            rep.closed_under_resolution = false;
            rep.witnesses.push_back("not closed under resolution: " + show(r1) + " and " + show(r2) +
                                    " on " + format(l.fact) + " need a rule with body " + format(res));
          }
          continue;
        }
        UpdateSet need;
        for (const auto& a : r1.upd)
          if (a.fact != l.fact) need.insert(a);
        for (const auto& a : r2.upd)
          if (a.fact != l.fact) need.insert(a);
        for (const auto* r3 : it->second) {
          bool ok = std::includes(r3->upd.begin(), r3->upd.end(), need.begin(), need.end());
          if (!ok && rep.preserves_actions_resolution) {
            rep.preserves_actions_resolution = false;
            rep.witnesses.push_back("does not preserve actions under resolution: " + show(r1) + ", " +
                                    show(r2) + " on " + format(l.fact) + " vs " + show(*r3));
          }
        }
      }

  auto an = anti_normalize(ground);
  for (const auto& r1 : an)
    for (const auto& r2 : an) {
      if (&r1 == &r2 || !std::includes(r2.lits.begin(), r2.lits.end(), r1.lits.begin(), r1.lits.end()))
        continue;
      if (!std::includes(r1.upd.begin(), r1.upd.end(), r2.upd.begin(), r2.upd.end()) &&
          rep.preserves_actions_strengthening) {
        rep.preserves_actions_strengthening = false;
        rep.witnesses.push_back("does not preserve actions under strengthening: " + show(r1) + " vs " +
                                show(r2));
      }
    }
  return rep;
}

PropertyReport check_properties(const AicProblem& p) { return check_properties(p.ground()); }

}  // namespace optrepair
