#include "optrepair/universe.hpp"

#include <algorithm>
#include <map>

#include "optrepair/errors.hpp"

namespace optrepair {

Universe::Universe(const Database& db, const Schema& schema) : db_(db), schema_(schema) {
  for (const auto& f : db_) {
    auto a = schema_.arity(f.predicate);
    if (!a) throw InputError("fact over undeclared predicate " + f.predicate);
    if (*a != f.args.size())
      throw InputError("fact over " + f.predicate + " has " + std::to_string(f.args.size()) +
                       " arguments, schema says " + std::to_string(*a));
  }
  auto adom = active_domain(db_);
  domain_.assign(adom.begin(), adom.end());
  for (const auto& [name, arity] : schema_.predicates()) {
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < arity; ++i) vars.push_back("#" + std::to_string(i));
    for_each_assignment(vars, domain_, [&](const Substitution& s) {
      Fact f{name, {}};
      for (const auto& v : vars) f.args.push_back(s.at(v));
      facts_.push_back(std::move(f));
      return true;
    });
  }
  // the odometer already yields sorted tuples per predicate; keep this as a guard
  std::sort(facts_.begin(), facts_.end());
  in_db_.resize(facts_.size());
  for (std::size_t i = 0; i < facts_.size(); ++i) in_db_[i] = db_.count(facts_[i]) ? 1 : 0;
}

std::optional<FactId> Universe::find(const Fact& f) const {
  auto it = std::lower_bound(facts_.begin(), facts_.end(), f);
  if (it == facts_.end() || *it != f) return std::nullopt;
  return static_cast<FactId>(it - facts_.begin());
}

std::optional<FactId> Universe::find_literal(const Literal& l) const {
  auto id = find(l.fact);
  if (!id || static_cast<bool>(in_db_[*id]) != l.positive) return std::nullopt;
  return id;
}

std::set<Fact> facts_universe(const Database& db, const Schema& schema) {
  Universe u(db, schema);
  return {u.facts().begin(), u.facts().end()};
}

LiteralSet lits(const Database& db, const Schema& schema) {
  Universe u(db, schema);
  LiteralSet out;
  for (FactId i = 0; i < u.size(); ++i) out.insert(u.literal(i));
  return out;
}

LiteralSet agreement(const Database& db, const Schema& schema, const Database& repair) {
  Universe u(db, schema);
  for (const auto& f : repair)
    if (!u.find(f)) throw InputError("candidate repair contains a fact outside the fact universe");
  LiteralSet out;
  for (FactId i = 0; i < u.size(); ++i)
    if (static_cast<bool>(repair.count(u.fact(i))) == u.in_db(i)) out.insert(u.literal(i));
  return out;
}

Database restriction(const Database& db, const Schema& schema, const LiteralSet& literals) {
  Universe u(db, schema);
  for (const auto& l : literals)
    if (!u.find_literal(l)) throw InputError("literal outside the literal universe");
  Database out;
  for (FactId i = 0; i < u.size(); ++i) {
    bool kept = literals.count(u.literal(i)) > 0;
    // kept positive literal stays; a dropped negative literal means the fact is added
    if (kept == u.in_db(i)) out.insert(u.fact(i));
  }
  return out;
}

std::set<GroundConstraint> ground(const UniversalConstraint& constraint,
                                  const std::set<std::string>& adom) {
  std::set<GroundConstraint> out;
  auto vars = constraint.variables();
  std::vector<std::string> v(vars.begin(), vars.end());
  std::vector<std::string> domain(adom.begin(), adom.end());
  for_each_assignment(v, domain, [&](const Substitution& s) {
    for (const auto& q : constraint.inequalities())
      if (apply(s, q.lhs).name == apply(s, q.rhs).name) return true;
    GroundConstraint g;
    for (const auto& l : constraint.body())
      g.literals.insert({apply(s, l.atom).to_fact(), l.positive});
    if (is_consistent(g.literals)) out.insert(std::move(g));
    return true;
  });
  return out;
}

namespace {

// Join over positive literals; negative literals and inequalities are checked
// once all variables are bound (safety guarantees they are).
class ViolationSearch {
 public:
  ViolationSearch(const Database& db, const UniversalConstraint& c) : db_(db), c_(c) {
    for (const auto& f : db) by_pred_[f.predicate].push_back(&f);
    for (const auto& l : c.body())
      if (l.positive) positives_.push_back(&l.atom);
    std::stable_sort(positives_.begin(), positives_.end(), [&](const Atom* a, const Atom* b) {
      return count(a->predicate) < count(b->predicate);
    });
  }

  bool violated() {
    Substitution s;
    return extend(0, s);
  }

 private:
  std::size_t count(const std::string& p) const {
    auto it = by_pred_.find(p);
    return it == by_pred_.end() ? 0 : it->second.size();
  }

  bool extend(std::size_t k, Substitution& s) {
    if (k == positives_.size()) return rest_holds(s);
    const Atom& a = *positives_[k];
    auto it = by_pred_.find(a.predicate);
    if (it == by_pred_.end()) return false;
    for (const Fact* f : it->second) {
      if (f->args.size() != a.args.size()) continue;
      std::vector<std::string> newly;
      bool ok = true;
      for (std::size_t i = 0; i < a.args.size() && ok; ++i) {
        const Term& t = a.args[i];
        if (!t.is_variable()) {
          ok = t.name == f->args[i];
        } else if (auto b = s.find(t.name); b != s.end()) {
          ok = b->second == f->args[i];
        } else {
          s[t.name] = f->args[i];
          newly.push_back(t.name);
        }
      }
      if (ok && extend(k + 1, s)) return true;
      for (const auto& v : newly) s.erase(v);
    }
    return false;
  }

  bool rest_holds(const Substitution& s) const {
    for (const auto& q : c_.inequalities())
      if (apply(s, q.lhs).name == apply(s, q.rhs).name) return false;
    for (const auto& l : c_.body())
      if (!l.positive && db_.count(apply(s, l.atom).to_fact())) return false;
    return true;
  }

  const Database& db_;
  const UniversalConstraint& c_;
  std::map<std::string, std::vector<const Fact*>> by_pred_;
  std::vector<const Atom*> positives_;
};

}  // namespace

bool satisfies(const Database& db, const UniversalConstraint& constraint) {
  return !ViolationSearch(db, constraint).violated();
}

bool satisfies(const Database& db, const std::vector<UniversalConstraint>& constraints) {
  for (const auto& c : constraints)
    if (!satisfies(db, c)) return false;
  return true;
}

}  // namespace optrepair
