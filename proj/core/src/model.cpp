#include "optrepair/model.hpp"

#include "optrepair/errors.hpp"

namespace optrepair {

bool is_consistent(const LiteralSet& literals) {
  for (const auto& l : literals)
    if (l.positive && literals.count(l.negated())) return false;
  return true;
}

std::set<std::string> active_domain(const Database& db) {
  std::set<std::string> out;
  for (const auto& f : db) out.insert(f.args.begin(), f.args.end());
  return out;
}

Schema::Schema(std::initializer_list<std::pair<std::string, std::size_t>> predicates) {
  for (const auto& [name, arity] : predicates) declare(name, arity);
}

void Schema::declare(const std::string& name, std::size_t arity) {
  auto [it, inserted] = predicates_.emplace(name, arity);
  if (!inserted && it->second != arity)
    throw InputError("predicate " + name + " used with arity " + std::to_string(arity) +
                     " but declared with arity " + std::to_string(it->second));
}

void Schema::merge(const Schema& other) {
  for (const auto& [name, arity] : other.predicates_) declare(name, arity);
}

std::optional<std::size_t> Schema::arity(const std::string& name) const {
  auto it = predicates_.find(name);
  if (it == predicates_.end()) return std::nullopt;
  return it->second;
}

bool Atom::is_ground() const {
  for (const auto& t : args)
    if (t.is_variable()) return false;
  return true;
}

Fact Atom::to_fact() const {
  Fact f{predicate, {}};
  f.args.reserve(args.size());
  for (const auto& t : args) {
    if (t.is_variable()) throw InputError("atom over " + predicate + " is not ground");
    f.args.push_back(t.name);
  }
  return f;
}

Atom Atom::of(const Fact& f) {
  Atom a{f.predicate, {}};
  for (const auto& c : f.args) a.args.push_back(Term::constant(c));
  return a;
}

Term apply(const Substitution& s, const Term& t) {
  if (!t.is_variable()) return t;
  auto it = s.find(t.name);
  return it == s.end() ? t : Term::constant(it->second);
}

Atom apply(const Substitution& s, const Atom& a) {
  Atom out{a.predicate, {}};
  out.args.reserve(a.args.size());
  for (const auto& t : a.args) out.args.push_back(apply(s, t));
  return out;
}

void check_safe(const std::vector<BodyLiteral>& body,
                const std::vector<Inequality>& inequalities) {
  std::set<std::string> bound;
  for (const auto& l : body)
    if (l.positive)
      for (const auto& t : l.atom.args)
        if (t.is_variable()) bound.insert(t.name);
  auto need = [&](const Term& t, const std::string& where) {
    if (t.is_variable() && !bound.count(t.name))
      throw InputError("unsafe rule: variable " + t.name + " in " + where +
                       " does not occur in a positive body literal");
  };
  for (const auto& l : body)
    if (!l.positive)
      for (const auto& t : l.atom.args) need(t, "negative literal over " + l.atom.predicate);
  for (const auto& q : inequalities) {
    need(q.lhs, "an inequality");
    need(q.rhs, "an inequality");
  }
}

UniversalConstraint::UniversalConstraint(std::vector<BodyLiteral> body,
                                         std::vector<Inequality> inequalities,
                                         std::vector<Atom> head)
    : body_(std::move(body)), inequalities_(std::move(inequalities)) {
  for (auto& a : head) body_.push_back({std::move(a), false});
  check_safe(body_, inequalities_);
}

bool UniversalConstraint::is_denial() const {
  for (const auto& l : body_)
    if (!l.positive) return false;
  return true;
}

std::set<std::string> UniversalConstraint::variables() const {
  std::set<std::string> out;
  for (const auto& l : body_)
    for (const auto& t : l.atom.args)
      if (t.is_variable()) out.insert(t.name);
  for (const auto& q : inequalities_)
    for (const auto* t : {&q.lhs, &q.rhs})
      if (t->is_variable()) out.insert(t->name);
  return out;
}

std::set<std::string> UniversalConstraint::constants() const {
  std::set<std::string> out;
  for (const auto& l : body_)
    for (const auto& t : l.atom.args)
      if (!t.is_variable()) out.insert(t.name);
  for (const auto& q : inequalities_)
    for (const auto* t : {&q.lhs, &q.rhs})
      if (!t->is_variable()) out.insert(t->name);
  return out;
}

ConjunctiveQuery::ConjunctiveQuery(std::string name, std::vector<std::string> head,
                                   std::vector<Atom> body)
    : name_(std::move(name)), head_(std::move(head)), body_(std::move(body)) {
  std::set<std::string> vars;
  for (const auto& a : body_)
    for (const auto& t : a.args)
      if (t.is_variable()) vars.insert(t.name);
  for (const auto& v : head_)
    if (!vars.count(v))
      throw InputError("query " + name_ + ": answer variable " + v + " does not occur in the body");
}

void declare(Schema& schema, const Fact& fact) { schema.declare(fact.predicate, fact.args.size()); }
void declare(Schema& schema, const Atom& atom) { schema.declare(atom.predicate, atom.args.size()); }
void declare(Schema& schema, const Database& db) {
  for (const auto& f : db) declare(schema, f);
}
void declare(Schema& schema, const std::vector<UniversalConstraint>& constraints) {
  for (const auto& c : constraints)
    for (const auto& l : c.body()) declare(schema, l.atom);
}

}  // namespace optrepair
