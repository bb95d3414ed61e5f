#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace optrepair {

struct Fact {
  std::string predicate;
  std::vector<std::string> args;

  friend bool operator==(const Fact&, const Fact&) = default;
  friend auto operator<=>(const Fact&, const Fact&) = default;
};

struct Literal {
  Fact fact;
  bool positive = true;

  Literal negated() const { return {fact, !positive}; }

  friend bool operator==(const Literal&, const Literal&) = default;
  // positive literal sorts before its negation
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.fact <=> b.fact; c != 0) return c;
    return b.positive <=> a.positive;
  }
};

inline Literal pos(Fact f) { return {std::move(f), true}; }
inline Literal neg(Fact f) { return {std::move(f), false}; }

using Database = std::set<Fact>;
using LiteralSet = std::set<Literal>;

bool is_consistent(const LiteralSet& literals);
std::set<std::string> active_domain(const Database& db);

class Schema {
 public:
  Schema() = default;
  Schema(std::initializer_list<std::pair<std::string, std::size_t>> predicates);

  // Throws InputError if `name` is already declared with another arity.
  void declare(const std::string& name, std::size_t arity);
  void merge(const Schema& other);
  std::optional<std::size_t> arity(const std::string& name) const;
  bool empty() const { return predicates_.empty(); }
  const std::map<std::string, std::size_t>& predicates() const { return predicates_; }

  friend bool operator==(const Schema&, const Schema&) = default;

 private:
  std::map<std::string, std::size_t> predicates_;
};

struct Term {
  enum class Kind { Variable, Constant };
  Kind kind = Kind::Constant;
  std::string name;

  static Term var(std::string n) { return {Kind::Variable, std::move(n)}; }
  static Term constant(std::string n) { return {Kind::Constant, std::move(n)}; }
  bool is_variable() const { return kind == Kind::Variable; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  bool is_ground() const;
  // Only valid for ground atoms.
  Fact to_fact() const;
  static Atom of(const Fact& f);

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct BodyLiteral {
  Atom atom;
  bool positive = true;

  friend bool operator==(const BodyLiteral&, const BodyLiteral&) = default;
  friend auto operator<=>(const BodyLiteral&, const BodyLiteral&) = default;
};

struct Inequality {
  Term lhs;
  Term rhs;

  friend bool operator==(const Inequality&, const Inequality&) = default;
  friend auto operator<=>(const Inequality&, const Inequality&) = default;
};

using Substitution = std::map<std::string, std::string>;
Term apply(const Substitution& s, const Term& t);
Atom apply(const Substitution& s, const Atom& a);

// Rule body shared by constraints and AICs: literals plus inequalities.
// Safety: every variable of a negative literal or an inequality occurs in a
// positive literal.
void check_safe(const std::vector<BodyLiteral>& body,
                const std::vector<Inequality>& inequalities);

// Stored in body-only form: head atoms become negated body literals and the
// head is always false.
class UniversalConstraint {
 public:
  UniversalConstraint() = default;
  UniversalConstraint(std::vector<BodyLiteral> body,
                      std::vector<Inequality> inequalities = {},
                      std::vector<Atom> head = {});

  const std::vector<BodyLiteral>& body() const { return body_; }
  const std::vector<Inequality>& inequalities() const { return inequalities_; }

  bool is_denial() const;
  std::set<std::string> variables() const;
  std::set<std::string> constants() const;

  friend bool operator==(const UniversalConstraint&, const UniversalConstraint&) = default;
  friend auto operator<=>(const UniversalConstraint&, const UniversalConstraint&) = default;

 private:
  std::vector<BodyLiteral> body_;
  std::vector<Inequality> inequalities_;
};

struct GroundConstraint {
  LiteralSet literals;

  friend bool operator==(const GroundConstraint&, const GroundConstraint&) = default;
  friend auto operator<=>(const GroundConstraint&, const GroundConstraint&) = default;
};

class ConjunctiveQuery {
 public:
  ConjunctiveQuery() = default;
  // Throws InputError if a head variable does not occur in the body.
  ConjunctiveQuery(std::string name, std::vector<std::string> head, std::vector<Atom> body);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& head() const { return head_; }
  const std::vector<Atom>& body() const { return body_; }
  bool is_boolean() const { return head_.empty(); }

  friend bool operator==(const ConjunctiveQuery&, const ConjunctiveQuery&) = default;

 private:
  std::string name_;
  std::vector<std::string> head_;
  std::vector<Atom> body_;
};

void declare(Schema& schema, const Fact& fact);
void declare(Schema& schema, const Atom& atom);
void declare(Schema& schema, const Database& db);
void declare(Schema& schema, const std::vector<UniversalConstraint>& constraints);

}  // namespace optrepair
