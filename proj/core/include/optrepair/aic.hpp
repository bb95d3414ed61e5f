#pragma once

#include <set>
#include <string>
#include <vector>

#include "optrepair/errors.hpp"
#include "optrepair/instance.hpp"
#include "optrepair/repairs.hpp"

namespace optrepair {

enum class UpdateOp { Add, Remove };

struct UpdateAction {
  UpdateOp op = UpdateOp::Add;
  Fact fact;

  friend bool operator==(const UpdateAction&, const UpdateAction&) = default;
  friend std::strong_ordering operator<=>(const UpdateAction& a, const UpdateAction& b) {
    if (auto c = a.fact <=> b.fact; c != 0) return c;
    return a.op <=> b.op;
  }
};

using UpdateSet = std::set<UpdateAction>;

// fix(α) = -α, fix(¬α) = +α
UpdateAction fix(const Literal& l);
bool is_consistent(const UpdateSet& u);
// D∘U; throws InputError on an inconsistent action set.
Database apply(const Database& db, const UpdateSet& u);
// The actions turning `from` into `to`.
UpdateSet difference_update(const Database& from, const Database& to);

struct UpdateAtom {
  UpdateOp op = UpdateOp::Add;
  Atom atom;

  friend bool operator==(const UpdateAtom&, const UpdateAtom&) = default;
  friend auto operator<=>(const UpdateAtom&, const UpdateAtom&) = default;
};

// body -> {updates}; every update is the fix of a body literal and the body is
// a safe constraint body.
class Aic {
 public:
  Aic() = default;
  Aic(std::vector<BodyLiteral> body, std::vector<Inequality> inequalities,
      std::vector<UpdateAtom> updates);

  const std::vector<BodyLiteral>& body() const { return body_; }
  const std::vector<Inequality>& inequalities() const { return inequalities_; }
  const std::vector<UpdateAtom>& updates() const { return updates_; }
  bool is_normal() const { return updates_.size() == 1; }
  // τ_r
  UniversalConstraint constraint() const;

  friend bool operator==(const Aic&, const Aic&) = default;
  friend auto operator<=>(const Aic&, const Aic&) = default;

 private:
  std::vector<BodyLiteral> body_;
  std::vector<Inequality> inequalities_;
  std::vector<UpdateAtom> updates_;
};

struct GroundAic {
  LiteralSet lits;
  UpdateSet upd;

  friend bool operator==(const GroundAic&, const GroundAic&) = default;
  friend auto operator<=>(const GroundAic&, const GroundAic&) = default;
};

Aic to_aic(const GroundAic& g);
bool violated(const GroundAic& r, const Database& db);

// gr_D over adom(D) restricted to Facts^S_D: literals over facts outside the
// universe are fixed (a positive one drops the instance, a negative one is
// erased together with its action). Instances with complementary literals are
// dropped. Deduplicated and sorted.
std::vector<GroundAic> ground_aics(const std::vector<Aic>& aics, const Universe& universe);

std::vector<Aic> normalize(const std::vector<Aic>& aics);
std::vector<Aic> anti_normalize(const std::vector<Aic>& aics);
// AN(η) restricted to rules with ⊆-minimal bodies (body literal sets compared
// syntactically; intended for ground sets).
std::vector<Aic> min_bodies(const std::vector<Aic>& aics);

std::vector<GroundAic> normalize(const std::vector<GroundAic>& g);
std::vector<GroundAic> anti_normalize(const std::vector<GroundAic>& g);
std::vector<GroundAic> min_bodies(const std::vector<GroundAic>& g);
// min_g: ground rules with no ground rule of strictly smaller literal set (no AN).
std::vector<GroundAic> min_g(const std::vector<GroundAic>& g);

// A database with a set of AICs, plus the ground rules and C_η.
class AicProblem {
 public:
  AicProblem(Database db, std::vector<Aic> aics, const Schema& schema = {}, Budget budget = {});

  const Database& db() const { return instance_.db(); }
  const std::vector<Aic>& aics() const { return aics_; }
  const std::vector<GroundAic>& ground() const { return ground_; }
  // (D, C_η)
  const Instance& instance() const { return instance_; }
  const Budget& budget() const { return budget_; }

 private:
  std::vector<Aic> aics_;
  Instance instance_;
  std::vector<GroundAic> ground_;
  Budget budget_;
};

std::set<UpdateSet> r_updates(const AicProblem& p);
// Definitional: ⊆-minimal effective flip sets U with D∘U ⊨ gr_D(η).
std::set<UpdateSet> r_updates_bruteforce(const AicProblem& p);
bool is_r_update(const UpdateSet& u, const AicProblem& p);

bool is_founded(const UpdateSet& u, const AicProblem& p);
bool is_well_founded(const UpdateSet& u, const AicProblem& p);
bool is_grounded(const UpdateSet& u, const AicProblem& p);
// U is an r-update of D w.r.t. η[U].
bool is_grounded_by_restriction(const UpdateSet& u, const AicProblem& p);
bool is_justified(const UpdateSet& u, const AicProblem& p);

struct UpdateClassification {
  UpdateSet update;
  bool founded = false;
  bool well_founded = false;
  bool grounded = false;
  bool justified = false;
};

std::vector<UpdateClassification> classify(const AicProblem& p);
UpdateClassification classify(const UpdateSet& u, const AicProblem& p);

enum class UpdateKind { Any, Founded, WellFounded, Grounded, Justified };
std::set<UpdateSet> updates_of_kind(const AicProblem& p, UpdateKind kind);
RepairSet repairs_of_kind(const AicProblem& p, UpdateKind kind);

// Per-instance checks on the ground set (the properties quantify over every
// database; only the supplied one is examined).
struct PropertyReport {
  bool consistent = true;
  bool monotone = true;
  bool closed_under_resolution = true;
  bool preserves_actions_resolution = true;
  bool preserves_actions_strengthening = true;
  std::vector<std::string> witnesses;
};

PropertyReport check_properties(const std::vector<GroundAic>& ground);
PropertyReport check_properties(const AicProblem& p);

}  // namespace optrepair
