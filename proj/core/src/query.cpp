#include "optrepair/query.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace optrepair {

namespace {

class Homomorphisms {
 public:
  Homomorphisms(const ConjunctiveQuery& q, const Database& db) : q_(q) {
    for (const auto& f : db) by_pred_[f.predicate].push_back(&f);
    order_.resize(q.body().size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return count(q.body()[a].predicate) < count(q.body()[b].predicate);
    });
  }

  // visit returns false to stop
  void run(Substitution s, const std::function<bool(const Substitution&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    rec(0, s);
  }

 private:
  std::size_t count(const std::string& p) const {
    auto it = by_pred_.find(p);
    return it == by_pred_.end() ? 0 : it->second.size();
  }

  void rec(std::size_t i, Substitution& s) {
    if (stop_) return;
    if (i == order_.size()) {
      if (!(*visit_)(s)) stop_ = true;
      return;
    }
    const Atom& a = q_.body()[order_[i]];
    auto it = by_pred_.find(a.predicate);
    if (it == by_pred_.end()) return;
    for (const Fact* f : it->second) {
      if (f->args.size() != a.args.size()) continue;
      std::vector<std::string> bound;
      bool ok = true;
      for (std::size_t k = 0; k < a.args.size() && ok; ++k) {
        const Term& t = a.args[k];
        if (!t.is_variable()) {
          ok = t.name == f->args[k];
        } else if (auto v = s.find(t.name); v != s.end()) {
          ok = v->second == f->args[k];
        } else {
          s.emplace(t.name, f->args[k]);
          bound.push_back(t.name);
        }
      }
      if (ok) rec(i + 1, s);
      for (const auto& v : bound) s.erase(v);
      if (stop_) return;
    }
  }

  const ConjunctiveQuery& q_;
  std::map<std::string, std::vector<const Fact*>> by_pred_;
  std::vector<std::size_t> order_;
  const std::function<bool(const Substitution&)>* visit_ = nullptr;
  bool stop_ = false;
};

}  // namespace

TupleSet evaluate(const ConjunctiveQuery& q, const Database& db) {
  TupleSet out;
  Homomorphisms(q, db).run({}, [&](const Substitution& s) {
    Tuple t;
    for (const auto& v : q.head()) t.push_back(s.at(v));
    out.insert(std::move(t));
    return true;
  });
  return out;
}

bool holds(const ConjunctiveQuery& q, const Database& db, const Tuple& answer) {
  if (answer.size() != q.head().size())
    throw InputError("answer tuple arity does not match query " + q.name());
  Substitution s;
  for (std::size_t i = 0; i < answer.size(); ++i) {
    auto [it, fresh] = s.emplace(q.head()[i], answer[i]);
    if (!fresh && it->second != answer[i]) return false;
  }
  bool found = false;
  Homomorphisms(q, db).run(s, [&](const Substitution&) {
    found = true;
    return false;
  });
  return found;
}

const char* to_string(Semantics s) {
  switch (s) {
    case Semantics::Brave: return "brave";
    case Semantics::Cqa: return "cqa";
    case Semantics::Intersection: return "int";
  }
  return "?";
}

Database intersection_of(const RepairSet& repairs) {
  if (repairs.empty()) return {};
  Database acc = *repairs.begin();
  for (const auto& r : repairs) {
    Database next;
    std::set_intersection(acc.begin(), acc.end(), r.begin(), r.end(), std::inserter(next, next.end()));
    acc = std::move(next);
  }
  return acc;
}

AnswerSet answers(const RepairSet& repairs, const ConjunctiveQuery& q, Semantics semantics,
                  RepairNotion notion) {
  AnswerSet a{q.name(), semantics, notion, {}};
  if (repairs.empty()) return a;
  switch (semantics) {
    case Semantics::Brave:
      for (const auto& r : repairs) {
        auto t = evaluate(q, r);
        a.tuples.insert(t.begin(), t.end());
      }
      break;
    case Semantics::Cqa: {
      bool first = true;
      for (const auto& r : repairs) {
        auto t = evaluate(q, r);
        if (first) {
          a.tuples = std::move(t);
          first = false;
        } else {
          TupleSet keep;
          std::set_intersection(a.tuples.begin(), a.tuples.end(), t.begin(), t.end(),
                                std::inserter(keep, keep.end()));
          a.tuples = std::move(keep);
        }
      }
      break;
    }
    case Semantics::Intersection: a.tuples = evaluate(q, intersection_of(repairs)); break;
  }
  return a;
}

AnswerSet answers(const PrioritizedDatabase& pdb, const ConjunctiveQuery& q, Semantics semantics,
                  RepairNotion notion) {
  return answers(optimal_repairs(pdb, notion), q, semantics, notion);
}

Database repairs_intersection(const PrioritizedDatabase& pdb, RepairNotion notion) {
  return intersection_of(optimal_repairs(pdb, notion));
}

}  // namespace optrepair
