#pragma once

#include <map>
#include <string>
#include <vector>

#include "optrepair/model.hpp"

namespace optrepair {

struct PriorityRelation;
struct UpdateAction;
class Aic;

// Text formats. In fact and priority files every term is a constant; in rule
// files (constraints, queries, AICs) bare identifiers are variables and
// constants are quoted ("a") or numeric. `#` starts a line comment.

Database parse_database(const std::string& text, const std::string& source = "<db>");
std::vector<UniversalConstraint> parse_constraints(const std::string& text,
                                                   const std::string& source = "<constraints>");
PriorityRelation parse_priority(const std::string& text, const std::string& source = "<priority>");
std::vector<ConjunctiveQuery> parse_queries(const std::string& text,
                                            const std::string& source = "<queries>");
std::vector<Aic> parse_aics(const std::string& text, const std::string& source = "<aics>");
Schema parse_schema(const std::string& text, const std::string& source = "<schema>");
// Comma/whitespace separated actions such as `-A(a), +B(a)`, optionally braced.
std::vector<UpdateAction> parse_update_actions(const std::string& text,
                                               const std::string& source = "<update>");

// Constant as written in fact files (bare when it lexes as a name or number).
std::string format_constant(const std::string& c);
std::string format(const Fact& f);
std::string format(const Literal& l);            // A(a) or !A(a)
std::string format(const LiteralSet& s);         // {A(a), !C(a)}
std::string format(const Term& t);               // variables bare, constants quoted
std::string format(const Atom& a);
std::string format(const UniversalConstraint& c);
std::string format(const ConjunctiveQuery& q);
std::string format(const UpdateAction& a);
std::string format(const Aic& r);

std::string format_database(const Database& db);
std::string format_constraints(const std::vector<UniversalConstraint>& cs);
std::string format_priority(const PriorityRelation& p);
std::string format_queries(const std::vector<ConjunctiveQuery>& qs);
std::string format_aics(const std::vector<Aic>& rules);
std::string format_schema(const Schema& s);

}  // namespace optrepair
