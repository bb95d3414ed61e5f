#pragma once

#include <ostream>
#include <string>

#include "optrepair/aic.hpp"
#include "optrepair/priorities.hpp"
#include "optrepair/query.hpp"

namespace optrepair::testing {

std::string fixture_path(const std::string& name, const std::string& file);
// Empty string when the file does not exist.
std::string fixture_text(const std::string& name, const std::string& file);

Instance fixture_instance(const std::string& name);
PrioritizedDatabase fixture_pdb(const std::string& name);
AicProblem fixture_aics(const std::string& name);
std::vector<ConjunctiveQuery> fixture_queries(const std::string& name);

// Shorthand for writing expected values: "A(a), !C(a)" and "A(a), B(a)".
LiteralSet lits_of(const std::string& text);
Database db_of(const std::string& text);
RepairSet repairs_of(std::initializer_list<const char*> dbs);
UpdateSet update_of(const std::string& text);

}  // namespace optrepair::testing

namespace optrepair {
// gtest printers
void PrintTo(const Fact& f, std::ostream* os);
void PrintTo(const Literal& l, std::ostream* os);
void PrintTo(const UpdateAction& a, std::ostream* os);
}  // namespace optrepair
