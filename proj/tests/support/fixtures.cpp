#include "fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "optrepair/io.hpp"

namespace optrepair::testing {

std::string fixture_path(const std::string& name, const std::string& file) {
  return std::string(OPTREPAIR_FIXTURES) + "/" + name + "/" + file;
}

std::string fixture_text(const std::string& name, const std::string& file) {
  std::ifstream in(fixture_path(name, file));
  if (!in) return "";
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

namespace {

Schema schema_of(const std::string& name) { return parse_schema(fixture_text(name, "schema.txt")); }

}  // namespace

Instance fixture_instance(const std::string& name) {
  return Instance(parse_database(fixture_text(name, "db.txt")),
                  parse_constraints(fixture_text(name, "constraints.txt")), schema_of(name));
}

PrioritizedDatabase fixture_pdb(const std::string& name) {
  return PrioritizedDatabase(fixture_instance(name), parse_priority(fixture_text(name, "priority.txt")));
}

AicProblem fixture_aics(const std::string& name) {
  return AicProblem(parse_database(fixture_text(name, "db.txt")), parse_aics(fixture_text(name, "aics.txt")),
                    schema_of(name));
}

std::vector<ConjunctiveQuery> fixture_queries(const std::string& name) {
  return parse_queries(fixture_text(name, "queries.txt"));
}

LiteralSet lits_of(const std::string& text) {
  // reuse the priority syntax: "L > L." parses literals with constants
  LiteralSet out;
  std::string item;
  int depth = 0;
  auto flush = [&] {
    if (item.find_first_not_of(" ") == std::string::npos) return;
    auto p = parse_priority(item + " > " + item + ".");
    out.insert(p.edges.begin()->first);
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
      item.clear();
    } else {
      item += c;
    }
  }
  flush();
  return out;
}

Database db_of(const std::string& text) {
  Database out;
  for (const auto& l : lits_of(text)) out.insert(l.fact);
  return out;
}

RepairSet repairs_of(std::initializer_list<const char*> dbs) {
  RepairSet out;
  for (const char* d : dbs) out.insert(db_of(d));
  return out;
}

UpdateSet update_of(const std::string& text) {
  auto v = parse_update_actions(text);
  return {v.begin(), v.end()};
}

}  // namespace optrepair::testing

namespace optrepair {
void PrintTo(const Fact& f, std::ostream* os) { *os << format(f); }
void PrintTo(const Literal& l, std::ostream* os) { *os << format(l); }
void PrintTo(const UpdateAction& a, std::ostream* os) { *os << format(a); }
}  // namespace optrepair
