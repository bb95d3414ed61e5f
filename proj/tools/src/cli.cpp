#include "optrepair/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "optrepair/aic.hpp"
#include "optrepair/bridges.hpp"
#include "optrepair/conflicts.hpp"
#include "optrepair/errors.hpp"
#include "optrepair/io.hpp"
#include "optrepair/priorities.hpp"
#include "optrepair/query.hpp"
#include "optrepair/repairs.hpp"

namespace optrepair::cli {

namespace {

struct Options {
  std::string db, constraints, priority, queries, aics, schema;
  std::size_t max_universe = 22;
  std::size_t max_completions = 1'000'000;

  Budget budget() const { return {max_universe, max_completions}; }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Files are loaded on demand; a missing --flag reads as an empty file.
class Workspace {
 public:
  explicit Workspace(const Options& o) : o_(o) {}

  Schema schema() const {
    Schema s = o_.schema.empty() ? Schema{} : parse_schema(slurp(o_.schema), o_.schema);
    if (!o_.queries.empty())
      for (const auto& q : queries())
        for (const auto& a : q.body()) declare(s, a);
    return s;
  }
  Database db() const { return o_.db.empty() ? Database{} : parse_database(slurp(o_.db), o_.db); }
  std::vector<UniversalConstraint> constraints() const {
    return o_.constraints.empty() ? std::vector<UniversalConstraint>{}
                                  : parse_constraints(slurp(o_.constraints), o_.constraints);
  }
  PriorityRelation priority() const {
    return o_.priority.empty() ? PriorityRelation{} : parse_priority(slurp(o_.priority), o_.priority);
  }
  std::vector<ConjunctiveQuery> queries() const {
    if (o_.queries.empty()) throw InputError("--queries is required");
    return parse_queries(slurp(o_.queries), o_.queries);
  }
  std::vector<Aic> aics() const {
    if (o_.aics.empty()) throw InputError("--aics is required");
    return parse_aics(slurp(o_.aics), o_.aics);
  }

  Instance instance() const { return Instance(db(), constraints(), schema()); }
  PrioritizedDatabase pdb() const { return PrioritizedDatabase(instance(), priority()); }
  AicProblem aic_problem() const { return AicProblem(db(), aics(), schema(), o_.budget()); }

 private:
  const Options& o_;
};

std::string format_db(const Database& db) {
  std::string s = "{";
  bool first = true;
  for (const auto& f : db) {
    if (!first) s += ", ";
    first = false;
    s += format(f);
  }
  return s + "}";
}

std::string format_update(const UpdateSet& u) {
  std::string s = "{";
  bool first = true;
  for (const auto& a : u) {
    if (!first) s += ", ";
    first = false;
    s += format(a);
  }
  return s + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

RepairNotion notion_of(const std::string& s) {
  static const std::map<std::string, RepairNotion> m{
      {"none", RepairNotion::Delta},       {"s", RepairNotion::Delta},
      {"pareto", RepairNotion::Pareto},    {"p", RepairNotion::Pareto},
      {"global", RepairNotion::Global},    {"g", RepairNotion::Global},
      {"completion", RepairNotion::Completion}, {"c", RepairNotion::Completion}};
  return m.at(s);
}

void print_repairs(const RepairSet& rs, std::ostream& out) {
  for (const auto& r : rs) out << format_db(r) << "\n";
}

// Writes named sections either into files under `dir` or as commented blocks.
void emit(const std::vector<std::pair<std::string, std::string>>& sections, const std::string& dir,
          std::ostream& out) {
  if (dir.empty()) {
    for (const auto& [name, body] : sections) out << "# " << name << "\n" << body;
    return;
  }
  std::filesystem::create_directories(dir);
  for (const auto& [name, body] : sections) {
    auto path = std::filesystem::path(dir) / (name + ".txt");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path.string());
    f << body;
  }
}

void print_report_sets(const std::vector<std::pair<const char*, const RepairSet*>>& sets, std::ostream& out) {
  for (const auto& [name, rs] : sets) {
    out << name << ": " << rs->size() << "\n";
    for (const auto& r : *rs) out << "  " << format_db(r) << "\n";
  }
}

std::string dot_id(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') q += '\\';
    q += c;
  }
  return q + "\"";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Prioritized repairs and active integrity constraints", "optrepair"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--db", o.db, "facts file");
  app.add_option("--constraints", o.constraints, "universal constraints file");
  app.add_option("--priority", o.priority, "priority file");
  app.add_option("--queries", o.queries, "conjunctive queries file");
  app.add_option("--aics", o.aics, "active integrity constraints file");
  app.add_option("--schema", o.schema, "schema file (P/n.), merged with inferred predicates");
  app.add_option("--max-universe", o.max_universe, "cap for exhaustive enumerations")->capture_default_str();
  app.add_option("--max-completions", o.max_completions, "cap on enumerated completions")
      ->capture_default_str();

  const std::vector<std::string> opts{"none", "pareto", "global", "completion"};
  std::function<int()> action;

  // conflicts
  auto* c_conf = app.add_subcommand("conflicts", "list the conflicts");
  bool dot = false;
  std::string method = "pi";
  c_conf->add_flag("--dot", dot, "emit the conflict hypergraph in DOT");
  c_conf->add_option("--method", method, "pi (prime implicants) or mhs (hitting sets)")
      ->check(CLI::IsMember({"pi", "mhs"}));
  c_conf->callback([&] {
    action = [&] {
      Workspace ws(o);
      Instance inst = ws.instance();
      auto cs = method == "pi" ? conflicts_prime_implicants(inst) : conflicts_hitting_sets(inst, o.budget());
      if (!dot) {
        for (const auto& c : cs) out << format(c) << "\n";
        return Ok;
      }
      LiteralSet vs;
      for (const auto& c : cs) vs.insert(c.begin(), c.end());
      out << "graph conflicts {\n";
      for (const auto& v : vs) out << "  " << dot_id(format(v)) << ";\n";
      std::size_t k = 0;
      for (const auto& c : cs) {
        if (c.size() == 2) {
          out << "  " << dot_id(format(*c.begin())) << " -- " << dot_id(format(*c.rbegin())) << ";\n";
          continue;
        }
        std::string e = "e" + std::to_string(k++);
        out << "  " << e << " [shape=point];\n";
        for (const auto& l : c) out << "  " << e << " -- " << dot_id(format(l)) << ";\n";
      }
      out << "}\n";
      return Ok;
    };
  });

  // repairs
  auto* c_rep = app.add_subcommand("repairs", "enumerate repairs");
  std::string kind = "delta", opt = "none";
  bool brute = false;
  c_rep->add_option("--kind", kind)->check(CLI::IsMember({"delta", "subset", "superset"}))->capture_default_str();
  c_rep->add_option("--opt", opt, "optimality notion, or score for the level-wise repairs")
      ->check(CLI::IsMember({"none", "pareto", "global", "completion", "score"}))
      ->capture_default_str();
  c_rep->add_flag("--bruteforce", brute, "use the exhaustive oracle");
  c_rep->callback([&] {
    action = [&] {
      Workspace ws(o);
      if (kind != "delta") {
        if (opt != "none") throw InputError("--opt only applies to --kind delta");
        Instance inst = ws.instance();
        print_repairs(kind == "subset" ? subset_repairs(inst, o.budget()) : superset_repairs(inst, o.budget()),
                      out);
        return Ok;
      }
      if (opt == "none" && o.priority.empty()) {
        Instance inst = ws.instance();
        print_repairs(brute ? delta_repairs_bruteforce(inst, o.budget()) : delta_repairs(inst), out);
        return Ok;
      }
      PrioritizedDatabase pdb = ws.pdb();
      if (opt == "score") {
        print_repairs(brute ? delta_p_repairs_bruteforce(pdb, o.budget()) : delta_p_repairs(pdb), out);
        return Ok;
      }
      RepairNotion n = notion_of(opt);
      print_repairs(brute ? optimal_repairs_bruteforce(pdb, n, o.budget()) : optimal_repairs(pdb, n), out);
      return Ok;
    };
  });

  // check-repair
  auto* c_chk = app.add_subcommand("check-repair", "decide whether a candidate is an (optimal) repair");
  std::string candidate;
  c_chk->add_option("--candidate", candidate, "facts file")->required();
  c_chk->add_option("--opt", opt)->check(CLI::IsMember(opts))->capture_default_str();
  c_chk->callback([&] {
    action = [&] {
      Workspace ws(o);
      Database cand = parse_database(slurp(candidate), candidate);
      PrioritizedDatabase pdb = ws.pdb();
      pdb.instance().check_candidate(cand);
      bool ok = is_optimal_repair(cand, pdb, notion_of(opt));
      out << yes_no(ok) << "\n";
      return ok ? Ok : False;
    };
  });

  // answer
  auto* c_ans = app.add_subcommand("answer", "answer queries over the optimal repairs");
  std::string sem = "cqa", aopt = "s", only;
  c_ans->add_option("--sem", sem)->check(CLI::IsMember({"brave", "cqa", "int"}))->capture_default_str();
  c_ans->add_option("--opt", aopt)->check(CLI::IsMember({"s", "p", "g", "c"}))->capture_default_str();
  c_ans->add_option("--query", only, "answer only the named query");
  c_ans->callback([&] {
    action = [&] {
      Workspace ws(o);
      auto qs = ws.queries();
      PrioritizedDatabase pdb = ws.pdb();
      Semantics s = sem == "brave" ? Semantics::Brave : sem == "cqa" ? Semantics::Cqa : Semantics::Intersection;
      RepairNotion n = notion_of(aopt);
      RepairSet rs = optimal_repairs(pdb, n);
      bool seen = false;
      for (const auto& q : qs) {
        if (!only.empty() && q.name() != only) continue;
        seen = true;
        auto a = answers(rs, q, s, n);
        if (q.is_boolean()) {
          out << q.name() << ": " << yes_no(!a.tuples.empty()) << "\n";
          continue;
        }
        if (a.tuples.empty()) out << q.name() << ": none\n";
        for (const auto& t : a.tuples) out << format(Fact{q.name(), t}) << "\n";
      }
      if (!seen) throw InputError("no query named " + only);
      return Ok;
    };
  });

  // aic
  auto* c_aic = app.add_subcommand("aic", "active integrity constraints");
  c_aic->require_subcommand(1);
  auto* a_cls = c_aic->add_subcommand("classify", "r-updates with their support properties");
  bool as_repairs = false;
  a_cls->add_flag("--repairs", as_repairs, "print the resulting databases instead");
  a_cls->callback([&] {
    action = [&] {
      AicProblem p = Workspace(o).aic_problem();
      for (const auto& c : classify(p)) {
        out << (as_repairs ? format_db(optrepair::apply(p.db(), c.update)) : format_update(c.update));
        if (c.founded) out << " founded";
        if (c.well_founded) out << " well-founded";
        if (c.grounded) out << " grounded";
        if (c.justified) out << " justified";
        out << "\n";
      }
      return Ok;
    };
  });
  auto* a_chk = c_aic->add_subcommand("check-update", "decide whether an update is an r-update of a kind");
  std::string update, ukind = "r";
  a_chk->add_option("--update", update, "actions, e.g. \"{-A(a), +B(a)}\"")->required();
  a_chk->add_option("--kind", ukind)
      ->check(CLI::IsMember({"r", "founded", "well-founded", "grounded", "justified"}))
      ->capture_default_str();
  a_chk->callback([&] {
    action = [&] {
      AicProblem p = Workspace(o).aic_problem();
      auto acts = parse_update_actions(update, "--update");
      UpdateSet u(acts.begin(), acts.end());
      bool ok = is_consistent(u) && is_r_update(u, p);
      if (ok && ukind != "r") {
        auto c = classify(u, p);
        ok = ukind == "founded" ? c.founded
             : ukind == "well-founded" ? c.well_founded
             : ukind == "grounded" ? c.grounded
                                   : c.justified;
      }
      out << yes_no(ok) << "\n";
      return ok ? Ok : False;
    };
  });
  auto* a_props = c_aic->add_subcommand("props", "structural properties of the ground AIC set");
  a_props->callback([&] {
    action = [&] {
      auto r = check_properties(Workspace(o).aic_problem());
      out << "consistent: " << yes_no(r.consistent) << "\n"
          << "monotone: " << yes_no(r.monotone) << "\n"
          << "closed-under-resolution: " << yes_no(r.closed_under_resolution) << "\n"
          << "preserves-actions-resolution: " << yes_no(r.preserves_actions_resolution) << "\n"
          << "preserves-actions-strengthening: " << yes_no(r.preserves_actions_strengthening) << "\n";
      for (const auto& w : r.witnesses) out << "  " << w << "\n";
      return Ok;
    };
  });

  // translate
  auto* c_tr = app.add_subcommand("translate", "translations between the frameworks");
  c_tr->require_subcommand(1);
  std::string out_dir, prefix = "neg_", prio_pred = "P";
  std::size_t max_terms = 10;
  auto* t_den = c_tr->add_subcommand("to-denial", "universal constraints to ground denials");
  t_den->add_option("--prefix", prefix)->capture_default_str();
  t_den->add_option("--out-dir", out_dir, "write schema.txt, db.txt, constraints.txt");
  t_den->callback([&] {
    action = [&] {
      DenialImage img = to_denial(Workspace(o).instance(), prefix);
      emit({{"schema", format_schema(img.schema)},
            {"db", format_database(img.db)},
            {"constraints", format_constraints(img.constraints)}},
           out_dir, out);
      return Ok;
    };
  });
  auto* t_p2a = c_tr->add_subcommand("prio-to-aic", "prioritized database to ground AICs");
  t_p2a->callback([&] {
    action = [&] {
      out << format_aics(prio_to_aics(Workspace(o).pdb()));
      return Ok;
    };
  });
  auto* t_d2a = c_tr->add_subcommand("denial-prio-to-aic", "denials with a stored priority predicate to AICs");
  t_d2a->add_option("--priority-predicate", prio_pred)->capture_default_str();
  t_d2a->add_option("--max-terms", max_terms)->capture_default_str();
  t_d2a->callback([&] {
    action = [&] {
      out << format_aics(denial_prio_to_aics(Workspace(o).constraints(), prio_pred, max_terms));
      return Ok;
    };
  });
  auto* t_a2p = c_tr->add_subcommand("aic-to-prio", "AICs to constraints and a priority");
  t_a2p->add_option("--out-dir", out_dir, "write constraints.txt, priority.txt");
  t_a2p->callback([&] {
    action = [&] {
      EtaPrio e = aics_to_prio(Workspace(o).aic_problem());
      if (!e.acyclic()) {
        std::string c;
        for (const auto& l : e.cycle) c += (c.empty() ? "" : " > ") + format(l);
        err << "derived priority is cyclic: " << c << "\n";
        return False;
      }
      if (!e.well_behaved()) err << "warning: AIC set is not well-behaved\n";
      emit({{"constraints", format_constraints(e.constraints)}, {"priority", format_priority(e.priority)}},
           out_dir, out);
      return Ok;
    };
  });

  // verify
  auto* c_ver = app.add_subcommand("verify", "check the correspondences between the frameworks");
  c_ver->require_subcommand(1);
  auto verify_pa = [&] {
    auto r = verify_pareto_aic(Workspace(o).pdb());
    print_report_sets({{"pareto", &r.pareto},
                       {"founded", &r.founded},
                       {"grounded", &r.grounded},
                       {"justified", &r.justified},
                       {"well-founded", &r.well_founded}},
                      out);
    for (const auto& d : r.discrepancies) out << "discrepancy: " << d << "\n";
    out << "holds: " << yes_no(r.holds) << "\n";
    return r.holds ? Ok : False;
  };
  auto verify_ap = [&] {
    auto r = verify_aic_pareto(Workspace(o).aic_problem());
    if (!r.eta.acyclic()) {
      std::string c;
      for (const auto& l : r.eta.cycle) c += (c.empty() ? "" : " > ") + format(l);
      out << "cycle: " << c << "\n";
    }
    out << "well-behaved: " << yes_no(r.eta.well_behaved()) << "\n"
        << "max-conflict: " << r.max_conflict << "\n"
        << "preconditions: " << yes_no(r.preconditions) << "\n"
        << "expected: " << (!r.preconditions ? "nothing" : r.equality_expected ? "equality" : "founded-subset")
        << "\n";
    print_report_sets({{"pareto", &r.pareto},
                       {"founded", &r.founded},
                       {"grounded", &r.grounded},
                       {"justified", &r.justified},
                       {"well-founded", &r.well_founded}},
                      out);
    for (const auto& n : r.notes) out << "note: " << n << "\n";
    out << "holds: " << yes_no(r.holds) << "\n";
    return r.holds ? Ok : False;
  };
  c_ver->add_subcommand("pareto-aic", "Pareto repairs versus AIC repairs of the translation")->callback([&] {
    action = verify_pa;
  });
  c_ver->add_subcommand("aic-pareto", "AIC repairs versus Pareto repairs of the derived priority")->callback([&] {
    action = verify_ap;
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return BadInput;
  }

  try {
    return action ? action() : BadInput;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return OverBudget;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return BadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return BadInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return BadInput;
  }
}

}  // namespace optrepair::cli
