// tetra: command-line front end for the finite algebra workbench.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "tetra/acceptance.hpp"
#include "tetra/catalog.hpp"
#include "tetra/search.hpp"
#include "tetra/structure.hpp"

using namespace tetra;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool forced_file(const std::string& arg) { return arg.starts_with("./") || arg.starts_with("/"); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteAlgebra resolve_algebra(const std::string& arg) {
  if (!forced_file(arg) && catalog::has_model(arg)) return catalog::get_model(arg).algebra;
  return parse_algebra(read_file(arg));
}

// One sentence per line, optionally "LABEL: sentence"; '#' starts a comment.
AxiomSystem parse_sentence_file(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<Axiom> axioms;
  OpSet symbols;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string label = "S" + std::to_string(axioms.size() + 1), text = line;
    if (auto colon = line.find(':'); colon != std::string::npos) {
      label = line.substr(0, colon);
      label.erase(0, label.find_first_not_of(" \t"));
      label.erase(label.find_last_not_of(" \t") + 1);
      text = line.substr(colon + 1);
    }
    try {
      Sentence s = parse_sentence(text);
      symbols = symbols | s.symbols();
      axioms.push_back({label, std::move(s), text});
    } catch (const SyntaxError& e) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return AxiomSystem(path, symbols, std::move(axioms));
}

AxiomSystem resolve_system(const std::string& arg) {
  if (!forced_file(arg) && catalog::has_system(arg)) return catalog::get_system(arg);
  return parse_sentence_file(arg);
}

Sentence resolve_sentence(const std::string& arg) {
  if (forced_file(arg)) {
    const auto sys = parse_sentence_file(arg);
    if (sys.size() != 1) throw UsageError(arg + " must hold exactly one sentence");
    return sys.axioms().front().sentence;
  }
  return parse_sentence(arg);
}

std::string model_record(const FiniteAlgebra& a) { return "MODEL " + canonical_hash(a) + "\n" + format_algebra(a); }

// Name of a catalog model isomorphic to `a`, if any.
std::string known_as(const FiniteAlgebra& a) {
  for (const auto& name : catalog::model_names()) {
    const auto reduct = catalog::get_model(name).algebra.reduct(a.signature());
    if (reduct.signature() == a.signature() && find_isomorphism(a, reduct)) return name;
  }
  return {};
}

void print_witness(std::ostream& out, const search::Witness& w, bool records) {
  const std::string name = known_as(w.algebra);
  if (!name.empty()) out << "  isomorphic to " << name << "\n";
  if (records) out << model_record(w.algebra);
}

struct Flags {
  std::size_t max_n = 4;
  bool no_iso = false;
  bool full = false;
  bool records = false;
  bool seedless = false;
};

void add_bound(CLI::App* cmd, Flags& f) {
  cmd->add_option("--max-n", f.max_n, "largest carrier size searched")->check(CLI::PositiveNumber);
}

void add_output(CLI::App* cmd, Flags& f) {
  cmd->add_flag("--records", f.records, "emit MODEL records in the text format");
  cmd->add_flag("--seedless", f.seedless, "no randomization (always the case)");
}

int cmd_check(const std::string& algebra, const std::string& system, const Flags& f, std::ostream& out) {
  const FiniteAlgebra a = resolve_algebra(algebra);
  const AxiomSystem sys = resolve_system(system);
  const auto report = check_system(a, sys, f.full);
  if (f.records) out << model_record(a);
  out << format_report(a, report);
  return report.all_hold() ? kOk : kNegative;
}

int cmd_eval(const std::string& algebra, const std::string& term_text, const std::vector<std::string>& bindings,
             std::ostream& out) {
  const FiniteAlgebra a = resolve_algebra(algebra);
  const Term term = parse_term(term_text);
  std::map<std::string, Element> valuation;
  for (const auto& b : bindings) {
    const auto eq = b.find('=');
    if (eq == std::string::npos) throw UsageError("binding must look like x=a: " + b);
    const auto value = a.find_element(b.substr(eq + 1));
    if (!value) throw UsageError("no element " + b.substr(eq + 1));
    valuation[b.substr(0, eq)] = *value;
  }
  out << a.name(eval(term, a, valuation)) << "\n";
  return kOk;
}

int cmd_enum(const std::string& system, const Flags& f, std::ostream& out) {
  const AxiomSystem sys = resolve_system(system);
  const OpSet signature = sys.required_symbols();
  if (signature.empty()) throw UsageError(sys.name() + " has no unary symbols to search");
  std::size_t total = 0;
  for (std::size_t n = 1; n <= f.max_n; ++n) {
    for (const auto& lattice : search::enumerate_distributive_lattices(n)) {
      const auto models = search::enumerate_models(lattice, {f.max_n, signature, sys, !f.no_iso});
      out << "LATTICE n=" << n << " " << format_hasse(lattice) << ": " << models.size()
          << (f.no_iso ? " labelled models\n" : " models\n");
      if (f.records) {
        for (const auto& m : models) out << model_record(m);
      }
      total += models.size();
    }
  }
  out << "TOTAL " << total << " up to n=" << f.max_n << "\n";
  return kOk;
}

int cmd_entail(const std::string& system, const std::string& sentence, const Flags& f, std::ostream& out) {
  const AxiomSystem sys = resolve_system(system);
  const Sentence s = resolve_sentence(sentence);
  const auto result = search::check_entailment(sys, s, f.max_n);
  out << "ENTAILMENT " << sys.name() << " |- " << to_string(s) << "\n";
  if (result.holds_up_to_bound()) {
    out << "HOLDS up to n=" << f.max_n << " (bounded check, not a proof)\n";
    return kOk;
  }
  const auto& w = *result.witness;
  out << "COUNTERMODEL size=" << w.algebra.size() << " hash=" << canonical_hash(w.algebra) << " at "
      << format_valuation_indices(w.valuation) << "\n";
  print_witness(out, w, true);
  return kNegative;
}

int cmd_indep(const std::string& system, const Flags& f, std::ostream& out) {
  const AxiomSystem sys = resolve_system(system);
  const auto result = search::check_independence(sys, f.max_n);
  out << search::format_independence(result);
  for (const auto& e : result.entries) {
    if (!e.witness) continue;
    const std::string name = known_as(e.witness->algebra);
    if (!name.empty()) out << "  " << e.label << " witness is isomorphic to " << name << "\n";
    if (f.records) out << model_record(e.witness->algebra);
  }
  return kOk;
}

int cmd_equiv(const std::string& which, const Flags& f, std::ostream& out) {
  std::vector<search::TheoremReport> reports;
  if (which == "negations") {
    reports.push_back(search::check_negation_characterization(f.max_n));
  } else if (which == "derived-laws") {
    reports.push_back(search::check_derived_negation_laws(f.max_n));
  } else if (which == "t-identities") {
    reports.push_back(search::check_t_identity_characterization(f.max_n));
  } else if (which == "p-algebra") {
    reports.push_back(search::check_p_algebra_negation(f.max_n));
  } else if (which == "varlet") {
    reports.push_back(search::check_varlet_correspondence(catalog::get_system("VARLET"),
                                                          catalog::get_system("VARLET_ID"), f.max_n));
    reports.push_back(search::check_varlet_correspondence(catalog::get_system("VARLET_STONE"),
                                                          catalog::get_system("VARLET_STONE_ID"), f.max_n));
  } else if (which == "structure") {
    reports.push_back(structure::probe_finite_tma_structure(f.max_n));
  } else {
    throw UsageError("unknown check " + which);
  }
  bool ok = true;
  for (const auto& r : reports) {
    out << search::format_theorem_report(r);
    ok = ok && r.passed();
  }
  return ok ? kOk : kNegative;
}

int cmd_decompose(const std::string& algebra, std::ostream& out) {
  const FiniteAlgebra a = resolve_algebra(algebra);
  try {
    out << structure::format_decomposition(structure::decompose_tma(a));
    return kOk;
  } catch (const StructureError& e) {
    out << "NO-DECOMPOSITION " << e.what() << "\n";
    return kNegative;
  }
}

int cmd_pc(const std::string& algebra, std::ostream& out) {
  const FiniteAlgebra a = resolve_algebra(algebra);
  int status = kOk;
  auto show = [&](const char* label, const PseudocomplementResult& r) {
    if (const auto* t = std::get_if<Table>(&r)) {
      out << label << " " << format_table(a, *t) << "\n";
    } else {
      const auto& f = std::get<PseudocomplementFailure>(r);
      out << label << " NONE at " << a.name(f.x) << ": " << a.name(f.first) << " and " << a.name(f.second)
          << " are both maximal\n";
      status = kNegative;
    }
  };
  show("pc", pseudocomplement(a));
  show("dpc", dual_pseudocomplement(a));
  if (a.has(Op::dm) && check_system(a, catalog::get_system("DE_MORGAN"), false).all_hold()) {
    const auto v = structure::is_mdmp(a);
    out << "MDMP " << structure::status_name(v.status);
    if (v.status != structure::MdmpVerdict::Status::yes) out << " x=" << a.name(v.witness);
    out << "\n";
  }
  return status;
}

int cmd_catalog_list(std::ostream& out) {
  out << "SYSTEMS\n";
  for (const auto& name : catalog::system_names()) {
    const auto& s = catalog::get_system(name);
    out << "  " << name << " (" << s.size() << " sentences, " << s.required_symbols().to_string() << ")\n";
  }
  out << "MODELS\n";
  for (const auto& name : catalog::model_names()) {
    out << "  " << name << " (" << catalog::get_model(name).algebra.size() << " elements)\n";
  }
  return kOk;
}

int cmd_catalog_show(const std::string& name, std::ostream& out) {
  if (catalog::has_system(name)) {
    out << catalog::format_system(catalog::get_system(name));
    return kOk;
  }
  const auto& m = catalog::get_model(name);
  out << "# " << m.name << ": " << m.provenance << "\n";
  out << "# hasse " << format_hasse(m.algebra) << "\n";
  for (Op op : m.algebra.signature().to_vector()) {
    out << "# " << spelling(op) << " " << format_table(m.algebra, m.algebra.op(op)) << "\n";
  }
  out << format_algebra(m.algebra);
  return kOk;
}

int cmd_check_all(const acceptance::Options& options, std::ostream& out) {
  bool ok = true;
  for (const auto& r : acceptance::run_all(options)) {
    out << acceptance::format_result(r) << std::flush;
    ok = ok && r.passed;
  }
  return ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite algebra workbench: De Morgan, modal and pseudocomplemented lattices"};
  app.require_subcommand(1);
  Flags f;
  std::string algebra, system, text;
  std::vector<std::string> bindings;
  std::function<int()> action;

  auto* check = app.add_subcommand("check", "check an algebra against a system or sentence file");
  check->add_option("algebra", algebra, "catalog model or algebra file")->required();
  check->add_option("system", system, "catalog system or sentence file")->required();
  check->add_flag("--full", f.full, "check every sentence even after a failure");
  add_output(check, f);
  check->callback([&] { action = [&] { return cmd_check(algebra, system, f, std::cout); }; });

  auto* ev = app.add_subcommand("eval", "evaluate a term");
  ev->add_option("algebra", algebra)->required();
  ev->add_option("term", text)->required();
  ev->add_option("bindings", bindings, "x=a ...");
  ev->callback([&] { action = [&] { return cmd_eval(algebra, text, bindings, std::cout); }; });

  auto* en = app.add_subcommand("enum", "enumerate models of a system up to isomorphism");
  en->add_option("system", system)->required();
  add_bound(en, f);
  en->add_flag("--no-iso", f.no_iso, "list every labelled model");
  add_output(en, f);
  en->callback([&] { action = [&] { return cmd_enum(system, f, std::cout); }; });

  auto* entail = app.add_subcommand("entail", "search for a countermodel to an entailment");
  entail->add_option("system", system)->required();
  entail->add_option("sentence", text, "sentence, or ./file with one sentence")->required();
  add_bound(entail, f);
  add_output(entail, f);
  entail->callback([&] { action = [&] { return cmd_entail(system, text, f, std::cout); }; });

  auto* indep = app.add_subcommand("indep", "look for an independence witness for each axiom");
  indep->add_option("system", system)->required();
  add_bound(indep, f);
  add_output(indep, f);
  indep->callback([&] { action = [&] { return cmd_indep(system, f, std::cout); }; });

  auto* equiv = app.add_subcommand("equiv", "run a characterization check over all models");
  equiv->add_option("which", text, "negations | derived-laws | t-identities | p-algebra | varlet | structure")
      ->required();
  add_bound(equiv, f);
  add_output(equiv, f);
  equiv->callback([&] { action = [&] { return cmd_equiv(text, f, std::cout); }; });

  auto* dec = app.add_subcommand("decompose", "write a finite TMA as a product of T2, T3, T4");
  dec->add_option("algebra", algebra)->required();
  dec->callback([&] { action = [&] { return cmd_decompose(algebra, std::cout); }; });

  auto* pc = app.add_subcommand("pc", "pseudocomplement and dual pseudocomplement");
  pc->add_option("algebra", algebra)->required();
  pc->callback([&] { action = [&] { return cmd_pc(algebra, std::cout); }; });

  auto* cat = app.add_subcommand("catalog", "built-in systems and models");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "names of systems and models")->callback([&] {
    action = [&] { return cmd_catalog_list(std::cout); };
  });
  auto* show = cat->add_subcommand("show", "sentences of a system or tables of a model");
  show->add_option("name", text)->required();
  show->callback([&] { action = [&] { return cmd_catalog_show(text, std::cout); }; });

  acceptance::Options options = acceptance::default_options();
  auto* suite = app.add_subcommand("suite", "acceptance suite");
  suite->require_subcommand(1);
  auto* all = suite->add_subcommand("check-all", "run every acceptance criterion");
  all->add_option("--only", options.only, "criterion ids, e.g. AC3");
  all->add_option("--golden-dir", options.golden_dir, "directory of golden files");
  all->add_flag("--write-golden", options.write_golden, "rewrite golden files from this run");
  all->callback([&] { action = [&] { return cmd_check_all(options, std::cout); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const SyntaxError& e) {
    std::cerr << e.what() << "\n";
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const AlgebraError& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
  } catch (const EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const SearchError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
