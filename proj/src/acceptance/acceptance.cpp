#include "tetra/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "tetra/brute_force.hpp"
#include "tetra/catalog.hpp"
#include "tetra/search.hpp"
#include "tetra/structure.hpp"

#ifndef TETRA_GOLDEN_DIR
#define TETRA_GOLDEN_DIR "tests/golden"
#endif

namespace tetra::acceptance {

namespace {

// Wall-clock limits per criterion, in seconds.
constexpr double kFastLimit = 1.0;
constexpr double kTheoremLimit = 60.0;
constexpr double kStructureLimit = 300.0;
constexpr double kMetaLimit = 300.0;
constexpr double kOracleLimit = 120.0;

// Size bounds per criterion.
constexpr std::size_t kTheoremBound = 5;
constexpr std::size_t kStructureBound = 6;
constexpr std::size_t kEntailmentBound = 5;
constexpr std::size_t kIndependenceBound = 6;
constexpr std::size_t kOracleBound = 4;

const char* kGoldenFile = "independence_moisil_a_n6.txt";

struct Outcome {
  bool passed = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      details.push_back("failed: " + what);
    }
  }
  void note(std::string text) { details.push_back(std::move(text)); }
};

std::string table_of(const FiniteAlgebra& a, Op op) { return format_table(a, a.op(op)); }

void expect_table(Outcome& out, const std::string& model, Op op, const std::string& expected) {
  const FiniteAlgebra& a = catalog::get_model(model).algebra;
  const std::string got = table_of(a, op);
  out.require(got == expected, model + " " + std::string(spelling(op)) + " = " + got + ", expected " + expected);
}

void absorb(Outcome& out, const search::TheoremReport& report) {
  for (const auto& c : report.checks) {
    if (!c.passed()) {
      out.passed = false;
      std::string line = "failed: " + report.name + ": " + c.description + " on " + std::to_string(c.failures) +
                         " of " + std::to_string(c.models) + " models";
      if (!c.samples.empty()) line += "; first: " + c.samples.front();
      out.details.push_back(line);
    }
  }
}

void note_counts(Outcome& out, const search::TheoremReport& report) {
  for (const auto& n : report.notes) out.note(report.name + ": " + n);
}

Outcome golden_tables() {
  Outcome out;
  expect_table(out, "M4_DIAMOND", Op::dm, "[1, a, b, 0]");
  expect_table(out, "M4_DIAMOND", Op::nabla, "[0, 1, 1, 1]");
  expect_table(out, "M4_DIAMOND", Op::sneg, "[1, 0, 0, 0]");
  expect_table(out, "M4_DIAMOND", Op::pc, "[1, b, a, 0]");
  expect_table(out, "C4_CHAIN", Op::dm, "[1, b, a, 0]");
  expect_table(out, "C4_CHAIN", Op::pc, "[1, 0, 0, 0]");
  for (const char* name : {"M4_DIAMOND", "C4_CHAIN"}) {
    const auto& a = catalog::get_model(name).algebra;
    out.require(std::ranges::equal(pseudocomplement_table(a), a.op(Op::pc)),
                std::string(name) + " pc is the lattice pseudocomplement");
  }
  return out;
}

Outcome strong_negation_vs_pseudocomplement() {
  Outcome out;
  const auto& m4 = catalog::get_model("M4_DIAMOND").algebra;
  const FiniteAlgebra derived = derive_strong_weak(m4.reduct(OpSet{Op::dm, Op::nabla}));
  const Table pc = pseudocomplement_table(m4);
  std::vector<std::string> differ, agree;
  for (Element x = 0; x < m4.size(); ++x) {
    (derived.apply(Op::sneg, x) == pc[x] ? agree : differ).push_back(m4.name(x));
  }
  const auto a = *m4.find_element("a"), b = *m4.find_element("b");
  out.require(derived.apply(Op::sneg, a) == m4.bottom(), "sneg a = 0");
  out.require(pc[a] == b, "pc a = b");
  out.require(differ == std::vector<std::string>{"a", "b"}, "sneg and pc differ exactly at a, b");
  out.require(agree == std::vector<std::string>{"0", "1"}, "sneg and pc agree exactly at 0, 1");
  out.note("sneg = " + format_table(m4, derived.op(Op::sneg)) + ", pc = " + format_table(m4, pc));
  return out;
}

Outcome negation_characterization() {
  Outcome out;
  const auto forward = search::check_negation_characterization(kTheoremBound);
  const auto laws = search::check_derived_negation_laws(kTheoremBound);
  absorb(out, forward);
  absorb(out, laws);
  note_counts(out, forward);
  return out;
}

Outcome t_identities() {
  Outcome out;
  const auto report = search::check_t_identity_characterization(kTheoremBound);
  absorb(out, report);
  note_counts(out, report);
  return out;
}

Outcome varlet() {
  Outcome out;
  const auto verbatim = search::check_varlet_correspondence(catalog::get_system("VARLET"),
                                                            catalog::get_system("VARLET_ID"), kTheoremBound);
  const auto stone = search::check_varlet_correspondence(catalog::get_system("VARLET_STONE"),
                                                         catalog::get_system("VARLET_STONE_ID"), kTheoremBound);
  absorb(out, verbatim);
  absorb(out, stone);
  note_counts(out, verbatim);
  note_counts(out, stone);
  return out;
}

Outcome example_h1() {
  Outcome out;
  const auto& c4 = catalog::get_model("C4_CHAIN").algebra;
  const auto verdict = structure::is_mdmp(c4);
  const Element a = *c4.find_element("a"), b = *c4.find_element("b");
  out.require(verdict.status == structure::MdmpVerdict::Status::h1_fails, "verdict is no-H1-fails");
  out.require(verdict.witness == a, "witness x = a");
  const Element lhs = c4.join(a, c4.apply(Op::dm, a)), rhs = c4.join(a, c4.apply(Op::pc, a));
  out.require(lhs == b && rhs == a && !c4.leq(lhs, rhs), "a | dm a = b is not below a | pc a = a");
  out.note("is_mdmp(C4_CHAIN) = " + structure::status_name(verdict.status) + " at x=" + c4.name(verdict.witness));
  return out;
}

Outcome p_algebra_negation() {
  Outcome out;
  const auto report = search::check_p_algebra_negation(kTheoremBound);
  absorb(out, report);
  note_counts(out, report);
  return out;
}

Outcome finite_structure() {
  Outcome out;
  const auto report = structure::probe_finite_tma_structure(kStructureBound);
  absorb(out, report);
  note_counts(out, report);
  const auto m4 = structure::decompose_tma(catalog::get_model("M4_DIAMOND").algebra);
  out.require(m4.t2 == 0 && m4.t3 == 0 && m4.t4 == 1, "M4_DIAMOND decomposes as T4^1");
  const FiniteAlgebra t2t3 = direct_product(catalog::get_model("T2").algebra, catalog::get_model("T3").algebra);
  const auto d = structure::decompose_tma(t2t3);
  out.require(d.t2 == 1 && d.t3 == 1 && d.t4 == 0, "T2 x T3 decomposes as T2^1 T3^1");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome meta_claims(const Options& options) {
  Outcome out;
  const auto& moisil = catalog::get_system("MOISIL_A");
  const auto entail = search::check_entailment(moisil.without("A1"), moisil.find("A1")->sentence, kEntailmentBound);
  out.require(entail.holds_up_to_bound(), "A2-A8 entail A1 up to n=5");

  const auto indep = search::check_independence(moisil, kIndependenceBound);
  const FiniteAlgebra m4 = catalog::get_model("M4_DIAMOND").algebra.reduct(OpSet{Op::dm, Op::nabla});
  for (const auto& e : indep.entries) {
    if (!e.witness) continue;
    out.require(search::reverify(*e.witness, moisil), "witness for " + e.label + " re-verifies");
    if (e.label == "A8") {
      out.require(e.witness->algebra.size() == 4, "A8 witness has 4 elements");
      out.require(find_isomorphism(e.witness->algebra, m4).has_value(), "A8 witness is M4_DIAMOND");
    }
  }
  const auto a8 = std::find_if(indep.entries.begin(), indep.entries.end(),
                                [](const auto& e) { return e.label == "A8"; });
  out.require(a8 != indep.entries.end() && a8->witness.has_value(), "A8 has a witness");

  const std::string text = search::format_independence(indep);
  const std::string path = options.golden_dir + "/" + kGoldenFile;
  if (options.write_golden) {
    std::ofstream(path) << text;
    out.note("wrote " + path);
  } else {
    const std::string golden = read_file(path);
    out.require(!golden.empty(), "golden file " + path + " is present");
    out.require(golden.empty() || golden == text, "independence report matches the golden file");
  }
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) out.note(line);
  return out;
}

Outcome oracle_cross_check() {
  Outcome out;
  const search::Ceilings ceilings;
  const std::vector<std::pair<const char*, OpSet>> systems = {
      {"TMA", OpSet{Op::dm, Op::nabla}},         {"MOISIL_A", OpSet{Op::dm, Op::nabla}},
      {"B_SYS", OpSet{Op::sneg, Op::wneg}},      {"DM_T", OpSet{Op::dm, Op::sneg}},
      {"DM_MDMP", OpSet{Op::dm, Op::pc}},        {"VARLET", OpSet{Op::pc, Op::dpc}},
      {"VARLET_STONE", OpSet{Op::pc, Op::dpc}},
  };
  for (std::size_t n = 1; n <= kOracleBound; ++n) {
    const auto birkhoff = search::enumerate_distributive_lattices(n, ceilings);
    const auto raw = brute_force::distributive_lattices(n);
    out.require(birkhoff.size() == raw.size(), "n=" + std::to_string(n) + " lattice count " +
                                                   std::to_string(birkhoff.size()) + " vs raw " +
                                                   std::to_string(raw.size()));
    for (const auto& lattice : birkhoff) {
      const auto matches = std::count_if(raw.begin(), raw.end(), [&](const FiniteAlgebra& r) {
        return brute_force::order_isomorphic(lattice, r);
      });
      out.require(matches == 1, "n=" + std::to_string(n) + " lattice " + canonical_hash(lattice) +
                                    " matches exactly one raw class");
    }
    for (const auto& lattice : raw) {
      for (const auto& [name, signature] : systems) {
        const auto& system = catalog::get_system(name);
        const auto expected = brute_force::count_models(lattice, signature, system);
        const auto classes = search::enumerate_models(lattice, {n, signature, system, true}, ceilings).size();
        std::size_t labelled = 0;
        search::for_each_model(
            lattice, {n, signature, system, false},
            [&](const FiniteAlgebra&) {
              ++labelled;
              return true;
            },
            ceilings);
        const std::string where = std::string(name) + " on n=" + std::to_string(n) + " lattice " +
                                  format_hasse(lattice);
        out.require(classes == expected.classes, where + ": " + std::to_string(classes) + " classes vs raw " +
                                                     std::to_string(expected.classes));
        out.require(labelled == expected.labelled, where + ": " + std::to_string(labelled) +
                                                       " labelled models vs raw " +
                                                       std::to_string(expected.labelled));
      }
    }
  }
  return out;
}

struct Criterion {
  const char* id;
  const char* title;
  double limit;
  std::function<Outcome(const Options&)> run;
};

std::vector<Criterion> criteria() {
  return {
      {"AC1", "golden operation tables", kFastLimit, [](const Options&) { return golden_tables(); }},
      {"AC2", "strong negation differs from pseudocomplement on the diamond", kFastLimit,
       [](const Options&) { return strong_negation_vs_pseudocomplement(); }},
      {"AC3", "modal algebras vs B1-B10 and derived laws, n<=5", kTheoremLimit,
       [](const Options&) { return negation_characterization(); }},
      {"AC4", "T1, T2 characterize TMAs, n<=5", kTheoremLimit, [](const Options&) { return t_identities(); }},
      {"AC5", "pseudocomplement pairs vs three-valued algebras, n<=5", kTheoremLimit,
       [](const Options&) { return varlet(); }},
      {"AC6", "H1 fails on the 4-chain at a", kFastLimit, [](const Options&) { return example_h1(); }},
      {"AC7", "pc x & dm x satisfies T1, T2 on p-algebras, n<=5", kTheoremLimit,
       [](const Options&) { return p_algebra_negation(); }},
      {"AC8", "finite TMAs: pseudocomplemented, MDMP, T2/T3/T4 products, n<=6", kStructureLimit,
       [](const Options&) { return finite_structure(); }},
      {"AC9", "bounded entailment and independence", kMetaLimit,
       [](const Options& o) { return meta_claims(o); }},
      {"AC10", "oracle cross-check, n<=4", kOracleLimit, [](const Options&) { return oracle_cross_check(); }},
  };
}

std::string seconds_text(double s) {
  std::ostringstream ss;
  ss.setf(std::ios::fixed);
  ss.precision(2);
  ss << s;
  return ss.str();
}

}  // namespace

Options default_options() { return Options{TETRA_GOLDEN_DIR, false, {}}; }

std::vector<CriterionResult> run_all(const Options& options) {
  std::vector<CriterionResult> results;
  for (const auto& c : criteria()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), c.id) == options.only.end()) {
      continue;
    }
    CriterionResult r{c.id, c.title, false, 0, c.limit, {}};
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(options);
    } catch (const std::exception& e) {
      o.passed = false;
      o.details.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.details = std::move(o.details);
    r.passed = o.passed;
    if (r.seconds > c.limit) {
      r.passed = false;
      r.details.push_back("failed: took " + seconds_text(r.seconds) + " s, limit " + seconds_text(c.limit) + " s");
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::string out = r.id + (r.passed ? " PASS " : " FAIL ") + r.title + " [" + seconds_text(r.seconds) +
                    " s / limit " + seconds_text(r.limit_seconds) + " s]\n";
  for (const auto& d : r.details) out += "    " + d + "\n";
  return out;
}

}  // namespace tetra::acceptance
