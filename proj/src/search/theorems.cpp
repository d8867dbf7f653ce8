#include <algorithm>
#include <set>

#include "tetra/catalog.hpp"
#include "tetra/search.hpp"

namespace tetra::search {

namespace {

constexpr std::size_t kMaxSamples = 5;

using Key = std::vector<Element>;

Key table_key(const FiniteAlgebra& a, std::initializer_list<Op> ops) {
  Key key;
  for (Op op : ops) {
    auto t = a.op(op);
    key.insert(key.end(), t.begin(), t.end());
  }
  return key;
}

bool same_op(const FiniteAlgebra& a, Op x, const FiniteAlgebra& b, Op y) {
  return std::ranges::equal(a.op(x), b.op(y));
}

// Visits every model of `system` on each lattice of size 1..max_n.
void each_model(const AxiomSystem& system, OpSet signature, std::size_t max_n, bool iso_reduce,
                const Ceilings& ceilings,
                const std::function<void(std::size_t lattice_index, const FiniteAlgebra&)>& visit) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto lattices = enumerate_distributive_lattices(n, ceilings);
    for (std::size_t i = 0; i < lattices.size(); ++i) {
      EnumerationConfig config{max_n, signature, system, iso_reduce};
      for_each_model(
          lattices[i], config,
          [&](const FiniteAlgebra& model) {
            visit(i, model);
            return true;
          },
          ceilings);
    }
  }
}

std::string describe(const FiniteAlgebra& a, const std::string& what) {
  return "size " + std::to_string(a.size()) + " model " + canonical_hash(a) + ": " + what;
}

// Records one line per label of `system`, failing where the sentence fails on `a`.
void check_each(TheoremReport& report, const std::string& prefix, const FiniteAlgebra& a,
                const AxiomSystem& system) {
  for (const auto& ax : system.axioms()) {
    CheckLine& line = report.line(prefix + ax.label);
    ++line.models;
    const Verdict v = holds(a, ax.sentence);
    if (v.fails()) line.record_failure(describe(a, "fails at " + format_valuation_indices(v.counterexample)));
  }
}

void check_all(CheckLine& line, const FiniteAlgebra& a, const AxiomSystem& system) {
  ++line.models;
  const auto report = check_system(a, system, false);
  if (const auto* f = report.first_failure()) {
    line.record_failure(describe(a, f->label + " fails at " + format_valuation_indices(f->verdict.counterexample)));
  }
}

void check_true(CheckLine& line, const FiniteAlgebra& a, bool ok, const std::string& what) {
  ++line.models;
  if (!ok) line.record_failure(describe(a, what));
}

std::string count_note(std::size_t n, const std::string& what, std::size_t count) {
  return "n=" + std::to_string(n) + ": " + std::to_string(count) + " " + what;
}

// Per-size counts of iso classes, appended as notes.
class Counter {
 public:
  explicit Counter(std::string what) : what_(std::move(what)) {}
  void add(std::size_t n) {
    if (counts_.size() < n + 1) counts_.resize(n + 1, 0);
    ++counts_[n];
  }
  void write(TheoremReport& report, std::size_t max_n) const {
    for (std::size_t n = 1; n <= max_n; ++n) {
      report.notes.push_back(count_note(n, what_, n < counts_.size() ? counts_[n] : 0));
    }
  }

 private:
  std::string what_;
  std::vector<std::size_t> counts_;
};

// Labelled model sets (no iso reduction) compared lattice by lattice.
void compare_labelled(CheckLine& line, const std::string& left_name,
                      const std::function<std::set<Key>(const FiniteAlgebra&)>& left,
                      const std::string& right_name,
                      const std::function<std::set<Key>(const FiniteAlgebra&)>& right, std::size_t max_n,
                      const Ceilings& ceilings) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto lattices = enumerate_distributive_lattices(n, ceilings);
    for (std::size_t i = 0; i < lattices.size(); ++i) {
      ++line.models;
      const auto l = left(lattices[i]);
      const auto r = right(lattices[i]);
      if (l != r) {
        line.record_failure("lattice " + canonical_hash(lattices[i]) + " of size " + std::to_string(n) + ": " +
                            std::to_string(l.size()) + " " + left_name + " vs " + std::to_string(r.size()) +
                            " " + right_name);
      }
    }
  }
}

std::set<Key> labelled_keys(const FiniteAlgebra& lattice, const AxiomSystem& system, OpSet signature,
                            std::size_t max_n, const Ceilings& ceilings,
                            const std::function<Key(const FiniteAlgebra&)>& key) {
  std::set<Key> out;
  EnumerationConfig config{max_n, signature, system, false};
  for_each_model(
      lattice, config,
      [&](const FiniteAlgebra& model) {
        out.insert(key(model));
        return true;
      },
      ceilings);
  return out;
}

Table compose(const FiniteAlgebra& a, Op outer, Op inner) {
  Table t(a.size());
  for (Element x = 0; x < a.size(); ++x) t[x] = a.apply(outer, a.apply(inner, x));
  return t;
}

}  // namespace

void CheckLine::record_failure(std::string sample) {
  ++failures;
  if (samples.size() < kMaxSamples) samples.push_back(std::move(sample));
}

bool TheoremReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.passed(); });
}

CheckLine& TheoremReport::line(const std::string& description) {
  for (auto& c : checks) {
    if (c.description == description) return c;
  }
  checks.push_back(CheckLine{description, 0, 0, {}});
  return checks.back();
}

const CheckLine* TheoremReport::find(const std::string& description) const {
  for (const auto& c : checks) {
    if (c.description == description) return &c;
  }
  return nullptr;
}

std::string format_theorem_report(const TheoremReport& report) {
  std::string out = "REPORT " + report.name + " up to n=" + std::to_string(report.bound) + "\n";
  for (const auto& c : report.checks) {
    out += (c.passed() ? "PASS " : "FAIL ") + c.description + " (" + std::to_string(c.models) + " checked";
    if (!c.passed()) out += ", " + std::to_string(c.failures) + " failed";
    out += ")\n";
    for (const auto& s : c.samples) out += "  " + s + "\n";
  }
  for (const auto& n : report.notes) out += "NOTE " + n + "\n";
  out += report.passed() ? "RESULT PASS\n" : "RESULT FAIL\n";
  return out;
}

TheoremReport check_negation_characterization(std::size_t max_n, const Ceilings& ceilings) {
  TheoremReport report{"negation-characterization", max_n, {}, {}};
  const auto& tma = catalog::get_system("TMA");
  const auto& bsys = catalog::get_system("B_SYS");
  const OpSet modal{Op::dm, Op::nabla};
  const OpSet negations{Op::sneg, Op::wneg};

  Counter tma_count("TMA models"), b_count("B1-B10 models");
  each_model(tma, modal, max_n, true, ceilings, [&](std::size_t, const FiniteAlgebra& a) {
    tma_count.add(a.size());
    const FiniteAlgebra full = derive_strong_weak(a);
    check_all(report.line("TMA with sneg := dm nabla, wneg := nabla dm satisfies B1-B10"), full, bsys);
    CheckLine& back = report.line("TMA: nabla, dm recovered from sneg, wneg by D1, D2");
    try {
      const FiniteAlgebra again = derive_modal(full.reduct(negations));
      check_true(back, a, same_op(again, Op::dm, a, Op::dm) && same_op(again, Op::nabla, a, Op::nabla),
                 "recovered tables differ");
    } catch (const AlgebraError& e) {
      check_true(back, a, false, e.what());
    }
  });
  each_model(bsys, negations, max_n, true, ceilings, [&](std::size_t, const FiniteAlgebra& a) {
    b_count.add(a.size());
    CheckLine& forward = report.line("B1-B10 with nabla := sneg sneg, dm := (x | sneg x) & wneg x satisfies A2-A7");
    CheckLine& back = report.line("B1-B10: sneg = dm nabla and wneg = nabla dm after derivation");
    try {
      const FiniteAlgebra full = derive_modal(a);
      check_all(forward, full, tma);
      const FiniteAlgebra again = derive_strong_weak(full.reduct(modal));
      check_true(back, a, same_op(again, Op::sneg, a, Op::sneg) && same_op(again, Op::wneg, a, Op::wneg),
                 "round trip differs");
    } catch (const AlgebraError& e) {
      check_true(forward, a, false, e.what());
      check_true(back, a, false, e.what());
    }
  });
  tma_count.write(report, max_n);
  b_count.write(report, max_n);
  return report;
}

TheoremReport check_derived_negation_laws(std::size_t max_n, const Ceilings& ceilings) {
  TheoremReport report{"derived-negation-laws", max_n, {}, {}};
  const auto& bsys = catalog::get_system("B_SYS");
  const auto& moisil = catalog::get_system("MOISIL_A");
  std::vector<Axiom> laws;
  for (const char* label : {"A4", "A5", "A6", "A7"}) laws.push_back(*moisil.find(label));
  const AxiomSystem modal_laws("MODAL_LAWS", OpSet{Op::dm, Op::nabla}, laws);

  Counter count("B1-B10 models");
  each_model(bsys, OpSet{Op::sneg, Op::wneg}, max_n, true, ceilings, [&](std::size_t, const FiniteAlgebra& a) {
    count.add(a.size());
    FiniteAlgebra full = a;
    try {
      full = derive_modal(a);
    } catch (const AlgebraError& e) {
      check_true(report.line("D1, D2 derivation"), a, false, e.what());
      return;
    }
    check_each(report, "", full, catalog::get_system("B_DERIVED_1"));
    check_each(report, "", full, catalog::get_system("B_DERIVED_2"));
    check_each(report, "", full, catalog::get_system("D_FORMS"));
    check_each(report, "", full, modal_laws);
  });
  count.write(report, max_n);
  return report;
}

TheoremReport check_t_identity_characterization(std::size_t max_n, const Ceilings& ceilings) {
  TheoremReport report{"t-identity-characterization", max_n, {}, {}};
  const auto& dm_t = catalog::get_system("DM_T");
  const auto& tma = catalog::get_system("TMA");
  const auto& t_sys = catalog::get_system("T_SYS");
  const OpSet dm_sneg{Op::dm, Op::sneg};
  const OpSet modal{Op::dm, Op::nabla};

  Counter count("De Morgan models of T1, T2");
  each_model(dm_t, dm_sneg, max_n, true, ceilings, [&](std::size_t, const FiniteAlgebra& a) {
    count.add(a.size());
    const FiniteAlgebra full = a.with_op(Op::nabla, compose(a, Op::dm, Op::sneg));
    check_all(report.line("De Morgan + T1, T2 with nabla := dm sneg satisfies A2-A7"), full, tma);
    check_true(report.line("De Morgan + T1, T2: sneg = dm nabla"), a,
               std::ranges::equal(compose(full, Op::dm, Op::nabla), a.op(Op::sneg)), "sneg differs from dm nabla");
  });
  each_model(tma, modal, max_n, true, ceilings, [&](std::size_t, const FiniteAlgebra& a) {
    const FiniteAlgebra full = a.with_op(Op::sneg, compose(a, Op::dm, Op::nabla));
    check_all(report.line("TMA with sneg := dm nabla satisfies T1, T2"), full, t_sys);
  });
  compare_labelled(
      report.line("labelled (dm, nabla) sets coincide per lattice"), "from T1, T2",
      [&](const FiniteAlgebra& lattice) {
        return labelled_keys(lattice, dm_t, dm_sneg, max_n, ceilings, [](const FiniteAlgebra& m) {
          return table_key(m.with_op(Op::nabla, compose(m, Op::dm, Op::sneg)), {Op::dm, Op::nabla});
        });
      },
      "TMA",
      [&](const FiniteAlgebra& lattice) {
        return labelled_keys(lattice, tma, modal, max_n, ceilings,
                             [](const FiniteAlgebra& m) { return table_key(m, {Op::dm, Op::nabla}); });
      },
      max_n, ceilings);
  count.write(report, max_n);
  return report;
}

TheoremReport check_p_algebra_negation(std::size_t max_n, const Ceilings& ceilings) {
  TheoremReport report{"p-algebra-negation", max_n, {}, {}};
  const auto& dm_mdmp = catalog::get_system("DM_MDMP");
  const auto& t_sys = catalog::get_system("T_SYS");

  Counter count("modal De Morgan p-algebras");
  each_model(dm_mdmp, OpSet{Op::dm, Op::pc}, max_n, true, ceilings, [&](std::size_t, const FiniteAlgebra& a) {
    count.add(a.size());
    Table sneg(a.size());
    for (Element x = 0; x < a.size(); ++x) sneg[x] = a.meet(a.apply(Op::pc, x), a.apply(Op::dm, x));
    check_all(report.line("sneg := pc x & dm x satisfies T1, T2"), a.with_op(Op::sneg, sneg), t_sys);
    const auto lattice_pc = pseudocomplement(a);
    check_true(report.line("pc is the lattice pseudocomplement"), a,
               std::holds_alternative<Table>(lattice_pc) &&
                   std::ranges::equal(std::get<Table>(lattice_pc), a.op(Op::pc)),
               "pc differs from the pseudocomplement");
  });
  count.write(report, max_n);
  return report;
}

TheoremReport check_varlet_correspondence(const AxiomSystem& determination, const AxiomSystem& identity_form,
                                          std::size_t max_n, const Ceilings& ceilings) {
  TheoremReport report{"varlet-correspondence " + determination.name() + " / " + identity_form.name(), max_n, {}, {}};
  const auto& moisil = catalog::get_system("MOISIL_A");
  const auto& stone = catalog::get_system("DOUBLE_STONE");
  const OpSet pcs{Op::pc, Op::dpc};

  Counter count(determination.name() + " models");
  each_model(determination, pcs, max_n, true, ceilings, [&](std::size_t, const FiniteAlgebra& a) {
    count.add(a.size());
    Table dm(a.size());
    for (Element x = 0; x < a.size(); ++x) {
      dm[x] = a.meet(a.join(x, a.apply(Op::pc, x)), a.apply(Op::dpc, x));
    }
    const FiniteAlgebra full = a.with_op(Op::dm, dm).with_op(Op::nabla, compose(a, Op::pc, Op::pc));
    check_all(report.line("dm := (x | pc x) & dpc x, nabla := pc pc x satisfies A1-A8"), full, moisil);
    check_true(report.line("pc = dm nabla"), a, std::ranges::equal(compose(full, Op::dm, Op::nabla), a.op(Op::pc)),
               "pc differs from dm nabla");
    check_true(report.line("dpc = nabla dm"), a,
               std::ranges::equal(compose(full, Op::nabla, Op::dm), a.op(Op::dpc)), "dpc differs from nabla dm");
    check_all(report.line("double Stone laws"), a, stone);
  });
  compare_labelled(
      report.line("labelled (pc, dpc) sets coincide per lattice"), determination.name(),
      [&](const FiniteAlgebra& lattice) {
        return labelled_keys(lattice, determination, pcs, max_n, ceilings,
                             [](const FiniteAlgebra& m) { return table_key(m, {Op::pc, Op::dpc}); });
      },
      identity_form.name(),
      [&](const FiniteAlgebra& lattice) {
        return labelled_keys(lattice, identity_form, pcs, max_n, ceilings,
                             [](const FiniteAlgebra& m) { return table_key(m, {Op::pc, Op::dpc}); });
      },
      max_n, ceilings);
  count.write(report, max_n);
  return report;
}

}  // namespace tetra::search
