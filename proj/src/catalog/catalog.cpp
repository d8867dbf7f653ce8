#include "tetra/catalog.hpp"

#include <map>

#include "tetra/error.hpp"

namespace tetra::catalog {

namespace {

using Entry = std::pair<const char*, const char*>;

AxiomSystem make(std::string name, OpSet required, std::initializer_list<Entry> entries) {
  std::vector<Axiom> axioms;
  for (const auto& [label, text] : entries) axioms.push_back({label, parse_sentence(text), text});
  return AxiomSystem(std::move(name), required, std::move(axioms));
}

std::map<std::string, AxiomSystem, std::less<>> build_systems() {
  const OpSet modal{Op::dm, Op::nabla};
  const OpSet negations{Op::sneg, Op::wneg};
  const OpSet pcs{Op::pc, Op::dpc};

  std::map<std::string, AxiomSystem, std::less<>> s;
  auto add = [&](AxiomSystem sys) {
    auto name = sys.name();
    s.emplace(std::move(name), std::move(sys));
  };

  add(make("MOISIL_A", modal,
           {{"A1", "x | 1 = 1"},
            {"A2", "x & (x | y) = x"},
            {"A3", "x & (y | z) = (z & x) | (y & x)"},
            {"A4", "dm dm x = x"},
            {"A5", "dm (x | y) = dm x & dm y"},
            {"A6", "dm x | nabla x = 1"},
            {"A7", "x & dm x = dm x & nabla x"},
            {"A8", "nabla (x & y) = nabla x & nabla y"}}));
  {
    const auto& moisil = s.at("MOISIL_A");
    std::vector<Axiom> tma(moisil.axioms().begin() + 1, moisil.axioms().begin() + 7);
    add(AxiomSystem("TMA", modal, tma));
    std::vector<Axiom> dm(moisil.axioms().begin() + 1, moisil.axioms().begin() + 5);
    add(AxiomSystem("DE_MORGAN", OpSet{Op::dm}, dm));
  }

  add(make("VARLET", pcs,
           {{"V1", "x & pc x = 0"},
            {"V2", "pc (x & y) = pc x & pc y"},
            {"V3", "pc 0 = 1"},
            {"V4", "x | dpc x = 1"},
            {"V5", "dpc (x | y) = dpc x & dpc y"},
            {"V6", "dpc 1 = 0"},
            {"V7", "pc x = pc y, dpc x = dpc y => x = y"}}));
  add(make("VARLET_ID", pcs,
           {{"V1", "x & pc x = 0"},
            {"V2", "pc (x & y) = pc x & pc y"},
            {"V3", "pc 0 = 1"},
            {"V4", "x | dpc x = 1"},
            {"V5", "dpc (x | y) = dpc x & dpc y"},
            {"V6", "dpc 1 = 0"},
            {"V7'", "(x & dpc x) & (y | pc y) = x & dpc x"}}));
  add(make("VARLET_STONE", pcs,
           {{"V1", "x & pc x = 0"},
            {"V2s", "pc (x & y) = pc x | pc y"},
            {"V3", "pc 0 = 1"},
            {"V4", "x | dpc x = 1"},
            {"V5", "dpc (x | y) = dpc x & dpc y"},
            {"V6", "dpc 1 = 0"},
            {"V7", "pc x = pc y, dpc x = dpc y => x = y"}}));
  add(make("VARLET_STONE_ID", pcs,
           {{"V1", "x & pc x = 0"},
            {"V2s", "pc (x & y) = pc x | pc y"},
            {"V3", "pc 0 = 1"},
            {"V4", "x | dpc x = 1"},
            {"V5", "dpc (x | y) = dpc x & dpc y"},
            {"V6", "dpc 1 = 0"},
            {"V7'", "(x & dpc x) & (y | pc y) = x & dpc x"}}));
  add(make("DOUBLE_STONE", pcs,
           {{"S1", "pc x | pc pc x = 1"}, {"S2", "dpc x & dpc dpc x = 0"}}));

  add(make("B_SYS", negations,
           {{"B1", "x & sneg x = 0"},
            {"B2", "x | wneg x = 1"},
            {"B3", "sneg x & wneg sneg x = 0"},
            {"B4", "wneg x | sneg wneg x = 1"},
            {"B5", "wneg (x & y) = wneg x | wneg y"},
            {"B6", "sneg (x | y) = sneg x & sneg y"},
            {"B7", "sneg (x & sneg y) = sneg x | sneg sneg y"},
            {"B8", "wneg (x | wneg y) = wneg x & wneg wneg y"},
            {"B9", "(x | y) & wneg (x | y) <= x | sneg x"},
            {"B10", "x & wneg x & y & wneg y <= wneg (x | y)"}}));
  add(make("B_DERIVED_1", negations,
           {{"B11", "wneg 0 = 1"},
            {"B12", "sneg 1 = 0"},
            {"B13", "sneg x <= wneg x"},
            {"B14", "sneg 0 = 1"},
            {"B15", "wneg 1 = 0"},
            {"B16", "wneg x & wneg wneg x = 0"},
            {"B17", "sneg x | sneg sneg x = 1"},
            {"B18", "sneg sneg x = wneg sneg x"},
            {"B19", "wneg wneg x = sneg wneg x"},
            {"B20", "sneg x & wneg wneg x = 0"},
            {"B21", "x <= sneg sneg x"},
            {"B22", "wneg wneg x <= x"},
            {"B23", "sneg sneg sneg x = sneg x"},
            {"B24", "wneg wneg wneg x = wneg x"},
            {"B25", "sneg wneg x <= x"},
            {"B26", "wneg wneg sneg x = sneg x"},
            {"B27", "wneg wneg wneg sneg x = sneg sneg x"},
            {"B28", "wneg ((x | sneg x) & wneg x) = sneg sneg x"},
            {"B29", "sneg sneg wneg x = wneg x"},
            {"B30", "sneg sneg sneg wneg x = wneg wneg x"},
            {"B31", "sneg ((x & wneg x) | sneg x) = wneg wneg x"},
            {"B32", "wneg sneg sneg x = sneg x"}}));
  add(make("B_DERIVED_2", OpSet{Op::dm, Op::sneg, Op::wneg},
           {{"B33a", "x <= y => sneg y <= sneg x"},
            {"B33b", "x <= y => wneg y <= wneg x"},
            {"B34", "dm wneg x = wneg wneg x"},
            {"B35", "dm (sneg x & wneg y) = sneg sneg x | wneg wneg y"},
            {"B36", "wneg wneg (y | sneg sneg x) = wneg wneg y | sneg sneg x"},
            {"B37", "wneg wneg (x | y) = sneg sneg x | wneg wneg y"},
            {"B38", "x <= y => dm y <= dm x"},
            {"B39", "sneg x & wneg y <= wneg (x | y)"},
            {"B40", "sneg x & dm y <= (x | y) | sneg (x | y)"},
            {"B41", "x & wneg x & dm y <= wneg (x | y)"},
            {"B42", "sneg x & dm y <= wneg (x | y)"}}));
  add(make("D_FORMS", OpSet{Op::dm, Op::nabla, Op::sneg, Op::wneg},
           {{"D1", "nabla x = sneg sneg x"},
            {"D2", "dm x = (x | sneg x) & wneg x"},
            {"D3", "dm x = (x & wneg x) | sneg x"}}));

  add(make("T_SYS", OpSet{Op::dm, Op::sneg},
           {{"T1", "x & sneg x = 0"}, {"T2", "x | sneg x = x | dm x"}}));
  add(make("MDMP", OpSet{Op::dm, Op::pc},
           {{"P1", "x & pc x = 0"},
            {"P2", "x & y = 0 => y <= pc x"},
            {"H1", "x | dm x <= x | pc x"}}));

  add(AxiomSystem::combine("DM_T", {s.at("DE_MORGAN"), s.at("T_SYS")}));
  add(AxiomSystem::combine("DM_MDMP", {s.at("DE_MORGAN"), s.at("MDMP")}));
  return s;
}

const std::map<std::string, AxiomSystem, std::less<>>& systems() {
  static const auto table = build_systems();
  return table;
}

FiniteAlgebra diamond_lattice() {
  // 0 < a, b < 1 with a, b incomparable.
  return FiniteAlgebra::from_rows({{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}},
                                  {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}}, 0, 3);
}

std::map<std::string, NamedModel, std::less<>> build_models() {
  std::map<std::string, NamedModel, std::less<>> m;
  auto add = [&](std::string name, FiniteAlgebra a, std::string provenance) {
    m.emplace(name, NamedModel{name, std::move(a), std::move(provenance)});
  };

  const FiniteAlgebra diamond = diamond_lattice().with_names({"0", "a", "b", "1"});
  add("M4_DIAMOND",
      diamond.with_op(Op::dm, {3, 1, 2, 0})
          .with_op(Op::nabla, {0, 3, 3, 3})
          .with_op(Op::sneg, {3, 0, 0, 0})
          .with_op(Op::pc, {3, 2, 1, 0}),
      "four-element diamond 0 < a,b < 1: dm fixes a and b, nabla sends every nonzero element "
      "to 1, sneg = dm nabla, pc is the lattice pseudocomplement (differs from sneg at a, b)");

  const FiniteAlgebra chain4 = chain_lattice(4).with_names({"0", "a", "b", "1"});
  add("C4_CHAIN", chain4.with_op(Op::dm, {3, 2, 1, 0}).with_op(Op::pc, {3, 0, 0, 0}),
      "four-element chain 0 < a < b < 1: dm swaps a and b, pc sends every nonzero element to 0; "
      "a De Morgan p-algebra that is not modal");

  add("T2", chain_lattice(2).with_names({"0", "1"}).with_op(Op::dm, {1, 0}).with_op(Op::nabla, {0, 1}),
      "two-element Boolean algebra: dm is complement, nabla is the identity");

  add("T3",
      chain_lattice(3).with_names({"0", "a", "1"}).with_op(Op::dm, {2, 1, 0}).with_op(Op::nabla, {0, 2, 2}),
      "three-element chain 0 < a < 1: tables forced by the axioms (dm a = a is the only "
      "order-reversing involution, then dm a | nabla a = 1 forces nabla a = 1)");
  return m;
}

const std::map<std::string, NamedModel, std::less<>>& models() {
  static const auto table = build_models();
  return table;
}

}  // namespace

const AxiomSystem& get_system(std::string_view name) {
  auto it = systems().find(name);
  if (it == systems().end()) throw CatalogError(CatalogError::Kind::UnknownSystem, std::string(name));
  return it->second;
}

bool has_system(std::string_view name) { return systems().find(name) != systems().end(); }

std::vector<std::string> system_names() {
  std::vector<std::string> out;
  for (const auto& [name, sys] : systems()) out.push_back(name);
  return out;
}

const NamedModel& get_model(std::string_view name) {
  if (name == "T4") name = "M4_DIAMOND";
  auto it = models().find(name);
  if (it == models().end()) throw CatalogError(CatalogError::Kind::UnknownModel, std::string(name));
  return it->second;
}

bool has_model(std::string_view name) {
  return name == "T4" || models().find(name) != models().end();
}

std::vector<std::string> model_names() {
  std::vector<std::string> out;
  for (const auto& [name, model] : models()) out.push_back(name);
  return out;
}

std::string format_system(const AxiomSystem& system) {
  std::string out;
  for (const auto& ax : system.axioms()) out += ax.label + ": " + to_string(ax.sentence) + "\n";
  return out;
}

}  // namespace tetra::catalog
