#include <doctest.h>

#include <random>

#include "tetra/catalog.hpp"
#include "tetra/eval.hpp"
#include "tetra/program.hpp"
#include "tetra/search.hpp"

using namespace tetra;

namespace {

const FiniteAlgebra& diamond() { return catalog::get_model("M4_DIAMOND").algebra; }

std::size_t syntax_position(std::string_view text) {
  try {
    parse_sentence(text);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  FAIL("parsed: " << text);
  return 0;
}

}  // namespace

TEST_CASE("precedence: meet binds tighter than join") {
  const Term t = parse_term("x | y & z");
  REQUIRE(t.kind() == Term::Kind::join);
  CHECK(t.right().kind() == Term::Kind::meet);
  CHECK(to_string(t) == "x | y & z");
  CHECK(to_string(parse_term("(x | y) & z")) == "(x | y) & z");
}

TEST_CASE("unary symbols apply to atoms") {
  const Term t = parse_term("dm x & y");
  REQUIRE(t.kind() == Term::Kind::meet);
  CHECK(t.left().kind() == Term::Kind::unary);
  CHECK(t.left().op() == Op::dm);
  CHECK(to_string(parse_term("dm (x | y)")) == "dm (x | y)");
  CHECK(to_string(parse_term("nabla dm sneg x")) == "nabla dm sneg x");
}

TEST_CASE("sentence kinds") {
  CHECK(parse_sentence("x | 1 = 1").kind() == Sentence::Kind::identity);
  CHECK(parse_sentence("x <= x | y").kind() == Sentence::Kind::inequality);
  const auto q = parse_sentence("pc x = pc y, dpc x = dpc y => x = y");
  CHECK(q.kind() == Sentence::Kind::quasi_identity);
  CHECK(q.premises().size() == 2);
  CHECK(q.variables() == std::vector<std::string>{"x", "y"});
  CHECK(q.symbols() == (OpSet{Op::pc, Op::dpc}));
  CHECK(to_string(q) == "pc x = pc y, dpc x = dpc y => x = y");
}

TEST_CASE("structural equality ignores source parentheses") {
  CHECK(parse_term("((x))") == parse_term("x"));
  CHECK(parse_term("x & (y & z)") != parse_term("(x & y) & z"));
}

TEST_CASE("syntax errors carry positions") {
  CHECK(syntax_position("x | ") == 4);
  CHECK(syntax_position("x = ") == 4);
  CHECK(syntax_position("foo x = x") == 4);
  CHECK(syntax_position("x & y") == 5);
  CHECK(syntax_position("(x = x") == 3);
  CHECK(syntax_position("x = y, => x = y") == 7);
  CHECK(syntax_position("x = x $") == 6);
}

TEST_CASE("every catalog sentence round-trips through the printer") {
  for (const auto& name : catalog::system_names()) {
    for (const auto& ax : catalog::get_system(name).axioms()) {
      const auto printed = to_string(ax.sentence);
      CHECK_MESSAGE(parse_sentence(printed) == ax.sentence, name << " " << ax.label << ": " << printed);
      CHECK(parse_sentence(ax.source) == ax.sentence);
    }
  }
}

TEST_CASE("tree evaluation on the diamond") {
  const auto& d = diamond();
  const std::map<std::string, Element> v{{"x", 1}, {"y", 2}};
  CHECK(eval(parse_term("x & y"), d, v) == 0);
  CHECK(eval(parse_term("x | y"), d, v) == 3);
  CHECK(eval(parse_term("nabla (x & y)"), d, v) == 0);
  CHECK(eval(parse_term("nabla x & nabla y"), d, v) == 3);
  CHECK(eval(parse_term("pc x"), d, v) == 2);
  CHECK(eval(parse_term("sneg x"), d, v) == 0);
  CHECK_THROWS_AS(eval(parse_term("z"), d, v), EvalError);
  CHECK_THROWS_AS(eval(parse_term("dpc x"), d, v), EvalError);
}

TEST_CASE("holds reports the first counterexample in lexicographic order") {
  const auto& moisil = catalog::get_system("MOISIL_A");
  const auto v = holds(diamond(), moisil.find("A8")->sentence);
  REQUIRE(v.fails());
  CHECK(v.counterexample == Valuation{{"x", 1}, {"y", 2}});
  CHECK(format_valuation(diamond(), v.counterexample) == "x=a,y=b");
  CHECK(holds(diamond(), parse_sentence("x = x")).holds());
  CHECK(holds(diamond(), parse_sentence("0 = 0")).holds());
  CHECK(holds(diamond(), parse_sentence("0 = 1")).fails());
}

TEST_CASE("inequality agrees with the lattice order") {
  const auto& d = diamond();
  const Sentence s = parse_sentence("x <= y");
  for (Element x = 0; x < 4; ++x) {
    for (Element y = 0; y < 4; ++y) {
      const auto single = d.reduct({}).with_op(Op::dm, {x, x, x, x}).with_op(Op::nabla, {y, y, y, y});
      CHECK(holds(single, parse_sentence("dm x <= nabla x")).holds() == d.leq(x, y));
    }
  }
  CHECK(holds(d, s).fails());
  CHECK(holds(d, parse_sentence("x & y <= x")).holds());
}

TEST_CASE("quasi-identities only test valuations meeting the premises") {
  const auto& c = catalog::get_model("C4_CHAIN").algebra;
  CHECK(holds(c, parse_sentence("x & y = 0 => y <= pc x")).holds());
  CHECK(holds(c, parse_sentence("x = 0 => x = 1")).fails());
  CHECK(holds(c, parse_sentence("x = 0, x = 1 => y = 0")).holds());
}

TEST_CASE("check_system marks later entries skipped unless full") {
  const auto& moisil = catalog::get_system("MOISIL_A");
  const auto& c = catalog::get_model("C4_CHAIN").algebra.reduct(OpSet{Op::dm}).with_op(Op::nabla, {0, 3, 3, 3});
  const auto quick = check_system(c, moisil, false);
  const auto full = check_system(c, moisil, true);
  REQUIRE(quick.first_failure() != nullptr);
  const auto first = quick.first_failure()->label;
  bool after = false;
  for (const auto& e : quick.entries) {
    if (after) CHECK(e.verdict.status == Verdict::Status::skipped);
    after = after || e.label == first;
  }
  for (const auto& e : full.entries) CHECK(e.verdict.status != Verdict::Status::skipped);
  const auto text = format_report(c, full);
  CHECK(text.find("VERDICT A1 HOLDS") != std::string::npos);
  CHECK(text.find("VERDICT " + first + " FAILS") != std::string::npos);
}

TEST_CASE("axiom systems") {
  const auto& moisil = catalog::get_system("MOISIL_A");
  const auto rest = moisil.without("A8");
  CHECK(rest.size() == 7);
  CHECK(rest.name() == "MOISIL_A-A8");
  CHECK(rest.find("A8") == nullptr);
  CHECK_THROWS_AS(AxiomSystem("X", OpSet{}, {{"L", parse_sentence("dm x = x"), ""}}), std::invalid_argument);
  const Axiom twice{"L", parse_sentence("x = x"), ""};
  CHECK_THROWS_AS(AxiomSystem("X", OpSet{}, {twice, twice}), std::invalid_argument);
  const auto both = AxiomSystem::combine("BOTH", {catalog::get_system("DE_MORGAN"), catalog::get_system("T_SYS")});
  CHECK(both.size() == 6);
  CHECK(both.required_symbols() == (OpSet{Op::dm, Op::sneg}));
}

TEST_CASE("compiled sentences agree with tree evaluation") {
  std::mt19937 rng(7);
  const auto& bsys = catalog::get_system("B_DERIVED_2");
  for (const auto& lattice : search::enumerate_distributive_lattices(4)) {
    for (int round = 0; round < 30; ++round) {
      std::uniform_int_distribution<int> pick(0, 3);
      FiniteAlgebra a = lattice;
      for (Op op : {Op::dm, Op::sneg, Op::wneg}) {
        Table t(4);
        for (auto& e : t) e = static_cast<Element>(pick(rng));
        a = a.with_op(op, t);
      }
      for (const auto& ax : bsys.axioms()) {
        const CompiledSentence c(ax.sentence);
        const auto violation = c.find_violation(a.view());
        const auto verdict = holds(a, ax.sentence);
        REQUIRE(violation.has_value() == verdict.fails());
        if (violation) {
          for (std::size_t i = 0; i < violation->size(); ++i) CHECK((*violation)[i] == verdict.counterexample[i].second);
        }
      }
    }
  }
}

TEST_CASE("partial tables give unknown until decided") {
  const CompiledSentence s(parse_sentence("dm dm x = x"));
  Table dm(2, kUnset);
  AlgebraView view = chain_lattice(2).view();
  view.unary[index_of(Op::dm)] = dm.data();
  const Element zero = 0, one = 1;
  CHECK(s.evaluate(view, &zero) == CompiledSentence::Outcome::unknown);
  dm[0] = 1;
  CHECK(s.evaluate(view, &zero) == CompiledSentence::Outcome::unknown);
  dm[1] = 1;
  CHECK(s.evaluate(view, &zero) == CompiledSentence::Outcome::violated);
  CHECK(s.evaluate(view, &one) == CompiledSentence::Outcome::satisfied);

  const CompiledSentence absorbing(parse_sentence("x & dm x = 0"));
  dm.assign(2, kUnset);
  CHECK(absorbing.evaluate(view, &zero) == CompiledSentence::Outcome::satisfied);
}
