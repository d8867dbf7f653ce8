#include <doctest.h>

#include "tetra/catalog.hpp"

using namespace tetra;

namespace {

Table to_table(std::span<const Element> s) { return Table(s.begin(), s.end()); }

}  // namespace

TEST_CASE("system sizes and labels") {
  CHECK(catalog::get_system("TMA").labels() == std::vector<std::string>{"A2", "A3", "A4", "A5", "A6", "A7"});
  CHECK(catalog::get_system("MOISIL_A").size() == 8);
  CHECK(catalog::get_system("B_SYS").size() == 10);
  CHECK(catalog::get_system("B_DERIVED_1").size() == 22);
  CHECK(catalog::get_system("B_DERIVED_2").size() == 11);
  CHECK(catalog::get_system("D_FORMS").size() == 3);
  CHECK(catalog::get_system("T_SYS").labels() == std::vector<std::string>{"T1", "T2"});
  CHECK(catalog::get_system("VARLET").size() == 7);
  CHECK(catalog::get_system("VARLET_ID").find("V7'") != nullptr);
  CHECK(catalog::get_system("MDMP").find("H1") != nullptr);
}

TEST_CASE("sentences are stored as written") {
  const auto& moisil = catalog::get_system("MOISIL_A");
  CHECK(moisil.find("A3")->source == "x & (y | z) = (z & x) | (y & x)");
  CHECK(catalog::get_system("B_SYS").find("B9")->sentence.kind() == Sentence::Kind::inequality);
  CHECK(catalog::get_system("MDMP").find("H1")->sentence.kind() == Sentence::Kind::inequality);
  CHECK(catalog::get_system("B_DERIVED_2").find("B38")->sentence.kind() == Sentence::Kind::quasi_identity);
  CHECK(catalog::get_system("VARLET").find("V2")->source == "pc (x & y) = pc x & pc y");
}

TEST_CASE("unknown names") {
  CHECK_THROWS_AS(catalog::get_system("nonsense"), CatalogError);
  CHECK_THROWS_AS(catalog::get_model("nonsense"), CatalogError);
  CHECK_FALSE(catalog::has_system("nonsense"));
  CHECK(catalog::has_model("T4"));
}

TEST_CASE("diamond model tables") {
  const auto& m = catalog::get_model("M4_DIAMOND").algebra;
  CHECK(format_table(m, m.op(Op::dm)) == "[1, a, b, 0]");
  CHECK(format_table(m, m.op(Op::nabla)) == "[0, 1, 1, 1]");
  CHECK(format_table(m, m.op(Op::sneg)) == "[1, 0, 0, 0]");
  CHECK(format_table(m, m.op(Op::pc)) == "[1, b, a, 0]");
  CHECK(catalog::get_model("T4").algebra.same_tables(m));
}

TEST_CASE("chain model tables") {
  const auto& c = catalog::get_model("C4_CHAIN").algebra;
  CHECK(format_table(c, c.op(Op::dm)) == "[1, b, a, 0]");
  CHECK(format_table(c, c.op(Op::pc)) == "[1, 0, 0, 0]");
  const auto& t3 = catalog::get_model("T3").algebra;
  CHECK(t3.apply(Op::nabla, 1) == 2);
  CHECK(t3.apply(Op::dm, 1) == 1);
  const auto& t2 = catalog::get_model("T2").algebra;
  CHECK(to_table(t2.op(Op::dm)) == Table{1, 0});
  CHECK(to_table(t2.op(Op::nabla)) == Table{0, 1});
}

TEST_CASE("the diamond is a TMA but not three-valued") {
  const auto& m = catalog::get_model("M4_DIAMOND").algebra;
  CHECK(check_system(m, catalog::get_system("TMA")).all_hold());
  const auto report = check_system(m, catalog::get_system("MOISIL_A"));
  REQUIRE(report.first_failure() != nullptr);
  CHECK(report.first_failure()->label == "A8");
  CHECK(format_valuation(m, report.first_failure()->verdict.counterexample) == "x=a,y=b");
}

TEST_CASE("stored strong negation matches dm nabla and differs from pc at a, b") {
  const auto& m = catalog::get_model("M4_DIAMOND").algebra;
  const auto derived = derive_strong_weak(m.without_op(Op::sneg));
  CHECK(std::ranges::equal(derived.op(Op::sneg), m.op(Op::sneg)));
  std::vector<Element> differ;
  for (Element x = 0; x < 4; ++x) {
    if (m.apply(Op::sneg, x) != m.apply(Op::pc, x)) differ.push_back(x);
  }
  CHECK(differ == std::vector<Element>{1, 2});
}

TEST_CASE("the chain fails the p-algebra inequality at a") {
  const auto& c = catalog::get_model("C4_CHAIN").algebra;
  const auto report = check_system(c, catalog::get_system("DM_MDMP"));
  REQUIRE(report.first_failure() != nullptr);
  CHECK(report.first_failure()->label == "H1");
  CHECK(format_valuation(c, report.first_failure()->verdict.counterexample) == "x=a");
}

TEST_CASE("T2 and T3 are three-valued algebras") {
  for (const char* name : {"T2", "T3"}) {
    CHECK_MESSAGE(check_system(catalog::get_model(name).algebra, catalog::get_system("MOISIL_A")).all_hold(), name);
  }
}

TEST_CASE("format_system lists labels") {
  const auto text = catalog::format_system(catalog::get_system("T_SYS"));
  CHECK(text == "T1: x & sneg x = 0\nT2: x | sneg x = x | dm x\n");
}
