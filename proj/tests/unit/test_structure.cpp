#include <doctest.h>

#include "tetra/catalog.hpp"
#include "tetra/structure.hpp"

using namespace tetra;
using namespace tetra::structure;

namespace {

const OpSet kModal{Op::dm, Op::nabla};

const FiniteAlgebra& model(const char* name) { return catalog::get_model(name).algebra; }

void check_reproduces(const FiniteAlgebra& a, const Decomposition& d) {
  CHECK(d.size() == a.size());
  const auto rebuilt = relabel(tma_product(d.t2, d.t3, d.t4), d.iso);
  CHECK(rebuilt.same_tables(a.reduct(kModal).with_names({})));
}

}  // namespace

TEST_CASE("building blocks") {
  CHECK(t2_block().size() == 2);
  CHECK(t3_block().size() == 3);
  CHECK(t4_block().size() == 4);
  CHECK(t4_block().signature() == kModal);
  CHECK(tma_product(0, 0, 0).size() == 1);
  CHECK(tma_product(1, 1, 1).size() == 24);
}

TEST_CASE("decompositions of small TMAs") {
  const auto m4 = decompose_tma(model("M4_DIAMOND"));
  CHECK(m4 == Decomposition{0, 0, 1, m4.iso});
  check_reproduces(model("M4_DIAMOND"), m4);

  const auto boolean = direct_product(model("T2"), model("T2"));
  const auto b = decompose_tma(boolean);
  CHECK((b.t2 == 2 && b.t3 == 0 && b.t4 == 0));
  check_reproduces(boolean, b);

  const auto six = direct_product(model("T3"), model("T2"));
  const auto s = decompose_tma(six);
  CHECK((s.t2 == 1 && s.t3 == 1 && s.t4 == 0));
  check_reproduces(six, s);

  const auto one = decompose_tma(trivial_algebra(kModal));
  CHECK((one.t2 == 0 && one.t3 == 0 && one.t4 == 0));

  CHECK(format_decomposition(m4) == "FACTORS T2^0 T3^0 T4^1\nISO 0 1 2 3\n");
}

TEST_CASE("factor multisets are unique on products up to twelve elements") {
  for (std::size_t i = 0; i <= 2; ++i) {
    for (std::size_t j = 0; j <= 1; ++j) {
      for (std::size_t k = 0; k <= 1; ++k) {
        const auto p = tma_product(i, j, k);
        if (p.size() > 12) continue;
        const auto all = all_decompositions(p);
        REQUIRE(all.size() == 1);
        CHECK((all.front().t2 == i && all.front().t3 == j && all.front().t4 == k));
        check_reproduces(p, all.front());
      }
    }
  }
}

TEST_CASE("decomposition rejects non-TMAs") {
  CHECK_THROWS_AS(decompose_tma(model("C4_CHAIN")), StructureError);
  const auto broken = model("M4_DIAMOND").with_op(Op::nabla, {0, 1, 2, 3});
  try {
    decompose_tma(broken);
    FAIL("decomposed a non-TMA");
  } catch (const StructureError& e) {
    CHECK(e.kind() == StructureError::Kind::NotATMA);
  }
}

TEST_CASE("modal De Morgan p-algebra verdicts") {
  const auto c4 = is_mdmp(model("C4_CHAIN"));
  CHECK(c4.status == MdmpVerdict::Status::h1_fails);
  CHECK(c4.witness == 1);
  CHECK(is_mdmp(model("M4_DIAMOND")).status == MdmpVerdict::Status::yes);
  CHECK(is_mdmp(model("T2")).status == MdmpVerdict::Status::yes);
  CHECK(is_mdmp(model("T3")).status == MdmpVerdict::Status::yes);
  CHECK(status_name(c4.status) == "no-H1-fails");

  CHECK_THROWS_AS(is_mdmp(chain_lattice(3)), StructureError);
  try {
    is_mdmp(chain_lattice(3).with_op(Op::dm, {0, 1, 2}));
    FAIL("accepted a non-involution");
  } catch (const StructureError& e) {
    CHECK(e.kind() == StructureError::Kind::NotDeMorgan);
  }
}

TEST_CASE("the 3-chain has a* = 0") {
  CHECK(pseudocomplement_table(model("T3"))[1] == 0);
}

TEST_CASE("every TMA up to six elements is a p-algebra and a product") {
  const auto report = probe_finite_tma_structure(6);
  CHECK(report.passed());
  REQUIRE(report.notes.size() == 6);
  CHECK(report.notes[3] == "n=4: 2 TMA models; T2^0 T3^0 T4^1 x1; T2^2 T3^0 T4^0 x1");
  CHECK(report.notes[4] == "n=5: 0 TMA models");
  CHECK(report.notes[5] == "n=6: 1 TMA models; T2^1 T3^1 T4^0 x1");
}
