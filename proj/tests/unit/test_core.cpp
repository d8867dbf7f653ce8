#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tetra/algebra.hpp"
#include "tetra/catalog.hpp"
#include "tetra/search.hpp"

using namespace tetra;

namespace {

const FiniteAlgebra& diamond() { return catalog::get_model("M4_DIAMOND").algebra; }

Table to_table(std::span<const Element> s) { return Table(s.begin(), s.end()); }

// 0 < a, b, c < 1 with three incomparable atoms.
std::pair<Table, Table> m3_tables() {
  const std::size_t n = 5;
  Table join(n * n), meet(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element j, m;
      if (x == y) {
        j = m = x;
      } else if (x == 0 || y == 0) {
        j = std::max(x, y);
        m = 0;
      } else if (x == 4 || y == 4) {
        j = 4;
        m = std::min(x, y);
      } else {
        j = 4;
        m = 0;
      }
      join[x * n + y] = j;
      meet[x * n + y] = m;
    }
  }
  return {join, meet};
}

AlgebraError::Kind error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const AlgebraError& e) {
    return e.kind();
  }
  FAIL("no AlgebraError thrown");
  return AlgebraError::Kind::Format;
}

IsoMapping random_permutation(std::size_t n, std::mt19937& rng) {
  IsoMapping p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), Element{0});
  std::shuffle(p.image.begin(), p.image.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("chain lattice order") {
  const auto c = chain_lattice(4);
  CHECK(c.size() == 4);
  CHECK(c.bottom() == 0);
  CHECK(c.top() == 3);
  CHECK(c.leq(1, 2));
  CHECK_FALSE(c.leq(2, 1));
  CHECK(c.join(1, 2) == 2);
  CHECK(c.meet(1, 2) == 1);
  CHECK(c.signature().empty());
}

TEST_CASE("validation rejects broken tables") {
  SUBCASE("non-commutative join") {
    CHECK(error_kind([] {
            FiniteAlgebra::from_rows({{0, 1}, {0, 1}}, {{0, 0}, {0, 1}}, 0, 1);
          }) == AlgebraError::Kind::NotALattice);
  }
  SUBCASE("three atoms are not distributive") {
    auto [join, meet] = m3_tables();
    try {
      FiniteAlgebra::create(5, join, meet, 0, 4);
      FAIL("accepted M3");
    } catch (const AlgebraError& e) {
      CHECK(e.kind() == AlgebraError::Kind::NotDistributive);
      REQUIRE(e.witness().size() == 3);
      const auto x = e.witness()[0], y = e.witness()[1], z = e.witness()[2];
      CHECK(meet[x * 5 + join[y * 5 + z]] != join[meet[x * 5 + y] * 5 + meet[x * 5 + z]]);
    }
  }
  SUBCASE("wrong bottom") {
    CHECK(error_kind([] {
            FiniteAlgebra::from_rows({{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 1, 1);
          }) == AlgebraError::Kind::BadBounds);
  }
  SUBCASE("unary entry outside the carrier") {
    CHECK(error_kind([] { chain_lattice(2).with_op(Op::dm, {1, 2}); }) == AlgebraError::Kind::TableOutOfRange);
  }
  SUBCASE("short unary table") {
    CHECK(error_kind([] { chain_lattice(3).with_op(Op::dm, {1, 0}); }) == AlgebraError::Kind::BadDimensions);
  }
  SUBCASE("join entry outside the carrier") {
    CHECK(error_kind([] {
            FiniteAlgebra::from_rows({{0, 7}, {7, 1}}, {{0, 0}, {0, 1}}, 0, 1);
          }) == AlgebraError::Kind::TableOutOfRange);
  }
  SUBCASE("empty carrier") {
    CHECK(error_kind([] { FiniteAlgebra::create(0, {}, {}, 0, 0); }) == AlgebraError::Kind::BadDimensions);
  }
}

TEST_CASE("leq and op report bad access") {
  const auto c = chain_lattice(3);
  CHECK(error_kind([&] { (void)c.leq(0, 3); }) == AlgebraError::Kind::IndexOutOfRange);
  CHECK(error_kind([&] { (void)c.op(Op::nabla); }) == AlgebraError::Kind::MissingOperation);
}

TEST_CASE("element names") {
  const auto& d = diamond();
  CHECK(d.name(1) == "a");
  CHECK(d.find_element("b") == Element{2});
  CHECK(d.find_element("3") == Element{3});
  CHECK_FALSE(d.find_element("z").has_value());
  CHECK(chain_lattice(3).name(2) == "2");
}

TEST_CASE("strong and weak negation on the diamond") {
  const auto derived = derive_strong_weak(diamond().reduct(OpSet{Op::dm, Op::nabla}));
  CHECK(to_table(derived.op(Op::sneg)) == Table{3, 0, 0, 0});
  CHECK(to_table(derived.op(Op::wneg)) == Table{3, 3, 3, 0});
  CHECK(format_table(diamond(), derived.op(Op::wneg)) == "[1, 1, 1, 0]");
}

TEST_CASE("derivation conflicts") {
  const auto bad = diamond().with_op(Op::sneg, {3, 3, 0, 0});
  CHECK(error_kind([&] { derive_strong_weak(bad); }) == AlgebraError::Kind::ConflictingDerivation);

  // sneg = identity, wneg = 0 on the 2-chain: D2 gives 0 at 1, D3 gives 1.
  const auto odd = chain_lattice(2).with_op(Op::sneg, {0, 1}).with_op(Op::wneg, {0, 0});
  CHECK(to_table(dm_by_d3(odd)) == Table{0, 1});
  CHECK(error_kind([&] { derive_modal(odd); }) == AlgebraError::Kind::D2D3Disagreement);
}

TEST_CASE("modal operations recovered from the negations") {
  for (const char* name : {"T2", "T3", "M4_DIAMOND"}) {
    const auto a = catalog::get_model(name).algebra.reduct(OpSet{Op::dm, Op::nabla});
    const auto negations = derive_strong_weak(a).reduct(OpSet{Op::sneg, Op::wneg});
    const auto back = derive_modal(negations);
    CHECK_MESSAGE(std::ranges::equal(back.op(Op::dm), a.op(Op::dm)), name);
    CHECK_MESSAGE(std::ranges::equal(back.op(Op::nabla), a.op(Op::nabla)), name);
  }
}

TEST_CASE("pseudocomplements") {
  CHECK(pseudocomplement_table(diamond()) == Table{3, 2, 1, 0});
  const auto& c4 = catalog::get_model("C4_CHAIN").algebra;
  CHECK(pseudocomplement_table(c4) == Table{3, 0, 0, 0});
  CHECK(dual_pseudocomplement_table(c4) == Table{3, 3, 3, 0});
  CHECK(pseudocomplement_table(chain_lattice(3)) == Table{2, 0, 0});
  CHECK(dual_pseudocomplement_table(diamond()) == Table{3, 2, 1, 0});
}

TEST_CASE("finite distributive lattices are pseudocomplemented") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& l : search::enumerate_distributive_lattices(n)) {
      const auto pc = pseudocomplement(l);
      REQUIRE(std::holds_alternative<Table>(pc));
      const auto& t = std::get<Table>(pc);
      for (Element x = 0; x < n; ++x) {
        CHECK(l.meet(x, t[x]) == l.bottom());
        for (Element y = 0; y < n; ++y) {
          if (l.meet(x, y) == l.bottom()) CHECK(l.leq(y, t[x]));
        }
      }
    }
  }
}

TEST_CASE("direct product") {
  const auto& t2 = catalog::get_model("T2").algebra;
  const auto& t3 = catalog::get_model("T3").algebra;
  const auto p = direct_product(t2, t3);
  CHECK(p.size() == 6);
  CHECK(p.bottom() == 0);
  CHECK(p.top() == 5);
  // (1, a) is 1 * 3 + 1; dm (1, a) = (0, a).
  CHECK(p.apply(Op::dm, 4) == 1);
  CHECK(p.apply(Op::nabla, 1) == 2);
  CHECK(p.name(4) == "(1,a)");
  CHECK(check_system(p, catalog::get_system("TMA")).all_hold());
  CHECK(p.signature() == (OpSet{Op::dm, Op::nabla}));

  const auto bare = direct_product(chain_lattice(2), chain_lattice(2));
  CHECK_FALSE(bare.has_names());
  CHECK(bare.size() == 4);
}

TEST_CASE("products satisfy the identities of their factors") {
  const auto& tma = catalog::get_system("TMA");
  const auto& t3 = catalog::get_model("T3").algebra;
  FiniteAlgebra p = t3;
  for (int i = 0; i < 2; ++i) {
    p = direct_product(p, catalog::get_model("T2").algebra);
    CHECK(check_system(p, tma).all_hold());
  }
  CHECK(p.size() == 12);
}

TEST_CASE("trivial algebra") {
  const auto t = trivial_algebra(OpSet{Op::dm, Op::nabla});
  CHECK(t.size() == 1);
  CHECK(t.bottom() == t.top());
  CHECK(check_system(t, catalog::get_system("MOISIL_A")).all_hold());
}

TEST_CASE("isomorphism search") {
  std::mt19937 rng(20261014);
  for (const auto& name : catalog::model_names()) {
    const auto& a = catalog::get_model(name).algebra;
    for (int round = 0; round < 5; ++round) {
      const auto p = random_permutation(a.size(), rng);
      const auto b = relabel(a, p);
      CHECK(is_isomorphism(a, b, p));
      const auto forward = find_isomorphism(a, b);
      const auto backward = find_isomorphism(b, a);
      REQUIRE(forward.has_value());
      REQUIRE(backward.has_value());
      CHECK(is_isomorphism(a, b, *forward));
      CHECK(is_isomorphism(b, a, *backward));
      CHECK(is_isomorphism(b, a, forward->inverse()));
      CHECK(canonical_hash(a) == canonical_hash(b));
      CHECK(canonical_form(a).key == canonical_form(b).key);
    }
  }
}

TEST_CASE("non-isomorphic algebras") {
  CHECK_FALSE(find_isomorphism(chain_lattice(4), diamond().reduct({})).has_value());
  CHECK_FALSE(find_isomorphism(diamond(), diamond().reduct(OpSet{Op::dm})).has_value());
  const auto t2t2 = direct_product(catalog::get_model("T2").algebra, catalog::get_model("T2").algebra);
  const auto t4 = diamond().reduct(OpSet{Op::dm, Op::nabla});
  CHECK_FALSE(find_isomorphism(t2t2, t4).has_value());
  CHECK(canonical_hash(t2t2.with_names({})) != canonical_hash(t4));
}

TEST_CASE("automorphisms") {
  const auto lattice_autos = automorphisms(diamond().reduct({}));
  REQUIRE(lattice_autos.size() == 2);
  CHECK(lattice_autos.front().is_identity());
  CHECK(lattice_autos[1].image == std::vector<Element>{0, 2, 1, 3});
  CHECK(automorphisms(diamond().reduct(OpSet{Op::dm, Op::nabla})).size() == 2);
  // Sending b to a breaks the swap.
  CHECK(automorphisms(diamond().reduct({}).with_op(Op::dm, {3, 1, 1, 0})).size() == 1);
  CHECK(automorphisms(chain_lattice(5)).size() == 1);
}

TEST_CASE("canonical hash format") {
  const auto h = canonical_hash(diamond());
  CHECK(h.size() == 16);
  CHECK(std::all_of(h.begin(), h.end(), [](char c) { return std::isxdigit(static_cast<unsigned char>(c)); }));
}

TEST_CASE("text format round trip") {
  for (const auto& name : catalog::model_names()) {
    const auto& a = catalog::get_model(name).algebra;
    const auto b = parse_algebra(format_algebra(a));
    CHECK_MESSAGE(a.same_tables(b), name);
    CHECK(a.names() == b.names());
  }
}

TEST_CASE("text format parsing") {
  const auto a = parse_algebra(R"(# two-element chain
size 2
bottom 0 top 1
join
0 1
1 1
meet
0 0
0 1
unary dm   # complement
1 0
)");
  CHECK(a.size() == 2);
  CHECK(to_table(a.op(Op::dm)) == Table{1, 0});

  try {
    parse_algebra("size 2\nbottom 0 top 1\njoin\n0 1\n1 1\nmeet\n0 0\n0 x\n");
    FAIL("accepted a bad token");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == AlgebraError::Kind::Format);
    CHECK(std::string(e.what()).find("line 8") != std::string::npos);
  }
  CHECK(error_kind([] { parse_algebra("size 2\nbottom 0 top 1\njoin\n0 1\n"); }) == AlgebraError::Kind::Format);
  CHECK(error_kind([] { parse_algebra("size 2\nbottom 0 top 1\njoin\n0 1\n1 1\nmeet\n0 0\n0 1\nunary foo\n1 0\n"); }) ==
        AlgebraError::Kind::Format);
}

TEST_CASE("hasse and table output") {
  CHECK(format_hasse(diamond()) == "0<a 0<b a<1 b<1");
  CHECK(format_hasse(chain_lattice(3)) == "0<1 1<2");
  CHECK(format_table(diamond(), diamond().op(Op::dm)) == "[1, a, b, 0]");
}
