#include <doctest.h>

#include "tetra/brute_force.hpp"
#include "tetra/catalog.hpp"
#include "tetra/search.hpp"

using namespace tetra;

TEST_CASE("raw lattice enumeration agrees with the down-set construction") {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3};
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto raw = brute_force::distributive_lattices(n);
    const auto grown = search::enumerate_distributive_lattices(n);
    CHECK(raw.size() == expected[n - 1]);
    REQUIRE(grown.size() == raw.size());
    for (const auto& g : grown) {
      std::size_t matches = 0;
      for (const auto& r : raw) matches += brute_force::order_isomorphic(g, r) ? 1 : 0;
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("order isomorphism") {
  CHECK(brute_force::order_isomorphic(chain_lattice(3), chain_lattice(3)));
  CHECK_FALSE(brute_force::order_isomorphic(chain_lattice(4), catalog::get_model("M4_DIAMOND").algebra));
}

TEST_CASE("raw table filter agrees with the backtracking search") {
  const std::vector<std::pair<const char*, OpSet>> systems{
      {"TMA", OpSet{Op::dm, Op::nabla}},   {"B_SYS", OpSet{Op::sneg, Op::wneg}},
      {"DM_T", OpSet{Op::dm, Op::sneg}},   {"DM_MDMP", OpSet{Op::dm, Op::pc}},
      {"VARLET_STONE_ID", OpSet{Op::pc, Op::dpc}}, {"DOUBLE_STONE", OpSet{Op::pc, Op::dpc}},
  };
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& lattice : brute_force::distributive_lattices(n)) {
      for (const auto& [name, signature] : systems) {
        const auto& system = catalog::get_system(name);
        const auto raw = brute_force::count_models(lattice, signature, system);
        const auto found = search::enumerate_models(lattice, {n, signature, system, true});
        CHECK_MESSAGE(found.size() == raw.classes, name << " n=" << n);
        std::size_t labelled = 0;
        search::for_each_model(lattice, {n, signature, system, false}, [&](const FiniteAlgebra&) {
          ++labelled;
          return true;
        });
        CHECK_MESSAGE(labelled == raw.labelled, name << " n=" << n);
      }
    }
  }
}

TEST_CASE("raw filter on the diamond") {
  const auto diamond = catalog::get_model("M4_DIAMOND").algebra.reduct({}).with_names({});
  CHECK(brute_force::count_models(diamond, OpSet{Op::dm, Op::nabla}, catalog::get_system("TMA")).classes == 2);
  CHECK(brute_force::count_models(diamond, OpSet{Op::pc, Op::dpc}, catalog::get_system("VARLET")).classes == 0);
  CHECK(brute_force::count_models(diamond, OpSet{Op::pc, Op::dpc}, catalog::get_system("VARLET_STONE")).classes == 1);
  CHECK(brute_force::count_models(chain_lattice(4), OpSet{Op::dm, Op::nabla}, catalog::get_system("TMA")).labelled == 0);
}
