#pragma once

#include <cstddef>
#include <vector>

#include "tetra/algebra.hpp"
#include "tetra/eval.hpp"

// Slow reference enumerators that share no code with the search module: they
// walk every order relation or every operation table directly and compare
// isomorphism by trying all permutations.
namespace tetra::brute_force {

/// Distributive lattices on n elements, one per iso class, found by testing
/// every binary relation. Practical for n <= 5.
std::vector<FiniteAlgebra> distributive_lattices(std::size_t n);

/// True if some permutation maps the order of `a` onto the order of `b`.
bool order_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);

struct ModelCount {
  std::size_t labelled = 0;
  std::size_t classes = 0;
};

/// Fills every table of `signature` over `lattice` in all n^n ways and keeps
/// the assignments where check_system holds.
ModelCount count_models(const FiniteAlgebra& lattice, OpSet signature, const AxiomSystem& system);

}  // namespace tetra::brute_force
