#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tetra/algebra.hpp"
#include "tetra/search.hpp"

namespace tetra::structure {

/// A finite TMA written as T2^t2 x T3^t3 x T4^t4.
struct Decomposition {
  std::size_t t2 = 0;
  std::size_t t3 = 0;
  std::size_t t4 = 0;
  /// From tma_product(t2, t3, t4) onto the {dm, nabla} reduct of the input.
  IsoMapping iso;

  std::size_t size() const;
  bool operator==(const Decomposition&) const = default;
};

/// The (dm, nabla) building blocks: 2-chain, 3-chain, diamond.
const FiniteAlgebra& t2_block();
const FiniteAlgebra& t3_block();
const FiniteAlgebra& t4_block();

/// Iterated direct product, starting from the one-element TMA, T2 factors
/// first, then T3, then T4.
FiniteAlgebra tma_product(std::size_t t2, std::size_t t3, std::size_t t4);

/// First factorization 2^i 3^j 4^k = |A| (ordered by k, then j) whose
/// product is isomorphic to A. Throws StructureError NotATMA when A fails
/// A2-A7 and NoDecompositionFound when no factorization fits.
Decomposition decompose_tma(const FiniteAlgebra& a);

/// Every factorization admitting an isomorphism.
std::vector<Decomposition> all_decompositions(const FiniteAlgebra& a);

/// "FACTORS T2^i T3^j T4^k" and the permutation line.
std::string format_decomposition(const Decomposition& d);

struct MdmpVerdict {
  enum class Status { yes, h1_fails, not_pseudocomplemented };
  Status status = Status::yes;
  /// Failing element for the negative verdicts.
  Element witness = 0;
};

std::string status_name(MdmpVerdict::Status status);

/// Uses the lattice pseudocomplement of `a` (any pc table on `a` is
/// ignored). Throws StructureError NotDeMorgan when dm is missing or A2-A5
/// fail.
MdmpVerdict is_mdmp(const FiniteAlgebra& a);

/// For every TMA up to max_n: pseudocomplemented, is_mdmp, decompose_tma.
/// Notes hold per-size counts and the observed factor multisets.
search::TheoremReport probe_finite_tma_structure(std::size_t max_n,
                                                 const search::Ceilings& ceilings = search::Ceilings::from_environment());

}  // namespace tetra::structure
