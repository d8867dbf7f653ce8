#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tetra/algebra.hpp"
#include "tetra/eval.hpp"

namespace tetra::search {

/// Hard size limits. TETRA_CEILING in the environment overrides both.
struct Ceilings {
  std::size_t lattices = 8;
  std::size_t models = 6;

  static Ceilings from_environment();
};

/// All distributive lattices with exactly n elements up to isomorphism, built
/// as down-set lattices of posets of join-irreducibles. Each lattice is in
/// canonical labeling (bottom 0, top n-1) and the list is sorted by
/// canonical key. Throws SearchError::SizeTooLarge above the ceiling.
std::vector<FiniteAlgebra> enumerate_distributive_lattices(
    std::size_t n, const Ceilings& ceilings = Ceilings::from_environment());

struct EnumerationConfig {
  std::size_t max_size;
  OpSet signature;
  AxiomSystem system;
  bool iso_reduce = true;
};

/// Return false to stop the enumeration.
using ModelVisitor = std::function<bool(const FiniteAlgebra&)>;

/// Backtracking over the unary tables in `config.signature`, element by
/// element in index order, pruning with every ground instance of the system
/// whose value is already determined. Operations already present on
/// `lattice` are kept fixed. With iso_reduce, each isomorphism class is
/// visited once, as its least representative under the lattice's
/// automorphisms.
void for_each_model(const FiniteAlgebra& lattice, const EnumerationConfig& config,
                    const ModelVisitor& visit,
                    const Ceilings& ceilings = Ceilings::from_environment());

/// Collected models, sorted by their table key.
std::vector<FiniteAlgebra> enumerate_models(const FiniteAlgebra& lattice,
                                            const EnumerationConfig& config,
                                            const Ceilings& ceilings = Ceilings::from_environment());

/// Models on every distributive lattice of size 1..config.max_size.
std::vector<FiniteAlgebra> enumerate_all_models(const EnumerationConfig& config,
                                                const Ceilings& ceilings = Ceilings::from_environment());

struct Witness {
  enum class Role { satisfies_all_but_one, counterexample_to_entailment, non_equivalence };
  Role role;
  /// Axiom label, entailed sentence text, or equivalence direction.
  std::string label;
  FiniteAlgebra algebra;
  Valuation valuation;
};

std::string role_name(Witness::Role role);

/// Re-checks a witness against the system it was found for:
/// satisfies_all_but_one: every axiom except `label` holds and `label` fails
/// at `valuation`; counterexample_to_entailment: the system holds and
/// `sentence` fails at `valuation`.
bool reverify(const Witness& witness, const AxiomSystem& system,
              const std::optional<Sentence>& sentence = std::nullopt);

struct EntailmentResult {
  std::size_t bound = 0;
  std::optional<Witness> witness;

  bool holds_up_to_bound() const { return !witness.has_value(); }
};

/// Looks for a model of `system` with at most max_n elements falsifying
/// `sentence`. Absence is bounded verification only.
EntailmentResult check_entailment(const AxiomSystem& system, const Sentence& sentence,
                                  std::size_t max_n,
                                  const Ceilings& ceilings = Ceilings::from_environment());

struct IndependenceEntry {
  std::string label;
  std::optional<Witness> witness;
};

struct IndependenceResult {
  std::string system;
  std::size_t bound = 0;
  std::vector<IndependenceEntry> entries;
};

/// For each axiom, the smallest model (by size, then lattice order) of the
/// other axioms that falsifies it.
IndependenceResult check_independence(const AxiomSystem& system, std::size_t max_n,
                                      const Ceilings& ceilings = Ceilings::from_environment());

std::string format_independence(const IndependenceResult& result);
std::string format_entailment(const EntailmentResult& result, const std::string& system,
                              const std::string& sentence);

// ---------------------------------------------------------------------------
// Characterization checks. Each one enumerates every model up to max_n and
// records per-check failure counts with a few sample descriptions.

struct CheckLine {
  std::string description;
  std::size_t models = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;

  bool passed() const { return failures == 0; }
  void record_failure(std::string sample);
};

struct TheoremReport {
  std::string name;
  std::size_t bound = 0;
  std::deque<CheckLine> checks;  // stable references from line()
  std::vector<std::string> notes;

  bool passed() const;
  CheckLine& line(const std::string& description);
  const CheckLine* find(const std::string& description) const;
};

std::string format_theorem_report(const TheoremReport& report);

/// Modal algebras (dm, nabla) versus algebras (sneg, wneg) satisfying B1-B10:
/// sneg := dm nabla, wneg := nabla dm maps the first class into the second,
/// nabla := sneg sneg, dm := (x | sneg x) & wneg x maps back, and both
/// round trips are the identity.
TheoremReport check_negation_characterization(std::size_t max_n,
                                              const Ceilings& ceilings = Ceilings::from_environment());

/// On every B1-B10 model, after deriving dm and nabla: one line per sentence
/// of B_DERIVED_1, B_DERIVED_2, D_FORMS and the modal laws A4-A7.
TheoremReport check_derived_negation_laws(std::size_t max_n,
                                          const Ceilings& ceilings = Ceilings::from_environment());

/// De Morgan algebras with sneg satisfying T1, T2 versus modal algebras,
/// via nabla := dm sneg and sneg := dm nabla; compared as labelled sets.
TheoremReport check_t_identity_characterization(std::size_t max_n,
                                                const Ceilings& ceilings = Ceilings::from_environment());

/// Every model of DE_MORGAN + MDMP with sneg := pc & dm satisfies T1, T2.
TheoremReport check_p_algebra_negation(std::size_t max_n,
                                       const Ceilings& ceilings = Ceilings::from_environment());

/// Models of `determination` (V1-V7 style, signature pc, dpc):
/// dm := (x | pc x) & dpc x, nabla := pc pc x gives a MOISIL_A model,
/// pc = dm nabla, dpc = nabla dm, double Stone laws hold, and the model set
/// equals that of `identity_form`.
TheoremReport check_varlet_correspondence(const AxiomSystem& determination,
                                          const AxiomSystem& identity_form, std::size_t max_n,
                                          const Ceilings& ceilings = Ceilings::from_environment());

}  // namespace tetra::search
