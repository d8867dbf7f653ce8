#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tetra/algebra.hpp"
#include "tetra/term.hpp"

namespace tetra {

/// Variable assignment in lexicographic variable order.
using Valuation = std::vector<std::pair<std::string, Element>>;

/// Evaluates `term` bottom-up through the tables of `a`.
/// Throws EvalError (UnboundVariable, UnsupportedSymbol).
Element eval(const Term& term, const FiniteAlgebra& a, const std::map<std::string, Element>& valuation);

struct Axiom {
  std::string label;
  Sentence sentence;
  std::string source;  // text the sentence was parsed from, if any
};

/// Named, ordered list of labelled sentences over a declared signature.
class AxiomSystem {
 public:
  /// Throws std::invalid_argument on duplicate labels or on a sentence using
  /// a symbol outside `required`.
  AxiomSystem(std::string name, OpSet required, std::vector<Axiom> axioms);

  const std::string& name() const { return name_; }
  OpSet required_symbols() const { return required_; }
  const std::vector<Axiom>& axioms() const { return axioms_; }
  std::size_t size() const { return axioms_.size(); }
  std::vector<std::string> labels() const;
  const Axiom* find(std::string_view label) const;

  AxiomSystem without(std::string_view label) const;
  AxiomSystem renamed(std::string name) const;
  /// Concatenation in order; the signature is the union.
  static AxiomSystem combine(std::string name, const std::vector<AxiomSystem>& parts);

 private:
  std::string name_;
  OpSet required_;
  std::vector<Axiom> axioms_;
};

struct Verdict {
  enum class Status { holds, fails, skipped };
  Status status = Status::holds;
  /// Set when status == fails: the first failing valuation in lexicographic order.
  Valuation counterexample;

  bool holds() const { return status == Status::holds; }
  bool fails() const { return status == Status::fails; }
};

/// Exhaustive check over all n^k valuations. For a quasi-identity only the
/// valuations satisfying every premise are tested against the conclusion.
Verdict holds(const FiniteAlgebra& a, const Sentence& sentence);

struct LabeledVerdict {
  std::string label;
  Verdict verdict;
};

struct CheckReport {
  std::vector<LabeledVerdict> entries;

  bool all_hold() const;
  const LabeledVerdict* first_failure() const;
  const LabeledVerdict* find(std::string_view label) const;
};

/// Checks every sentence in order. With full == false the remaining
/// sentences after the first failure are marked skipped.
CheckReport check_system(const FiniteAlgebra& a, const AxiomSystem& system, bool full = true);

/// "x=a,y=b" with element names.
std::string format_valuation(const FiniteAlgebra& a, const Valuation& valuation);
/// "x=1,y=2" with element indices.
std::string format_valuation_indices(const Valuation& valuation);
/// VERDICT lines, one per sentence.
std::string format_report(const FiniteAlgebra& a, const CheckReport& report, bool use_names = true);

}  // namespace tetra
