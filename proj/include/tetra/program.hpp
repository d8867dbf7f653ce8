#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tetra/algebra.hpp"
#include "tetra/term.hpp"

namespace tetra {

/// Postfix form of a term with variables resolved to slots. Evaluation
/// tolerates kUnset table entries and yields kUnset when the value is not
/// determined yet.
class Program {
 public:
  Program(const Term& term, const std::vector<std::string>& variables);

  Element run(const AlgebraView& view, const Element* valuation) const;

 private:
  enum class Code : std::uint8_t { variable, zero, one, unary, meet, join };
  struct Instr {
    Code code;
    std::uint8_t arg;
  };
  void emit(const Term& term, const std::vector<std::string>& variables);

  std::vector<Instr> code_;
};

/// A sentence compiled for repeated evaluation on partially filled tables.
class CompiledSentence {
 public:
  enum class Outcome : std::uint8_t { satisfied, violated, unknown };

  explicit CompiledSentence(const Sentence& sentence);

  std::size_t variable_count() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  OpSet symbols() const { return symbols_; }

  Outcome evaluate(const AlgebraView& view, const Element* valuation) const;

  /// First violated valuation in lexicographic order on fully filled tables.
  std::optional<std::vector<Element>> find_violation(const AlgebraView& view) const;

 private:
  struct Equation {
    Program lhs;
    Program rhs;
  };
  std::vector<std::string> variables_;
  OpSet symbols_;
  std::vector<Equation> premises_;
  std::vector<Equation> conclusion_;  // exactly one
};

}  // namespace tetra
