#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetra/ops.hpp"

namespace tetra {

/// Failures raised while building or transforming a FiniteAlgebra.
class AlgebraError : public std::runtime_error {
 public:
  enum class Kind {
    BadDimensions,
    NotALattice,
    NotDistributive,
    BadBounds,
    TableOutOfRange,
    IndexOutOfRange,
    MissingOperation,
    ConflictingDerivation,
    D2D3Disagreement,
    NotPseudocomplemented,
    SignatureMismatch,
    Format,
  };

  AlgebraError(Kind kind, std::string message, std::vector<Element> witness = {},
               std::string detail = {})
      : std::runtime_error(std::move(message)),
        kind_(kind),
        witness_(std::move(witness)),
        detail_(std::move(detail)) {}

  Kind kind() const { return kind_; }
  /// Offending elements: the triple for a lattice law, the element for a bad
  /// bound or a disagreeing derivation.
  const std::vector<Element>& witness() const { return witness_; }
  /// Axiom name for NotALattice, symbol name for table/derivation errors.
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  std::vector<Element> witness_;
  std::string detail_;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t position, std::string expected, const std::string& text);

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class EvalError : public std::runtime_error {
 public:
  enum class Kind { UnboundVariable, UnsupportedSymbol };

  EvalError(Kind kind, std::string name);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  Kind kind_;
  std::string name_;
};

class CatalogError : public std::runtime_error {
 public:
  enum class Kind { UnknownSystem, UnknownModel };
  CatalogError(Kind kind, const std::string& name)
      : std::runtime_error((kind == Kind::UnknownSystem ? "unknown axiom system: "
                                                        : "unknown model: ") +
                           name),
        kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class SearchError : public std::runtime_error {
 public:
  enum class Kind { SizeTooLarge, BadConfig };
  SearchError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class StructureError : public std::runtime_error {
 public:
  enum class Kind { NotATMA, NoDecompositionFound, NotDeMorgan };
  StructureError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace tetra
