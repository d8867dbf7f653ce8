#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tetra/ops.hpp"

namespace tetra {

/// Immutable term tree over variables, the constants 0 and 1, the unary
/// symbols and the lattice operations. Copies share structure.
class Term {
 public:
  enum class Kind : std::uint8_t { variable, zero, one, unary, meet, join };

  static Term variable(std::string name);
  static Term zero();
  static Term one();
  static Term unary(Op op, Term operand);
  static Term meet(Term left, Term right);
  static Term join(Term left, Term right);

  Kind kind() const;
  const std::string& name() const;
  Op op() const;
  const Term& operand() const;
  const Term& left() const;
  const Term& right() const;

  /// Number of parenthesis pairs written around this term in the source.
  /// Only the printer looks at it; equality ignores it.
  unsigned parens() const;
  Term with_parens(unsigned count) const;

  /// Structural equality.
  bool operator==(const Term& other) const;

  OpSet symbols() const;
  void collect_variables(std::vector<std::string>& out) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class Relation : std::uint8_t { equal, less_equal };

/// `lhs = rhs` or `lhs <= rhs`. An inequality means lhs & rhs = lhs.
struct Comparison {
  Term lhs;
  Term rhs;
  Relation relation = Relation::equal;

  /// The two sides of the identity this comparison stands for.
  Term identity_lhs() const { return relation == Relation::equal ? lhs : Term::meet(lhs, rhs); }
  Term identity_rhs() const { return relation == Relation::equal ? rhs : lhs; }

  bool operator==(const Comparison&) const = default;
};

class Sentence {
 public:
  enum class Kind : std::uint8_t { identity, inequality, quasi_identity };

  static Sentence identity(Term lhs, Term rhs);
  static Sentence inequality(Term lhs, Term rhs);
  /// Throws std::invalid_argument when no premise is given.
  static Sentence quasi_identity(std::vector<Comparison> premises, Comparison conclusion);

  Kind kind() const;
  const std::vector<Comparison>& premises() const { return premises_; }
  const Comparison& conclusion() const { return conclusion_; }

  /// Distinct variable names in lexicographic order; this is the order in
  /// which valuations are enumerated.
  std::vector<std::string> variables() const;
  OpSet symbols() const;

  bool operator==(const Sentence&) const = default;

 private:
  Sentence(std::vector<Comparison> premises, Comparison conclusion)
      : premises_(std::move(premises)), conclusion_(std::move(conclusion)) {}
  std::vector<Comparison> premises_;
  Comparison conclusion_;
};

std::string to_string(const Term& term);
std::string to_string(const Comparison& comparison);
std::string to_string(const Sentence& sentence);

/// Parses one sentence:
///   sentence := [ cmp ("," cmp)* "=>" ] cmp
///   cmp      := term ("=" | "<=") term
///   term     := factor ("|" factor)*
///   factor   := atom ("&" atom)*
///   atom     := "0" | "1" | var | unary atom | "(" term ")"
/// Throws SyntaxError with the offending byte offset.
Sentence parse_sentence(std::string_view text);
Term parse_term(std::string_view text);

}  // namespace tetra
