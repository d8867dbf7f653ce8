#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tetra/error.hpp"
#include "tetra/ops.hpp"

namespace tetra {

using Table = std::vector<Element>;

/// Raw, non-owning access to operation tables. Entries may be kUnset while a
/// search is filling them in; absent operations have a null pointer.
struct AlgebraView {
  std::size_t size = 0;
  const Element* join = nullptr;  // row-major n*n
  const Element* meet = nullptr;
  Element bottom = 0;
  Element top = 0;
  std::array<const Element*, kOpCount> unary{};
};

/// A bounded distributive lattice on {0..n-1} together with any number of
/// named unary operation tables. Immutable once constructed; every
/// constructor path validates the full set of lattice laws.
class FiniteAlgebra {
 public:
  /// Validates and builds an algebra. `join` and `meet` are row-major n*n.
  /// Throws AlgebraError on the first violated law.
  static FiniteAlgebra create(std::size_t size, Table join, Table meet, Element bottom,
                              Element top, std::map<Op, Table> unary_ops = {},
                              std::vector<std::string> names = {});

  /// Same as create() but with tables given as rows.
  static FiniteAlgebra from_rows(const std::vector<std::vector<Element>>& join,
                                 const std::vector<std::vector<Element>>& meet, Element bottom,
                                 Element top, std::map<Op, Table> unary_ops = {},
                                 std::vector<std::string> names = {});

  std::size_t size() const { return size_; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  Element join(Element x, Element y) const { return join_[x * size_ + y]; }
  Element meet(Element x, Element y) const { return meet_[x * size_ + y]; }
  std::span<const Element> join_table() const { return join_; }
  std::span<const Element> meet_table() const { return meet_; }

  /// x <= y iff x & y = x. Throws IndexOutOfRange.
  bool leq(Element x, Element y) const;

  bool has(Op op) const { return unary_[index_of(op)].has_value(); }
  OpSet signature() const;
  /// Throws MissingOperation if absent.
  std::span<const Element> op(Op op) const;
  Element apply(Op op, Element x) const { return (*unary_[index_of(op)])[x]; }

  /// Returns a copy with `op` set to `table` (replacing an existing table).
  FiniteAlgebra with_op(Op op, Table table) const;
  FiniteAlgebra without_op(Op op) const;
  /// Keeps only the unary operations in `ops` that are present.
  FiniteAlgebra reduct(OpSet ops) const;
  FiniteAlgebra with_names(std::vector<std::string> names) const;

  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  /// Display name of an element: its given name, else its index.
  std::string name(Element x) const;
  /// Resolves an element by name or decimal index.
  std::optional<Element> find_element(std::string_view token) const;

  AlgebraView view() const;

  /// Table equality including bottom, top and every unary table; names ignored.
  bool same_tables(const FiniteAlgebra& other) const;

 private:
  FiniteAlgebra() = default;
  void validate() const;
  void validate_unary(Op op, const Table& table) const;

  std::size_t size_ = 0;
  Table join_;
  Table meet_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::array<std::optional<Table>, kOpCount> unary_;
  std::vector<std::string> names_;
};

/// The one-element algebra carrying the given operations (all constant 0).
FiniteAlgebra trivial_algebra(OpSet ops = {});

/// A chain 0 < 1 < ... < n-1 with no unary operations.
FiniteAlgebra chain_lattice(std::size_t n);

// ---------------------------------------------------------------------------
// Derived operations

/// Adds sneg x := dm nabla x and wneg x := nabla dm x. Existing sneg/wneg
/// tables must agree (ConflictingDerivation otherwise).
FiniteAlgebra derive_strong_weak(const FiniteAlgebra& a);

/// Adds nabla x := sneg sneg x and dm x := (x | sneg x) & wneg x. The form
/// dm x = (x & wneg x) | sneg x is computed alongside; any element where the
/// two differ raises D2D3Disagreement.
FiniteAlgebra derive_modal(const FiniteAlgebra& a);

/// (x & wneg x) | sneg x for every x. Requires sneg and wneg.
Table dm_by_d3(const FiniteAlgebra& a);

/// Reported when some x has no greatest annihilator: `first` and `second` are
/// two maximal, incomparable elements of {y : x & y = 0}.
struct PseudocomplementFailure {
  Element x = 0;
  Element first = 0;
  Element second = 0;
};

using PseudocomplementResult = std::variant<Table, PseudocomplementFailure>;

/// x* = max {y : x & y = bottom}, for every x, or the first failing x.
PseudocomplementResult pseudocomplement(const FiniteAlgebra& a);
/// x+ = min {y : x | y = top}, for every x, or the first failing x.
PseudocomplementResult dual_pseudocomplement(const FiniteAlgebra& a);

/// Table form of pseudocomplement(); throws NotPseudocomplemented.
Table pseudocomplement_table(const FiniteAlgebra& a);
Table dual_pseudocomplement_table(const FiniteAlgebra& a);

/// Componentwise product; pair (i, j) is encoded as i * |b| + j.
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

// ---------------------------------------------------------------------------
// Isomorphism

/// image[i] is the element of the target that element i of the source maps to.
struct IsoMapping {
  std::vector<Element> image;

  Element operator()(Element x) const { return image[x]; }
  IsoMapping inverse() const;
  bool is_identity() const;
  bool operator==(const IsoMapping&) const = default;
};

/// Rebuilds `a` with element x renamed to mapping(x).
FiniteAlgebra relabel(const FiniteAlgebra& a, const IsoMapping& mapping);

/// True if `mapping` is a bijection preserving join, meet, bounds and every
/// unary operation (signatures must be equal).
bool is_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const IsoMapping& mapping);

/// Searches for an isomorphism a -> b. Signatures must coincide, otherwise
/// no mapping is reported.
std::optional<IsoMapping> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Every automorphism of `a`, identity first.
std::vector<IsoMapping> automorphisms(const FiniteAlgebra& a);

/// Canonical representative of the isomorphism class: the lexicographically
/// least table string over all relabelings that list elements by
/// (height, down-set size, up-set size).
struct CanonicalForm {
  std::vector<Element> key;
  IsoMapping labeling;  // original -> canonical
};

CanonicalForm canonical_form(const FiniteAlgebra& a);
/// 16 hex digits, FNV-1a over the canonical key.
std::string canonical_hash(const FiniteAlgebra& a);

// ---------------------------------------------------------------------------
// Text format

FiniteAlgebra parse_algebra(std::string_view text);
FiniteAlgebra load_algebra(const std::string& path);
std::string format_algebra(const FiniteAlgebra& a);
/// "[1, a, b, 0]" using element names.
std::string format_table(const FiniteAlgebra& a, std::span<const Element> table);
/// Cover relation of the order as "x<y" pairs, one line.
std::string format_hasse(const FiniteAlgebra& a);

}  // namespace tetra
