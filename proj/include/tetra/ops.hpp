#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tetra {

/// Element index into a finite carrier {0..n-1}.
using Element = std::uint16_t;

/// Marks a table entry that has not been assigned yet (used by the model search).
inline constexpr Element kUnset = 0xFFFF;

/// Unary operation symbols. The enumerator names are the ASCII spellings used
/// in the text formats: dm (De Morgan negation), nabla (possibility),
/// sneg (strong negation), wneg (weak negation), pc (pseudocomplement),
/// dpc (dual pseudocomplement).
enum class Op : std::uint8_t { dm, nabla, sneg, wneg, pc, dpc };

inline constexpr std::size_t kOpCount = 6;
inline constexpr std::array<Op, kOpCount> kAllOps = {Op::dm, Op::nabla, Op::sneg,
                                                     Op::wneg, Op::pc, Op::dpc};

std::string_view spelling(Op op);
std::string_view math_symbol(Op op);
std::optional<Op> op_from_spelling(std::string_view text);

inline constexpr std::size_t index_of(Op op) { return static_cast<std::size_t>(op); }

/// A set of unary symbols, i.e. an algebra signature beyond the lattice part.
class OpSet {
 public:
  constexpr OpSet() = default;
  constexpr OpSet(std::initializer_list<Op> ops) {
    for (Op op : ops) insert(op);
  }

  constexpr void insert(Op op) { bits_ |= bit(op); }
  constexpr void erase(Op op) { bits_ &= static_cast<std::uint8_t>(~bit(op)); }
  constexpr bool contains(Op op) const { return (bits_ & bit(op)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(OpSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr OpSet operator|(OpSet other) const { return from_bits(bits_ | other.bits_); }
  constexpr OpSet operator&(OpSet other) const { return from_bits(bits_ & other.bits_); }
  constexpr bool operator==(const OpSet&) const = default;

  std::vector<Op> to_vector() const;
  std::size_t size() const { return to_vector().size(); }
  std::string to_string() const;

 private:
  static constexpr std::uint8_t bit(Op op) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(op));
  }
  static constexpr OpSet from_bits(unsigned bits) {
    OpSet s;
    s.bits_ = static_cast<std::uint8_t>(bits);
    return s;
  }
  std::uint8_t bits_ = 0;
};

}  // namespace tetra
