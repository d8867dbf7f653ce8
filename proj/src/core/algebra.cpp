#include "tetra/algebra.hpp"

#include <charconv>
#include <sstream>

namespace tetra {

namespace {

constexpr std::array<std::string_view, kOpCount> kSpellings = {"dm", "nabla", "sneg",
                                                               "wneg", "pc", "dpc"};
constexpr std::array<std::string_view, kOpCount> kSymbols = {"∼", "∇", "¬", "⌐", "*", "⁺"};

std::string triple(Element x, Element y, Element z) {
  std::ostringstream out;
  out << "(" << x << ", " << y << ", " << z << ")";
  return out.str();
}

[[noreturn]] void lattice_failure(const std::string& axiom, Element x, Element y, Element z) {
  throw AlgebraError(AlgebraError::Kind::NotALattice,
                     "lattice law '" + axiom + "' fails at " + triple(x, y, z), {x, y, z},
                     axiom);
}

}  // namespace

std::string_view spelling(Op op) { return kSpellings[index_of(op)]; }
std::string_view math_symbol(Op op) { return kSymbols[index_of(op)]; }

std::optional<Op> op_from_spelling(std::string_view text) {
  for (Op op : kAllOps) {
    if (spelling(op) == text) return op;
  }
  return std::nullopt;
}

std::vector<Op> OpSet::to_vector() const {
  std::vector<Op> out;
  for (Op op : kAllOps) {
    if (contains(op)) out.push_back(op);
  }
  return out;
}

std::string OpSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Op op : to_vector()) {
    if (!first) out += ", ";
    out += spelling(op);
    first = false;
  }
  return out + "}";
}

FiniteAlgebra FiniteAlgebra::create(std::size_t size, Table join, Table meet, Element bottom,
                                    Element top, std::map<Op, Table> unary_ops,
                                    std::vector<std::string> names) {
  if (size == 0 || size >= kUnset) {
    throw AlgebraError(AlgebraError::Kind::BadDimensions,
                       "carrier size must be between 1 and 65534");
  }
  if (join.size() != size * size || meet.size() != size * size) {
    throw AlgebraError(AlgebraError::Kind::BadDimensions,
                       "join and meet tables must have n*n entries");
  }
  if (!names.empty() && names.size() != size) {
    throw AlgebraError(AlgebraError::Kind::BadDimensions, "expected one name per element");
  }
  FiniteAlgebra a;
  a.size_ = size;
  a.join_ = std::move(join);
  a.meet_ = std::move(meet);
  a.bottom_ = bottom;
  a.top_ = top;
  a.names_ = std::move(names);
  for (auto& [op, table] : unary_ops) {
    a.validate_unary(op, table);
    a.unary_[index_of(op)] = std::move(table);
  }
  a.validate();
  return a;
}

FiniteAlgebra FiniteAlgebra::from_rows(const std::vector<std::vector<Element>>& join,
                                       const std::vector<std::vector<Element>>& meet,
                                       Element bottom, Element top, std::map<Op, Table> unary_ops,
                                       std::vector<std::string> names) {
  const std::size_t n = join.size();
  Table j, m;
  for (const auto& row : join) {
    if (row.size() != n) throw AlgebraError(AlgebraError::Kind::BadDimensions, "ragged join table");
    j.insert(j.end(), row.begin(), row.end());
  }
  for (const auto& row : meet) {
    if (row.size() != n) throw AlgebraError(AlgebraError::Kind::BadDimensions, "ragged meet table");
    m.insert(m.end(), row.begin(), row.end());
  }
  return create(n, std::move(j), std::move(m), bottom, top, std::move(unary_ops),
                std::move(names));
}

void FiniteAlgebra::validate_unary(Op op, const Table& table) const {
  if (table.size() != size_) {
    throw AlgebraError(AlgebraError::Kind::BadDimensions,
                       "unary table " + std::string(spelling(op)) + " must have n entries", {},
                       std::string(spelling(op)));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= size_) {
      throw AlgebraError(AlgebraError::Kind::TableOutOfRange,
                         "table " + std::string(spelling(op)) + " maps " + std::to_string(i) +
                             " outside the carrier",
                         {static_cast<Element>(i)}, std::string(spelling(op)));
    }
  }
}

void FiniteAlgebra::validate() const {
  const std::size_t n = size_;
  auto range_check = [&](const Table& t, const char* symbol) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] >= n) {
        throw AlgebraError(AlgebraError::Kind::TableOutOfRange,
                           std::string("table ") + symbol + " has an entry outside the carrier",
                           {static_cast<Element>(i / n), static_cast<Element>(i % n)}, symbol);
      }
    }
  };
  range_check(join_, "join");
  range_check(meet_, "meet");
  if (bottom_ >= n || top_ >= n) {
    throw AlgebraError(AlgebraError::Kind::TableOutOfRange, "bound outside the carrier", {},
                       "bounds");
  }

  for (Element x = 0; x < n; ++x) {
    if (join(x, x) != x) lattice_failure("join idempotence", x, x, x);
    if (meet(x, x) != x) lattice_failure("meet idempotence", x, x, x);
    for (Element y = 0; y < n; ++y) {
      if (join(x, y) != join(y, x)) lattice_failure("join commutativity", x, y, y);
      if (meet(x, y) != meet(y, x)) lattice_failure("meet commutativity", x, y, y);
      if (join(x, meet(x, y)) != x) lattice_failure("absorption x | (x & y) = x", x, y, y);
      if (meet(x, join(x, y)) != x) lattice_failure("absorption x & (x | y) = x", x, y, y);
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (join(join(x, y), z) != join(x, join(y, z))) lattice_failure("join associativity", x, y, z);
        if (meet(meet(x, y), z) != meet(x, meet(y, z))) lattice_failure("meet associativity", x, y, z);
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (meet(bottom_, x) != bottom_) {
      throw AlgebraError(AlgebraError::Kind::BadBounds,
                         "bottom is not below " + std::to_string(x), {x}, "bottom");
    }
    if (join(top_, x) != top_) {
      throw AlgebraError(AlgebraError::Kind::BadBounds, "top is not above " + std::to_string(x),
                         {x}, "top");
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) {
          throw AlgebraError(AlgebraError::Kind::NotDistributive,
                             "distributivity fails at " + triple(x, y, z), {x, y, z});
        }
      }
    }
  }
}

bool FiniteAlgebra::leq(Element x, Element y) const {
  if (x >= size_ || y >= size_) {
    throw AlgebraError(AlgebraError::Kind::IndexOutOfRange, "element index out of range",
                       {x, y});
  }
  return meet(x, y) == x;
}

OpSet FiniteAlgebra::signature() const {
  OpSet s;
  for (Op op : kAllOps) {
    if (has(op)) s.insert(op);
  }
  return s;
}

std::span<const Element> FiniteAlgebra::op(Op op) const {
  const auto& t = unary_[index_of(op)];
  if (!t) {
    throw AlgebraError(AlgebraError::Kind::MissingOperation,
                       "algebra has no operation " + std::string(spelling(op)), {},
                       std::string(spelling(op)));
  }
  return *t;
}

FiniteAlgebra FiniteAlgebra::with_op(Op op, Table table) const {
  validate_unary(op, table);
  FiniteAlgebra copy = *this;
  copy.unary_[index_of(op)] = std::move(table);
  return copy;
}

FiniteAlgebra FiniteAlgebra::without_op(Op op) const {
  FiniteAlgebra copy = *this;
  copy.unary_[index_of(op)].reset();
  return copy;
}

FiniteAlgebra FiniteAlgebra::reduct(OpSet ops) const {
  FiniteAlgebra copy = *this;
  for (Op op : kAllOps) {
    if (!ops.contains(op)) copy.unary_[index_of(op)].reset();
  }
  return copy;
}

FiniteAlgebra FiniteAlgebra::with_names(std::vector<std::string> names) const {
  if (!names.empty() && names.size() != size_) {
    throw AlgebraError(AlgebraError::Kind::BadDimensions, "expected one name per element");
  }
  FiniteAlgebra copy = *this;
  copy.names_ = std::move(names);
  return copy;
}

std::string FiniteAlgebra::name(Element x) const {
  if (x < names_.size()) return names_[x];
  return std::to_string(x);
}

std::optional<Element> FiniteAlgebra::find_element(std::string_view token) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == token) return static_cast<Element>(i);
  }
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc() && ptr == token.data() + token.size() && value < size_) {
    return static_cast<Element>(value);
  }
  return std::nullopt;
}

AlgebraView FiniteAlgebra::view() const {
  AlgebraView v;
  v.size = size_;
  v.join = join_.data();
  v.meet = meet_.data();
  v.bottom = bottom_;
  v.top = top_;
  for (Op op : kAllOps) {
    const auto& t = unary_[index_of(op)];
    v.unary[index_of(op)] = t ? t->data() : nullptr;
  }
  return v;
}

bool FiniteAlgebra::same_tables(const FiniteAlgebra& other) const {
  return size_ == other.size_ && bottom_ == other.bottom_ && top_ == other.top_ &&
         join_ == other.join_ && meet_ == other.meet_ && unary_ == other.unary_;
}

FiniteAlgebra trivial_algebra(OpSet ops) {
  std::map<Op, Table> unary;
  for (Op op : ops.to_vector()) unary[op] = Table{0};
  return FiniteAlgebra::create(1, {0}, {0}, 0, 0, std::move(unary));
}

FiniteAlgebra chain_lattice(std::size_t n) {
  Table join(n * n), meet(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      join[x * n + y] = static_cast<Element>(std::max(x, y));
      meet[x * n + y] = static_cast<Element>(std::min(x, y));
    }
  }
  return FiniteAlgebra::create(n, std::move(join), std::move(meet), 0,
                               static_cast<Element>(n - 1));
}

}  // namespace tetra
