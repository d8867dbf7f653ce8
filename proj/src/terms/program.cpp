#include "tetra/program.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace tetra {

namespace {
constexpr std::size_t kMaxStack = 64;
}

Program::Program(const Term& term, const std::vector<std::string>& variables) {
  emit(term, variables);
  std::size_t depth = 0, peak = 0;
  for (const auto& ins : code_) {
    if (ins.code == Code::meet || ins.code == Code::join) {
      --depth;
    } else if (ins.code != Code::unary) {
      ++depth;
    }
    peak = std::max(peak, depth);
  }
  if (peak > kMaxStack) throw std::invalid_argument("term too deep to compile");
}

void Program::emit(const Term& t, const std::vector<std::string>& variables) {
  switch (t.kind()) {
    case Term::Kind::variable: {
      auto it = std::find(variables.begin(), variables.end(), t.name());
      code_.push_back({Code::variable, static_cast<std::uint8_t>(it - variables.begin())});
      break;
    }
    case Term::Kind::zero:
      code_.push_back({Code::zero, 0});
      break;
    case Term::Kind::one:
      code_.push_back({Code::one, 0});
      break;
    case Term::Kind::unary:
      emit(t.operand(), variables);
      code_.push_back({Code::unary, static_cast<std::uint8_t>(index_of(t.op()))});
      break;
    case Term::Kind::meet:
      emit(t.left(), variables);
      emit(t.right(), variables);
      code_.push_back({Code::meet, 0});
      break;
    case Term::Kind::join:
      emit(t.left(), variables);
      emit(t.right(), variables);
      code_.push_back({Code::join, 0});
      break;
  }
}

Element Program::run(const AlgebraView& v, const Element* valuation) const {
  std::array<Element, kMaxStack> stack;
  std::size_t sp = 0;
  for (const auto& ins : code_) {
    switch (ins.code) {
      case Code::variable:
        stack[sp++] = valuation[ins.arg];
        break;
      case Code::zero:
        stack[sp++] = v.bottom;
        break;
      case Code::one:
        stack[sp++] = v.top;
        break;
      case Code::unary: {
        Element& x = stack[sp - 1];
        if (x != kUnset) x = v.unary[ins.arg][x];
        break;
      }
      case Code::meet: {
        const Element y = stack[--sp];
        Element& x = stack[sp - 1];
        if (x == kUnset || y == kUnset) {
          x = (x == v.bottom || y == v.bottom) ? v.bottom : kUnset;
        } else {
          x = v.meet[x * v.size + y];
        }
        break;
      }
      case Code::join: {
        const Element y = stack[--sp];
        Element& x = stack[sp - 1];
        if (x == kUnset || y == kUnset) {
          x = (x == v.top || y == v.top) ? v.top : kUnset;
        } else {
          x = v.join[x * v.size + y];
        }
        break;
      }
    }
  }
  return stack[0];
}

CompiledSentence::CompiledSentence(const Sentence& s)
    : variables_(s.variables()), symbols_(s.symbols()) {
  if (variables_.size() > 255) throw std::invalid_argument("too many variables");
  for (const auto& p : s.premises()) {
    premises_.push_back({Program(p.identity_lhs(), variables_), Program(p.identity_rhs(), variables_)});
  }
  const auto& c = s.conclusion();
  conclusion_.push_back({Program(c.identity_lhs(), variables_), Program(c.identity_rhs(), variables_)});
}

CompiledSentence::Outcome CompiledSentence::evaluate(const AlgebraView& view,
                                                     const Element* valuation) const {
  bool premises_known = true;
  for (const auto& p : premises_) {
    const Element l = p.lhs.run(view, valuation), r = p.rhs.run(view, valuation);
    if (l == kUnset || r == kUnset) {
      premises_known = false;
    } else if (l != r) {
      return Outcome::satisfied;
    }
  }
  const auto& c = conclusion_.front();
  const Element l = c.lhs.run(view, valuation), r = c.rhs.run(view, valuation);
  if (l == kUnset || r == kUnset) return Outcome::unknown;
  if (l == r) return Outcome::satisfied;
  return premises_known ? Outcome::violated : Outcome::unknown;
}

std::optional<std::vector<Element>> CompiledSentence::find_violation(const AlgebraView& view) const {
  const std::size_t k = variables_.size();
  std::vector<Element> digits(k, 0);
  while (true) {
    if (evaluate(view, digits.data()) == Outcome::violated) return digits;
    std::size_t i = k;
    while (true) {
      if (i == 0) return std::nullopt;
      --i;
      if (++digits[i] < view.size) break;
      digits[i] = 0;
    }
  }
}

}  // namespace tetra
