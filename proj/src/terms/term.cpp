#include "tetra/term.hpp"

#include <algorithm>
#include <stdexcept>

#include "tetra/error.hpp"

namespace tetra {

struct Term::Node {
  Kind kind;
  Op op = Op::dm;
  std::string name;
  std::vector<Term> children;
  unsigned parens = 0;
};

Term Term::variable(std::string name) {
  if (name.empty()) throw std::invalid_argument("variable names must be nonempty");
  return Term(std::make_shared<const Node>(Node{Kind::variable, Op::dm, std::move(name), {}, 0}));
}

Term Term::zero() { return Term(std::make_shared<const Node>(Node{Kind::zero, Op::dm, {}, {}, 0})); }
Term Term::one() { return Term(std::make_shared<const Node>(Node{Kind::one, Op::dm, {}, {}, 0})); }

Term Term::unary(Op op, Term operand) {
  return Term(std::make_shared<const Node>(Node{Kind::unary, op, {}, {std::move(operand)}, 0}));
}

Term Term::meet(Term left, Term right) {
  return Term(std::make_shared<const Node>(
      Node{Kind::meet, Op::dm, {}, {std::move(left), std::move(right)}, 0}));
}

Term Term::join(Term left, Term right) {
  return Term(std::make_shared<const Node>(
      Node{Kind::join, Op::dm, {}, {std::move(left), std::move(right)}, 0}));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
Op Term::op() const { return node_->op; }
const Term& Term::operand() const { return node_->children.at(0); }
const Term& Term::left() const { return node_->children.at(0); }
const Term& Term::right() const { return node_->children.at(1); }
unsigned Term::parens() const { return node_->parens; }

Term Term::with_parens(unsigned count) const {
  Node copy = *node_;
  copy.parens = count;
  return Term(std::make_shared<const Node>(std::move(copy)));
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::variable:
      return node_->name == other.node_->name;
    case Kind::zero:
    case Kind::one:
      return true;
    case Kind::unary:
      return node_->op == other.node_->op && operand() == other.operand();
    case Kind::meet:
    case Kind::join:
      return left() == other.left() && right() == other.right();
  }
  return false;
}

OpSet Term::symbols() const {
  OpSet out;
  if (kind() == Kind::unary) out.insert(op());
  for (const auto& child : node_->children) out = out | child.symbols();
  return out;
}

void Term::collect_variables(std::vector<std::string>& out) const {
  if (kind() == Kind::variable) {
    out.push_back(name());
    return;
  }
  for (const auto& child : node_->children) child.collect_variables(out);
}

Sentence Sentence::identity(Term lhs, Term rhs) {
  return Sentence({}, Comparison{std::move(lhs), std::move(rhs), Relation::equal});
}

Sentence Sentence::inequality(Term lhs, Term rhs) {
  return Sentence({}, Comparison{std::move(lhs), std::move(rhs), Relation::less_equal});
}

Sentence Sentence::quasi_identity(std::vector<Comparison> premises, Comparison conclusion) {
  if (premises.empty()) throw std::invalid_argument("a quasi-identity needs at least one premise");
  return Sentence(std::move(premises), std::move(conclusion));
}

Sentence::Kind Sentence::kind() const {
  if (!premises_.empty()) return Kind::quasi_identity;
  return conclusion_.relation == Relation::equal ? Kind::identity : Kind::inequality;
}

std::vector<std::string> Sentence::variables() const {
  std::vector<std::string> out;
  for (const auto& p : premises_) {
    p.lhs.collect_variables(out);
    p.rhs.collect_variables(out);
  }
  conclusion_.lhs.collect_variables(out);
  conclusion_.rhs.collect_variables(out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OpSet Sentence::symbols() const {
  OpSet out = conclusion_.lhs.symbols() | conclusion_.rhs.symbols();
  for (const auto& p : premises_) out = out | p.lhs.symbols() | p.rhs.symbols();
  return out;
}

namespace {

int precedence(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::join:
      return 1;
    case Term::Kind::meet:
      return 2;
    default:
      return 3;
  }
}

void print(const Term& t, int required, std::string& out) {
  const unsigned wrap = std::max(t.parens(), precedence(t) < required ? 1u : 0u);
  out.append(wrap, '(');
  switch (t.kind()) {
    case Term::Kind::variable:
      out += t.name();
      break;
    case Term::Kind::zero:
      out += '0';
      break;
    case Term::Kind::one:
      out += '1';
      break;
    case Term::Kind::unary:
      out += spelling(t.op());
      out += ' ';
      print(t.operand(), 3, out);
      break;
    case Term::Kind::meet:
      print(t.left(), 2, out);
      out += " & ";
      print(t.right(), 3, out);
      break;
    case Term::Kind::join:
      print(t.left(), 1, out);
      out += " | ";
      print(t.right(), 2, out);
      break;
  }
  out.append(wrap, ')');
}

}  // namespace

std::string to_string(const Term& term) {
  std::string out;
  print(term, 0, out);
  return out;
}

std::string to_string(const Comparison& c) {
  return to_string(c.lhs) + (c.relation == Relation::equal ? " = " : " <= ") + to_string(c.rhs);
}

std::string to_string(const Sentence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.premises().size(); ++i) {
    out += to_string(s.premises()[i]);
    out += i + 1 < s.premises().size() ? ", " : " => ";
  }
  return out + to_string(s.conclusion());
}

SyntaxError::SyntaxError(std::size_t position, std::string expected, const std::string& text)
    : std::runtime_error("syntax error at position " + std::to_string(position) + ": expected " +
                         expected + (text.empty() ? "" : " in '" + text + "'")),
      position_(position),
      expected_(std::move(expected)) {}

EvalError::EvalError(Kind kind, std::string name)
    : std::runtime_error(kind == Kind::UnboundVariable ? "unbound variable " + name
                                                       : "unsupported symbol " + name),
      kind_(kind),
      name_(std::move(name)) {}

}  // namespace tetra
