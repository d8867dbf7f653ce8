#include "tetra/eval.hpp"

#include <set>
#include <stdexcept>

#include "tetra/error.hpp"

namespace tetra {

namespace {

void require_signature(const FiniteAlgebra& a, OpSet symbols) {
  for (Op op : symbols.to_vector()) {
    if (!a.has(op)) throw EvalError(EvalError::Kind::UnsupportedSymbol, std::string(spelling(op)));
  }
}

Element eval_unchecked(const Term& t, const FiniteAlgebra& a,
                       const std::map<std::string, Element>& v) {
  switch (t.kind()) {
    case Term::Kind::variable: {
      auto it = v.find(t.name());
      if (it == v.end()) throw EvalError(EvalError::Kind::UnboundVariable, t.name());
      return it->second;
    }
    case Term::Kind::zero:
      return a.bottom();
    case Term::Kind::one:
      return a.top();
    case Term::Kind::unary:
      return a.apply(t.op(), eval_unchecked(t.operand(), a, v));
    case Term::Kind::meet:
      return a.meet(eval_unchecked(t.left(), a, v), eval_unchecked(t.right(), a, v));
    case Term::Kind::join:
      return a.join(eval_unchecked(t.left(), a, v), eval_unchecked(t.right(), a, v));
  }
  return a.bottom();
}

bool satisfied(const Comparison& c, const FiniteAlgebra& a, const std::map<std::string, Element>& v) {
  return eval_unchecked(c.identity_lhs(), a, v) == eval_unchecked(c.identity_rhs(), a, v);
}

}  // namespace

Element eval(const Term& term, const FiniteAlgebra& a, const std::map<std::string, Element>& valuation) {
  require_signature(a, term.symbols());
  for (const auto& [name, value] : valuation) {
    if (value >= a.size()) {
      throw AlgebraError(AlgebraError::Kind::IndexOutOfRange,
                         "value of " + name + " is outside the carrier", {value});
    }
  }
  return eval_unchecked(term, a, valuation);
}

AxiomSystem::AxiomSystem(std::string name, OpSet required, std::vector<Axiom> axioms)
    : name_(std::move(name)), required_(required), axioms_(std::move(axioms)) {
  std::set<std::string> seen;
  for (const auto& ax : axioms_) {
    if (!seen.insert(ax.label).second) {
      throw std::invalid_argument("duplicate label " + ax.label + " in " + name_);
    }
    if (!ax.sentence.symbols().subset_of(required_)) {
      throw std::invalid_argument("sentence " + ax.label + " uses symbols outside " +
                                  required_.to_string());
    }
  }
}

std::vector<std::string> AxiomSystem::labels() const {
  std::vector<std::string> out;
  for (const auto& ax : axioms_) out.push_back(ax.label);
  return out;
}

const Axiom* AxiomSystem::find(std::string_view label) const {
  for (const auto& ax : axioms_) {
    if (ax.label == label) return &ax;
  }
  return nullptr;
}

AxiomSystem AxiomSystem::without(std::string_view label) const {
  std::vector<Axiom> rest;
  for (const auto& ax : axioms_) {
    if (ax.label != label) rest.push_back(ax);
  }
  return AxiomSystem(name_ + "-" + std::string(label), required_, std::move(rest));
}

AxiomSystem AxiomSystem::renamed(std::string name) const {
  AxiomSystem copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

AxiomSystem AxiomSystem::combine(std::string name, const std::vector<AxiomSystem>& parts) {
  OpSet required;
  std::vector<Axiom> all;
  for (const auto& part : parts) {
    required = required | part.required_symbols();
    all.insert(all.end(), part.axioms().begin(), part.axioms().end());
  }
  return AxiomSystem(std::move(name), required, std::move(all));
}

Verdict holds(const FiniteAlgebra& a, const Sentence& sentence) {
  require_signature(a, sentence.symbols());
  const auto vars = sentence.variables();
  const std::size_t n = a.size(), k = vars.size();
  std::vector<Element> digits(k, 0);
  std::map<std::string, Element> v;
  for (const auto& name : vars) v[name] = 0;
  while (true) {
    for (std::size_t i = 0; i < k; ++i) v[vars[i]] = digits[i];
    bool premises_hold = true;
    for (const auto& p : sentence.premises()) {
      if (!satisfied(p, a, v)) {
        premises_hold = false;
        break;
      }
    }
    if (premises_hold && !satisfied(sentence.conclusion(), a, v)) {
      Verdict out{Verdict::Status::fails, {}};
      for (std::size_t i = 0; i < k; ++i) out.counterexample.emplace_back(vars[i], digits[i]);
      return out;
    }
    // Odometer with the last variable fastest, i.e. lexicographic order.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++digits[i] < n) break;
      digits[i] = 0;
      if (i == 0) return Verdict{};
    }
    if (k == 0) return Verdict{};
  }
}

bool CheckReport::all_hold() const {
  for (const auto& e : entries) {
    if (!e.verdict.holds()) return false;
  }
  return true;
}

const LabeledVerdict* CheckReport::first_failure() const {
  for (const auto& e : entries) {
    if (e.verdict.fails()) return &e;
  }
  return nullptr;
}

const LabeledVerdict* CheckReport::find(std::string_view label) const {
  for (const auto& e : entries) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

CheckReport check_system(const FiniteAlgebra& a, const AxiomSystem& system, bool full) {
  CheckReport report;
  bool failed = false;
  for (const auto& ax : system.axioms()) {
    if (failed && !full) {
      report.entries.push_back({ax.label, Verdict{Verdict::Status::skipped, {}}});
      continue;
    }
    Verdict v = holds(a, ax.sentence);
    failed = failed || v.fails();
    report.entries.push_back({ax.label, std::move(v)});
  }
  return report;
}

std::string format_valuation(const FiniteAlgebra& a, const Valuation& valuation) {
  std::string out;
  for (const auto& [name, value] : valuation) {
    if (!out.empty()) out += ',';
    out += name + "=" + a.name(value);
  }
  return out;
}

std::string format_valuation_indices(const Valuation& valuation) {
  std::string out;
  for (const auto& [name, value] : valuation) {
    if (!out.empty()) out += ',';
    out += name + "=" + std::to_string(value);
  }
  return out;
}

std::string format_report(const FiniteAlgebra& a, const CheckReport& report, bool use_names) {
  std::string out;
  for (const auto& e : report.entries) {
    out += "VERDICT " + e.label + " ";
    switch (e.verdict.status) {
      case Verdict::Status::holds:
        out += "HOLDS";
        break;
      case Verdict::Status::fails:
        out += "FAILS ";
        out += use_names ? format_valuation(a, e.verdict.counterexample)
                         : format_valuation_indices(e.verdict.counterexample);
        break;
      case Verdict::Status::skipped:
        out += "SKIPPED";
        break;
    }
    out += "\n";
  }
  return out;
}

}  // namespace tetra
