#include "tetra/program.hpp"
#include "tetra/search.hpp"

namespace tetra::search {

std::string role_name(Witness::Role role) {
  switch (role) {
    case Witness::Role::satisfies_all_but_one:
      return "satisfies-all-but-one";
    case Witness::Role::counterexample_to_entailment:
      return "counterexample-to-entailment";
    case Witness::Role::non_equivalence:
      return "non-equivalence";
  }
  return "unknown";
}

namespace {

bool fails_at(const FiniteAlgebra& a, const Sentence& s, const Valuation& valuation) {
  const Verdict v = holds(a, s);
  return v.fails() && v.counterexample == valuation;
}

Valuation named(const CompiledSentence& s, const std::vector<Element>& digits) {
  Valuation out;
  for (std::size_t i = 0; i < digits.size(); ++i) out.emplace_back(s.variables()[i], digits[i]);
  return out;
}

struct Hit {
  FiniteAlgebra algebra;
  Valuation valuation;
};

// Smallest model of `system` (size, then lattice order, then table order)
// on which `target` fails.
std::optional<Hit> first_countermodel(const AxiomSystem& system, OpSet signature, const Sentence& target,
                                      std::size_t max_n, const Ceilings& ceilings) {
  const CompiledSentence compiled(target);
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const auto& lattice : enumerate_distributive_lattices(n, ceilings)) {
      std::optional<Hit> hit;
      EnumerationConfig config{max_n, signature, system, false};
      for_each_model(
          lattice, config,
          [&](const FiniteAlgebra& model) {
            if (auto digits = compiled.find_violation(model.view())) {
              hit = Hit{model, named(compiled, *digits)};
              return false;
            }
            return true;
          },
          ceilings);
      if (hit) return hit;
    }
  }
  return std::nullopt;
}

}  // namespace

bool reverify(const Witness& w, const AxiomSystem& system, const std::optional<Sentence>& sentence) {
  switch (w.role) {
    case Witness::Role::satisfies_all_but_one: {
      const Axiom* target = system.find(w.label);
      if (!target) return false;
      if (!check_system(w.algebra, system.without(w.label)).all_hold()) return false;
      return fails_at(w.algebra, target->sentence, w.valuation);
    }
    case Witness::Role::counterexample_to_entailment:
      if (!sentence || !check_system(w.algebra, system).all_hold()) return false;
      return fails_at(w.algebra, *sentence, w.valuation);
    case Witness::Role::non_equivalence:
      if (!sentence) return false;
      return check_system(w.algebra, system).all_hold() && fails_at(w.algebra, *sentence, w.valuation);
  }
  return false;
}

EntailmentResult check_entailment(const AxiomSystem& system, const Sentence& sentence, std::size_t max_n,
                                  const Ceilings& ceilings) {
  const OpSet signature = system.required_symbols() | sentence.symbols();
  if (signature.empty()) throw SearchError(SearchError::Kind::BadConfig, "system has no unary symbols");
  EntailmentResult result;
  result.bound = max_n;
  if (auto hit = first_countermodel(system, signature, sentence, max_n, ceilings)) {
    result.witness = Witness{Witness::Role::counterexample_to_entailment, to_string(sentence),
                             std::move(hit->algebra), std::move(hit->valuation)};
  }
  return result;
}

IndependenceResult check_independence(const AxiomSystem& system, std::size_t max_n, const Ceilings& ceilings) {
  if (system.required_symbols().empty()) {
    throw SearchError(SearchError::Kind::BadConfig, "system has no unary symbols");
  }
  IndependenceResult result{system.name(), max_n, {}};
  for (const auto& ax : system.axioms()) {
    IndependenceEntry entry{ax.label, std::nullopt};
    const AxiomSystem rest = system.without(ax.label);
    if (auto hit = first_countermodel(rest, system.required_symbols(), ax.sentence, max_n, ceilings)) {
      entry.witness = Witness{Witness::Role::satisfies_all_but_one, ax.label, std::move(hit->algebra),
                              std::move(hit->valuation)};
    }
    result.entries.push_back(std::move(entry));
  }
  return result;
}

std::string format_independence(const IndependenceResult& result) {
  std::string out = "INDEPENDENCE " + result.system + " up to n=" + std::to_string(result.bound) + "\n";
  for (const auto& e : result.entries) {
    if (!e.witness) {
      out += e.label + " NOT-FOUND up to n=" + std::to_string(result.bound) + "\n";
      continue;
    }
    const auto& a = e.witness->algebra;
    out += e.label + " WITNESS size=" + std::to_string(a.size()) + " hash=" + canonical_hash(a) +
           " at " + format_valuation_indices(e.witness->valuation) + "\n";
  }
  return out;
}

std::string format_entailment(const EntailmentResult& result, const std::string& system,
                              const std::string& sentence) {
  std::string out = "ENTAILMENT " + system + " |- " + sentence + "\n";
  if (result.holds_up_to_bound()) {
    out += "HOLDS up to n=" + std::to_string(result.bound) + " (bounded check, not a proof)\n";
    return out;
  }
  const auto& a = result.witness->algebra;
  out += "COUNTERMODEL size=" + std::to_string(a.size()) + " hash=" + canonical_hash(a) + " at " +
         format_valuation_indices(result.witness->valuation) + "\n";
  out += format_algebra(a);
  return out;
}

}  // namespace tetra::search
