#include <algorithm>
#include <map>
#include <set>

#include "tetra/program.hpp"
#include "tetra/search.hpp"

namespace tetra::search {

namespace {

struct Instance {
  std::uint32_t sentence;
  std::uint32_t code;  // valuation in base n, first variable most significant
};

class ModelSearch {
 public:
  ModelSearch(const FiniteAlgebra& lattice, const EnumerationConfig& config)
      : lattice_(lattice), n_(lattice.size()), ops_(config.signature.to_vector()) {
    for (Op op : ops_) tables_[index_of(op)].assign(n_, kUnset);
    view_ = lattice.view();
    for (Op op : ops_) view_.unary[index_of(op)] = tables_[index_of(op)].data();
    for (const auto& ax : config.system.axioms()) sentences_.emplace_back(ax.sentence);
    for (Element e = 0; e < n_; ++e) {
      for (Op op : ops_) slots_.push_back({op, e});
    }
  }

  void run(const std::function<bool(const FiniteAlgebra&)>& on_model) {
    on_model_ = &on_model;
    std::vector<Instance> all;
    for (std::uint32_t s = 0; s < sentences_.size(); ++s) {
      std::uint32_t count = 1;
      for (std::size_t i = 0; i < sentences_[s].variable_count(); ++i) count *= static_cast<std::uint32_t>(n_);
      for (std::uint32_t c = 0; c < count; ++c) all.push_back({s, c});
    }
    std::vector<Instance> pending;
    if (!filter(all, pending)) return;
    descend(0, pending);
  }

 private:
  // Drops instances that are now satisfied; false if one is violated.
  bool filter(const std::vector<Instance>& in, std::vector<Instance>& out) {
    out.clear();
    std::array<Element, 32> valuation{};
    for (const Instance& inst : in) {
      const auto& sentence = sentences_[inst.sentence];
      std::uint32_t code = inst.code;
      for (std::size_t i = sentence.variable_count(); i > 0; --i) {
        valuation[i - 1] = static_cast<Element>(code % n_);
        code /= static_cast<std::uint32_t>(n_);
      }
      switch (sentence.evaluate(view_, valuation.data())) {
        case CompiledSentence::Outcome::violated:
          return false;
        case CompiledSentence::Outcome::unknown:
          out.push_back(inst);
          break;
        case CompiledSentence::Outcome::satisfied:
          break;
      }
    }
    return true;
  }

  bool descend(std::size_t depth, const std::vector<Instance>& pending) {
    if (depth == slots_.size()) return emit();
    const auto [op, e] = slots_[depth];
    Table& table = tables_[index_of(op)];
    std::vector<Instance> next;
    next.reserve(pending.size());
    for (Element value = 0; value < n_; ++value) {
      table[e] = value;
      if (filter(pending, next) && !descend(depth + 1, next)) {
        table[e] = kUnset;
        return false;
      }
    }
    table[e] = kUnset;
    return true;
  }

  bool emit() {
    FiniteAlgebra model = lattice_;
    for (Op op : ops_) model = model.with_op(op, tables_[index_of(op)]);
    return (*on_model_)(model);
  }

  const FiniteAlgebra& lattice_;
  std::size_t n_;
  std::vector<Op> ops_;
  std::array<Table, kOpCount> tables_;
  AlgebraView view_;
  std::vector<CompiledSentence> sentences_;
  std::vector<std::pair<Op, Element>> slots_;
  const std::function<bool(const FiniteAlgebra&)>* on_model_ = nullptr;
};

// Least relabeling of the signature tables under the given automorphisms.
std::pair<std::vector<Element>, const IsoMapping*> least_image(const FiniteAlgebra& model,
                                                               const std::vector<Op>& ops,
                                                               const std::vector<IsoMapping>& autos) {
  const std::size_t n = model.size();
  std::vector<Element> best, key(ops.size() * n);
  const IsoMapping* arg = nullptr;
  for (const auto& sigma : autos) {
    for (std::size_t k = 0; k < ops.size(); ++k) {
      for (Element x = 0; x < n; ++x) key[k * n + sigma(x)] = sigma(model.apply(ops[k], x));
    }
    if (!arg || key < best) {
      best = key;
      arg = &sigma;
    }
  }
  return {best, arg};
}

void validate(const FiniteAlgebra& lattice, const EnumerationConfig& config, const Ceilings& ceilings) {
  if (config.max_size < 1) throw SearchError(SearchError::Kind::BadConfig, "max_size must be at least 1");
  if (config.signature.empty()) throw SearchError(SearchError::Kind::BadConfig, "empty signature");
  if (lattice.size() > ceilings.models || lattice.size() > config.max_size) {
    throw SearchError(SearchError::Kind::SizeTooLarge,
                      "model search on " + std::to_string(lattice.size()) +
                          " elements exceeds the bound " +
                          std::to_string(std::min(ceilings.models, config.max_size)));
  }
  const OpSet available = config.signature | lattice.signature();
  for (const auto& ax : config.system.axioms()) {
    for (Op op : ax.sentence.symbols().to_vector()) {
      if (!available.contains(op)) throw EvalError(EvalError::Kind::UnsupportedSymbol, std::string(spelling(op)));
    }
  }
}

}  // namespace

void for_each_model(const FiniteAlgebra& lattice, const EnumerationConfig& config,
                    const ModelVisitor& visit, const Ceilings& ceilings) {
  validate(lattice, config, ceilings);
  FiniteAlgebra fixed = lattice.with_names({});
  for (Op op : config.signature.to_vector()) fixed = fixed.without_op(op);

  ModelSearch search(fixed, config);
  if (!config.iso_reduce) {
    search.run(visit);
    return;
  }
  const auto autos = automorphisms(fixed);
  const auto ops = config.signature.to_vector();
  std::set<std::vector<Element>> seen;
  search.run([&](const FiniteAlgebra& model) {
    auto [key, sigma] = least_image(model, ops, autos);
    if (!seen.insert(key).second) return true;
    return visit(sigma->is_identity() ? model : relabel(model, *sigma));
  });
}

std::vector<FiniteAlgebra> enumerate_models(const FiniteAlgebra& lattice, const EnumerationConfig& config,
                                            const Ceilings& ceilings) {
  std::vector<std::pair<std::vector<Element>, FiniteAlgebra>> found;
  const auto ops = config.signature.to_vector();
  for_each_model(
      lattice, config,
      [&](const FiniteAlgebra& model) {
        std::vector<Element> key;
        for (Op op : ops) {
          auto t = model.op(op);
          key.insert(key.end(), t.begin(), t.end());
        }
        found.emplace_back(std::move(key), model);
        return true;
      },
      ceilings);
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<FiniteAlgebra> out;
  for (auto& [key, model] : found) out.push_back(std::move(model));
  return out;
}

std::vector<FiniteAlgebra> enumerate_all_models(const EnumerationConfig& config, const Ceilings& ceilings) {
  std::vector<FiniteAlgebra> out;
  for (std::size_t n = 1; n <= config.max_size; ++n) {
    for (const auto& lattice : enumerate_distributive_lattices(n, ceilings)) {
      auto models = enumerate_models(lattice, config, ceilings);
      out.insert(out.end(), std::make_move_iterator(models.begin()), std::make_move_iterator(models.end()));
    }
  }
  return out;
}

}  // namespace tetra::search
