#include "tetra/structure.hpp"

#include <map>

#include "tetra/catalog.hpp"

namespace tetra::structure {

namespace {

const OpSet kModal{Op::dm, Op::nabla};

FiniteAlgebra block(const char* name) {
  const auto& m = catalog::get_model(name).algebra;
  return m.reduct(kModal).with_names({});
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

FiniteAlgebra checked_reduct(const FiniteAlgebra& a) {
  if (!a.signature().contains(Op::dm) || !a.signature().contains(Op::nabla)) {
    throw StructureError(StructureError::Kind::NotATMA, "algebra lacks dm or nabla");
  }
  const auto report = check_system(a, catalog::get_system("TMA"), false);
  if (const auto* f = report.first_failure()) {
    throw StructureError(StructureError::Kind::NotATMA,
                         "not a TMA: " + f->label + " fails at " + format_valuation(a, f->verdict.counterexample));
  }
  return a.reduct(kModal).with_names({});
}

template <class Visit>
void each_factorization(std::size_t n, Visit visit) {
  for (std::size_t k = 0; power(4, k) <= n; ++k) {
    for (std::size_t j = 0; power(4, k) * power(3, j) <= n; ++j) {
      for (std::size_t i = 0; power(4, k) * power(3, j) * power(2, i) <= n; ++i) {
        if (power(4, k) * power(3, j) * power(2, i) == n && !visit(i, j, k)) return;
      }
    }
  }
}

}  // namespace

std::size_t Decomposition::size() const { return power(2, t2) * power(3, t3) * power(4, t4); }

const FiniteAlgebra& t2_block() {
  static const FiniteAlgebra b = block("T2");
  return b;
}
const FiniteAlgebra& t3_block() {
  static const FiniteAlgebra b = block("T3");
  return b;
}
const FiniteAlgebra& t4_block() {
  static const FiniteAlgebra b = block("M4_DIAMOND");
  return b;
}

FiniteAlgebra tma_product(std::size_t t2, std::size_t t3, std::size_t t4) {
  FiniteAlgebra out = trivial_algebra(kModal);
  for (std::size_t i = 0; i < t2; ++i) out = direct_product(out, t2_block());
  for (std::size_t i = 0; i < t3; ++i) out = direct_product(out, t3_block());
  for (std::size_t i = 0; i < t4; ++i) out = direct_product(out, t4_block());
  return out;
}

std::vector<Decomposition> all_decompositions(const FiniteAlgebra& a) {
  const FiniteAlgebra target = checked_reduct(a);
  std::vector<Decomposition> out;
  each_factorization(a.size(), [&](std::size_t i, std::size_t j, std::size_t k) {
    if (auto iso = find_isomorphism(tma_product(i, j, k), target)) out.push_back({i, j, k, *iso});
    return true;
  });
  return out;
}

Decomposition decompose_tma(const FiniteAlgebra& a) {
  const FiniteAlgebra target = checked_reduct(a);
  std::optional<Decomposition> found;
  each_factorization(a.size(), [&](std::size_t i, std::size_t j, std::size_t k) {
    if (auto iso = find_isomorphism(tma_product(i, j, k), target)) {
      found = Decomposition{i, j, k, *iso};
      return false;
    }
    return true;
  });
  if (!found) {
    throw StructureError(StructureError::Kind::NoDecompositionFound,
                         "no product of T2, T3, T4 is isomorphic to this " + std::to_string(a.size()) +
                             "-element TMA");
  }
  return *found;
}

std::string format_decomposition(const Decomposition& d) {
  std::string out = "FACTORS T2^" + std::to_string(d.t2) + " T3^" + std::to_string(d.t3) + " T4^" +
                    std::to_string(d.t4) + "\nISO";
  for (Element x : d.iso.image) out += " " + std::to_string(x);
  return out + "\n";
}

std::string status_name(MdmpVerdict::Status status) {
  switch (status) {
    case MdmpVerdict::Status::yes:
      return "yes";
    case MdmpVerdict::Status::h1_fails:
      return "no-H1-fails";
    case MdmpVerdict::Status::not_pseudocomplemented:
      return "no-not-pseudocomplemented";
  }
  return "unknown";
}

MdmpVerdict is_mdmp(const FiniteAlgebra& a) {
  if (!a.has(Op::dm)) throw StructureError(StructureError::Kind::NotDeMorgan, "algebra lacks dm");
  const auto report = check_system(a, catalog::get_system("DE_MORGAN"), false);
  if (const auto* f = report.first_failure()) {
    throw StructureError(StructureError::Kind::NotDeMorgan,
                         "not a De Morgan algebra: " + f->label + " fails at " +
                             format_valuation(a, f->verdict.counterexample));
  }
  const auto pc = pseudocomplement(a);
  if (const auto* failure = std::get_if<PseudocomplementFailure>(&pc)) {
    return {MdmpVerdict::Status::not_pseudocomplemented, failure->x};
  }
  const FiniteAlgebra with_pc = a.reduct(OpSet{Op::dm}).with_op(Op::pc, std::get<Table>(pc));
  const Verdict h1 = holds(with_pc, catalog::get_system("MDMP").find("H1")->sentence);
  if (h1.fails()) return {MdmpVerdict::Status::h1_fails, h1.counterexample.front().second};
  return {};
}

search::TheoremReport probe_finite_tma_structure(std::size_t max_n, const search::Ceilings& ceilings) {
  search::TheoremReport report{"finite-tma-structure", max_n, {}, {}};
  const auto& tma = catalog::get_system("TMA");
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::size_t count = 0;
    std::map<std::string, std::size_t> factors;
    for (const auto& lattice : search::enumerate_distributive_lattices(n, ceilings)) {
      search::EnumerationConfig config{max_n, kModal, tma, true};
      search::for_each_model(
          lattice, config,
          [&](const FiniteAlgebra& a) {
            ++count;
            const std::string id = "size " + std::to_string(n) + " model " + canonical_hash(a);
            auto& pc_line = report.line("pseudocomplemented");
            ++pc_line.models;
            if (!std::holds_alternative<Table>(pseudocomplement(a))) pc_line.record_failure(id);

            auto& mdmp_line = report.line("modal De Morgan p-algebra");
            ++mdmp_line.models;
            const MdmpVerdict v = is_mdmp(a);
            if (v.status != MdmpVerdict::Status::yes) {
              mdmp_line.record_failure(id + ": " + status_name(v.status) + " at " + std::to_string(v.witness));
            }

            auto& dec_line = report.line("product of T2, T3, T4");
            ++dec_line.models;
            try {
              const Decomposition d = decompose_tma(a);
              const FiniteAlgebra rebuilt = relabel(tma_product(d.t2, d.t3, d.t4), d.iso);
              if (!rebuilt.same_tables(a.reduct(kModal))) {
                dec_line.record_failure(id + ": product does not reproduce the tables");
              } else {
                ++factors["T2^" + std::to_string(d.t2) + " T3^" + std::to_string(d.t3) + " T4^" +
                          std::to_string(d.t4)];
              }
            } catch (const StructureError& e) {
              dec_line.record_failure(id + ": " + e.what());
            }
            return true;
          },
          ceilings);
    }
    std::string note = "n=" + std::to_string(n) + ": " + std::to_string(count) + " TMA models";
    for (const auto& [f, c] : factors) note += "; " + f + " x" + std::to_string(c);
    report.notes.push_back(note);
  }
  return report;
}

}  // namespace tetra::structure
