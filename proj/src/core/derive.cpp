#include "tetra/algebra.hpp"

namespace tetra {

namespace {

void require(const FiniteAlgebra& a, Op op) {
  if (!a.has(op)) {
    throw AlgebraError(AlgebraError::Kind::MissingOperation,
                       "operation " + std::string(spelling(op)) + " is required", {},
                       std::string(spelling(op)));
  }
}

// Installs `table` as `op`, or checks it against the table already present.
FiniteAlgebra install(const FiniteAlgebra& a, Op op, Table table) {
  if (a.has(op)) {
    auto existing = a.op(op);
    for (std::size_t x = 0; x < table.size(); ++x) {
      if (existing[x] != table[x]) {
        throw AlgebraError(AlgebraError::Kind::ConflictingDerivation,
                           "derived " + std::string(spelling(op)) + " disagrees with the given table at " +
                               a.name(static_cast<Element>(x)),
                           {static_cast<Element>(x)}, std::string(spelling(op)));
      }
    }
    return a;
  }
  return a.with_op(op, std::move(table));
}

using Selector = bool (*)(const FiniteAlgebra&, Element, Element);

// The unique element of {y : admissible(x, y)} not dominated under `below`.
PseudocomplementResult extremal(const FiniteAlgebra& a, bool (*admissible)(const FiniteAlgebra&, Element, Element),
                                Selector below) {
  const std::size_t n = a.size();
  Table out(n);
  for (Element x = 0; x < n; ++x) {
    std::vector<Element> candidates;
    for (Element y = 0; y < n; ++y) {
      if (admissible(a, x, y)) candidates.push_back(y);
    }
    std::vector<Element> maximal;
    for (Element y : candidates) {
      bool dominated = false;
      for (Element z : candidates) {
        if (z != y && below(a, y, z)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) maximal.push_back(y);
    }
    if (maximal.size() != 1) {
      return PseudocomplementFailure{x, maximal[0], maximal[1]};
    }
    out[x] = maximal.front();
  }
  return out;
}

Table unwrap(PseudocomplementResult result, const FiniteAlgebra& a, const char* what) {
  if (auto* t = std::get_if<Table>(&result)) return std::move(*t);
  const auto& f = std::get<PseudocomplementFailure>(result);
  throw AlgebraError(AlgebraError::Kind::NotPseudocomplemented,
                     std::string(what) + " of " + a.name(f.x) + " does not exist: " +
                         a.name(f.first) + " and " + a.name(f.second) +
                         " are incomparable extremal candidates",
                     {f.x, f.first, f.second});
}

}  // namespace

FiniteAlgebra derive_strong_weak(const FiniteAlgebra& a) {
  require(a, Op::dm);
  require(a, Op::nabla);
  const std::size_t n = a.size();
  Table strong(n), weak(n);
  for (Element x = 0; x < n; ++x) {
    strong[x] = a.apply(Op::dm, a.apply(Op::nabla, x));
    weak[x] = a.apply(Op::nabla, a.apply(Op::dm, x));
  }
  return install(install(a, Op::sneg, std::move(strong)), Op::wneg, std::move(weak));
}

Table dm_by_d3(const FiniteAlgebra& a) {
  require(a, Op::sneg);
  require(a, Op::wneg);
  Table out(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    out[x] = a.join(a.meet(x, a.apply(Op::wneg, x)), a.apply(Op::sneg, x));
  }
  return out;
}

FiniteAlgebra derive_modal(const FiniteAlgebra& a) {
  require(a, Op::sneg);
  require(a, Op::wneg);
  const std::size_t n = a.size();
  Table nabla(n), dm(n);
  for (Element x = 0; x < n; ++x) {
    const Element s = a.apply(Op::sneg, x);
    nabla[x] = a.apply(Op::sneg, s);
    dm[x] = a.meet(a.join(x, s), a.apply(Op::wneg, x));
  }
  const Table d3 = dm_by_d3(a);
  for (Element x = 0; x < n; ++x) {
    if (d3[x] != dm[x]) {
      throw AlgebraError(AlgebraError::Kind::D2D3Disagreement,
                         "(x | sneg x) & wneg x and (x & wneg x) | sneg x differ at " + a.name(x),
                         {x});
    }
  }
  return install(install(a, Op::nabla, std::move(nabla)), Op::dm, std::move(dm));
}

PseudocomplementResult pseudocomplement(const FiniteAlgebra& a) {
  return extremal(
      a, [](const FiniteAlgebra& alg, Element x, Element y) { return alg.meet(x, y) == alg.bottom(); },
      [](const FiniteAlgebra& alg, Element y, Element z) { return alg.meet(y, z) == y; });
}

PseudocomplementResult dual_pseudocomplement(const FiniteAlgebra& a) {
  return extremal(
      a, [](const FiniteAlgebra& alg, Element x, Element y) { return alg.join(x, y) == alg.top(); },
      [](const FiniteAlgebra& alg, Element y, Element z) { return alg.meet(z, y) == z; });
}

Table pseudocomplement_table(const FiniteAlgebra& a) {
  return unwrap(pseudocomplement(a), a, "pseudocomplement");
}

Table dual_pseudocomplement_table(const FiniteAlgebra& a) {
  return unwrap(dual_pseudocomplement(a), a, "dual pseudocomplement");
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.signature() != b.signature()) {
    throw AlgebraError(AlgebraError::Kind::SignatureMismatch,
                       "product factors have signatures " + a.signature().to_string() + " and " +
                           b.signature().to_string());
  }
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  auto code = [nb](std::size_t i, std::size_t j) { return static_cast<Element>(i * nb + j); };
  Table join(n * n), meet(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto pi = static_cast<Element>(p / nb), pj = static_cast<Element>(p % nb);
    for (std::size_t q = 0; q < n; ++q) {
      const auto qi = static_cast<Element>(q / nb), qj = static_cast<Element>(q % nb);
      join[p * n + q] = code(a.join(pi, qi), b.join(pj, qj));
      meet[p * n + q] = code(a.meet(pi, qi), b.meet(pj, qj));
    }
  }
  std::map<Op, Table> unary;
  for (Op op : a.signature().to_vector()) {
    Table t(n);
    for (std::size_t p = 0; p < n; ++p) {
      t[p] = code(a.apply(op, static_cast<Element>(p / nb)), b.apply(op, static_cast<Element>(p % nb)));
    }
    unary[op] = std::move(t);
  }
  std::vector<std::string> names;
  if (a.has_names() && b.has_names()) {
    for (std::size_t p = 0; p < n; ++p) {
      names.push_back("(" + a.name(static_cast<Element>(p / nb)) + "," +
                      b.name(static_cast<Element>(p % nb)) + ")");
    }
  }
  return FiniteAlgebra::create(n, std::move(join), std::move(meet), code(a.bottom(), b.bottom()),
                               code(a.top(), b.top()), std::move(unary), std::move(names));
}

}  // namespace tetra
