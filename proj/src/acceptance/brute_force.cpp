#include "tetra/brute_force.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace tetra::brute_force {

namespace {

using Order = std::vector<std::vector<bool>>;

Order order_of(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  Order le(n, std::vector<bool>(n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) le[x][y] = a.meet(x, y) == x;
  }
  return le;
}

bool is_partial_order(const Order& le) {
  const std::size_t n = le.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && le[x][y] && le[y][x]) return false;
      for (std::size_t z = 0; z < n; ++z) {
        if (le[x][y] && le[y][z] && !le[x][z]) return false;
      }
    }
  }
  return true;
}

// Least upper bound (or greatest lower bound with up == false), if any.
std::optional<std::size_t> bound(const Order& le, std::size_t x, std::size_t y, bool up) {
  const std::size_t n = le.size();
  auto below = [&](std::size_t a, std::size_t b) { return up ? le[a][b] : le[b][a]; };
  for (std::size_t z = 0; z < n; ++z) {
    if (!below(x, z) || !below(y, z)) continue;
    bool least = true;
    for (std::size_t w = 0; w < n && least; ++w) {
      if (below(x, w) && below(y, w) && !below(z, w)) least = false;
    }
    if (least) return z;
  }
  return std::nullopt;
}

std::optional<FiniteAlgebra> as_distributive_lattice(const Order& le) {
  const std::size_t n = le.size();
  Table join(n * n), meet(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto j = bound(le, x, y, true), m = bound(le, x, y, false);
      if (!j || !m) return std::nullopt;
      join[x * n + y] = static_cast<Element>(*j);
      meet[x * n + y] = static_cast<Element>(*m);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (meet[x * n + join[y * n + z]] != join[meet[x * n + y] * n + meet[x * n + z]]) return std::nullopt;
      }
    }
  }
  std::size_t bottom = 0, top = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (std::all_of(le[x].begin(), le[x].end(), [](bool b) { return b; })) bottom = x;
    bool is_top = true;
    for (std::size_t y = 0; y < n; ++y) is_top = is_top && le[y][x];
    if (is_top) top = x;
  }
  return FiniteAlgebra::create(n, std::move(join), std::move(meet), static_cast<Element>(bottom),
                               static_cast<Element>(top));
}

std::vector<std::vector<Element>> order_automorphisms(const Order& le) {
  const std::size_t n = le.size();
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<std::vector<Element>> out;
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) ok = le[x][y] == le[p[x]][p[y]];
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

bool order_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size() != b.size()) return false;
  const Order la = order_of(a), lb = order_of(b);
  const std::size_t n = a.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) ok = la[x][y] == lb[p[x]][p[y]];
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::vector<FiniteAlgebra> distributive_lattices(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) pairs.emplace_back(x, y);
    }
  }
  std::vector<FiniteAlgebra> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Order le(n, std::vector<bool>(n));
    for (std::size_t x = 0; x < n; ++x) le[x][x] = true;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1u) le[pairs[b].first][pairs[b].second] = true;
    }
    if (!is_partial_order(le)) continue;
    auto lattice = as_distributive_lattice(le);
    if (!lattice) continue;
    const bool known = std::any_of(out.begin(), out.end(),
                                   [&](const FiniteAlgebra& seen) { return order_isomorphic(seen, *lattice); });
    if (!known) out.push_back(std::move(*lattice));
  }
  return out;
}

ModelCount count_models(const FiniteAlgebra& lattice, OpSet signature, const AxiomSystem& system) {
  const std::size_t n = lattice.size();
  const auto ops = signature.to_vector();
  const std::size_t cells = n * ops.size();
  const auto autos = order_automorphisms(order_of(lattice));

  ModelCount count;
  std::set<std::vector<Element>> classes;
  std::vector<Element> digits(cells, 0);
  while (true) {
    FiniteAlgebra a = lattice;
    for (std::size_t k = 0; k < ops.size(); ++k) {
      a = a.with_op(ops[k], Table(digits.begin() + static_cast<std::ptrdiff_t>(k * n),
                                  digits.begin() + static_cast<std::ptrdiff_t>((k + 1) * n)));
    }
    if (check_system(a, system, false).all_hold()) {
      ++count.labelled;
      std::vector<Element> best;
      for (const auto& p : autos) {
        std::vector<Element> image(cells);
        for (std::size_t k = 0; k < ops.size(); ++k) {
          for (std::size_t x = 0; x < n; ++x) image[k * n + p[x]] = p[digits[k * n + x]];
        }
        if (best.empty() || image < best) best = image;
      }
      classes.insert(best);
    }
    std::size_t i = cells;
    while (i > 0) {
      --i;
      if (++digits[i] < n) break;
      digits[i] = 0;
      if (i == 0) {
        count.classes = classes.size();
        return count;
      }
    }
    if (cells == 0) break;
  }
  count.classes = classes.size();
  return count;
}

}  // namespace tetra::brute_force
