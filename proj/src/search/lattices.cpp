#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>

#include "tetra/search.hpp"

namespace tetra::search {

Ceilings Ceilings::from_environment() {
  Ceilings c;
  if (const char* env = std::getenv("TETRA_CEILING")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      c.lattices = value;
      c.models = value;
    }
  }
  return c;
}

namespace {

// Poset on {0..k-1}; below[i] is the bit set of elements strictly below i.
using Poset = std::vector<std::uint32_t>;

std::vector<std::uint32_t> downsets(const Poset& p) {
  const std::size_t k = p.size();
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < k && closed; ++i) {
      if ((mask >> i & 1u) && (p[i] & ~mask)) closed = false;
    }
    if (closed) out.push_back(mask);
  }
  return out;
}

FiniteAlgebra downset_lattice(const Poset& p) {
  auto sets = downsets(p);
  std::sort(sets.begin(), sets.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  const std::size_t n = sets.size();
  std::map<std::uint32_t, Element> index;
  for (std::size_t i = 0; i < n; ++i) index[sets[i]] = static_cast<Element>(i);
  Table join(n * n), meet(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      join[i * n + j] = index.at(sets[i] | sets[j]);
      meet[i * n + j] = index.at(sets[i] & sets[j]);
    }
  }
  return FiniteAlgebra::create(n, std::move(join), std::move(meet), 0, static_cast<Element>(n - 1));
}

}  // namespace

std::vector<FiniteAlgebra> enumerate_distributive_lattices(std::size_t n, const Ceilings& ceilings) {
  if (n == 0) throw SearchError(SearchError::Kind::BadConfig, "lattice size must be at least 1");
  if (n > ceilings.lattices) {
    throw SearchError(SearchError::Kind::SizeTooLarge,
                      "lattice size " + std::to_string(n) + " exceeds the ceiling " +
                          std::to_string(ceilings.lattices));
  }
  if (n > 31) throw SearchError(SearchError::Kind::SizeTooLarge, "lattice size above 31");

  // Every poset arises from a smaller one by adding a maximal element whose
  // lower set is a down-set. Adding an element adds at least one down-set, so
  // posets with more than n down-sets are discarded.
  std::map<std::vector<Element>, FiniteAlgebra> found;
  std::vector<Poset> level{Poset{}};
  std::set<std::vector<Element>> seen_posets;
  while (!level.empty()) {
    std::vector<Poset> next;
    for (const Poset& p : level) {
      const auto sets = downsets(p);
      if (sets.size() == n) {
        FiniteAlgebra lattice = downset_lattice(p);
        auto form = canonical_form(lattice);
        if (!found.count(form.key)) found.emplace(form.key, relabel(lattice, form.labeling));
      }
      for (std::uint32_t lower : sets) {
        Poset q = p;
        q.push_back(lower);
        if (downsets(q).size() > n) continue;
        auto key = canonical_form(downset_lattice(q)).key;
        if (seen_posets.insert(key).second) next.push_back(std::move(q));
      }
    }
    level = std::move(next);
  }

  std::vector<FiniteAlgebra> out;
  for (auto& [key, lattice] : found) out.push_back(std::move(lattice));
  return out;
}

}  // namespace tetra::search
