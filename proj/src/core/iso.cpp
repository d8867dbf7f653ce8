#include <algorithm>
#include <cstdio>
#include <functional>
#include <tuple>

#include "tetra/algebra.hpp"

namespace tetra {

namespace {

using Invariant = std::tuple<std::size_t, std::size_t, std::size_t>;

// (height, |down-set|, |up-set|) for every element.
std::vector<Invariant> order_invariants(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> down(n, 0), up(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (a.meet(x, y) == x) {
        ++up[x];
        ++down[y];
      }
    }
  }
  // Elements sorted by down-set size form a linear extension, so heights can
  // be computed in one pass.
  std::vector<Element> order(n);
  for (Element x = 0; x < n; ++x) order[x] = x;
  std::stable_sort(order.begin(), order.end(),
                   [&](Element p, Element q) { return down[p] < down[q]; });
  std::vector<std::size_t> height(n, 0);
  for (Element x : order) {
    for (Element y = 0; y < n; ++y) {
      if (y != x && a.meet(y, x) == y) height[x] = std::max(height[x], height[y] + 1);
    }
  }
  std::vector<Invariant> out(n);
  for (Element x = 0; x < n; ++x) out[x] = {height[x], down[x], up[x]};
  return out;
}

// Enumerates bijections a -> b respecting order invariants and checks each
// partial assignment against the tables. `visit` returns false to stop.
void search_isomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b,
                         const std::function<bool(const IsoMapping&)>& visit) {
  const std::size_t n = a.size();
  if (n != b.size() || a.signature() != b.signature()) return;
  const auto inv_a = order_invariants(a);
  const auto inv_b = order_invariants(b);
  {
    auto sa = inv_a, sb = inv_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return;
  }
  const auto ops = a.signature().to_vector();

  // Assign the bounds first, then elements in index order.
  std::vector<Element> sequence{a.bottom()};
  if (a.top() != a.bottom()) sequence.push_back(a.top());
  for (Element x = 0; x < n; ++x) {
    if (x != a.bottom() && x != a.top()) sequence.push_back(x);
  }

  std::vector<Element> image(n, kUnset);
  std::vector<bool> used(n, false);

  auto consistent = [&](Element x) {
    const Element u = image[x];
    if (x == a.bottom() && u != b.bottom()) return false;
    if (x == a.top() && u != b.top()) return false;
    for (Element y = 0; y < n; ++y) {
      if (image[y] == kUnset) continue;
      const Element j = a.join(x, y), m = a.meet(x, y);
      if (image[j] != kUnset && image[j] != b.join(u, image[y])) return false;
      if (image[m] != kUnset && image[m] != b.meet(u, image[y])) return false;
    }
    for (Op op : ops) {
      const Element fx = a.apply(op, x);
      if (image[fx] != kUnset && image[fx] != b.apply(op, u)) return false;
      for (Element y = 0; y < n; ++y) {
        if (image[y] != kUnset && a.apply(op, y) == x && b.apply(op, image[y]) != u) return false;
      }
    }
    return true;
  };

  bool stop = false;
  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (stop) return;
    if (depth == n) {
      IsoMapping m{image};
      if (is_isomorphism(a, b, m) && !visit(m)) stop = true;
      return;
    }
    const Element x = sequence[depth];
    for (Element u = 0; u < n && !stop; ++u) {
      if (used[u] || inv_a[x] != inv_b[u]) continue;
      image[x] = u;
      used[u] = true;
      if (consistent(x)) extend(depth + 1);
      used[u] = false;
      image[x] = kUnset;
    }
  };
  extend(0);
}

}  // namespace

IsoMapping IsoMapping::inverse() const {
  IsoMapping inv{std::vector<Element>(image.size())};
  for (std::size_t i = 0; i < image.size(); ++i) inv.image[image[i]] = static_cast<Element>(i);
  return inv;
}

bool IsoMapping::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] != i) return false;
  }
  return true;
}

FiniteAlgebra relabel(const FiniteAlgebra& a, const IsoMapping& f) {
  const std::size_t n = a.size();
  Table join(n * n), meet(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      join[f(x) * n + f(y)] = f(a.join(x, y));
      meet[f(x) * n + f(y)] = f(a.meet(x, y));
    }
  }
  std::map<Op, Table> unary;
  for (Op op : a.signature().to_vector()) {
    Table t(n);
    for (Element x = 0; x < n; ++x) t[f(x)] = f(a.apply(op, x));
    unary[op] = std::move(t);
  }
  std::vector<std::string> names;
  if (a.has_names()) {
    names.resize(n);
    for (Element x = 0; x < n; ++x) names[f(x)] = a.name(x);
  }
  return FiniteAlgebra::create(n, std::move(join), std::move(meet), f(a.bottom()), f(a.top()),
                               std::move(unary), std::move(names));
}

bool is_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const IsoMapping& f) {
  const std::size_t n = a.size();
  if (n != b.size() || f.image.size() != n || a.signature() != b.signature()) return false;
  std::vector<bool> hit(n, false);
  for (Element x = 0; x < n; ++x) {
    if (f(x) >= n || hit[f(x)]) return false;
    hit[f(x)] = true;
  }
  if (f(a.bottom()) != b.bottom() || f(a.top()) != b.top()) return false;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (f(a.join(x, y)) != b.join(f(x), f(y))) return false;
      if (f(a.meet(x, y)) != b.meet(f(x), f(y))) return false;
    }
  }
  for (Op op : a.signature().to_vector()) {
    for (Element x = 0; x < n; ++x) {
      if (f(a.apply(op, x)) != b.apply(op, f(x))) return false;
    }
  }
  return true;
}

std::optional<IsoMapping> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  std::optional<IsoMapping> found;
  search_isomorphisms(a, b, [&](const IsoMapping& m) {
    found = m;
    return false;
  });
  return found;
}

std::vector<IsoMapping> automorphisms(const FiniteAlgebra& a) {
  std::vector<IsoMapping> out;
  search_isomorphisms(a, a, [&](const IsoMapping& m) {
    out.push_back(m);
    return true;
  });
  std::stable_partition(out.begin(), out.end(), [](const IsoMapping& m) { return m.is_identity(); });
  return out;
}

CanonicalForm canonical_form(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  const auto inv = order_invariants(a);
  std::vector<Element> order(n);
  for (Element x = 0; x < n; ++x) order[x] = x;
  std::stable_sort(order.begin(), order.end(), [&](Element p, Element q) { return inv[p] < inv[q]; });

  // Contiguous blocks of equal invariants; only permutations inside a block
  // are tried.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  const auto ops = a.signature().to_vector();
  CanonicalForm best;
  std::vector<Element> label(n), key;
  key.reserve(3 + 2 * n * n + ops.size() * (n + 1));

  auto build_key = [&]() {
    for (std::size_t i = 0; i < n; ++i) label[order[i]] = static_cast<Element>(i);
    key.clear();
    key.push_back(static_cast<Element>(n));
    key.push_back(label[a.bottom()]);
    key.push_back(label[a.top()]);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) key.push_back(label[a.join(order[i], order[j])]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) key.push_back(label[a.meet(order[i], order[j])]);
    }
    for (Op op : ops) {
      key.push_back(static_cast<Element>(index_of(op)));
      for (std::size_t i = 0; i < n; ++i) key.push_back(label[a.apply(op, order[i])]);
    }
    if (best.key.empty() || key < best.key) {
      best.key = key;
      best.labeling.image = label;
    }
  };

  std::function<void(std::size_t)> permute = [&](std::size_t b) {
    if (b == blocks.size()) {
      build_key();
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      permute(b + 1);
    } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                   order.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  permute(0);
  return best;
}

std::string canonical_hash(const FiniteAlgebra& a) {
  const auto form = canonical_form(a);
  std::uint64_t h = 14695981039346656037ull;
  for (Element e : form.key) {
    for (int shift = 0; shift < 16; shift += 8) {
      h ^= static_cast<std::uint8_t>(e >> shift);
      h *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace tetra
