#include "grpdlim/group.hpp"

#include <algorithm>
#include <numeric>

namespace grpdlim {

FiniteGroup::FiniteGroup() : data_(std::make_shared<const Data>()) {}

ValidationReport FiniteGroup::check_table(const std::vector<std::vector<ElementIndex>>& table) {
  ValidationReport report;
  const std::size_t n = table.size();
  if (n == 0) {
    report.add("group-empty", {}, "a group has at least one element");
    return report;
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      report.add("group-row-length", {a, table[a].size()});
      continue;
    }
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] >= n) report.add("group-closure", {a, b}, "product is not an element");
  }
  if (!report.ok()) return report;

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          report.add("group-associativity", {a, b, c}, "(ab)c != a(bc)");

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (identity == n) {
    report.add("group-identity", {}, "no two-sided identity");
    return report;
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b)
      found = table[a][b] == identity && table[b][a] == identity;
    if (!found) report.add("group-inverse", {a}, "element has no inverse");
  }
  return report;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<ElementIndex>> table) {
  auto report = check_table(table);
  if (!report.ok()) throw InvalidStructure("invalid group table", std::move(report));
  const std::size_t n = table.size();
  Data d;
  d.order = n;
  d.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d.table[a * n + b] = table[a][b];
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a;
    if (ok) {
      d.identity = static_cast<ElementIndex>(e);
      break;
    }
  }
  d.inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == d.identity) d.inverse[a] = static_cast<ElementIndex>(b);
  return FiniteGroup(std::make_shared<const Data>(std::move(d)));
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw Error("cyclic group of order 0");
  std::vector<std::vector<ElementIndex>> table(n, std::vector<ElementIndex>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<ElementIndex>((a + b) % n);
  return from_table(std::move(table));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  std::vector<std::vector<ElementIndex>> table(order, std::vector<ElementIndex>(order));
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<std::size_t> prod(n);
      for (std::size_t i = 0; i < n; ++i) prod[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<ElementIndex>(
          std::lower_bound(perms.begin(), perms.end(), prod) - perms.begin());
    }
  }
  return from_table(std::move(table));
}

FiniteGroup FiniteGroup::klein() {
  // e=0, a=1, b=2, c=3; XOR on two bits.
  std::vector<std::vector<ElementIndex>> table(4, std::vector<ElementIndex>(4));
  for (ElementIndex a = 0; a < 4; ++a)
    for (ElementIndex b = 0; b < 4; ++b) table[a][b] = a ^ b;
  return from_table(std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order() * h.order();
  std::vector<std::vector<ElementIndex>> table(n, std::vector<ElementIndex>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto a = g.multiply(static_cast<ElementIndex>(x / h.order()),
                                static_cast<ElementIndex>(y / h.order()));
      const auto b = h.multiply(static_cast<ElementIndex>(x % h.order()),
                                static_cast<ElementIndex>(y % h.order()));
      table[x][y] = static_cast<ElementIndex>(a * h.order() + b);
    }
  return from_table(std::move(table));
}

std::size_t FiniteGroup::element_order(ElementIndex a) const {
  std::size_t k = 1;
  for (ElementIndex p = a; p != identity(); p = multiply(p, a)) ++k;
  return k;
}

std::vector<std::vector<ElementIndex>> FiniteGroup::table() const {
  const std::size_t n = order();
  std::vector<std::vector<ElementIndex>> t(n, std::vector<ElementIndex>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a][b] = multiply(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b));
  return t;
}

bool FiniteGroup::is_abelian() const {
  for (ElementIndex a = 0; a < order(); ++a)
    for (ElementIndex b = 0; b < order(); ++b)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  return a.data_ == b.data_ ||
         (a.data_->order == b.data_->order && a.data_->table == b.data_->table);
}

Subgroup make_subgroup(const FiniteGroup& ambient, std::vector<ElementIndex> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const std::size_t n = elements.size();
  std::vector<std::vector<ElementIndex>> table(n, std::vector<ElementIndex>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto p = ambient.multiply(elements[a], elements[b]);
      auto it = std::lower_bound(elements.begin(), elements.end(), p);
      if (it == elements.end() || *it != p) throw Error("subset is not closed under the product");
      table[a][b] = static_cast<ElementIndex>(it - elements.begin());
    }
  return {FiniteGroup::from_table(std::move(table)), std::move(elements)};
}

bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h,
                     const std::vector<ElementIndex>& map) {
  if (map.size() != g.order()) return false;
  for (auto v : map)
    if (v >= h.order()) return false;
  for (ElementIndex a = 0; a < g.order(); ++a)
    for (ElementIndex b = 0; b < g.order(); ++b)
      if (map[g.multiply(a, b)] != h.multiply(map[a], map[b])) return false;
  return true;
}

std::vector<ElementIndex> generating_set(const FiniteGroup& g) {
  std::vector<ElementIndex> gens;
  std::vector<bool> reached(g.order(), false);
  reached[g.identity()] = true;
  std::vector<ElementIndex> members{g.identity()};
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    // Close under right multiplication by every generator so far.
    for (std::size_t i = 0; i < members.size(); ++i)
      for (auto s : gens) {
        const auto p = g.multiply(members[i], s);
        if (!reached[p]) {
          reached[p] = true;
          members.push_back(p);
        }
      }
  }
  return gens;
}

namespace {

// Every element as parent·generator, from a breadth-first search.
struct Words {
  std::vector<ElementIndex> order;  // BFS order starting at identity
  std::vector<ElementIndex> parent;
  std::vector<std::size_t> generator;
};

Words words(const FiniteGroup& g, const std::vector<ElementIndex>& gens) {
  Words w;
  w.parent.assign(g.order(), npos);
  w.generator.assign(g.order(), 0);
  std::vector<bool> seen(g.order(), false);
  seen[g.identity()] = true;
  w.order.push_back(g.identity());
  for (std::size_t i = 0; i < w.order.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto p = g.multiply(w.order[i], gens[k]);
      if (!seen[p]) {
        seen[p] = true;
        w.parent[p] = w.order[i];
        w.generator[p] = k;
        w.order.push_back(p);
      }
    }
  return w;
}

template <class Accept>
void search_homomorphisms(const FiniteGroup& g, const FiniteGroup& h, Budget budget,
                          Accept&& accept) {
  const auto gens = generating_set(g);
  const auto w = words(g, gens);
  std::vector<std::vector<ElementIndex>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto order = g.element_order(gens[k]);
    for (ElementIndex y = 0; y < h.order(); ++y)
      if (order % h.element_order(y) == 0) candidates[k].push_back(y);
  }
  BudgetMeter meter(budget, "homomorphism search");
  std::vector<ElementIndex> images(gens.size());
  std::vector<ElementIndex> map(g.order());
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) {
      meter.charge(g.order());
      map[g.identity()] = h.identity();
      for (std::size_t i = 1; i < w.order.size(); ++i) {
        const auto x = w.order[i];
        map[x] = h.multiply(map[w.parent[x]], images[w.generator[x]]);
      }
      if (is_homomorphism(g, h, map)) return accept(map);
      return true;
    }
    for (auto y : candidates[k]) {
      meter.charge();
      images[k] = y;
      if (!self(self, k + 1)) return false;
    }
    return true;
  };
  rec(rec, 0);
}

}  // namespace

std::vector<std::vector<ElementIndex>> homomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                                                     Budget budget) {
  std::vector<std::vector<ElementIndex>> result;
  search_homomorphisms(g, h, budget, [&](const std::vector<ElementIndex>& m) {
    result.push_back(m);
    return true;
  });
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::optional<std::vector<ElementIndex>> find_group_isomorphism(const FiniteGroup& g,
                                                                const FiniteGroup& h,
                                                                Budget budget) {
  if (g.order() != h.order()) return std::nullopt;
  std::vector<std::size_t> og, oh;
  for (ElementIndex a = 0; a < g.order(); ++a) og.push_back(g.element_order(a));
  for (ElementIndex a = 0; a < h.order(); ++a) oh.push_back(h.element_order(a));
  std::sort(og.begin(), og.end());
  std::sort(oh.begin(), oh.end());
  if (og != oh) return std::nullopt;
  std::optional<std::vector<ElementIndex>> found;
  search_homomorphisms(g, h, budget, [&](const std::vector<ElementIndex>& m) {
    std::vector<bool> hit(h.order(), false);
    for (auto y : m) {
      if (hit[y]) return true;
      hit[y] = true;
    }
    found = m;
    return false;
  });
  return found;
}

}  // namespace grpdlim
