#pragma once

// Brute-force reference implementations. These read only the raw tables of
// their inputs and enumerate by definition, so they share no search code
// with the library.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "grpdlim/category.hpp"
#include "grpdlim/functor.hpp"

namespace oracle {

using namespace grpdlim;

/// Classical g ∘ f.
inline MorphismIndex circ(const FiniteCategory& c, MorphismIndex g, MorphismIndex f) {
  return c.compose(f, g);
}

/// Odometer over ranges [0, sizes[i]); false when exhausted.
inline bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& sizes) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < sizes[i]) return true;
    digits[i] = 0;
  }
  return false;
}

inline bool is_functor(const FiniteCategory& k, const FiniteCategory& g,
                       const std::vector<ObjectIndex>& obj, const std::vector<MorphismIndex>& mor) {
  for (MorphismIndex m = 0; m < k.morphism_count(); ++m) {
    if (g.src(mor[m]) != obj[k.src(m)] || g.dst(mor[m]) != obj[k.dst(m)]) return false;
  }
  for (ObjectIndex x = 0; x < k.object_count(); ++x)
    if (mor[k.identity(x)] != g.identity(obj[x])) return false;
  for (MorphismIndex a = 0; a < k.morphism_count(); ++a)
    for (MorphismIndex b = 0; b < k.morphism_count(); ++b)
      if (k.dst(a) == k.src(b) && mor[k.compose(a, b)] != g.compose(mor[a], mor[b])) return false;
  return true;
}

/// Every functor k -> g as object map ++ morphism map, sorted.
inline std::vector<std::vector<std::uint32_t>> functors(const FiniteCategory& k,
                                                        const FiniteCategory& g) {
  std::vector<std::vector<std::uint32_t>> out;
  const auto no = k.object_count(), nm = k.morphism_count();
  if (no > 0 && g.object_count() == 0) return out;
  std::vector<std::size_t> od(no, 0), os(no, g.object_count());
  do {
    std::vector<ObjectIndex> obj(od.begin(), od.end());
    std::vector<std::vector<MorphismIndex>> choices(nm);
    std::vector<std::size_t> sizes(nm);
    bool empty = false;
    for (MorphismIndex m = 0; m < nm; ++m) {
      choices[m] = g.hom(obj[k.src(m)], obj[k.dst(m)]);
      sizes[m] = choices[m].size();
      empty = empty || sizes[m] == 0;
    }
    if (empty) continue;
    std::vector<std::size_t> md(nm, 0);
    do {
      std::vector<MorphismIndex> mor(nm);
      for (MorphismIndex m = 0; m < nm; ++m) mor[m] = choices[m][md[m]];
      if (is_functor(k, g, obj, mor)) {
        std::vector<std::uint32_t> key(obj.begin(), obj.end());
        key.insert(key.end(), mor.begin(), mor.end());
        out.push_back(std::move(key));
      }
    } while (advance(md, sizes));
  } while (no > 0 && advance(od, os));
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of natural transformations between every ordered pair of the
/// given functors, summed: the morphism count of Map(k, g).
inline std::size_t transformation_count(const FiniteCategory& k, const FiniteCategory& g,
                                        const std::vector<std::vector<std::uint32_t>>& fs) {
  const auto no = k.object_count();
  std::size_t total = 0;
  for (const auto& f : fs)
    for (const auto& h : fs) {
      std::vector<std::vector<MorphismIndex>> choices(no);
      std::vector<std::size_t> sizes(no);
      bool empty = false;
      for (ObjectIndex x = 0; x < no; ++x) {
        choices[x] = g.hom(f[x], h[x]);
        sizes[x] = choices[x].size();
        empty = empty || sizes[x] == 0;
      }
      if (empty) continue;
      std::vector<std::size_t> d(no, 0);
      do {
        bool natural = true;
        for (MorphismIndex m = 0; m < k.morphism_count() && natural; ++m) {
          const auto eta_x = choices[k.src(m)][d[k.src(m)]];
          const auto eta_y = choices[k.dst(m)][d[k.dst(m)]];
          natural = circ(g, h[no + m], eta_x) == circ(g, eta_y, f[no + m]);
        }
        total += natural;
      } while (no > 0 && advance(d, sizes));
    }
  return total;
}

/// Isomorphism classes of a groupoid by union-find over all morphisms.
inline std::size_t class_count(const FiniteCategory& g) {
  std::vector<std::size_t> parent(g.object_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (MorphismIndex m = 0; m < g.morphism_count(); ++m) parent[find(g.src(m))] = find(g.dst(m));
  std::size_t n = 0;
  for (std::size_t x = 0; x < parent.size(); ++x) n += find(x) == x;
  return n;
}

/// Sorted multiset of automorphism group orders, one per class.
inline std::vector<std::size_t> automorphism_orders(const FiniteCategory& g) {
  std::vector<std::size_t> parent(g.object_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (MorphismIndex m = 0; m < g.morphism_count(); ++m) parent[find(g.src(m))] = find(g.dst(m));
  std::vector<std::size_t> orders;
  for (ObjectIndex x = 0; x < g.object_count(); ++x)
    if (find(x) == x) orders.push_back(g.hom(x, x).size());
  std::sort(orders.begin(), orders.end());
  return orders;
}

/// Equivalence by definition: every target object is isomorphic to an
/// image, and every hom map is a bijection.
inline bool is_equivalence(const CatFunctor& f) {
  const auto& s = f.source();
  const auto& t = f.target();
  for (ObjectIndex y = 0; y < t.object_count(); ++y) {
    bool reached = false;
    for (ObjectIndex x = 0; x < s.object_count() && !reached; ++x)
      for (MorphismIndex m : t.hom(f.object(x), y)) {
        for (MorphismIndex n : t.hom(y, f.object(x)))
          if (t.compose(m, n) == t.identity(f.object(x)) && t.compose(n, m) == t.identity(y))
            reached = true;
      }
    if (!reached) return false;
  }
  for (ObjectIndex x = 0; x < s.object_count(); ++x)
    for (ObjectIndex y = 0; y < s.object_count(); ++y) {
      std::set<MorphismIndex> image;
      const auto h = s.hom(x, y);
      for (MorphismIndex m : h) image.insert(f.morphism(m));
      if (image.size() != h.size()) return false;
      if (image.size() != t.hom(f.object(x), f.object(y)).size()) return false;
    }
  return true;
}

/// Isofibration by definition, for functors between groupoids.
inline bool is_fibration(const CatFunctor& f) {
  const auto& s = f.source();
  const auto& t = f.target();
  for (ObjectIndex x = 0; x < s.object_count(); ++x)
    for (ObjectIndex y = 0; y < t.object_count(); ++y)
      for (MorphismIndex a : t.hom(f.object(x), y)) {
        bool lifted = false;
        for (MorphismIndex b : s.out(x)) lifted = lifted || f.morphism(b) == a;
        if (!lifted) return false;
      }
  return true;
}

}  // namespace oracle
