#include "grpdlim/functor_cat.hpp"

#include <algorithm>

namespace grpdlim {

CatFunctor FunctorGroupoid::functor(ObjectIndex f) const {
  auto o = object_map(f);
  auto m = morphism_map(f);
  return CatFunctor(source_, target_.category(), {o.begin(), o.end()}, {m.begin(), m.end()});
}

NatTransformation FunctorGroupoid::transformation(MorphismIndex m) const {
  auto c = components(m);
  return NatTransformation(functor(groupoid().src(m)), functor(groupoid().dst(m)),
                           {c.begin(), c.end()});
}

ObjectIndex FunctorGroupoid::find_functor(const CatFunctor& f) const {
  std::vector<std::uint32_t> key(f.object_map().begin(), f.object_map().end());
  key.insert(key.end(), f.morphism_map().begin(), f.morphism_map().end());
  return find_functor(key);
}

namespace {

class FunctorSearch {
 public:
  FunctorSearch(const FiniteCategory& k, const Groupoid& g, BudgetMeter& meter)
      : k_(k), g_(g), meter_(meter), component_(connected_components(g.category())) {
    objects_.assign(k.object_count(), npos);
    values_.assign(k.morphism_count(), npos);
  }

  std::vector<std::vector<std::uint32_t>> run() {
    assign_object(0);
    return std::move(found_);
  }

 private:
  void assign_object(ObjectIndex x) {
    if (x == k_.object_count()) {
      start_morphisms();
      return;
    }
    for (ObjectIndex candidate = 0; candidate < g_.object_count(); ++candidate) {
      meter_.charge();
      objects_[x] = candidate;
      if (objects_consistent(x)) assign_object(x + 1);
    }
    objects_[x] = npos;
  }

  // Every K-morphism between assigned objects needs a G-morphism between
  // their images, i.e. both images in one component.
  bool objects_consistent(ObjectIndex x) const {
    for (MorphismIndex m : k_.out(x)) {
      const auto y = objects_[k_.dst(m)];
      if (y != npos && component_[y] != component_[objects_[x]]) return false;
    }
    for (MorphismIndex m : k_.in(x)) {
      const auto y = objects_[k_.src(m)];
      if (y != npos && component_[y] != component_[objects_[x]]) return false;
    }
    return true;
  }

  void start_morphisms() {
    const std::size_t mark = trail_.size();
    bool ok = true;
    for (ObjectIndex x = 0; x < k_.object_count() && ok; ++x)
      ok = set(k_.identity(x), g_.identity(objects_[x]));
    if (ok) assign_morphism(0);
    undo(mark);
  }

  void assign_morphism(MorphismIndex from) {
    while (from < values_.size() && values_[from] != npos) ++from;
    if (from == values_.size()) {
      meter_.charge(values_.size());
      std::vector<std::uint32_t> key(objects_);
      key.insert(key.end(), values_.begin(), values_.end());
      found_.push_back(std::move(key));
      return;
    }
    const auto a = objects_[k_.src(from)];
    const auto b = objects_[k_.dst(from)];
    for (MorphismIndex candidate : g_.out(a)) {
      if (g_.dst(candidate) != b) continue;
      meter_.charge();
      const std::size_t mark = trail_.size();
      if (set(from, candidate)) assign_morphism(from + 1);
      undo(mark);
    }
  }

  // Assigns and propagates through every composite with assigned partners.
  bool set(MorphismIndex m, MorphismIndex value) {
    if (values_[m] != npos) return values_[m] == value;
    values_[m] = value;
    trail_.push_back(m);
    std::size_t head = trail_.size() - 1;
    while (head < trail_.size()) {
      const auto a = trail_[head++];
      for (MorphismIndex b : k_.out(k_.dst(a))) {
        if (values_[b] == npos) continue;
        if (!force(k_.compose(a, b), g_.compose(values_[a], values_[b]))) return false;
      }
      for (MorphismIndex b : k_.in(k_.src(a))) {
        if (values_[b] == npos) continue;
        if (!force(k_.compose(b, a), g_.compose(values_[b], values_[a]))) return false;
      }
    }
    return true;
  }

  bool force(MorphismIndex c, MorphismIndex value) {
    meter_.charge();
    if (values_[c] != npos) return values_[c] == value;
    values_[c] = value;
    trail_.push_back(c);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      values_[trail_.back()] = npos;
      trail_.pop_back();
    }
  }

  const FiniteCategory& k_;
  const Groupoid& g_;
  BudgetMeter& meter_;
  std::vector<std::uint32_t> component_;
  std::vector<ObjectIndex> objects_;
  std::vector<MorphismIndex> values_;
  std::vector<MorphismIndex> trail_;
  std::vector<std::vector<std::uint32_t>> found_;
};

// Odometer step over pos[x] < limit(x); false after the last tuple.
template <class Limit>
bool advance(std::vector<std::size_t>& pos, Limit&& limit) {
  for (std::size_t x = pos.size(); x-- > 0;) {
    if (++pos[x] < limit(x)) return true;
    pos[x] = 0;
  }
  return false;
}

double search_estimate(const FiniteCategory& k, const Groupoid& g) {
  double e = 1.0;
  for (std::size_t i = 0; i < k.object_count(); ++i) e *= static_cast<double>(g.object_count());
  return e;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> enumerate_functor_keys(const FiniteCategory& k,
                                                               const Groupoid& g, Budget budget) {
  BudgetMeter meter(budget, "functor enumeration", search_estimate(k, g));
  auto keys = FunctorSearch(k, g, meter).run();
  std::sort(keys.begin(), keys.end());
  return keys;
}

FunctorGroupoid map_category(const FiniteCategory& k, const Groupoid& g, Budget budget) {
  const auto keys = enumerate_functor_keys(k, g, budget);
  const std::size_t n = k.object_count();
  KeyedGroupoidBuilder builder(n + k.morphism_count(), std::vector<Groupoid>(n, g), budget,
                               "natural transformations");
  for (const auto& key : keys) builder.add_object(key);

  // Transport: any choice of η_x out of F(x) is a natural transformation
  // from F to the conjugated functor x ↦ dst η_x, k ↦ η_x⁻¹ ; F(k) ; η_y.
  double estimate = 0;
  for (const auto& key : keys) {
    double e = 1;
    for (std::size_t x = 0; x < n; ++x) e *= static_cast<double>(g.out(key[x]).size());
    estimate += e;
  }
  builder.meter().set_estimate(estimate);

  std::vector<MorphismIndex> eta(n);
  std::vector<std::size_t> pos(n);
  std::vector<std::uint32_t> image(n + k.morphism_count());
  for (ObjectIndex f = 0; f < keys.size(); ++f) {
    const auto& key = keys[f];
    std::fill(pos.begin(), pos.end(), 0);
    do {
      for (std::size_t x = 0; x < n; ++x) eta[x] = g.out(key[x])[pos[x]];
      for (std::size_t x = 0; x < n; ++x) image[x] = g.dst(eta[x]);
      for (MorphismIndex m = 0; m < k.morphism_count(); ++m) {
        const auto fm = key[n + m];
        image[n + m] = g.compose(g.compose(g.inverse(eta[k.src(m)]), fm), eta[k.dst(m)]);
      }
      const auto to = builder.find_object(image);
      if (to == npos) throw Error("conjugated functor missing from the enumeration");
      builder.add_morphism(f, to, eta);
    } while (advance(pos, [&](std::size_t x) { return g.out(key[x]).size(); }));
  }
  return FunctorGroupoid(k, g, std::move(builder).finish());
}

CatFunctor precompose(const CatFunctor& f, const FunctorGroupoid& from,
                      const FunctorGroupoid& to) {
  if (!(f.target() == from.source()) || !(f.source() == to.source()) ||
      !(from.target() == to.target()))
    throw ShapeMismatch("precompose: functor does not fit the functor groupoids");
  const auto& k2 = f.source();
  const std::size_t n2 = k2.object_count();
  std::vector<ObjectIndex> objects(from.functor_count());
  std::vector<MorphismIndex> morphisms(from.groupoid().morphism_count());
  std::vector<std::uint32_t> key(n2 + k2.morphism_count());
  for (ObjectIndex F = 0; F < objects.size(); ++F) {
    auto om = from.object_map(F);
    auto mm = from.morphism_map(F);
    for (ObjectIndex x = 0; x < n2; ++x) key[x] = om[f.object(x)];
    for (MorphismIndex m = 0; m < k2.morphism_count(); ++m) key[n2 + m] = mm[f.morphism(m)];
    objects[F] = to.find_functor(key);
    if (objects[F] == npos) throw Error("precompose: image functor not enumerated");
  }
  std::vector<MorphismIndex> comps(n2);
  for (MorphismIndex e = 0; e < morphisms.size(); ++e) {
    auto c = from.components(e);
    for (ObjectIndex x = 0; x < n2; ++x) comps[x] = c[f.object(x)];
    morphisms[e] = to.find_transformation(objects[from.groupoid().src(e)], comps);
    if (morphisms[e] == npos) throw Error("precompose: image transformation not enumerated");
  }
  return CatFunctor(from.groupoid().category(), to.groupoid().category(), std::move(objects),
                    std::move(morphisms));
}

CatFunctor postcompose(const CatFunctor& h, const FunctorGroupoid& from,
                       const FunctorGroupoid& to) {
  if (!(h.source() == from.target().category()) || !(h.target() == to.target().category()) ||
      !(from.source() == to.source()))
    throw ShapeMismatch("postcompose: functor does not fit the functor groupoids");
  const auto& k = from.source();
  const std::size_t n = k.object_count();
  std::vector<ObjectIndex> objects(from.functor_count());
  std::vector<MorphismIndex> morphisms(from.groupoid().morphism_count());
  std::vector<std::uint32_t> key(n + k.morphism_count());
  for (ObjectIndex F = 0; F < objects.size(); ++F) {
    auto om = from.object_map(F);
    auto mm = from.morphism_map(F);
    for (ObjectIndex x = 0; x < n; ++x) key[x] = h.object(om[x]);
    for (MorphismIndex m = 0; m < k.morphism_count(); ++m) key[n + m] = h.morphism(mm[m]);
    objects[F] = to.find_functor(key);
    if (objects[F] == npos) throw Error("postcompose: image functor not enumerated");
  }
  std::vector<MorphismIndex> comps(n);
  for (MorphismIndex e = 0; e < morphisms.size(); ++e) {
    auto c = from.components(e);
    for (ObjectIndex x = 0; x < n; ++x) comps[x] = h.morphism(c[x]);
    morphisms[e] = to.find_transformation(objects[from.groupoid().src(e)], comps);
    if (morphisms[e] == npos) throw Error("postcompose: image transformation not enumerated");
  }
  return CatFunctor(from.groupoid().category(), to.groupoid().category(), std::move(objects),
                    std::move(morphisms));
}

ExponentialIso exponential_iso(const FiniteCategory& k, const FiniteCategory& h,
                               const Groupoid& g, Budget budget) {
  auto product = product_category(k, h);
  auto whole = map_category(product.category, g, budget);
  auto inner = map_category(h, g, budget);
  auto outer = map_category(k, inner.groupoid(), budget);
  const std::size_t nk = k.object_count();
  const std::size_t nh = h.object_count();
  const std::size_t mk = k.morphism_count();
  const std::size_t mh = h.morphism_count();

  // Forward: F ↦ (κ ↦ F(κ, -), f ↦ F(f, id)).
  std::vector<ObjectIndex> fwd_objects(whole.functor_count());
  std::vector<std::uint32_t> inner_key(nh + mh), outer_key(nk + mk);
  std::vector<MorphismIndex> comps_h(nh), comps_k(nk);
  for (ObjectIndex F = 0; F < fwd_objects.size(); ++F) {
    auto om = whole.object_map(F);
    auto mm = whole.morphism_map(F);
    for (ObjectIndex x = 0; x < nk; ++x) {
      for (ObjectIndex y = 0; y < nh; ++y) inner_key[y] = om[product.object(x, y)];
      for (MorphismIndex m = 0; m < mh; ++m)
        inner_key[nh + m] = mm[product.morphism(k.identity(x), m)];
      outer_key[x] = inner.find_functor(inner_key);
    }
    for (MorphismIndex f = 0; f < mk; ++f) {
      for (ObjectIndex y = 0; y < nh; ++y) comps_h[y] = mm[product.morphism(f, h.identity(y))];
      outer_key[nk + f] = inner.find_transformation(outer_key[k.src(f)], comps_h);
    }
    fwd_objects[F] = outer.find_functor(outer_key);
    if (fwd_objects[F] == npos) throw Error("exponential law: curried functor not enumerated");
  }
  std::vector<MorphismIndex> fwd_morphisms(whole.groupoid().morphism_count());
  for (MorphismIndex e = 0; e < fwd_morphisms.size(); ++e) {
    const auto from = whole.groupoid().src(e);
    auto c = whole.components(e);
    auto from_key = outer.object_map(fwd_objects[from]);
    for (ObjectIndex x = 0; x < nk; ++x) {
      for (ObjectIndex y = 0; y < nh; ++y) comps_h[y] = c[product.object(x, y)];
      comps_k[x] = inner.find_transformation(from_key[x], comps_h);
    }
    fwd_morphisms[e] = outer.find_transformation(fwd_objects[from], comps_k);
    if (fwd_morphisms[e] == npos) throw Error("exponential law: curried transformation missing");
  }

  // Backward: Φ ↦ ((κ, y) ↦ Φ(κ)(y), (f, m) ↦ Φ(f)_y ; Φ(κ')(m)).
  std::vector<ObjectIndex> bwd_objects(outer.functor_count());
  std::vector<std::uint32_t> whole_key(nk * nh + mk * mh);
  for (ObjectIndex P = 0; P < bwd_objects.size(); ++P) {
    auto om = outer.object_map(P);
    auto mm = outer.morphism_map(P);
    for (ObjectIndex x = 0; x < nk; ++x)
      for (ObjectIndex y = 0; y < nh; ++y)
        whole_key[product.object(x, y)] = inner.object_map(om[x])[y];
    for (MorphismIndex f = 0; f < mk; ++f)
      for (MorphismIndex m = 0; m < mh; ++m) {
        const auto step = inner.components(mm[f])[h.src(m)];
        const auto rest = inner.morphism_map(om[k.dst(f)])[m];
        whole_key[nk * nh + product.morphism(f, m)] = g.compose(step, rest);
      }
    bwd_objects[P] = whole.find_functor(whole_key);
    if (bwd_objects[P] == npos) throw Error("exponential law: uncurried functor not enumerated");
  }
  std::vector<MorphismIndex> bwd_morphisms(outer.groupoid().morphism_count());
  std::vector<MorphismIndex> comps_kh(nk * nh);
  for (MorphismIndex e = 0; e < bwd_morphisms.size(); ++e) {
    auto c = outer.components(e);
    for (ObjectIndex x = 0; x < nk; ++x)
      for (ObjectIndex y = 0; y < nh; ++y) comps_kh[product.object(x, y)] = inner.components(c[x])[y];
    bwd_morphisms[e] = whole.find_transformation(bwd_objects[outer.groupoid().src(e)], comps_kh);
    if (bwd_morphisms[e] == npos)
      throw Error("exponential law: uncurried transformation missing");
  }
  CatFunctor forward(whole.groupoid().category(), outer.groupoid().category(),
                     std::move(fwd_objects), std::move(fwd_morphisms));
  CatFunctor backward(outer.groupoid().category(), whole.groupoid().category(),
                      std::move(bwd_objects), std::move(bwd_morphisms));
  return {std::move(product), std::move(whole), std::move(inner), std::move(outer),
          std::move(forward), std::move(backward)};
}

}  // namespace grpdlim
