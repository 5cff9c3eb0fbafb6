#include "grpdlim/cohomology.hpp"

#include <algorithm>

#include "grpdlim/convention.hpp"

namespace grpdlim {

ValidationReport ActionOnGroup::check(const FiniteGroup& gamma, const FiniteGroup& g,
                                      const std::vector<std::vector<ElementIndex>>& act) {
  ValidationReport report;
  if (act.size() != gamma.order()) {
    report.add("action-size", {act.size(), gamma.order()});
    return report;
  }
  for (ElementIndex c = 0; c < act.size(); ++c) {
    if (act[c].size() != g.order()) {
      report.add("action-row-size", {c}, "row does not cover the group");
      return report;
    }
    std::vector<bool> hit(g.order(), false);
    for (auto v : act[c]) {
      if (v >= g.order()) {
        report.add("action-range", {c}, "value outside the group");
        return report;
      }
      hit[v] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
      report.add("action-bijective", {c}, "act(γ) is not a bijection");
    if (!is_homomorphism(g, g, act[c]))
      report.add("action-homomorphism", {c}, "act(γ) is not a homomorphism");
  }
  for (ElementIndex c = 0; c < act.size(); ++c)
    for (ElementIndex d = 0; d < act.size(); ++d)
      for (ElementIndex x = 0; x < g.order(); ++x)
        if (act[gamma.multiply(c, d)][x] != act[c][act[d][x]]) {
          report.add("action-composition", {c, d, x}, "act(γδ) != act(γ) ∘ act(δ)");
          break;
        }
  return report;
}

ActionOnGroup::ActionOnGroup(FiniteGroup gamma, FiniteGroup g,
                             std::vector<std::vector<ElementIndex>> act)
    : gamma_(std::move(gamma)), g_(std::move(g)), act_(std::move(act)) {
  auto report = check(gamma_, g_, act_);
  if (!report.ok()) throw InvalidStructure("invalid action on a group", std::move(report));
}

ActionOnGroup ActionOnGroup::trivial(const FiniteGroup& gamma, const FiniteGroup& g) {
  std::vector<ElementIndex> id(g.order());
  for (ElementIndex x = 0; x < id.size(); ++x) id[x] = x;
  return ActionOnGroup(gamma, g, std::vector<std::vector<ElementIndex>>(gamma.order(), id));
}

ActionOnGroup ActionOnGroup::inversion(const FiniteGroup& gamma, const std::vector<bool>& sign,
                                       const FiniteGroup& g) {
  std::vector<std::vector<ElementIndex>> act(gamma.order(),
                                             std::vector<ElementIndex>(g.order()));
  for (ElementIndex c = 0; c < gamma.order(); ++c)
    for (ElementIndex x = 0; x < g.order(); ++x) act[c][x] = sign.at(c) ? g.inverse(x) : x;
  return ActionOnGroup(gamma, g, std::move(act));
}

GroupAction delooping_action(const ActionOnGroup& a) {
  auto b = delooping(a.group());
  std::vector<CatFunctor> act;
  for (const auto& row : a.table())
    act.emplace_back(b.category(), b.category(), std::vector<ObjectIndex>{0},
                     std::vector<MorphismIndex>(row.begin(), row.end()));
  return GroupAction(a.gamma(), b, std::move(act));
}

namespace {

struct CocycleLaw {
  const ActionOnGroup& a;
  // σ(g)·(g·σ(h)) from the two values.
  ElementIndex operator()(ElementIndex g, ElementIndex sigma_g, ElementIndex sigma_h) const {
    const auto& grp = a.group();
    auto multiply = [&](ElementIndex x, ElementIndex y) { return grp.multiply(x, y); };
    auto act = [&](ElementIndex c, ElementIndex x) { return a.apply(c, x); };
    return cocycle_value(multiply, act, g, sigma_g, sigma_h);
  }
};

}  // namespace

bool is_cocycle(const ActionOnGroup& a, std::span<const ElementIndex> sigma) {
  const auto& gamma = a.gamma();
  if (sigma.size() != gamma.order()) return false;
  for (auto v : sigma)
    if (v >= a.group().order()) return false;
  const CocycleLaw law{a};
  for (ElementIndex g = 0; g < gamma.order(); ++g)
    for (ElementIndex h = 0; h < gamma.order(); ++h)
      if (sigma[gamma.multiply(g, h)] != law(g, sigma[g], sigma[h])) return false;
  return true;
}

std::vector<Cocycle> cocycles(const ActionOnGroup& a, Budget budget) {
  const auto& gamma = a.gamma();
  const auto& grp = a.group();
  const auto generators = generating_set(gamma);
  // Breadth-first words: w = parent[w] · generators[step[w]].
  std::vector<ElementIndex> order{gamma.identity()};
  std::vector<ElementIndex> parent(gamma.order(), npos);
  std::vector<std::size_t> step(gamma.order(), npos);
  std::vector<bool> seen(gamma.order(), false);
  seen[gamma.identity()] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t s = 0; s < generators.size(); ++s) {
      const auto w = gamma.multiply(order[i], generators[s]);
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = order[i];
      step[w] = s;
      order.push_back(w);
    }

  BudgetMeter meter(budget, "cocycles");
  const CocycleLaw law{a};
  std::vector<Cocycle> out;
  Cocycle sigma(gamma.order());
  std::vector<ElementIndex> values(generators.size(), 0);
  while (true) {
    meter.charge(gamma.order());
    sigma[gamma.identity()] = grp.identity();
    for (std::size_t i = 1; i < order.size(); ++i) {
      const auto w = order[i];
      sigma[w] = law(parent[w], sigma[parent[w]], values[step[w]]);
    }
    if (is_cocycle(a, sigma)) out.push_back(sigma);
    std::size_t i = values.size();
    while (i > 0) {
      if (++values[i - 1] < grp.order()) break;
      values[--i] = 0;
    }
    if (i == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

CocycleGroupoid cocycle_groupoid(const ActionOnGroup& a, Budget budget) {
  const auto& grp = a.group();
  const auto& gamma = a.gamma();
  const auto all = cocycles(a, budget);
  KeyedGroupoidBuilder builder(gamma.order(), {delooping(grp)}, budget, "cocycle groupoid");
  for (const auto& s : all) builder.add_object(s);
  Cocycle target(gamma.order());
  for (ObjectIndex x = 0; x < all.size(); ++x)
    for (ElementIndex alpha = 0; alpha < grp.order(); ++alpha) {
      builder.meter().charge();
      const auto inv = grp.inverse(alpha);
      for (ElementIndex g = 0; g < gamma.order(); ++g)
        target[g] = grp.multiply(grp.multiply(alpha, all[x][g]), a.apply(g, inv));
      const MorphismIndex comps[1] = {alpha};
      builder.add_morphism(x, builder.find_object(target), comps);
    }
  return {a, std::move(builder).finish()};
}

Subgroup stabilizer(const ActionOnGroup& a, std::span<const ElementIndex> sigma) {
  if (!is_cocycle(a, sigma)) {
    ValidationReport report;
    report.add("cocycle", {}, "σ(gh) != σ(g)·(g·σ(h)) for some pair");
    throw InvalidStructure("stabilizer of a non-cocycle", std::move(report));
  }
  const auto& grp = a.group();
  std::vector<ElementIndex> members;
  for (ElementIndex alpha = 0; alpha < grp.order(); ++alpha) {
    bool fixed = true;
    for (ElementIndex g = 0; g < a.gamma().order() && fixed; ++g)
      fixed = grp.multiply(grp.multiply(sigma[g], a.apply(g, alpha)), grp.inverse(sigma[g])) ==
              alpha;
    if (fixed) members.push_back(alpha);
  }
  return make_subgroup(grp, std::move(members));
}

H1 h1(const ActionOnGroup& a, Budget budget) {
  H1 r{cocycle_groupoid(a, budget), {}, {}};
  r.skeleton = skeleton(r.groupoid.groupoid());
  for (std::size_t c = 0; c < r.skeleton.classes.size(); ++c) {
    const auto rep = r.skeleton.representatives[c];
    const auto s = r.groupoid.cocycle(rep);
    r.classes.push_back({Cocycle(s.begin(), s.end()), r.skeleton.classes[c].size(),
                         stabilizer(a, s)});
  }
  return r;
}

HfpCocycleIso hfp_to_cocycles(const ActionOnGroup& a, Budget budget) {
  HfpCocycleIso r{homotopy_fixed_points(delooping_action(a), budget), cocycle_groupoid(a, budget),
                  {}, false};
  const auto& grp = a.group();
  const auto& hg = r.hfp.groupoid();
  std::vector<ObjectIndex> objects(hg.object_count());
  std::vector<MorphismIndex> morphisms(hg.morphism_count());
  Cocycle sigma(a.gamma().order());
  for (ObjectIndex p = 0; p < objects.size(); ++p) {
    for (ElementIndex g = 0; g < sigma.size(); ++g) sigma[g] = grp.inverse(r.hfp.phi(p, g));
    objects[p] = r.cocycles.keyed.find_object(sigma);
    if (objects[p] == npos) throw Error("σ_φ is not a cocycle");
  }
  for (MorphismIndex m = 0; m < morphisms.size(); ++m) {
    const MorphismIndex comps[1] = {r.hfp.alpha(m)};
    morphisms[m] = r.cocycles.keyed.find_morphism(objects[hg.src(m)], comps);
  }
  r.iso = CatFunctor(hg.category(), r.cocycles.groupoid().category(), std::move(objects),
                     std::move(morphisms));
  r.is_isomorphism = is_isomorphism(r.iso);
  return r;
}

HfpDecomposition decompose_hfp(const ActionOnGroup& a, Budget budget) {
  HfpDecomposition r{hfp_to_cocycles(a, budget), h1(a, budget), {}, {}};
  r.equivalence = then(r.iso.iso, r.cohomology.skeleton.to_model);
  r.certificate = is_equivalence(r.equivalence);
  return r;
}

}  // namespace grpdlim
