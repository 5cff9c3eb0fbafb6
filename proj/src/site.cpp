#include "grpdlim/site.hpp"

#include <set>

#include "grpdlim/constructions.hpp"

namespace grpdlim {

FiniteSite::FiniteSite(FiniteCategory shape, std::vector<SitePoint> points)
    : shape_(std::move(shape)), opposite_(grpdlim::opposite(shape_)), points_(std::move(points)) {
  ValidationReport report;
  std::set<std::string> names;
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const auto& p = points_[k];
    if (!names.insert(p.name).second) report.add("point names are distinct", {k}, p.name);
    auto f = is_filtered(p.index);
    if (!f.filtered) report.add("point index is filtered", {k}, p.name + ": " + f.describe());
    if (!(p.nbhd.source() == p.index))
      report.add("neighbourhood functor starts at the point index", {k}, p.name);
    if (!(p.nbhd.target() == opposite_))
      report.add("neighbourhood functor lands in the opposite site category", {k}, p.name);
  }
  if (!report.ok()) throw InvalidStructure("invalid site", std::move(report));
}

std::size_t FiniteSite::point_index(const std::string& name) const {
  for (std::size_t k = 0; k < points_.size(); ++k)
    if (points_[k].name == name) return k;
  return npos;
}

SitePresheaf::SitePresheaf(FiniteSite site, DiagramFunctor diagram)
    : site_(std::move(site)), diagram_(std::move(diagram)) {
  if (!(diagram_.index() == site_.opposite()))
    throw ShapeMismatch("presheaf: diagram is not indexed by the opposite site category");
}

SitePresheaf::SitePresheaf(FiniteSite site, std::vector<Groupoid> sections,
                           std::vector<CatFunctor> restrictions)
    : SitePresheaf(site, DiagramFunctor(site.opposite(), std::move(sections),
                                        std::move(restrictions))) {}

SitePresheaf SitePresheaf::constant(const FiniteSite& site, const Groupoid& g) {
  return SitePresheaf(site, DiagramFunctor::constant(site.opposite(), g));
}

PresheafMap::PresheafMap(SitePresheaf source, SitePresheaf target,
                         std::vector<CatFunctor> components)
    : source_(std::move(source)),
      target_(std::move(target)),
      map_(source_.diagram(), target_.diagram(), std::move(components)) {
  if (!(source_.site().shape() == target_.site().shape()))
    throw ShapeMismatch("presheaf map between presheaves on different sites");
}

PresheafMap PresheafMap::identity(const SitePresheaf& x) {
  return PresheafMap(x, x, DiagramMap::identity(x.diagram()).components());
}

DiagramFunctor neighbourhood_diagram(const SitePresheaf& x, const SitePoint& p) {
  const auto& I = p.index;
  std::vector<Groupoid> vertices;
  std::vector<CatFunctor> edges;
  for (ObjectIndex i = 0; i < I.object_count(); ++i)
    vertices.push_back(x.section(p.nbhd.object(i)));
  for (MorphismIndex u = 0; u < I.morphism_count(); ++u)
    edges.push_back(x.restriction(p.nbhd.morphism(u)));
  return DiagramFunctor(I, std::move(vertices), std::move(edges));
}

Stalk stalk(const SitePresheaf& x, const SitePoint& p, Budget budget) {
  auto d = neighbourhood_diagram(x, p);
  auto c = filtered_colimit(d, budget);
  return Stalk{std::move(d), std::move(c)};
}

CatFunctor stalk_map(const PresheafMap& f, const SitePoint& p, const Stalk& source,
                     const Stalk& target) {
  std::vector<CatFunctor> comps;
  for (ObjectIndex i = 0; i < p.index.object_count(); ++i)
    comps.push_back(f.component(p.nbhd.object(i)));
  return colim_map(DiagramMap(source.diagram, target.diagram, std::move(comps)), source.colim,
                   target.colim);
}

namespace {

template <class Check>
LocalReport per_point(const PresheafMap& f, Budget budget, Check check) {
  LocalReport r;
  const auto& points = f.source().site().points();
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& p = points[k];
    auto sx = stalk(f.source(), p, budget);
    auto sy = stalk(f.target(), p, budget);
    PointCertificate c;
    c.point = p.name;
    const bool ok = check(stalk_map(f, p, sx, sy), c);
    if (!ok && r.holds) {
      r.holds = false;
      r.failing_point = k;
    }
    r.points.push_back(std::move(c));
  }
  return r;
}

}  // namespace

LocalReport is_local_weak_equivalence(const PresheafMap& f, Budget budget) {
  return per_point(f, budget, [](const CatFunctor& fp, PointCertificate& c) {
    c.equivalence = is_equivalence(fp);
    return c.equivalence.equivalence;
  });
}

LocalReport is_local_fibration(const PresheafMap& f, Budget budget) {
  return per_point(f, budget, [](const CatFunctor& fp, PointCertificate& c) {
    c.fibration = is_fibration(fp);
    return c.fibration.fibration;
  });
}

SectionReport is_sectionwise_weak_equivalence(const PresheafMap& f) {
  SectionReport r;
  const auto& C = f.source().site().shape();
  for (ObjectIndex u = 0; u < C.object_count(); ++u) {
    r.sections.push_back(is_equivalence(f.component(u)));
    if (!r.sections.back().equivalence && r.holds) {
      r.holds = false;
      r.failing_section = u;
    }
  }
  return r;
}

PresheafDiagram::PresheafDiagram(FiniteCategory index, std::vector<SitePresheaf> vertices,
                                 std::vector<PresheafMap> edges)
    : index_(std::move(index)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.size() != index_.object_count() || edges_.size() != index_.morphism_count())
    throw ShapeMismatch("presheaf diagram: wrong number of vertices or edges");
  if (vertices_.empty()) throw ShapeMismatch("presheaf diagram over the empty category");
  ValidationReport report;
  const auto& shape = site().shape();
  for (ObjectIndex g = 0; g < vertices_.size(); ++g)
    if (!(vertices_[g].site().shape() == shape))
      report.add("vertices share one site", {g});
  for (MorphismIndex f = 0; f < edges_.size(); ++f) {
    if (!(edges_[f].source().diagram().vertices() == vertex(index_.src(f)).diagram().vertices()))
      report.add("edge source is the vertex at its source", {f});
    if (!(edges_[f].target().diagram().vertices() == vertex(index_.dst(f)).diagram().vertices()))
      report.add("edge target is the vertex at its target", {f});
  }
  if (!report.ok()) throw InvalidStructure("invalid presheaf diagram", std::move(report));

  product_ = product_category(index_, site().opposite());
  const auto& C = product_.right;
  std::vector<Groupoid> sections(product_.category.object_count());
  for (ObjectIndex x = 0; x < sections.size(); ++x)
    sections[x] = vertex(product_.first_object(x)).section(product_.second_object(x));
  std::vector<CatFunctor> maps(product_.category.morphism_count());
  for (MorphismIndex m = 0; m < maps.size(); ++m) {
    const auto f = product_.first_morphism(m);
    const auto r = product_.second_morphism(m);
    maps[m] = then(vertex(index_.src(f)).restriction(r), edge(f).component(C.dst(r)));
  }
  try {
    total_ = DiagramFunctor(product_.category, std::move(sections), std::move(maps));
  } catch (const InvalidStructure& e) {
    throw InvalidStructure("presheaf diagram is not functorial", e.report());
  }
}

PresheafDiagram presheaf_diagram(const FiniteSite& site, const FiniteCategory& index,
                                 const DiagramFunctor& total) {
  auto pc = product_category(index, site.opposite());
  if (!(total.index() == pc.category))
    throw ShapeMismatch("presheaf diagram: total diagram is not indexed by Γ × 𝒞^op");
  const auto& C = pc.right;
  std::vector<SitePresheaf> vertices;
  for (ObjectIndex g = 0; g < index.object_count(); ++g)
    vertices.emplace_back(site, slice_diagram(total, pc, false, g));
  std::vector<PresheafMap> edges;
  for (MorphismIndex f = 0; f < index.morphism_count(); ++f) {
    std::vector<CatFunctor> comps;
    for (ObjectIndex u = 0; u < C.object_count(); ++u)
      comps.push_back(total.edge(pc.morphism(f, C.identity(u))));
    edges.emplace_back(vertices[index.src(f)], vertices[index.dst(f)], std::move(comps));
  }
  return PresheafDiagram(index, std::move(vertices), std::move(edges));
}

PresheafHolim presheaf_holim(const PresheafDiagram& d, Budget budget) {
  auto family = holim_over_first(d.total(), d.product(), budget);
  SitePresheaf presheaf(d.site(), family.diagram);
  return PresheafHolim{std::move(family), std::move(presheaf)};
}

PresheafDiagramMap::PresheafDiagramMap(PresheafDiagram source_in, PresheafDiagram target_in,
                                       std::vector<PresheafMap> components_in)
    : source(std::move(source_in)),
      target(std::move(target_in)),
      components(std::move(components_in)) {
  const auto& G = source.index();
  if (!(G == target.index()) || components.size() != G.object_count())
    throw ShapeMismatch("presheaf diagram map: index or component count mismatch");
  const auto& C = source.site().shape();
  ValidationReport report;
  for (MorphismIndex f = 0; f < G.morphism_count(); ++f)
    for (ObjectIndex u = 0; u < C.object_count(); ++u) {
      auto a = then(source.edge(f).component(u), components[G.dst(f)].component(u));
      auto b = then(components[G.src(f)].component(u), target.edge(f).component(u));
      if (!(a == b)) report.add("naturality in the diagram index", {f, u});
    }
  if (!report.ok()) throw InvalidStructure("invalid presheaf diagram map", std::move(report));
}

PresheafDiagramMap presheaf_diagram_map(const FiniteSite& site, const FiniteCategory& index,
                                        const DiagramMap& total) {
  auto source = presheaf_diagram(site, index, total.source());
  auto target = presheaf_diagram(site, index, total.target());
  const auto& pc = source.product();
  std::vector<PresheafMap> comps;
  for (ObjectIndex g = 0; g < index.object_count(); ++g) {
    std::vector<CatFunctor> parts;
    for (ObjectIndex u = 0; u < pc.right.object_count(); ++u)
      parts.push_back(total.component(pc.object(g, u)));
    comps.emplace_back(source.vertex(g), target.vertex(g), std::move(parts));
  }
  return PresheafDiagramMap(std::move(source), std::move(target), std::move(comps));
}

PresheafMap presheaf_holim_map(const PresheafDiagramMap& f, const PresheafHolim& source,
                               const PresheafHolim& target) {
  const auto& G = f.source.index();
  const auto& C = f.source.site().shape();
  std::vector<CatFunctor> comps;
  for (ObjectIndex u = 0; u < C.object_count(); ++u) {
    std::vector<CatFunctor> slice;
    for (ObjectIndex g = 0; g < G.object_count(); ++g) slice.push_back(f.components[g].component(u));
    DiagramMap m(source.family.slices[u], target.family.slices[u], std::move(slice));
    comps.push_back(induced_map(m, source.family.limits[u], target.family.limits[u]));
  }
  return PresheafMap(source.presheaf, target.presheaf, std::move(comps));
}

StalkHolimComparison stalk_holim_compare(const PresheafDiagram& d, const SitePoint& p,
                                         Budget budget) {
  StalkHolimComparison r;
  const auto& G = d.index();
  const auto& I = p.index;
  const auto& Cop = d.site().opposite();
  r.product = product_category(I, G);
  std::vector<Groupoid> vertices(r.product.category.object_count());
  for (ObjectIndex x = 0; x < vertices.size(); ++x)
    vertices[x] = d.vertex(r.product.second_object(x)).section(p.nbhd.object(r.product.first_object(x)));
  std::vector<CatFunctor> edges(r.product.category.morphism_count());
  for (MorphismIndex m = 0; m < edges.size(); ++m) {
    const auto u = p.nbhd.morphism(r.product.first_morphism(m));
    const auto f = r.product.second_morphism(m);
    edges[m] = then(d.vertex(G.src(f)).restriction(u), d.edge(f).component(Cop.dst(u)));
  }
  r.diagram = DiagramFunctor(r.product.category, std::move(vertices), std::move(edges));
  r.comparison = colim_holim_compare(r.diagram, r.product, budget);
  r.is_isomorphism = r.comparison.is_isomorphism;
  return r;
}

PresheafFubini presheaf_fubini(const PresheafDiagram& d, const ProductCategory& pc,
                               Budget budget) {
  if (!(d.index() == pc.category))
    throw ShapeMismatch("presheaf Fubini: diagram index is not the given product");
  PresheafFubini r;
  const auto& C = d.site().shape();
  for (ObjectIndex u = 0; u < C.object_count(); ++u) {
    auto slice = slice_diagram(d.total(), d.product(), true, u);
    r.sections.push_back(fubini(slice, pc, budget));
    r.holds = r.holds && r.sections.back().first_is_isomorphism &&
              r.sections.back().second_is_isomorphism;
  }
  return r;
}

SeparationWitness separation_witness() {
  auto shape = poset_category(2, {{0, 1}});
  auto I = chain_category(2);
  auto nbhd = CatFunctor(I, opposite(shape), {1, 0}, {2, 1, 0});
  FiniteSite site(shape, {SitePoint{"p", I, nbhd}});

  auto bz2 = delooping(FiniteGroup::cyclic(2));
  auto two = disjoint_union({bz2, bz2});
  auto fold = CatFunctor(two.groupoid.category(), bz2.category(), {0, 0}, {0, 1, 0, 1});
  auto x = SitePresheaf::constant(site, bz2);
  SitePresheaf y(site, {bz2, two.groupoid},
                 {CatFunctor::identity(bz2.category()), fold,
                  CatFunctor::identity(two.groupoid.category())});
  PresheafMap f(x, y, {CatFunctor::identity(bz2.category()), two.injections[0]});
  return SeparationWitness{site, x, y, f};
}

}  // namespace grpdlim
