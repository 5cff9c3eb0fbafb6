#include "runner.hpp"

#include <sstream>

#include "grpdlim/generators.hpp"

namespace grpdlim::cli {

namespace {

const std::vector<CommandInfo> kCommands{
    {"validate", {}, "parse and validate every declaration"},
    {"print", {}, "print the workspace in canonical form"},
    {"holim", {"diagram"}, "homotopy limit of a diagram"},
    {"pullback", {"functor", "functor"}, "homotopy pullback of X -> Z <- Y, both models"},
    {"hfp", {"action"}, "homotopy fixed points, explicit model against holim over BG"},
    {"loop", {"groupoid"}, "loop groupoid, certified against X x_{X x X} X"},
    {"h1", {"group-action"}, "nonabelian H1 with stabilizers"},
    {"decompose", {"group-action"}, "(BG)^hΓ as a sum of BK_σ"},
    {"skeleton", {"groupoid"}, "isomorphism classes and automorphism groups"},
    {"check-equiv", {"functor"}, "equivalence certificate"},
    {"check-fib", {"functor"}, "fibration certificate"},
    {"stalk", {"presheaf", "point"}, "stalk of a presheaf at a point"},
    {"check-lwe", {"presheaf-map"}, "local and sectionwise weak equivalence checks"},
    {"colim", {"diagram"}, "filtered colimit"},
    {"compare-fubini", {"diagram"}, "holim over A x B against both iterated holims"},
    {"compare-key-lemma", {"category", "diagram"}, "colim Map(K, X) against Map(K, colim X)"},
    {"gen-corpus", {}, "random diagrams in the declaration format"}};

std::string name_of(const Names* n, bool object, std::uint64_t k) {
  if (n) {
    const auto& v = object ? n->objects : n->morphisms;
    if (k < v.size()) return v[k];
  }
  return std::to_string(k);
}

Json summary(const Groupoid& g) {
  auto sk = skeleton(g);
  Json orders = Json::array();
  for (const auto& a : sk.automorphism_groups) orders.push_back(a.group.order());
  return Json{{"objects", g.object_count()},
              {"morphisms", g.morphism_count()},
              {"classes", sk.classes.size()},
              {"automorphism_orders", orders}};
}

Json certificate(const EquivalenceCertificate& c, const Names* source, const Names* target) {
  Json j{{"equivalence", c.equivalence}};
  if (c.equivalence) {
    j["hom_sets_checked"] = c.hom_bijections.size();
    return j;
  }
  const auto& v = c.violation_indices;
  std::string text = to_string(c.violation);
  switch (c.violation) {
    case EquivalenceViolation::NotEssentiallySurjective:
      text += " at " + name_of(target, true, v[0]);
      break;
    case EquivalenceViolation::NotFaithful:
      text += " at " + name_of(source, true, v[0]) + " -> " + name_of(source, true, v[1]) + ": " +
              name_of(source, false, v[2]) + " and " + name_of(source, false, v[3]) +
              " have the same image";
      break;
    case EquivalenceViolation::NotFull:
      text += " at " + name_of(source, true, v[0]) + " -> " + name_of(source, true, v[1]) + ": " +
              name_of(target, false, v[2]) + " is not hit";
      break;
    case EquivalenceViolation::None:
      break;
  }
  j["violation"] = text;
  return j;
}

Json fibration(const FibrationCertificate& c, const Names* source, const Names* target) {
  Json j{{"fibration", c.fibration}, {"lifted", c.lifted}};
  if (c.counterexample)
    j["counterexample"] = Json{{"object", name_of(source, true, c.counterexample->first)},
                               {"morphism", name_of(target, false, c.counterexample->second)}};
  return j;
}

const Names* names_of(const Workspace& ws, const std::string& decl) {
  const auto* d = ws.find(decl);
  if (!d) return nullptr;
  if (auto* c = std::get_if<CategoryValue>(&d->value)) return &c->names;
  return nullptr;
}

struct Context {
  const Workspace& ws;
  const std::vector<std::string>& args;
  const RunOptions& options;
  RunResult out;
};

void holim_cmd(Context& c) {
  const auto& d = c.ws.diagram(c.args[0]);
  auto h = holim(d.diagram, c.options.budget);
  c.out.json["holim"] = summary(h.groupoid());
  c.out.groupoid = h.groupoid();
}

void pullback_cmd(Context& c) {
  const auto& f = c.ws.functor(c.args[0]);
  const auto& g = c.ws.functor(c.args[1]);
  if (f.target != g.target)
    throw CliError(ExitCode::KindMismatch, {},
                   "'" + c.args[0] + "' and '" + c.args[1] + "' have different targets");
  auto r = compare_pullback_models(f.functor, g.functor, c.options.budget);
  c.out.json["five_tuple"] = summary(r.full.groupoid());
  c.out.json["three_tuple"] = summary(r.reduced.groupoid());
  c.out.json["comparison"] = certificate(r.certificate, nullptr, nullptr);
  c.out.groupoid = r.reduced.groupoid();
}

void hfp_cmd(Context& c) {
  const auto& a = c.ws.action(c.args[0]);
  auto r = hfp_via_holim(a.action, c.options.budget);
  c.out.json["hfp"] = summary(r.explicit_model.groupoid());
  c.out.json["holim"] = summary(r.holim.groupoid());
  c.out.json["isomorphic"] = r.is_isomorphism;
  c.out.groupoid = r.explicit_model.groupoid();
}

void loop_cmd(Context& c) {
  const auto& x = c.ws.groupoid(c.args[0]);
  auto r = loop_vs_pullback(*x.groupoid, c.options.budget);
  const auto s = summary(r.loop.groupoid());
  for (const auto& [k, v] : s.items()) c.out.json[k] = v;
  c.out.json["pullback_comparison"] = certificate(r.certificate, nullptr, nullptr);
  c.out.groupoid = r.loop.groupoid();
}

Json cocycle_json(const GroupValue& g, const Cocycle& s) {
  Json j = Json::array();
  for (auto x : s) j.push_back(g.elements[x]);
  return j;
}

void h1_cmd(Context& c) {
  const auto& a = c.ws.group_action(c.args[0]);
  const auto& g = c.ws.group(a.group);
  auto r = h1(a.action, c.options.budget);
  Json orders = Json::array(), sizes = Json::array(), reps = Json::array();
  for (const auto& k : r.classes) {
    orders.push_back(k.stabilizer.group.order());
    sizes.push_back(k.size);
    reps.push_back(cocycle_json(g, k.representative));
  }
  c.out.json["classes"] = r.classes.size();
  c.out.json["stabilizer_orders"] = orders;
  c.out.json["cocycles"] = r.groupoid.groupoid().object_count();
  c.out.json["class_sizes"] = sizes;
  c.out.json["representatives"] = reps;
  c.out.groupoid = r.groupoid.groupoid();
}

void decompose_cmd(Context& c) {
  const auto& a = c.ws.group_action(c.args[0]);
  const auto& g = c.ws.group(a.group);
  auto r = decompose_hfp(a.action, c.options.budget);
  c.out.json["hfp"] = summary(r.iso.hfp.groupoid());
  c.out.json["hfp_to_cocycles_isomorphic"] = r.iso.is_isomorphism;
  Json parts = Json::array();
  for (const auto& k : r.cohomology.classes)
    parts.push_back(Json{{"representative", cocycle_json(g, k.representative)},
                         {"stabilizer_order", k.stabilizer.group.order()}});
  c.out.json["summands"] = parts;
  c.out.json["equivalence"] = certificate(r.certificate, nullptr, nullptr);
  c.out.groupoid = r.iso.hfp.groupoid();
}

void skeleton_cmd(Context& c) {
  const auto& x = c.ws.groupoid(c.args[0]);
  auto sk = skeleton(*x.groupoid);
  Json classes = Json::array();
  for (std::size_t k = 0; k < sk.classes.size(); ++k) {
    Json objects = Json::array();
    for (auto o : sk.classes[k]) objects.push_back(x.names.objects[o]);
    classes.push_back(Json{{"representative", x.names.objects[sk.representatives[k]]},
                           {"objects", objects},
                           {"automorphism_order", sk.automorphism_groups[k].group.order()}});
  }
  c.out.json["classes"] = classes;
  c.out.json["certificate"] = certificate(sk.certificate, &x.names, nullptr);
  c.out.groupoid = *x.groupoid;
  c.out.names = x.names;
}

void check_equiv_cmd(Context& c) {
  const auto& f = c.ws.functor(c.args[0]);
  auto r = is_equivalence(f.functor);
  c.out.json = certificate(r, names_of(c.ws, f.source), names_of(c.ws, f.target));
}

void check_fib_cmd(Context& c) {
  const auto& f = c.ws.functor(c.args[0]);
  auto r = is_fibration(f.functor);
  c.out.json = fibration(r, names_of(c.ws, f.source), names_of(c.ws, f.target));
}

void stalk_cmd(Context& c) {
  const auto& x = c.ws.presheaf(c.args[0]);
  const auto& s = c.ws.site(x.site);
  const auto k = s.site.point_index(c.args[1]);
  if (k == npos) throw CliError(ExitCode::Unresolved, {}, "site '" + x.site + "' has no point '" + c.args[1] + "'");
  auto st = stalk(x.presheaf, s.site.points()[k], c.options.budget);
  c.out.json["point"] = c.args[1];
  c.out.json["stalk"] = summary(st.groupoid());
  c.out.groupoid = st.groupoid();
}

void check_lwe_cmd(Context& c) {
  const auto& f = c.ws.presheaf_map(c.args[0]);
  const auto& site = c.ws.site(c.ws.presheaf(f.source).site);
  const auto& shape = c.ws.category(site.shape);
  auto lwe = is_local_weak_equivalence(f.map, c.options.budget);
  auto lfib = is_local_fibration(f.map, c.options.budget);
  auto sect = is_sectionwise_weak_equivalence(f.map);
  Json points = Json::array();
  for (std::size_t k = 0; k < lwe.points.size(); ++k)
    points.push_back(Json{{"point", lwe.points[k].point},
                          {"equivalence", certificate(lwe.points[k].equivalence, nullptr, nullptr)},
                          {"fibration", lfib.points[k].fibration.fibration}});
  Json sections = Json::array();
  for (std::size_t u = 0; u < sect.sections.size(); ++u)
    sections.push_back(Json{{"section", shape.names.objects[u]},
                            {"equivalence", certificate(sect.sections[u], nullptr, nullptr)}});
  c.out.json["local_weak_equivalence"] = lwe.holds;
  c.out.json["local_fibration"] = lfib.holds;
  c.out.json["sectionwise_weak_equivalence"] = sect.holds;
  c.out.json["points"] = points;
  c.out.json["sections"] = sections;
}

void colim_cmd(Context& c) {
  const auto& d = c.ws.diagram(c.args[0]);
  auto f = is_filtered(d.diagram.index());
  if (!f.filtered)
    throw CliError(ExitCode::Validation, {}, "index of '" + c.args[0] + "' is not filtered: " + f.describe());
  auto r = filtered_colimit(d.diagram, c.options.budget);
  c.out.json["colim"] = summary(r.groupoid);
  c.out.groupoid = r.groupoid;
}

void fubini_cmd(Context& c) {
  const auto& d = c.ws.diagram(c.args[0]);
  const auto& index = c.ws.category(d.index);
  if (!index.product_of)
    throw CliError(ExitCode::KindMismatch, {}, "index '" + d.index + "' is not declared as 'product A B'");
  auto pc = product_category(c.ws.category(index.product_of->first).category,
                             c.ws.category(index.product_of->second).category);
  auto r = fubini(d.diagram, pc, c.options.budget);
  c.out.json["total"] = summary(r.total.groupoid());
  c.out.json["first_iterated"] = summary(r.outer_first.groupoid());
  c.out.json["second_iterated"] = summary(r.outer_second.groupoid());
  c.out.json["first_is_isomorphism"] = r.first_is_isomorphism;
  c.out.json["second_is_isomorphism"] = r.second_is_isomorphism;
  c.out.groupoid = r.total.groupoid();
}

void key_lemma_cmd(Context& c) {
  const auto& k = c.ws.category(c.args[0]);
  const auto& d = c.ws.diagram(c.args[1]);
  auto f = is_filtered(d.diagram.index());
  if (!f.filtered)
    throw CliError(ExitCode::Validation, {}, "index of '" + c.args[1] + "' is not filtered: " + f.describe());
  auto r = map_colim_compare(k.category, d.diagram, c.options.budget);
  c.out.json["colim_of_maps"] = summary(r.left.groupoid);
  c.out.json["map_into_colim"] = summary(r.right.groupoid());
  c.out.json["is_isomorphism"] = r.is_isomorphism;
  c.out.groupoid = r.left.groupoid;
}

Json sizes(const FiniteCategory& c) {
  return Json{{"objects", c.object_count()}, {"morphisms", c.morphism_count()}};
}

void validate_cmd(Context& c) {
  Json decls = Json::array();
  for (const auto& d : c.ws.declarations()) {
    Json j{{"name", d.name}, {"kind", to_string(d.kind)}};
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, GroupValue>) {
            j["order"] = v.group.order();
          } else if constexpr (std::is_same_v<T, CategoryValue>) {
            j["size"] = sizes(v.category);
          } else if constexpr (std::is_same_v<T, FunctorValue>) {
            j["source"] = v.source;
            j["target"] = v.target;
          } else if constexpr (std::is_same_v<T, DiagramValue>) {
            j["index"] = v.index;
          } else if constexpr (std::is_same_v<T, ActionValue>) {
            j["group"] = v.group;
            j["space"] = v.space;
          } else if constexpr (std::is_same_v<T, GroupActionValue>) {
            j["gamma"] = v.gamma;
            j["group"] = v.group;
          } else if constexpr (std::is_same_v<T, SiteValue>) {
            Json points = Json::array();
            for (const auto& p : v.site.points()) points.push_back(p.name);
            j["shape"] = v.shape;
            j["points"] = points;
          } else if constexpr (std::is_same_v<T, PresheafValue>) {
            j["site"] = v.site;
          } else {
            j["source"] = v.source;
            j["target"] = v.target;
          }
        },
        d.value);
    decls.push_back(j);
  }
  c.out.json["valid"] = true;
  c.out.json["declarations"] = decls;
}

using Handler = void (*)(Context&);

Handler handler(const std::string& name) {
  static const std::vector<std::pair<std::string, Handler>> table{
      {"validate", validate_cmd},        {"holim", holim_cmd},
      {"pullback", pullback_cmd},        {"hfp", hfp_cmd},
      {"loop", loop_cmd},                {"h1", h1_cmd},
      {"decompose", decompose_cmd},      {"skeleton", skeleton_cmd},
      {"check-equiv", check_equiv_cmd},  {"check-fib", check_fib_cmd},
      {"stalk", stalk_cmd},              {"check-lwe", check_lwe_cmd},
      {"colim", colim_cmd},              {"compare-fubini", fubini_cmd},
      {"compare-key-lemma", key_lemma_cmd}};
  for (const auto& [n, h] : table)
    if (n == name) return h;
  return nullptr;
}

}  // namespace

const std::vector<CommandInfo>& commands() { return kCommands; }

const CommandInfo* find_command(const std::string& name) {
  for (const auto& c : kCommands)
    if (c.name == name) return &c;
  return nullptr;
}

RunResult run(const Workspace& ws, const std::string& command,
              const std::vector<std::string>& args, const RunOptions& options) {
  const auto* info = find_command(command);
  auto h = handler(command);
  if (!info || !h) throw CliError(ExitCode::Usage, {}, "unknown command '" + command + "'");
  if (args.size() != info->arguments.size())
    throw CliError(ExitCode::Usage, {},
                   command + " takes " + std::to_string(info->arguments.size()) + " name argument" +
                       (info->arguments.size() == 1 ? "" : "s"));
  Context c{ws, args, options, {}};
  c.out.json = Json{{"schema", 1}, {"command", command}, {"arguments", args}};
  Json header = c.out.json;
  h(c);
  // Certificates that replace the whole document keep the header in front.
  if (!c.out.json.contains("schema")) {
    for (const auto& [k, v] : c.out.json.items()) header[k] = v;
    c.out.json = header;
  }
  return c.out;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

std::string emit_dot(const Groupoid& g, const Names* names) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (ObjectIndex x = 0; x < g.object_count(); ++x)
    out << "  n" << x << " [label=\"" << name_of(names, true, x) << "\"];\n";
  for (MorphismIndex m = 0; m < g.morphism_count(); ++m) {
    if (g.is_identity(m)) continue;
    const auto inv = g.inverse(m);
    if (inv < m) continue;
    out << "  n" << g.src(m) << " -> n" << g.dst(m) << " [label=\"" << name_of(names, false, m)
        << "\", dir=both];\n";
  }
  out << "}\n";
  return out.str();
}

Workspace generate_corpus(std::uint64_t seed, std::size_t count) {
  gen::Rng rng(seed);
  Workspace ws;
  const auto shapes = gen::all_shapes();
  for (std::size_t k = 0; k < count; ++k) {
    const auto s = shapes[rng.below(shapes.size())];
    const std::string base = std::string(gen::to_string(s)) + "_" + std::to_string(k);
    auto index = declare_category(ws, "I_" + base, gen::shape_category(s));
    declare_diagram(ws, "D_" + base, index, gen::random_diagram(rng, s, gen::Limits{4, 12}));
  }
  return ws;
}

}  // namespace grpdlim::cli
