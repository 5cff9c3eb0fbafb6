#include "workspace.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace grpdlim::cli {

CliError::CliError(ExitCode code, Location where, const std::string& message)
    : Error(where.line ? std::to_string(where.line) + ":" + std::to_string(where.column) + ": " +
                             message
                       : message),
      code_(code),
      where_(where),
      message_(message) {}

namespace {

constexpr const char* kKindNames[] = {"group",        "category", "groupoid", "functor",
                                      "diagram",      "action",   "group-action", "site",
                                      "presheaf",     "presheaf-map"};

}  // namespace

const char* to_string(Kind k) { return kKindNames[static_cast<int>(k)]; }

std::optional<Kind> kind_from_string(std::string_view s) {
  for (int k = 0; k < 10; ++k)
    if (s == kKindNames[k]) return static_cast<Kind>(k);
  return std::nullopt;
}

ObjectIndex Names::object(std::string_view name) const {
  auto it = std::find(objects.begin(), objects.end(), name);
  return it == objects.end() ? npos : static_cast<ObjectIndex>(it - objects.begin());
}

MorphismIndex Names::morphism(std::string_view name) const {
  auto it = std::find(morphisms.begin(), morphisms.end(), name);
  return it == morphisms.end() ? npos : static_cast<MorphismIndex>(it - morphisms.begin());
}

ElementIndex GroupValue::element(std::string_view name) const {
  auto it = std::find(elements.begin(), elements.end(), name);
  return it == elements.end() ? npos : static_cast<ElementIndex>(it - elements.begin());
}

Names default_names(const FiniteCategory& c) {
  Names n;
  for (ObjectIndex x = 0; x < c.object_count(); ++x) n.objects.push_back(std::to_string(x));
  bool thin = true;
  for (ObjectIndex x = 0; x < c.object_count() && thin; ++x)
    for (ObjectIndex y = 0; y < c.object_count() && thin; ++y) thin = c.hom(x, y).size() <= 1;
  for (MorphismIndex m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m))
      n.morphisms.push_back("id_" + n.objects[c.src(m)]);
    else if (thin)
      n.morphisms.push_back(n.objects[c.src(m)] + "_" + n.objects[c.dst(m)]);
    else
      n.morphisms.push_back("m" + std::to_string(m));
  }
  return n;
}

namespace {

// ---------------------------------------------------------------- tokens

struct Tok {
  std::string text;
  Location at;
};

using TokLine = std::vector<Tok>;

struct Block {
  Kind kind;
  std::string name;
  Location where;
  TokLine header;
  std::vector<TokLine> body;
};

bool is_punct(char c) { return c == '{' || c == '}' || c == ':' || c == ';' || c == '=' || c == ','; }

TokLine tokenize(std::string_view line, std::size_t line_no) {
  TokLine out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    Location at{line_no, i + 1};
    if (is_punct(c)) {
      out.push_back({std::string(1, c), at});
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({"->", at});
      i += 2;
      continue;
    }
    std::size_t j = i;
    while (j < line.size()) {
      const char d = line[j];
      if (d == ' ' || d == '\t' || d == '\r' || d == '#' || is_punct(d)) break;
      if (d == '-' && j + 1 < line.size() && line[j + 1] == '>') break;
      ++j;
    }
    out.push_back({std::string(line.substr(i, j - i)), at});
    i = j;
  }
  return out;
}

[[noreturn]] void syntax(Location at, const std::string& message) {
  throw CliError(ExitCode::Syntax, at, message);
}

bool is_name(const std::string& s) {
  return !s.empty() && !is_punct(s[0]) && s != "->";
}

std::vector<Block> read_blocks(std::string_view text) {
  std::vector<Block> blocks;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  Block* open = nullptr;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    auto toks = tokenize(text.substr(pos, end - pos), line_no);
    pos = end + 1;
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (open) {
      if (toks.size() == 1 && toks[0].text == "}") {
        open = nullptr;
        continue;
      }
      for (const auto& t : toks)
        if (t.text == "{" || t.text == "}") syntax(t.at, "unexpected '" + t.text + "' inside a block");
      open->body.push_back(std::move(toks));
      continue;
    }
    auto kind = kind_from_string(toks[0].text);
    if (!kind) syntax(toks[0].at, "expected a declaration kind, got '" + toks[0].text + "'");
    if (toks.size() < 3 || !is_name(toks[1].text))
      syntax(toks[0].at, "expected '" + toks[0].text + " NAME ... {'");
    Block b{*kind, toks[1].text, toks[0].at, {}, {}};
    std::size_t k = 2;
    while (k < toks.size() && toks[k].text != "{") {
      if (toks[k].text == "}") syntax(toks[k].at, "unexpected '}'");
      b.header.push_back(toks[k++]);
    }
    if (k == toks.size()) syntax(toks.back().at, "expected '{' at the end of the declaration line");
    ++k;
    blocks.push_back(std::move(b));
    if (k == toks.size()) {
      open = &blocks.back();
      continue;
    }
    // One-line block: `kind name header { body }`.
    if (toks.back().text != "}") syntax(toks.back().at, "expected '}' to close a one-line block");
    TokLine body(toks.begin() + static_cast<std::ptrdiff_t>(k), toks.end() - 1);
    for (const auto& t : body)
      if (t.text == "{" || t.text == "}") syntax(t.at, "unexpected '" + t.text + "'");
    if (!body.empty()) blocks.back().body.push_back(std::move(body));
    if (end == text.size()) break;
  }
  if (open) syntax(open->where, "block '" + open->name + "' is not closed");
  return blocks;
}

// ---------------------------------------------------------------- elaboration

std::string render_report(const ValidationReport& r, const Names* names) {
  if (!names) return r.summary();
  std::ostringstream out;
  std::size_t shown = 0;
  for (const auto& v : r.violations) {
    if (shown == 8) {
      out << "; ... (" << r.violations.size() - shown << " more)";
      break;
    }
    if (shown++) out << "; ";
    const bool on_morphisms = v.axiom.rfind("compose-", 0) == 0 || v.axiom == "associativity" ||
                              v.axiom.find("unit") != std::string::npos ||
                              v.axiom.rfind("inverse", 0) == 0 || v.axiom == "not-invertible";
    out << v.axiom << " at (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) {
      if (i) out << ", ";
      const auto k = v.indices[i];
      if (on_morphisms && k < names->morphisms.size())
        out << names->morphisms[k];
      else
        out << k;
    }
    out << ")";
    if (!v.detail.empty()) out << ": " << v.detail;
  }
  return out.str();
}

class Elaborator {
 public:
  Elaborator(const Workspace& ws, const Block& b) : ws_(ws), b_(b) {}

  Value run() {
    switch (b_.kind) {
      case Kind::Group: return group();
      case Kind::Category: return category(false);
      case Kind::Groupoid: return category(true);
      case Kind::Functor: return functor();
      case Kind::Diagram: return diagram();
      case Kind::Action: return action();
      case Kind::GroupAction: return group_action();
      case Kind::Site: return site();
      case Kind::Presheaf: return presheaf();
      case Kind::PresheafMap: return presheaf_map();
    }
    throw Error("unreachable");
  }

 private:
  const Workspace& ws_;
  const Block& b_;

  [[noreturn]] void fail(ExitCode code, Location at, const std::string& message) const {
    throw CliError(code, at.line ? at : b_.where, message);
  }
  [[noreturn]] void invalid(Location at, const std::string& message) const {
    fail(ExitCode::Validation, at, "'" + b_.name + "': " + message);
  }
  [[noreturn]] void bad_syntax(Location at, const std::string& message) const {
    fail(ExitCode::Syntax, at, message);
  }

  // Runs a library constructor, turning its exceptions into located errors.
  template <class F>
  auto guarded(Location at, F f, const Names* names = nullptr) const {
    try {
      return f();
    } catch (const InvalidStructure& e) {
      invalid(at, std::string(e.what()).substr(0, std::string(e.what()).find(':')) + ": " +
                      render_report(e.report(), names));
    } catch (const ShapeMismatch& e) {
      invalid(at, e.what());
    } catch (const BudgetExceeded&) {
      throw;
    } catch (const CliError&) {
      throw;
    } catch (const Error& e) {
      invalid(at, e.what());
    }
  }

  // header `: A`, `: A -> B` or `: A on B`
  std::vector<Tok> header_names(const std::vector<std::string>& separators) const {
    const auto& h = b_.header;
    const std::size_t want = 2 * separators.size();
    auto bad = [&] {
      std::string form = to_string(b_.kind) + std::string(" ") + b_.name;
      for (std::size_t i = 0; i < separators.size(); ++i)
        form += " " + separators[i] + " " + std::string(1, static_cast<char>('A' + i));
      bad_syntax(h.empty() ? b_.where : h.front().at, "expected '" + form + " {'");
    };
    if (h.size() != want) bad();
    std::vector<Tok> out;
    for (std::size_t i = 0; i < separators.size(); ++i) {
      if (h[2 * i].text != separators[i] || !is_name(h[2 * i + 1].text)) bad();
      out.push_back(h[2 * i + 1]);
    }
    return out;
  }

  void no_header() const {
    if (!b_.header.empty()) bad_syntax(b_.header.front().at, "unexpected '" + b_.header.front().text + "'");
  }

  static bool is_builtin_line(const std::vector<TokLine>& body, std::initializer_list<const char*> words) {
    if (body.size() != 1) return false;
    for (const char* w : words)
      if (body[0][0].text == w) return true;
    return false;
  }

  std::size_t number(const Tok& t, std::size_t lo, std::size_t hi) const {
    std::size_t n = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
      bad_syntax(t.at, "expected a number, got '" + t.text + "'");
    if (n < lo || n > hi)
      invalid(t.at, t.text + " is out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return n;
  }

  void arity(const TokLine& l, std::size_t n) const {
    if (l.size() != n)
      bad_syntax(l.front().at, "'" + l.front().text + "' takes " + std::to_string(n - 1) +
                                   " argument" + (n == 2 ? "" : "s"));
  }

  ObjectIndex object_of(const Names& n, const Tok& t, const std::string& where) const {
    auto x = n.object(t.text);
    if (x == npos) fail(ExitCode::Unresolved, t.at, "no object '" + t.text + "' in " + where);
    return x;
  }
  MorphismIndex morphism_of(const Names& n, const Tok& t, const std::string& where) const {
    auto m = n.morphism(t.text);
    if (m == npos) fail(ExitCode::Unresolved, t.at, "no morphism '" + t.text + "' in " + where);
    return m;
  }
  ElementIndex element_of(const GroupValue& g, const Tok& t, const std::string& where) const {
    auto e = g.element(t.text);
    if (e == npos) fail(ExitCode::Unresolved, t.at, "no element '" + t.text + "' in " + where);
    return e;
  }

  // ------------------------------------------------------------ group

  Value group() {
    no_header();
    if (b_.body.empty()) bad_syntax(b_.where, "empty group");
    const auto& first = b_.body[0];
    const auto& word = first[0].text;
    GroupValue v;
    if (is_builtin_line(b_.body, {"cyclic", "symmetric", "klein", "trivial", "product"})) {
      if (word == "cyclic") {
        arity(first, 2);
        const auto n = number(first[1], 1, 1000);
        v.group = FiniteGroup::cyclic(n);
        for (std::size_t k = 0; k < n; ++k) v.elements.push_back(std::to_string(k));
      } else if (word == "symmetric") {
        arity(first, 2);
        const auto n = number(first[1], 1, 4);
        v.group = FiniteGroup::symmetric(n);
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
          std::string s = "p";
          for (int i : p) s += static_cast<char>('0' + i);
          v.elements.push_back(s);
        } while (std::next_permutation(p.begin(), p.end()));
      } else if (word == "klein") {
        arity(first, 1);
        v.group = FiniteGroup::klein();
        v.elements = {"e", "a", "b", "c"};
      } else if (word == "trivial") {
        arity(first, 1);
        v.group = FiniteGroup::trivial();
        v.elements = {"e"};
      } else {
        arity(first, 3);
        const auto& g = ws_.group(first[1].text, first[1].at);
        const auto& h = ws_.group(first[2].text, first[2].at);
        v.group = FiniteGroup::direct_product(g.group, h.group);
        for (const auto& a : g.elements)
          for (const auto& c : h.elements) v.elements.push_back(a + "." + c);
      }
      return v;
    }
    if (word != "elements") bad_syntax(first[0].at, "expected a built-in group or 'elements'");
    for (std::size_t i = 1; i < first.size(); ++i) {
      if (!is_name(first[i].text)) bad_syntax(first[i].at, "expected an element name");
      if (v.element(first[i].text) != npos) invalid(first[i].at, "duplicate element '" + first[i].text + "'");
      v.elements.push_back(first[i].text);
    }
    const std::size_t n = v.elements.size();
    std::vector<std::vector<ElementIndex>> table(n);
    std::vector<bool> seen(n, false);
    for (std::size_t k = 1; k < b_.body.size(); ++k) {
      const auto& l = b_.body[k];
      if (l[0].text != "row" || l.size() != n + 3 || l[2].text != ":")
        bad_syntax(l[0].at, "expected 'row x : ' followed by " + std::to_string(n) + " elements");
      const auto x = element_of(v, l[1], "group '" + b_.name + "'");
      if (seen[x]) invalid(l[1].at, "row '" + l[1].text + "' given twice");
      seen[x] = true;
      for (std::size_t i = 0; i < n; ++i)
        table[x].push_back(element_of(v, l[3 + i], "group '" + b_.name + "'"));
    }
    for (std::size_t x = 0; x < n; ++x)
      if (!seen[x]) invalid(b_.where, "row '" + v.elements[x] + "' missing");
    v.group = guarded(b_.where, [&] { return FiniteGroup::from_table(table); });
    return v;
  }

  // ------------------------------------------------------------ category

  Value category(bool groupoid) {
    no_header();
    if (b_.body.empty()) bad_syntax(b_.where, "empty " + std::string(to_string(b_.kind)));
    CategoryValue v;
    const auto& first = b_.body[0];
    const auto& word = first[0].text;
    const auto at = first[0].at;
    if (is_builtin_line(b_.body, {"terminal", "empty", "discrete", "codiscrete", "chain", "cospan",
                                  "idempotent", "delooping", "translation", "opposite", "product",
                                  "union"})) {
      if (word == "terminal") {
        arity(first, 1);
        v.category = terminal_category();
      } else if (word == "empty") {
        arity(first, 1);
        v.category = empty_groupoid().category();
      } else if (word == "discrete" || word == "codiscrete") {
        arity(first, 2);
        const auto n = number(first[1], 0, 64);
        v.category = word == "discrete" ? discrete(n).category() : codiscrete(n).category();
      } else if (word == "chain") {
        arity(first, 2);
        v.category = chain_category(number(first[1], 1, 64));
      } else if (word == "cospan") {
        arity(first, 1);
        v.category = pullback_shape();
      } else if (word == "idempotent") {
        arity(first, 1);
        v.category = idempotent_category();
        v.names = {{"0"}, {"id_0", "e"}};
      } else if (word == "delooping") {
        arity(first, 2);
        const auto& g = ws_.group(first[1].text, first[1].at);
        v.category = delooping(g.group).category();
        v.names = {{"pt"}, g.elements};
      } else if (word == "translation") {
        arity(first, 2);
        const auto& g = ws_.group(first[1].text, first[1].at);
        v.category = translation_groupoid(g.group).category();
        v.names.objects = g.elements;
        for (const auto& x : g.elements)
          for (const auto& h : g.elements) v.names.morphisms.push_back(h + "@" + x);
      } else if (word == "opposite") {
        arity(first, 2);
        const auto& c = ws_.category(first[1].text, first[1].at);
        v.category = opposite(c.category);
        v.names = c.names;
      } else if (word == "product") {
        arity(first, 3);
        const auto& c = ws_.category(first[1].text, first[1].at);
        const auto& d = ws_.category(first[2].text, first[2].at);
        v.category = product_category(c.category, d.category).category;
        for (const auto& a : c.names.objects)
          for (const auto& b : d.names.objects) v.names.objects.push_back(a + "." + b);
        for (const auto& f : c.names.morphisms)
          for (const auto& g : d.names.morphisms) v.names.morphisms.push_back(f + "." + g);
        v.product_of = std::pair{first[1].text, first[2].text};
      } else {
        if (first.size() < 2) arity(first, 2);
        std::vector<Groupoid> parts;
        for (std::size_t i = 1; i < first.size(); ++i) {
          const auto& p = ws_.groupoid(first[i].text, first[i].at);
          parts.push_back(*p.groupoid);
          for (const auto& o : p.names.objects) v.names.objects.push_back(std::to_string(i - 1) + "." + o);
          for (const auto& m : p.names.morphisms) v.names.morphisms.push_back(std::to_string(i - 1) + "." + m);
        }
        v.category = disjoint_union(parts).groupoid.category();
      }
      if (v.names.objects.empty() && v.names.morphisms.empty()) v.names = default_names(v.category);
    } else {
      explicit_category(v);
    }
    if (groupoid) v.groupoid = guarded(at, [&] { return Groupoid(v.category); }, &v.names);
    return v;
  }

  void explicit_category(CategoryValue& v) {
    const auto& first = b_.body[0];
    if (first[0].text != "objects") bad_syntax(first[0].at, "expected a built-in or 'objects'");
    std::unordered_map<std::string, ObjectIndex> objects;
    if (first.size() == 2 && !first[1].text.empty() && std::isdigit(static_cast<unsigned char>(first[1].text[0]))) {
      const auto n = number(first[1], 0, 100000);
      for (std::size_t k = 0; k < n; ++k) v.names.objects.push_back(std::to_string(k));
    } else {
      for (std::size_t i = 1; i < first.size(); ++i) {
        const auto& t = first[i];
        if (!is_name(t.text) || std::isdigit(static_cast<unsigned char>(t.text[0])))
          bad_syntax(t.at, "object names in a list must not start with a digit");
        v.names.objects.push_back(t.text);
      }
    }
    for (ObjectIndex x = 0; x < v.names.objects.size(); ++x)
      if (!objects.emplace(v.names.objects[x], x).second)
        invalid(first[0].at, "duplicate object '" + v.names.objects[x] + "'");
    auto object = [&](const Tok& t) {
      auto it = objects.find(t.text);
      if (it == objects.end()) fail(ExitCode::Unresolved, t.at, "no object '" + t.text + "' in '" + b_.name + "'");
      return it->second;
    };

    RawCategory raw;
    raw.object_count = v.names.objects.size();
    raw.identities.assign(raw.object_count, npos);
    std::unordered_map<std::string, MorphismIndex> morphisms;
    auto add_morphism = [&](const Tok& name, ObjectIndex s, ObjectIndex d) {
      if (!morphisms.emplace(name.text, static_cast<MorphismIndex>(raw.arrows.size())).second)
        invalid(name.at, "duplicate morphism '" + name.text + "'");
      v.names.morphisms.push_back(name.text);
      raw.arrows.push_back({s, d});
      return static_cast<MorphismIndex>(raw.arrows.size() - 1);
    };
    std::vector<const TokLine*> triples;
    for (std::size_t k = 1; k < b_.body.size(); ++k) {
      const auto& l = b_.body[k];
      if (l[0].text == "identity") {
        if (l.size() != 4 || l[2].text != ":") bad_syntax(l[0].at, "expected 'identity NAME : OBJECT'");
        const auto x = object(l[3]);
        if (raw.identities[x] != npos) invalid(l[0].at, "object '" + l[3].text + "' has two identities");
        raw.identities[x] = add_morphism(l[1], x, x);
      } else if (l[0].text == "morphism") {
        if (l.size() != 6 || l[2].text != ":" || l[4].text != "->")
          bad_syntax(l[0].at, "expected 'morphism NAME : SOURCE -> TARGET'");
        add_morphism(l[1], object(l[3]), object(l[5]));
      } else if (l.size() == 5 && l[1].text == ";" && l[3].text == "=") {
        triples.push_back(&l);
      } else {
        bad_syntax(l[0].at, "expected 'identity', 'morphism' or a composite 'f;g=h'");
      }
    }
    for (ObjectIndex x = 0; x < raw.object_count; ++x)
      if (raw.identities[x] == npos)
        raw.identities[x] = add_morphism(Tok{"id_" + v.names.objects[x], b_.where}, x, x);
    auto morphism = [&](const Tok& t) {
      auto it = morphisms.find(t.text);
      if (it == morphisms.end()) fail(ExitCode::Unresolved, t.at, "no morphism '" + t.text + "' in '" + b_.name + "'");
      return it->second;
    };
    std::unordered_map<std::uint64_t, bool> given;
    for (const auto* l : triples) {
      const auto f = morphism((*l)[0]), g = morphism((*l)[2]), h = morphism((*l)[4]);
      raw.compositions.push_back({f, g, h});
      given[(std::uint64_t{f} << 32) | g] = true;
    }
    std::vector<bool> is_id(raw.arrows.size(), false);
    for (auto id : raw.identities) is_id[id] = true;
    for (MorphismIndex f = 0; f < raw.arrows.size(); ++f) {
      const auto l = raw.identities[raw.arrows[f].src];
      const auto r = raw.identities[raw.arrows[f].dst];
      if (!given.count((std::uint64_t{l} << 32) | f)) {
        raw.compositions.push_back({l, f, f});
        given[(std::uint64_t{l} << 32) | f] = true;
      }
      if (!given.count((std::uint64_t{f} << 32) | r)) {
        raw.compositions.push_back({f, r, f});
        given[(std::uint64_t{f} << 32) | r] = true;
      }
    }
    v.category = guarded(b_.where, [&] { return FiniteCategory::from_raw(raw); }, &v.names);
  }

  // ------------------------------------------------------------ functor

  Value functor() {
    auto h = header_names({":", "->"});
    FunctorValue v{{}, h[0].text, h[1].text};
    const auto& c = ws_.category(h[0].text, h[0].at);
    const auto& d = ws_.category(h[1].text, h[1].at);
    const std::string in_c = "'" + v.source + "'", in_d = "'" + v.target + "'";
    if (is_builtin_line(b_.body, {"constant", "identity", "first", "second"})) {
      const auto& l = b_.body[0];
      if (l[0].text == "constant") {
        arity(l, 2);
        const auto x = object_of(d.names, l[1], in_d);
        v.functor = CatFunctor::constant(c.category, d.category, x);
      } else if (l[0].text == "identity") {
        arity(l, 1);
        if (!(c.category == d.category)) invalid(l[0].at, "identity needs equal source and target");
        v.functor = CatFunctor(c.category, d.category, CatFunctor::identity(c.category).object_map(),
                               CatFunctor::identity(c.category).morphism_map());
      } else {
        arity(l, 1);
        if (!c.product_of) invalid(l[0].at, in_c + " is not declared as a product");
        const auto& a = ws_.category(c.product_of->first);
        const auto& b = ws_.category(c.product_of->second);
        auto pc = product_category(a.category, b.category);
        const auto& p = l[0].text == "first" ? pc.first : pc.second;
        v.functor = guarded(l[0].at, [&] {
          return CatFunctor(c.category, d.category, p.object_map(), p.morphism_map());
        });
      }
      return v;
    }
    std::vector<ObjectIndex> objects(c.category.object_count(), npos);
    std::vector<MorphismIndex> morphisms(c.category.morphism_count(), npos);
    for (const auto& l : b_.body) {
      if (l.size() != 4 || l[2].text != "->" || (l[0].text != "object" && l[0].text != "morphism"))
        bad_syntax(l[0].at, "expected 'object X -> Y' or 'morphism f -> g'");
      if (l[0].text == "object") {
        const auto x = object_of(c.names, l[1], in_c);
        if (objects[x] != npos) invalid(l[1].at, "object '" + l[1].text + "' mapped twice");
        objects[x] = object_of(d.names, l[3], in_d);
      } else {
        const auto m = morphism_of(c.names, l[1], in_c);
        if (morphisms[m] != npos) invalid(l[1].at, "morphism '" + l[1].text + "' mapped twice");
        morphisms[m] = morphism_of(d.names, l[3], in_d);
      }
    }
    for (ObjectIndex x = 0; x < objects.size(); ++x)
      if (objects[x] == npos) invalid(b_.where, "object '" + c.names.objects[x] + "' is not mapped");
    for (MorphismIndex m = 0; m < morphisms.size(); ++m) {
      if (morphisms[m] != npos) continue;
      if (!c.category.is_identity(m)) invalid(b_.where, "morphism '" + c.names.morphisms[m] + "' is not mapped");
      morphisms[m] = d.category.identity(objects[c.category.src(m)]);
    }
    v.functor = guarded(b_.where, [&] { return CatFunctor(c.category, d.category, objects, morphisms); },
                        &c.names);
    return v;
  }

  // ------------------------------------------------------------ diagram

  Value diagram() {
    auto h = header_names({":"});
    DiagramValue v{{}, h[0].text};
    const auto& index = ws_.category(h[0].text, h[0].at);
    const std::string in_i = "'" + v.index + "'";
    if (is_builtin_line(b_.body, {"constant", "action"})) {
      const auto& l = b_.body[0];
      arity(l, 2);
      if (l[0].text == "constant") {
        const auto& g = ws_.groupoid(l[1].text, l[1].at);
        v.diagram = DiagramFunctor::constant(index.category, *g.groupoid);
      } else {
        const auto& a = ws_.action(l[1].text, l[1].at);
        auto d = action_diagram(a.action);
        if (!(d.index() == index.category))
          invalid(l[1].at, in_i + " is not the delooping of the acting group");
        v.diagram = d;
      }
      return v;
    }
    const auto& c = index.category;
    std::vector<std::optional<Groupoid>> vertices(c.object_count());
    std::vector<std::optional<CatFunctor>> edges(c.morphism_count());
    for (const auto& l : b_.body) {
      if (l.size() != 4 || l[2].text != "=" || (l[0].text != "vertex" && l[0].text != "edge"))
        bad_syntax(l[0].at, "expected 'vertex A = X' or 'edge f = F'");
      if (l[0].text == "vertex") {
        const auto x = object_of(index.names, l[1], in_i);
        if (vertices[x]) invalid(l[1].at, "vertex '" + l[1].text + "' given twice");
        vertices[x] = *ws_.groupoid(l[3].text, l[3].at).groupoid;
      } else {
        const auto m = morphism_of(index.names, l[1], in_i);
        if (edges[m]) invalid(l[1].at, "edge '" + l[1].text + "' given twice");
        edges[m] = ws_.functor(l[3].text, l[3].at).functor;
      }
    }
    std::vector<Groupoid> vs;
    for (ObjectIndex x = 0; x < vertices.size(); ++x) {
      if (!vertices[x]) invalid(b_.where, "vertex '" + index.names.objects[x] + "' missing");
      vs.push_back(*vertices[x]);
    }
    std::vector<CatFunctor> es;
    for (MorphismIndex m = 0; m < edges.size(); ++m) {
      if (!edges[m]) {
        if (!c.is_identity(m)) invalid(b_.where, "edge '" + index.names.morphisms[m] + "' missing");
        edges[m] = CatFunctor::identity(vs[c.src(m)].category());
      }
      es.push_back(*edges[m]);
    }
    v.diagram = guarded(b_.where, [&] { return DiagramFunctor(c, vs, es); }, &index.names);
    return v;
  }

  // ------------------------------------------------------------ actions

  Value action() {
    auto h = header_names({":", "on"});
    ActionValue v{{}, h[0].text, h[1].text};
    const auto& g = ws_.group(h[0].text, h[0].at);
    const auto& x = ws_.groupoid(h[1].text, h[1].at);
    if (is_builtin_line(b_.body, {"translation", "trivial"})) {
      const auto& l = b_.body[0];
      arity(l, 1);
      if (l[0].text == "trivial") {
        v.action = GroupAction::trivial(g.group, *x.groupoid);
      } else {
        auto t = GroupAction::translation(g.group);
        if (!(t.space() == *x.groupoid))
          invalid(h[1].at, "'" + v.space + "' is not the translation groupoid of '" + v.group + "'");
        v.action = t;
      }
      return v;
    }
    std::vector<std::optional<CatFunctor>> act(g.group.order());
    for (const auto& l : b_.body) {
      if (l.size() != 4 || l[0].text != "element" || l[2].text != "=")
        bad_syntax(l[0].at, "expected 'element g = F'");
      const auto e = element_of(g, l[1], "'" + v.group + "'");
      if (act[e]) invalid(l[1].at, "element '" + l[1].text + "' given twice");
      act[e] = ws_.functor(l[3].text, l[3].at).functor;
    }
    std::vector<CatFunctor> fs;
    for (ElementIndex e = 0; e < act.size(); ++e) {
      if (!act[e]) {
        if (e != g.group.identity()) invalid(b_.where, "element '" + g.elements[e] + "' has no functor");
        act[e] = CatFunctor::identity(x.category);
      }
      fs.push_back(*act[e]);
    }
    v.action = guarded(b_.where, [&] { return GroupAction(g.group, *x.groupoid, fs); });
    return v;
  }

  Value group_action() {
    auto h = header_names({":", "on"});
    GroupActionValue v{{}, h[0].text, h[1].text};
    const auto& gamma = ws_.group(h[0].text, h[0].at);
    const auto& g = ws_.group(h[1].text, h[1].at);
    if (!b_.body.empty() && (b_.body[0][0].text == "trivial" || b_.body[0][0].text == "inversion")) {
      if (b_.body.size() != 1) bad_syntax(b_.body[1][0].at, "a built-in action takes one line");
      const auto& l = b_.body[0];
      if (l[0].text == "trivial") {
        arity(l, 1);
        v.action = ActionOnGroup::trivial(gamma.group, g.group);
      } else {
        std::vector<bool> sign(gamma.group.order(), false);
        for (std::size_t i = 1; i < l.size(); ++i) sign[element_of(gamma, l[i], "'" + v.gamma + "'")] = true;
        v.action = guarded(l[0].at, [&] { return ActionOnGroup::inversion(gamma.group, sign, g.group); });
      }
      return v;
    }
    std::vector<std::vector<ElementIndex>> act(gamma.group.order());
    for (const auto& l : b_.body) {
      if (l.size() != g.group.order() + 3 || l[0].text != "element" || l[2].text != "->")
        bad_syntax(l[0].at, "expected 'element γ -> ' followed by " + std::to_string(g.group.order()) +
                                " elements");
      const auto e = element_of(gamma, l[1], "'" + v.gamma + "'");
      if (!act[e].empty()) invalid(l[1].at, "element '" + l[1].text + "' given twice");
      for (std::size_t i = 3; i < l.size(); ++i) act[e].push_back(element_of(g, l[i], "'" + v.group + "'"));
    }
    for (ElementIndex e = 0; e < act.size(); ++e) {
      if (!act[e].empty()) continue;
      if (e != gamma.group.identity()) invalid(b_.where, "element '" + gamma.elements[e] + "' has no image");
      act[e].resize(g.group.order());
      std::iota(act[e].begin(), act[e].end(), 0);
    }
    v.action = guarded(b_.where, [&] { return ActionOnGroup(gamma.group, g.group, act); });
    return v;
  }

  // ------------------------------------------------------------ sites

  Value site() {
    auto h = header_names({":"});
    SiteValue v{{}, h[0].text};
    const auto& shape = ws_.category(h[0].text, h[0].at);
    std::vector<SitePoint> points;
    for (const auto& l : b_.body) {
      if (l.size() != 6 || l[0].text != "point" || l[2].text != ":" || l[4].text != "via")
        bad_syntax(l[0].at, "expected 'point NAME : INDEX via FUNCTOR'");
      const auto& index = ws_.category(l[3].text, l[3].at);
      const auto& nbhd = ws_.functor(l[5].text, l[5].at);
      if (!(nbhd.functor.source() == index.category))
        invalid(l[5].at, "'" + l[5].text + "' does not start at '" + l[3].text + "'");
      points.push_back({l[1].text, index.category, nbhd.functor});
    }
    v.site = guarded(b_.where, [&] { return FiniteSite(shape.category, points); });
    return v;
  }

  Value presheaf() {
    auto h = header_names({":"});
    PresheafValue v{{}, h[0].text};
    const auto& s = ws_.site(h[0].text, h[0].at);
    const auto& shape = ws_.category(s.shape);
    const std::string in_c = "'" + s.shape + "'";
    if (is_builtin_line(b_.body, {"constant"})) {
      const auto& l = b_.body[0];
      arity(l, 2);
      v.presheaf = SitePresheaf::constant(s.site, *ws_.groupoid(l[1].text, l[1].at).groupoid);
      return v;
    }
    const auto& c = shape.category;
    std::vector<std::optional<Groupoid>> sections(c.object_count());
    std::vector<std::optional<CatFunctor>> restrictions(c.morphism_count());
    for (const auto& l : b_.body) {
      if (l.size() != 4 || l[2].text != "=" || (l[0].text != "section" && l[0].text != "restriction"))
        bad_syntax(l[0].at, "expected 'section U = X' or 'restriction f = F'");
      if (l[0].text == "section") {
        const auto u = object_of(shape.names, l[1], in_c);
        if (sections[u]) invalid(l[1].at, "section '" + l[1].text + "' given twice");
        sections[u] = *ws_.groupoid(l[3].text, l[3].at).groupoid;
      } else {
        const auto m = morphism_of(shape.names, l[1], in_c);
        if (restrictions[m]) invalid(l[1].at, "restriction '" + l[1].text + "' given twice");
        restrictions[m] = ws_.functor(l[3].text, l[3].at).functor;
      }
    }
    std::vector<Groupoid> xs;
    for (ObjectIndex u = 0; u < sections.size(); ++u) {
      if (!sections[u]) invalid(b_.where, "section '" + shape.names.objects[u] + "' missing");
      xs.push_back(*sections[u]);
    }
    std::vector<CatFunctor> rs;
    for (MorphismIndex m = 0; m < restrictions.size(); ++m) {
      if (!restrictions[m]) {
        if (!c.is_identity(m)) invalid(b_.where, "restriction '" + shape.names.morphisms[m] + "' missing");
        restrictions[m] = CatFunctor::identity(xs[c.src(m)].category());
      }
      rs.push_back(*restrictions[m]);
    }
    v.presheaf = guarded(b_.where, [&] { return SitePresheaf(s.site, xs, rs); }, &shape.names);
    return v;
  }

  Value presheaf_map() {
    auto h = header_names({":", "->"});
    const auto& x = ws_.presheaf(h[0].text, h[0].at);
    const auto& y = ws_.presheaf(h[1].text, h[1].at);
    if (x.site != y.site) invalid(h[1].at, "'" + h[0].text + "' and '" + h[1].text + "' live on different sites");
    const auto& shape = ws_.category(ws_.site(x.site).shape);
    const std::string in_c = "'" + ws_.site(x.site).shape + "'";
    std::vector<std::optional<CatFunctor>> comps(shape.category.object_count());
    for (const auto& l : b_.body) {
      if (l.size() != 4 || l[0].text != "component" || l[2].text != "=")
        bad_syntax(l[0].at, "expected 'component U = F'");
      const auto u = object_of(shape.names, l[1], in_c);
      if (comps[u]) invalid(l[1].at, "component '" + l[1].text + "' given twice");
      comps[u] = ws_.functor(l[3].text, l[3].at).functor;
    }
    std::vector<CatFunctor> fs;
    for (ObjectIndex u = 0; u < comps.size(); ++u) {
      if (!comps[u]) invalid(b_.where, "component '" + shape.names.objects[u] + "' missing");
      fs.push_back(*comps[u]);
    }
    return PresheafMapValue{guarded(b_.where, [&] { return PresheafMap(x.presheaf, y.presheaf, fs); }),
                            h[0].text, h[1].text};
  }
};

// ---------------------------------------------------------------- equality

bool same(const DiagramFunctor& a, const DiagramFunctor& b) {
  return a.index() == b.index() && a.vertices() == b.vertices() && a.edges() == b.edges();
}

bool same_value(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, GroupValue>) {
          return x.group == y.group && x.elements == y.elements;
        } else if constexpr (std::is_same_v<T, CategoryValue>) {
          return x.category == y.category && x.groupoid.has_value() == y.groupoid.has_value() &&
                 x.names.objects == y.names.objects && x.names.morphisms == y.names.morphisms &&
                 x.product_of == y.product_of;
        } else if constexpr (std::is_same_v<T, FunctorValue>) {
          return x.functor == y.functor && x.source == y.source && x.target == y.target;
        } else if constexpr (std::is_same_v<T, DiagramValue>) {
          return same(x.diagram, y.diagram) && x.index == y.index;
        } else if constexpr (std::is_same_v<T, ActionValue>) {
          return x.action.group() == y.action.group() && x.action.space() == y.action.space() &&
                 x.action.functors() == y.action.functors();
        } else if constexpr (std::is_same_v<T, GroupActionValue>) {
          return x.action.gamma() == y.action.gamma() && x.action.group() == y.action.group() &&
                 x.action.table() == y.action.table();
        } else if constexpr (std::is_same_v<T, SiteValue>) {
          const auto& p = x.site.points();
          const auto& q = y.site.points();
          if (!(x.site.shape() == y.site.shape()) || p.size() != q.size()) return false;
          for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i].name != q[i].name || !(p[i].index == q[i].index) || !(p[i].nbhd == q[i].nbhd))
              return false;
          return true;
        } else if constexpr (std::is_same_v<T, PresheafValue>) {
          return x.site == y.site && same(x.presheaf.diagram(), y.presheaf.diagram());
        } else {
          return x.source == y.source && x.target == y.target &&
                 x.map.as_diagram_map().components() == y.map.as_diagram_map().components();
        }
      },
      a);
}

// ---------------------------------------------------------------- printing

std::string render_line(const Line& l) {
  if (l.size() == 5 && l[1] == ";" && l[3] == "=") return l[0] + ";" + l[2] + "=" + l[4];
  std::string s;
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? " " : "") + l[i];
  return s;
}

Line to_line(const TokLine& t) {
  Line l;
  for (const auto& x : t) l.push_back(x.text);
  return l;
}

TokLine to_toks(const Line& l, Location at) {
  TokLine t;
  for (const auto& x : l) t.push_back({x, at});
  return t;
}

}  // namespace

const Declaration* Workspace::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &decls_[it->second];
}

const Declaration& Workspace::get(std::string_view name, std::initializer_list<Kind> kinds,
                                  Location where) const {
  const auto* d = find(name);
  if (!d) throw CliError(ExitCode::Unresolved, where, "no declaration named '" + std::string(name) + "'");
  for (auto k : kinds)
    if (d->kind == k) return *d;
  std::string want;
  for (auto k : kinds) want += (want.empty() ? "" : " or ") + std::string(to_string(k));
  throw CliError(ExitCode::KindMismatch, where,
                 "'" + std::string(name) + "' is a " + to_string(d->kind) + ", expected " + want);
}

const GroupValue& Workspace::group(std::string_view name, Location where) const {
  return std::get<GroupValue>(get(name, {Kind::Group}, where).value);
}
const CategoryValue& Workspace::category(std::string_view name, Location where) const {
  return std::get<CategoryValue>(get(name, {Kind::Category, Kind::Groupoid}, where).value);
}
const CategoryValue& Workspace::groupoid(std::string_view name, Location where) const {
  return std::get<CategoryValue>(get(name, {Kind::Groupoid}, where).value);
}
const FunctorValue& Workspace::functor(std::string_view name, Location where) const {
  return std::get<FunctorValue>(get(name, {Kind::Functor}, where).value);
}
const DiagramValue& Workspace::diagram(std::string_view name, Location where) const {
  return std::get<DiagramValue>(get(name, {Kind::Diagram}, where).value);
}
const ActionValue& Workspace::action(std::string_view name, Location where) const {
  return std::get<ActionValue>(get(name, {Kind::Action}, where).value);
}
const GroupActionValue& Workspace::group_action(std::string_view name, Location where) const {
  return std::get<GroupActionValue>(get(name, {Kind::GroupAction}, where).value);
}
const SiteValue& Workspace::site(std::string_view name, Location where) const {
  return std::get<SiteValue>(get(name, {Kind::Site}, where).value);
}
const PresheafValue& Workspace::presheaf(std::string_view name, Location where) const {
  return std::get<PresheafValue>(get(name, {Kind::Presheaf}, where).value);
}
const PresheafMapValue& Workspace::presheaf_map(std::string_view name, Location where) const {
  return std::get<PresheafMapValue>(get(name, {Kind::PresheafMap}, where).value);
}

namespace {

Declaration elaborate(const Workspace& ws, const Block& b) {
  if (ws.find(b.name))
    throw CliError(ExitCode::Validation, b.where, "duplicate declaration '" + b.name + "'");
  Value v = Elaborator(ws, b).run();
  std::vector<Line> body;
  for (const auto& l : b.body) body.push_back(to_line(l));
  return {b.kind, b.name, to_line(b.header), std::move(body), b.where, std::move(v)};
}

}  // namespace

void Workspace::push(Declaration d) {
  index_.emplace(d.name, decls_.size());
  decls_.push_back(std::move(d));
}

void Workspace::declare(Kind kind, std::string name, Line header, std::vector<Line> body,
                        Location where) {
  Block b{kind, std::move(name), where, to_toks(header, where), {}};
  for (const auto& l : body) b.body.push_back(to_toks(l, where));
  push(elaborate(*this, b));
}

bool operator==(const Workspace& a, const Workspace& b) {
  if (a.decls_.size() != b.decls_.size()) return false;
  for (std::size_t i = 0; i < a.decls_.size(); ++i) {
    const auto& x = a.decls_[i];
    const auto& y = b.decls_[i];
    if (x.kind != y.kind || x.name != y.name || x.header != y.header || x.body != y.body ||
        !same_value(x.value, y.value))
      return false;
  }
  return true;
}

Workspace parse(std::string_view text) {
  Workspace ws;
  for (const auto& b : read_blocks(text)) ws.push(elaborate(ws, b));
  return ws;
}

std::string print(const Workspace& ws) {
  std::string out;
  bool first = true;
  for (const auto& d : ws.declarations()) {
    if (!first) out += "\n";
    first = false;
    out += std::string(to_string(d.kind)) + " " + d.name;
    for (const auto& t : d.header) out += " " + t;
    if (d.body.empty()) {
      out += " { }\n";
    } else if (d.body.size() == 1) {
      out += " { " + render_line(d.body[0]) + " }\n";
    } else {
      out += " {\n";
      for (const auto& l : d.body) out += "  " + render_line(l) + "\n";
      out += "}\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------- builders

namespace {

std::vector<Line> category_body(const FiniteCategory& c, const Names& n) {
  std::vector<Line> body;
  Line objects{"objects"};
  bool counted = true;
  for (ObjectIndex x = 0; x < n.objects.size(); ++x) counted = counted && n.objects[x] == std::to_string(x);
  if (counted)
    objects.push_back(std::to_string(n.objects.size()));
  else
    objects.insert(objects.end(), n.objects.begin(), n.objects.end());
  body.push_back(objects);
  for (MorphismIndex m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m))
      body.push_back({"identity", n.morphisms[m], ":", n.objects[c.src(m)]});
    else
      body.push_back({"morphism", n.morphisms[m], ":", n.objects[c.src(m)], "->", n.objects[c.dst(m)]});
  }
  for (MorphismIndex f = 0; f < c.morphism_count(); ++f) {
    if (c.is_identity(f)) continue;
    for (MorphismIndex g : c.out(c.dst(f))) {
      if (c.is_identity(g)) continue;
      body.push_back({n.morphisms[f], ";", n.morphisms[g], "=", n.morphisms[c.compose(f, g)]});
    }
  }
  return body;
}

}  // namespace

std::string declare_group(Workspace& ws, const std::string& name, const FiniteGroup& g) {
  std::vector<Line> body;
  Line elements{"elements"};
  for (ElementIndex x = 0; x < g.order(); ++x) elements.push_back("g" + std::to_string(x));
  body.push_back(elements);
  for (ElementIndex x = 0; x < g.order(); ++x) {
    Line row{"row", elements[1 + x], ":"};
    for (ElementIndex y = 0; y < g.order(); ++y) row.push_back(elements[1 + g.multiply(x, y)]);
    body.push_back(row);
  }
  ws.declare(Kind::Group, name, {}, body);
  return name;
}

std::string declare_category(Workspace& ws, const std::string& name, const FiniteCategory& c) {
  ws.declare(Kind::Category, name, {}, category_body(c, default_names(c)));
  return name;
}

std::string declare_groupoid(Workspace& ws, const std::string& name, const Groupoid& g) {
  ws.declare(Kind::Groupoid, name, {}, category_body(g.category(), default_names(g.category())));
  return name;
}

std::string declare_functor(Workspace& ws, const std::string& name, const std::string& source,
                            const std::string& target, const CatFunctor& f) {
  const auto& s = ws.category(source).names;
  const auto& t = ws.category(target).names;
  std::vector<Line> body;
  for (ObjectIndex x = 0; x < f.source().object_count(); ++x)
    body.push_back({"object", s.objects[x], "->", t.objects[f.object(x)]});
  for (MorphismIndex m = 0; m < f.source().morphism_count(); ++m)
    if (!f.source().is_identity(m)) body.push_back({"morphism", s.morphisms[m], "->", t.morphisms[f.morphism(m)]});
  ws.declare(Kind::Functor, name, {":", source, "->", target}, body);
  return name;
}

std::string declare_diagram(Workspace& ws, const std::string& name, const std::string& index,
                            const DiagramFunctor& d) {
  const Names n = ws.category(index).names;  // copy: declaring vertices grows ws
  std::vector<std::string> vertices;
  std::vector<Line> body;
  for (ObjectIndex a = 0; a < d.index().object_count(); ++a) {
    vertices.push_back(declare_groupoid(ws, name + "_v" + std::to_string(a), d.vertex(a)));
    body.push_back({"vertex", n.objects[a], "=", vertices.back()});
  }
  const auto& c = d.index();
  for (MorphismIndex m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    auto e = declare_functor(ws, name + "_e" + std::to_string(m), vertices[c.src(m)],
                             vertices[c.dst(m)], d.edge(m));
    body.push_back({"edge", n.morphisms[m], "=", e});
  }
  ws.declare(Kind::Diagram, name, {":", index}, body);
  return name;
}

}  // namespace grpdlim::cli
