#include "grpdlim/category.hpp"

#include <algorithm>
#include <unordered_map>

namespace grpdlim {

namespace detail {

struct CategoryData {
  std::size_t objects = 0;
  std::vector<ObjectIndex> src;
  std::vector<ObjectIndex> dst;
  std::vector<MorphismIndex> identity;
  std::vector<std::uint32_t> out_offset;
  std::vector<MorphismIndex> out_list;
  std::vector<std::uint32_t> in_offset;
  std::vector<MorphismIndex> in_list;
  std::vector<std::uint32_t> out_pos;
  std::vector<std::uint64_t> row_start;
  std::vector<MorphismIndex> table;
  std::vector<bool> is_identity;
};

}  // namespace detail

namespace {

using detail::CategoryData;

std::uint64_t pair_key(MorphismIndex f, MorphismIndex g) {
  return (std::uint64_t{f} << 32) | g;
}

// Fills everything but the composition table. Arrows and identities must
// already be known to be in range.
std::shared_ptr<CategoryData> build_skeleton(std::size_t objects, std::vector<Arrow> arrows,
                                             std::vector<MorphismIndex> identities) {
  auto d = std::make_shared<CategoryData>();
  const std::size_t m = arrows.size();
  d->objects = objects;
  d->src.resize(m);
  d->dst.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    d->src[i] = arrows[i].src;
    d->dst[i] = arrows[i].dst;
  }
  d->identity = std::move(identities);
  d->is_identity.assign(m, false);
  for (MorphismIndex id : d->identity) d->is_identity[id] = true;

  d->out_offset.assign(objects + 1, 0);
  d->in_offset.assign(objects + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    ++d->out_offset[d->src[i] + 1];
    ++d->in_offset[d->dst[i] + 1];
  }
  for (std::size_t x = 0; x < objects; ++x) {
    d->out_offset[x + 1] += d->out_offset[x];
    d->in_offset[x + 1] += d->in_offset[x];
  }
  d->out_list.resize(m);
  d->in_list.resize(m);
  d->out_pos.resize(m);
  std::vector<std::uint32_t> out_fill(d->out_offset.begin(), d->out_offset.end() - 1);
  std::vector<std::uint32_t> in_fill(d->in_offset.begin(), d->in_offset.end() - 1);
  for (std::size_t i = 0; i < m; ++i) {
    const auto s = d->src[i];
    d->out_pos[i] = out_fill[s] - d->out_offset[s];
    d->out_list[out_fill[s]++] = static_cast<MorphismIndex>(i);
    d->in_list[in_fill[d->dst[i]]++] = static_cast<MorphismIndex>(i);
  }
  d->row_start.resize(m + 1);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    d->row_start[i] = total;
    const auto y = d->dst[i];
    total += d->out_offset[y + 1] - d->out_offset[y];
  }
  d->row_start[m] = total;
  return d;
}

// Range and identity-typing checks shared by validate_category and generate.
void check_shape(std::size_t objects, const std::vector<Arrow>& arrows,
                 const std::vector<MorphismIndex>& identities, ValidationReport& report) {
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].src >= objects || arrows[i].dst >= objects)
      report.add("arrow-endpoint-range", {i}, "endpoint is not an object");
  }
  if (identities.size() != objects) {
    report.add("identity-count", {identities.size(), objects},
               "need exactly one identity per object");
    return;
  }
  std::vector<std::size_t> owner(arrows.size(), npos);
  for (std::size_t x = 0; x < objects; ++x) {
    const auto id = identities[x];
    if (id >= arrows.size()) {
      report.add("identity-range", {x}, "identity is not a morphism");
      continue;
    }
    if (arrows[id].src != x || arrows[id].dst != x)
      report.add("identity-typing", {x, id}, "identity must be an endomorphism of its object");
    if (owner[id] != npos)
      report.add("identity-shared", {owner[id], x, id}, "two objects share an identity");
    owner[id] = x;
  }
}

}  // namespace

ValidationReport validate_category(const RawCategory& raw) {
  ValidationReport report;
  const std::size_t m = raw.arrows.size();
  check_shape(raw.object_count, raw.arrows, raw.identities, report);
  if (!report.ok()) return report;

  std::unordered_map<std::uint64_t, MorphismIndex> table;
  table.reserve(raw.compositions.size() * 2);
  for (const auto& e : raw.compositions) {
    if (e.first >= m || e.second >= m || e.result >= m) {
      report.add("compose-range", {e.first, e.second, e.result}, "index is not a morphism");
      continue;
    }
    if (raw.arrows[e.first].dst != raw.arrows[e.second].src) {
      report.add("compose-undefined", {e.first, e.second},
                 "entry for a pair that is not composable");
      continue;
    }
    if (raw.arrows[e.result].src != raw.arrows[e.first].src ||
        raw.arrows[e.result].dst != raw.arrows[e.second].dst) {
      report.add("compose-typing", {e.first, e.second, e.result},
                 "composite has the wrong source or target");
    }
    auto [it, inserted] = table.emplace(pair_key(e.first, e.second), e.result);
    if (!inserted && it->second != e.result)
      report.add("compose-conflict", {e.first, e.second},
                 "pair is given two different composites");
  }

  auto lookup = [&](MorphismIndex f, MorphismIndex g) -> MorphismIndex {
    auto it = table.find(pair_key(f, g));
    return it == table.end() ? npos : it->second;
  };

  std::vector<std::vector<MorphismIndex>> out(raw.object_count);
  for (std::size_t i = 0; i < m; ++i) out[raw.arrows[i].src].push_back(static_cast<MorphismIndex>(i));

  for (std::size_t f = 0; f < m; ++f) {
    for (MorphismIndex g : out[raw.arrows[f].dst]) {
      if (lookup(static_cast<MorphismIndex>(f), g) == npos)
        report.add("compose-missing", {f, g}, "composable pair has no composite");
    }
  }

  for (std::size_t f = 0; f < m; ++f) {
    const auto fi = static_cast<MorphismIndex>(f);
    const auto left = lookup(raw.identities[raw.arrows[f].src], fi);
    if (left != npos && left != fi) report.add("left-unit", {f}, "id ; f != f");
    const auto right = lookup(fi, raw.identities[raw.arrows[f].dst]);
    if (right != npos && right != fi) report.add("right-unit", {f}, "f ; id != f");
  }

  for (std::size_t f = 0; f < m; ++f) {
    const auto fi = static_cast<MorphismIndex>(f);
    for (MorphismIndex g : out[raw.arrows[f].dst]) {
      const auto fg = lookup(fi, g);
      for (MorphismIndex h : out[raw.arrows[g].dst]) {
        const auto gh = lookup(g, h);
        if (fg == npos || gh == npos) continue;
        if (fg >= m || gh >= m) continue;
        const auto lhs = lookup(fg, h);
        const auto rhs = lookup(fi, gh);
        if (lhs != npos && rhs != npos && lhs != rhs)
          report.add("associativity", {f, g, h}, "(f;g);h != f;(g;h)");
      }
    }
  }
  return report;
}

FiniteCategory::FiniteCategory()
    : data_(build_skeleton(0, {}, {})) {}

FiniteCategory FiniteCategory::from_raw(const RawCategory& raw) {
  auto report = validate_category(raw);
  if (!report.ok()) throw InvalidStructure("invalid category", std::move(report));
  auto d = build_skeleton(raw.object_count, raw.arrows, raw.identities);
  d->table.assign(d->row_start.back(), npos);
  for (const auto& e : raw.compositions)
    d->table[d->row_start[e.first] + d->out_pos[e.second]] = e.result;
  return FiniteCategory(std::move(d));
}

FiniteCategory FiniteCategory::generate(std::size_t object_count, std::vector<Arrow> arrows,
                                        std::vector<MorphismIndex> identities,
                                        const ComposeFn& compose, Budget budget) {
  ValidationReport report;
  check_shape(object_count, arrows, identities, report);
  if (!report.ok()) throw InvalidStructure("invalid generated category", std::move(report));
  auto d = build_skeleton(object_count, std::move(arrows), std::move(identities));
  const std::size_t m = d->src.size();
  BudgetMeter meter(budget, "composition table", static_cast<double>(d->row_start.back()));
  meter.charge(d->row_start.back());
  d->table.resize(d->row_start.back());
  for (std::size_t f = 0; f < m; ++f) {
    const auto y = d->dst[f];
    std::uint64_t slot = d->row_start[f];
    for (auto k = d->out_offset[y]; k < d->out_offset[y + 1]; ++k, ++slot) {
      const MorphismIndex g = d->out_list[k];
      const MorphismIndex h = compose(static_cast<MorphismIndex>(f), g);
      if (h >= m || d->src[h] != d->src[f] || d->dst[h] != d->dst[g]) {
        report.add("compose-typing", {f, g, h}, "composite has the wrong source or target");
        if (report.violations.size() > 64) break;
      }
      d->table[slot] = h;
    }
  }
  if (report.ok()) {
    for (std::size_t f = 0; f < m; ++f) {
      const auto id_src = d->identity[d->src[f]];
      const auto id_dst = d->identity[d->dst[f]];
      if (d->table[d->row_start[id_src] + d->out_pos[f]] != f)
        report.add("left-unit", {f}, "id ; f != f");
      if (d->table[d->row_start[f] + d->out_pos[id_dst]] != f)
        report.add("right-unit", {f}, "f ; id != f");
    }
  }
  if (!report.ok()) throw InvalidStructure("invalid generated category", std::move(report));
  return FiniteCategory(std::move(d));
}

std::size_t FiniteCategory::object_count() const { return data_->objects; }
std::size_t FiniteCategory::morphism_count() const { return data_->src.size(); }
ObjectIndex FiniteCategory::src(MorphismIndex m) const { return data_->src[m]; }
ObjectIndex FiniteCategory::dst(MorphismIndex m) const { return data_->dst[m]; }
MorphismIndex FiniteCategory::identity(ObjectIndex x) const { return data_->identity[x]; }
bool FiniteCategory::is_identity(MorphismIndex m) const { return data_->is_identity[m]; }

std::span<const MorphismIndex> FiniteCategory::out(ObjectIndex x) const {
  const auto b = data_->out_offset[x];
  return {data_->out_list.data() + b, data_->out_offset[x + 1] - b};
}

std::span<const MorphismIndex> FiniteCategory::in(ObjectIndex x) const {
  const auto b = data_->in_offset[x];
  return {data_->in_list.data() + b, data_->in_offset[x + 1] - b};
}

std::vector<MorphismIndex> FiniteCategory::hom(ObjectIndex x, ObjectIndex y) const {
  std::vector<MorphismIndex> result;
  for (MorphismIndex m : out(x))
    if (data_->dst[m] == y) result.push_back(m);
  return result;
}

bool FiniteCategory::composable(MorphismIndex f, MorphismIndex g) const {
  return data_->dst[f] == data_->src[g];
}

MorphismIndex FiniteCategory::compose(MorphismIndex f, MorphismIndex g) const {
  return data_->table[data_->row_start[f] + data_->out_pos[g]];
}

std::uint64_t FiniteCategory::composable_pair_count() const { return data_->row_start.back(); }

RawCategory FiniteCategory::to_raw() const {
  RawCategory raw;
  raw.object_count = data_->objects;
  const std::size_t m = morphism_count();
  raw.arrows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) raw.arrows.push_back({data_->src[i], data_->dst[i]});
  raw.identities = data_->identity;
  raw.compositions.reserve(data_->table.size());
  for (std::size_t f = 0; f < m; ++f)
    for (MorphismIndex g : out(data_->dst[f]))
      raw.compositions.push_back(
          {static_cast<MorphismIndex>(f), g, compose(static_cast<MorphismIndex>(f), g)});
  return raw;
}

ValidationReport FiniteCategory::validate() const { return validate_category(to_raw()); }

bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
  if (a.data_ == b.data_) return true;
  const auto& x = *a.data_;
  const auto& y = *b.data_;
  return x.objects == y.objects && x.src == y.src && x.dst == y.dst &&
         x.identity == y.identity && x.table == y.table;
}

ValidationReport validate_inverses(const FiniteCategory& c,
                                   std::span<const MorphismIndex> inverse) {
  ValidationReport report;
  const std::size_t m = c.morphism_count();
  if (inverse.size() != m) {
    report.add("inverse-count", {inverse.size(), m});
    return report;
  }
  for (std::size_t f = 0; f < m; ++f) {
    const auto g = inverse[f];
    if (g >= m) {
      report.add("inverse-range", {f});
      continue;
    }
    if (c.src(g) != c.dst(static_cast<MorphismIndex>(f)) ||
        c.dst(g) != c.src(static_cast<MorphismIndex>(f))) {
      report.add("inverse-typing", {f, g});
      continue;
    }
    const auto fi = static_cast<MorphismIndex>(f);
    if (c.compose(fi, g) != c.identity(c.src(fi)))
      report.add("inverse-right", {f, g}, "f ; f^-1 != id");
    if (c.compose(g, fi) != c.identity(c.dst(fi)))
      report.add("inverse-left", {f, g}, "f^-1 ; f != id");
    if (inverse[g] != fi) report.add("inverse-involution", {f, g});
  }
  return report;
}

Groupoid::Groupoid()
    : inverse_(std::make_shared<const std::vector<MorphismIndex>>()) {}

Groupoid::Groupoid(FiniteCategory category) : category_(std::move(category)) {
  const std::size_t m = category_.morphism_count();
  std::vector<MorphismIndex> inverse(m, npos);
  ValidationReport report;
  for (std::size_t f = 0; f < m; ++f) {
    const auto fi = static_cast<MorphismIndex>(f);
    const auto x = category_.src(fi);
    for (MorphismIndex g : category_.out(category_.dst(fi))) {
      if (category_.dst(g) == x && category_.compose(fi, g) == category_.identity(x) &&
          category_.compose(g, fi) == category_.identity(category_.dst(fi))) {
        inverse[f] = g;
        break;
      }
    }
    if (inverse[f] == npos) report.add("not-invertible", {f});
  }
  if (!report.ok()) throw InvalidStructure("not a groupoid", std::move(report));
  inverse_ = std::make_shared<const std::vector<MorphismIndex>>(std::move(inverse));
}

Groupoid::Groupoid(FiniteCategory category, std::vector<MorphismIndex> inverse)
    : category_(std::move(category)) {
  auto report = validate_inverses(category_, inverse);
  if (!report.ok()) throw InvalidStructure("invalid inverse table", std::move(report));
  inverse_ = std::make_shared<const std::vector<MorphismIndex>>(std::move(inverse));
}

ValidationReport Groupoid::validate() const {
  auto report = category_.validate();
  auto inv = validate_inverses(category_, *inverse_);
  for (auto& v : inv.violations) report.violations.push_back(std::move(v));
  return report;
}

}  // namespace grpdlim
