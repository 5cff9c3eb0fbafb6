#include "grpdlim/keyed.hpp"

#include <algorithm>

namespace grpdlim {

std::uint64_t TupleTable::hash(std::span<const std::uint32_t> key) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ key.size();
  for (auto v : key) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return h ^ (h >> 29);
}

std::uint32_t TupleTable::find(std::span<const std::uint32_t> key) const {
  if (slots_.empty()) return npos;
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t i = hash(key) & mask;; i = (i + 1) & mask) {
    const auto s = slots_[i];
    if (s == npos) return npos;
    if (std::equal(key.begin(), key.end(), data_.begin() + std::size_t{s} * width_)) return s;
  }
}

void TupleTable::grow() {
  const std::size_t capacity = slots_.empty() ? 16 : slots_.size() * 2;
  slots_.assign(capacity, npos);
  const std::size_t mask = capacity - 1;
  for (std::uint32_t s = 0; s < count_; ++s) {
    std::size_t i = hash((*this)[s]) & mask;
    while (slots_[i] != npos) i = (i + 1) & mask;
    slots_[i] = s;
  }
}

std::pair<std::uint32_t, bool> TupleTable::insert(std::span<const std::uint32_t> key) {
  if (key.size() != width_) throw Error("tuple width mismatch");
  if ((count_ + 1) * 2 > slots_.size()) grow();
  const std::size_t mask = slots_.size() - 1;
  std::size_t i = hash(key) & mask;
  for (;; i = (i + 1) & mask) {
    const auto s = slots_[i];
    if (s == npos) break;
    if (std::equal(key.begin(), key.end(), data_.begin() + std::size_t{s} * width_))
      return {s, false};
  }
  if (count_ >= npos - 1) throw Error("tuple table overflow");
  const auto index = static_cast<std::uint32_t>(count_++);
  slots_[i] = index;
  data_.insert(data_.end(), key.begin(), key.end());
  return {index, true};
}

MorphismIndex KeyedGroupoid::find_morphism(ObjectIndex src,
                                           std::span<const MorphismIndex> components) const {
  std::vector<std::uint32_t> key;
  key.reserve(components.size() + 1);
  key.push_back(src);
  key.insert(key.end(), components.begin(), components.end());
  return data_->morphisms.find(key);
}

KeyedGroupoidBuilder::KeyedGroupoidBuilder(std::size_t object_width, std::vector<Groupoid> slots,
                                           Budget budget, std::string stage)
    : slots_(std::move(slots)),
      objects_(object_width),
      morphisms_(slots_.size() + 1),
      budget_(budget),
      meter_(budget, std::move(stage)) {}

ObjectIndex KeyedGroupoidBuilder::add_object(std::span<const std::uint32_t> key) {
  meter_.charge();
  return objects_.insert(key).first;
}

MorphismIndex KeyedGroupoidBuilder::add_morphism(ObjectIndex src, ObjectIndex dst,
                                                 std::span<const MorphismIndex> components) {
  meter_.charge();
  scratch_.assign(1, src);
  scratch_.insert(scratch_.end(), components.begin(), components.end());
  auto [index, added] = morphisms_.insert(scratch_);
  if (added) arrows_.push_back({src, dst});
  return index;
}

KeyedGroupoid KeyedGroupoidBuilder::finish() && {
  const std::size_t n = objects_.size();
  const std::size_t m = morphisms_.size();
  const std::size_t k = slots_.size();

  std::vector<MorphismIndex> identities(n, npos);
  for (std::uint32_t f = 0; f < m; ++f) {
    if (arrows_[f].src != arrows_[f].dst) continue;
    auto key = morphisms_[f];
    bool all = true;
    for (std::size_t i = 0; i < k && all; ++i) all = slots_[i].is_identity(key[i + 1]);
    if (all) identities[arrows_[f].src] = f;
  }
  ValidationReport report;
  for (std::size_t x = 0; x < n; ++x)
    if (identities[x] == npos) report.add("keyed-identity", {x}, "object has no identity");
  if (!report.ok()) throw InvalidStructure("keyed groupoid is missing identities", report);

  std::vector<std::uint32_t> key(k + 1);
  std::vector<MorphismIndex> inverse(m);
  for (std::uint32_t f = 0; f < m; ++f) {
    auto fk = morphisms_[f];
    key[0] = arrows_[f].dst;
    for (std::size_t i = 0; i < k; ++i) key[i + 1] = slots_[i].inverse(fk[i + 1]);
    inverse[f] = morphisms_.find(key);
    if (inverse[f] == npos || arrows_[inverse[f]].dst != arrows_[f].src)
      report.add("keyed-inverse", {f}, "slotwise inverse is not a morphism");
  }
  if (!report.ok()) throw InvalidStructure("keyed groupoid is not closed under inverses", report);

  std::vector<ObjectIndex> sources(m);
  for (std::uint32_t f = 0; f < m; ++f) sources[f] = arrows_[f].src;
  auto compose = [&](MorphismIndex f, MorphismIndex g) -> MorphismIndex {
    auto fk = morphisms_[f];
    auto gk = morphisms_[g];
    key[0] = sources[f];
    for (std::size_t i = 0; i < k; ++i) key[i + 1] = slots_[i].compose(fk[i + 1], gk[i + 1]);
    return morphisms_.find(key);
  };
  auto category = FiniteCategory::generate(n, std::move(arrows_), std::move(identities), compose,
                                           budget_);

  auto data = std::make_shared<KeyedGroupoid::Data>();
  data->groupoid = Groupoid(std::move(category), std::move(inverse));
  data->slots = std::move(slots_);
  data->objects = std::move(objects_);
  data->morphisms = std::move(morphisms_);
  KeyedGroupoid result;
  result.data_ = std::move(data);
  return result;
}

}  // namespace grpdlim
