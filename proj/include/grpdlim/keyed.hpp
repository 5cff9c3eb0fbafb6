#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "grpdlim/category.hpp"

namespace grpdlim {

/// Interns fixed-width tuples of 32-bit values. Indices follow insertion
/// order; lookups are open-addressing hash probes over flat storage.
class TupleTable {
 public:
  explicit TupleTable(std::size_t width = 0) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t size() const { return count_; }

  /// Index of the tuple, or npos.
  std::uint32_t find(std::span<const std::uint32_t> key) const;
  /// Index of the tuple and whether it was newly added.
  std::pair<std::uint32_t, bool> insert(std::span<const std::uint32_t> key);

  std::span<const std::uint32_t> operator[](std::uint32_t i) const {
    return {data_.data() + std::size_t{i} * width_, width_};
  }

 private:
  std::uint64_t hash(std::span<const std::uint32_t> key) const;
  void grow();

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<std::uint32_t> data_;
  std::vector<std::uint32_t> slots_;
};

/// A groupoid whose objects carry tuple keys and whose morphisms are tuples
/// of morphisms in fixed "slot" groupoids, composed and inverted slot by
/// slot. Every model in the library (functor groupoids, limits, homotopy
/// fixed points, pullback models) is one of these.
class KeyedGroupoid {
 public:
  KeyedGroupoid() = default;

  const Groupoid& groupoid() const { return data_->groupoid; }
  operator const Groupoid&() const { return data_->groupoid; }
  const std::vector<Groupoid>& slots() const { return data_->slots; }

  std::size_t object_width() const { return data_->objects.width(); }
  std::size_t slot_count() const { return data_->slots.size(); }

  std::span<const std::uint32_t> object_key(ObjectIndex x) const { return data_->objects[x]; }
  /// Slot components of a morphism (without the leading source index).
  std::span<const MorphismIndex> components(MorphismIndex m) const {
    return data_->morphisms[m].subspan(1);
  }

  ObjectIndex find_object(std::span<const std::uint32_t> key) const {
    return data_->objects.find(key);
  }
  /// The morphism out of `src` with the given components, or npos.
  MorphismIndex find_morphism(ObjectIndex src, std::span<const MorphismIndex> components) const;

 private:
  friend class KeyedGroupoidBuilder;
  struct Data {
    Groupoid groupoid;
    std::vector<Groupoid> slots;
    TupleTable objects;
    TupleTable morphisms;  // (src, components...)
  };
  std::shared_ptr<const Data> data_;
};

class KeyedGroupoidBuilder {
 public:
  KeyedGroupoidBuilder(std::size_t object_width, std::vector<Groupoid> slots, Budget budget,
                       std::string stage);

  /// Returns the index of the object, adding it if new.
  ObjectIndex add_object(std::span<const std::uint32_t> key);
  ObjectIndex find_object(std::span<const std::uint32_t> key) const {
    return objects_.find(key);
  }
  std::size_t object_count() const { return objects_.size(); }
  std::span<const std::uint32_t> object_key(ObjectIndex x) const { return objects_[x]; }

  /// Adds a morphism src -> dst; duplicates (same src and components) are
  /// ignored and return the existing index.
  MorphismIndex add_morphism(ObjectIndex src, ObjectIndex dst,
                             std::span<const MorphismIndex> components);

  /// Builds the groupoid. Composites and inverses are computed slotwise and
  /// must land on added morphisms; identities are the morphisms with all
  /// slot components identities and equal endpoints.
  KeyedGroupoid finish() &&;

  BudgetMeter& meter() { return meter_; }

 private:
  std::vector<Groupoid> slots_;
  TupleTable objects_;
  TupleTable morphisms_;
  std::vector<Arrow> arrows_;
  Budget budget_;
  BudgetMeter meter_;
  std::vector<std::uint32_t> scratch_;
};

}  // namespace grpdlim
