#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "grpdlim/base.hpp"

namespace grpdlim {

struct Arrow {
  ObjectIndex src;
  ObjectIndex dst;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// `first ; second = result`, diagrammatic order ("first, then second").
struct CompositionEntry {
  MorphismIndex first;
  MorphismIndex second;
  MorphismIndex result;
  friend bool operator==(const CompositionEntry&, const CompositionEntry&) = default;
};

/// Unvalidated category tables, as they come from a file or a test.
/// The composition list must cover every composable pair, identities included.
struct RawCategory {
  std::size_t object_count = 0;
  std::vector<Arrow> arrows;
  std::vector<MorphismIndex> identities;
  std::vector<CompositionEntry> compositions;
};

/// Checks every FiniteCategory axiom on raw tables. Total: never throws,
/// malformed input shows up as violations.
ValidationReport validate_category(const RawCategory& raw);

namespace detail {
struct CategoryData;
}

/// A finite category with dense integer objects and morphisms.
///
/// Composition is always diagrammatic: `compose(f, g)` is "f, then g" and is
/// defined exactly when `dst(f) == src(g)`. Classical `g ∘ f` is therefore
/// `compose(f, g)`; every formula in the library is written in this order.
///
/// The composition table is stored densely over composable pairs: the row of
/// `f` has one entry per morphism leaving `dst(f)`. Instances are immutable and
/// share their tables, so copies are cheap and concurrent reads are safe.
class FiniteCategory {
 public:
  using ComposeFn = std::function<MorphismIndex(MorphismIndex, MorphismIndex)>;

  /// The empty category.
  FiniteCategory();

  /// Validates exhaustively (including associativity); throws
  /// InvalidStructure carrying the report.
  static FiniteCategory from_raw(const RawCategory& raw);

  /// Builds a category whose composition is computed by `compose` for every
  /// composable pair. Used by constructions whose composition is inherited
  /// componentwise from validated inputs: typing of composites and the unit
  /// laws are checked here, associativity is inherited (call validate() for
  /// the exhaustive check).
  static FiniteCategory generate(std::size_t object_count, std::vector<Arrow> arrows,
                                 std::vector<MorphismIndex> identities,
                                 const ComposeFn& compose, Budget budget = {});

  std::size_t object_count() const;
  std::size_t morphism_count() const;
  ObjectIndex src(MorphismIndex m) const;
  ObjectIndex dst(MorphismIndex m) const;
  MorphismIndex identity(ObjectIndex x) const;
  bool is_identity(MorphismIndex m) const;

  /// Morphisms with the given source / target, in increasing index order.
  std::span<const MorphismIndex> out(ObjectIndex x) const;
  std::span<const MorphismIndex> in(ObjectIndex x) const;
  std::vector<MorphismIndex> hom(ObjectIndex x, ObjectIndex y) const;

  bool composable(MorphismIndex f, MorphismIndex g) const;
  /// "f, then g". Precondition: composable(f, g).
  MorphismIndex compose(MorphismIndex f, MorphismIndex g) const;

  std::uint64_t composable_pair_count() const;

  RawCategory to_raw() const;
  /// Exhaustive re-validation of every axiom.
  ValidationReport validate() const;

  /// True when both handles share the same tables.
  bool same_tables(const FiniteCategory& other) const { return data_ == other.data_; }
  friend bool operator==(const FiniteCategory& a, const FiniteCategory& b);

 private:
  explicit FiniteCategory(std::shared_ptr<const detail::CategoryData> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const detail::CategoryData> data_;
};

/// A finite category in which every morphism is invertible.
class Groupoid {
 public:
  Groupoid();
  /// Finds inverses; throws InvalidStructure if some morphism has none.
  explicit Groupoid(FiniteCategory category);
  /// Checks that `inverse` really is a two-sided inverse table.
  Groupoid(FiniteCategory category, std::vector<MorphismIndex> inverse);

  const FiniteCategory& category() const { return category_; }
  operator const FiniteCategory&() const { return category_; }

  std::size_t object_count() const { return category_.object_count(); }
  std::size_t morphism_count() const { return category_.morphism_count(); }
  ObjectIndex src(MorphismIndex m) const { return category_.src(m); }
  ObjectIndex dst(MorphismIndex m) const { return category_.dst(m); }
  MorphismIndex identity(ObjectIndex x) const { return category_.identity(x); }
  bool is_identity(MorphismIndex m) const { return category_.is_identity(m); }
  std::span<const MorphismIndex> out(ObjectIndex x) const { return category_.out(x); }
  std::span<const MorphismIndex> in(ObjectIndex x) const { return category_.in(x); }
  std::vector<MorphismIndex> hom(ObjectIndex x, ObjectIndex y) const {
    return category_.hom(x, y);
  }
  MorphismIndex compose(MorphismIndex f, MorphismIndex g) const {
    return category_.compose(f, g);
  }
  MorphismIndex inverse(MorphismIndex m) const { return (*inverse_)[m]; }

  /// Full validation: category axioms plus inverse laws.
  ValidationReport validate() const;

  friend bool operator==(const Groupoid& a, const Groupoid& b) {
    return a.category_ == b.category_;
  }

 private:
  FiniteCategory category_;
  std::shared_ptr<const std::vector<MorphismIndex>> inverse_;
};

/// Checks the inverse laws and involutivity of a proposed inverse table.
ValidationReport validate_inverses(const FiniteCategory& c,
                                   std::span<const MorphismIndex> inverse);

}  // namespace grpdlim
