#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "grpdlim/base.hpp"

namespace grpdlim {

/// A finite group given by its full multiplication table.
/// `multiply(a, b)` is the product a·b.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  /// `table[a][b]` is a·b. Checks closure, associativity, identity and
  /// inverses exhaustively; throws InvalidStructure with the report.
  static FiniteGroup from_table(std::vector<std::vector<ElementIndex>> table);
  static ValidationReport check_table(const std::vector<std::vector<ElementIndex>>& table);

  static FiniteGroup trivial() { return FiniteGroup(); }
  /// Elements 0..n-1 under addition mod n.
  static FiniteGroup cyclic(std::size_t n);
  /// Permutations of {0..n-1} in lexicographic order of their one-line
  /// notation (element 0 is the identity); (a·b)(i) = a(b(i)).
  static FiniteGroup symmetric(std::size_t n);
  /// {e, a, b, c} with a² = b² = c² = e and ab = c.
  static FiniteGroup klein();
  /// Pairs (a, b) indexed a * |h| + b.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

  std::size_t order() const { return data_->order; }
  ElementIndex identity() const { return data_->identity; }
  ElementIndex multiply(ElementIndex a, ElementIndex b) const {
    return data_->table[a * data_->order + b];
  }
  ElementIndex inverse(ElementIndex a) const { return data_->inverse[a]; }
  std::size_t element_order(ElementIndex a) const;
  std::vector<std::vector<ElementIndex>> table() const;
  bool is_abelian() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  struct Data {
    std::size_t order = 1;
    ElementIndex identity = 0;
    std::vector<ElementIndex> table{0};
    std::vector<ElementIndex> inverse{0};
  };
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// A group together with an injective homomorphism into an ambient group.
struct Subgroup {
  FiniteGroup group;
  std::vector<ElementIndex> embedding;
};

/// Builds the subgroup on the given ambient elements (which must be closed
/// under the product); element order follows the sorted ambient indices.
Subgroup make_subgroup(const FiniteGroup& ambient, std::vector<ElementIndex> elements);

/// True when `map` is a homomorphism g -> h.
bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h,
                     const std::vector<ElementIndex>& map);

/// Every homomorphism g -> h, lexicographically ordered, found by assigning
/// a generating set and closing up.
std::vector<std::vector<ElementIndex>> homomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                                                     Budget budget = {});

/// An isomorphism g -> h if one exists.
std::optional<std::vector<ElementIndex>> find_group_isomorphism(const FiniteGroup& g,
                                                                const FiniteGroup& h,
                                                                Budget budget = {});

/// A small generating set: greedily adds the least element outside the
/// subgroup generated so far.
std::vector<ElementIndex> generating_set(const FiniteGroup& g);

}  // namespace grpdlim
