#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grec/subset_mask.hpp"

namespace grec {

inline constexpr std::size_t kMaxGroupOrder = 4096;
inline constexpr unsigned kMaxSymmetricDegree = 7;
inline constexpr std::size_t kDefaultExhaustiveAssociativity = 512;

struct GroupOptions {
  /// Orders up to this bound get an exhaustive O(n^3) associativity check;
  /// larger ones are spot-checked on 10*n seeded random triples.
  std::size_t exhaustive_associativity_bound = kDefaultExhaustiveAssociativity;
};

/// A finite group as a validated multiplication table.
///
/// Elements are dense indices 0..order-1 and the identity is index 0.
/// Instances are immutable and shared through GroupPtr.
class GroupTable {
 public:
  /// Validates range, identity at index 0, two-sided inverses and
  /// associativity (in that order). Throws ValidationError naming the
  /// first failing element or triple.
  static GroupTable from_table(std::vector<std::vector<ElementId>> table, std::string name = "table",
                               const GroupOptions& options = {});

  std::size_t order() const noexcept { return order_; }
  static constexpr ElementId identity() noexcept { return 0; }
  ElementId mul(ElementId a, ElementId b) const noexcept { return mul_[a * order_ + b]; }
  ElementId inv(ElementId a) const noexcept { return inv_[a]; }

  const std::string& name() const noexcept { return name_; }

  /// Human-readable labels (cycle notation for permutation groups); empty
  /// when the construction has no natural notation.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool has_labels() const noexcept { return !labels_.empty(); }

  bool is_abelian() const noexcept;

  SubsetMask empty_set() const { return SubsetMask(Universe::group, order_); }
  SubsetMask full_set() const { return SubsetMask::full(Universe::group, order_); }
  SubsetMask set_of(std::span<const ElementId> elements) const {
    return SubsetMask::of(Universe::group, order_, elements);
  }
  SubsetMask set_of(std::initializer_list<ElementId> elements) const {
    return SubsetMask::of(Universe::group, order_, elements);
  }

  bool operator==(const GroupTable& other) const noexcept { return order_ == other.order_ && mul_ == other.mul_; }

 private:
  GroupTable() = default;
  friend GroupTable make_symmetric(unsigned);

  std::size_t order_ = 0;
  std::vector<ElementId> mul_;
  std::vector<ElementId> inv_;
  std::string name_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Z_n, elements are residues 0..n-1.
GroupTable make_cyclic(std::size_t n);
/// Dihedral group of order 2n (symmetries of the n-gon): index k < n is the
/// rotation x -> x+k, index n+k the reflection x -> k-x.
GroupTable make_dihedral(std::size_t n);
/// S_n, permutations in lexicographic one-line order; mul(p,q) = p after q.
GroupTable make_symmetric(unsigned n);
/// Direct product, (i, j) -> i*|H| + j.
GroupTable make_product(const GroupTable& g, const GroupTable& h);

/// Cycle notation of a permutation given in one-line form, "()" for the identity.
std::string cycle_notation(const std::vector<unsigned>& one_line);

}  // namespace grec
