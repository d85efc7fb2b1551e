#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "grec/group.hpp"
#include "grec/subset_mask.hpp"

namespace grec {

/// A finite G-space: a validated table (g, x) -> gx.
class ActionTable {
 public:
  /// Exhaustively checks act(e,x) = x and act(g, act(h,x)) = act(gh, x).
  /// Throws ValidationError naming the first failing (x) or (g,h,x).
  static ActionTable from_table(GroupPtr group, std::vector<std::vector<PointId>> table);
  /// X = G with gx the group product.
  static ActionTable left_regular(GroupPtr group);

  const GroupTable& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t points() const noexcept { return points_; }
  PointId act(ElementId g, PointId x) const noexcept { return act_[g * points_ + x]; }
  bool is_left_regular() const noexcept;

  SubsetMask empty_set() const { return SubsetMask(Universe::points, points_); }
  SubsetMask full_set() const { return SubsetMask::full(Universe::points, points_); }
  SubsetMask set_of(std::span<const PointId> elements) const {
    return SubsetMask::of(Universe::points, points_, elements);
  }
  SubsetMask set_of(std::initializer_list<PointId> elements) const {
    return SubsetMask::of(Universe::points, points_, elements);
  }

  bool operator==(const ActionTable& other) const noexcept {
    return *group_ == *other.group_ && points_ == other.points_ && act_ == other.act_;
  }

 private:
  ActionTable() = default;

  GroupPtr group_;
  std::size_t points_ = 0;
  std::vector<PointId> act_;
};

using ActionPtr = std::shared_ptr<const ActionTable>;

// Set algebra. Masks over the wrong universe raise ValidationError.

/// {gx : x in a}
SubsetMask translate(ElementId g, const SubsetMask& a, const ActionTable& action);
/// gB ⊆ A without materializing gB.
bool translate_within(ElementId g, const SubsetMask& b, const SubsetMask& a, const ActionTable& action);
/// {x^-1 : x in a}
SubsetMask inverse_set(const SubsetMask& a, const GroupTable& group);
/// {xy : x in a, y in b}
SubsetMask product_set(const SubsetMask& a, const SubsetMask& b, const GroupTable& group);
/// {gx : x in a} for the left-regular action
SubsetMask left_translate(ElementId g, const SubsetMask& a, const GroupTable& group);

}  // namespace grec
