#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grec/action.hpp"
#include "grec/subset_mask.hpp"

namespace grec {

/// Exact non-negative rational, always reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational parse(const std::string& text);  // "p/q", "p" or a finite decimal
  std::string to_string() const;
  Rational operator+(const Rational& o) const;
  bool operator==(const Rational&) const = default;
  bool positive() const noexcept { return num > 0; }
};

/// A G-invariant probability measure on a finite G-space: weights are
/// constant on every orbit and sum to exactly 1.
class MeasureTable {
 public:
  MeasureTable(std::vector<Rational> weights, ActionPtr action);

  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const ActionPtr& action() const noexcept { return action_; }
  bool positive_mass(const SubsetMask& a) const;

 private:
  std::vector<Rational> weights_;
  ActionPtr action_;
};

inline constexpr std::size_t kMaxEnumerablePoints = 22;
inline constexpr std::size_t kMaxMinimalMembers = 4'000'000;

/// A family F of subsets of a finite point set, decided by membership.
///
/// Three shapes: an explicit generator list with optional upward
/// (superset) closure and optional invariance under an action; all sets of
/// size at least k; all sets of positive measure. Unless excludes_empty is
/// cleared, the empty set is never a member.
class SetFamily {
 public:
  enum class Kind { explicit_list, min_size, positive_measure };

  static SetFamily explicit_family(std::size_t points, std::vector<SubsetMask> generators, bool upward,
                                   bool invariant, ActionPtr action = nullptr, bool excludes_empty = true);
  static SetFamily min_size(std::size_t points, std::size_t k, bool excludes_empty = true);
  static SetFamily all_nonempty(std::size_t points) { return min_size(points, 1); }

  Kind kind() const noexcept { return kind_; }
  std::size_t points() const noexcept { return points_; }
  bool excludes_empty() const noexcept { return excludes_empty_; }
  std::size_t min_size_k() const noexcept { return k_; }
  const std::vector<SubsetMask>& generators() const noexcept { return generators_; }
  bool upward_flag() const noexcept { return upward_; }
  bool invariant_flag() const noexcept { return invariant_; }
  const ActionPtr& action() const noexcept { return action_; }
  const std::optional<MeasureTable>& measure() const noexcept { return measure_; }

  bool contains(const SubsetMask& a) const;

  /// Closure properties that hold by construction. These are the claims
  /// check_flags verifies against the membership predicate.
  bool structurally_upward() const noexcept;
  bool structurally_invariant_under(const ActionTable& action) const;

  /// Inclusion-minimal members in canonical order. Throws SizeLimitError
  /// past kMaxMinimalMembers.
  std::vector<SubsetMask> minimal_members() const;

  /// Members B ⊆ a that can serve as witnesses: the minimal members inside
  /// a for upward-closed families, every member inside a otherwise.
  /// Canonical order.
  std::vector<SubsetMask> members_within(const SubsetMask& a) const;

  std::string describe() const;

 private:
  friend SetFamily positive_family(const MeasureTable& mu);
  SetFamily() = default;
  void require_points(const SubsetMask& a) const;
  std::size_t effective_k() const noexcept { return (excludes_empty_ && k_ == 0) ? 1 : k_; }

  Kind kind_ = Kind::min_size;
  std::size_t points_ = 0;
  bool excludes_empty_ = true;
  std::size_t k_ = 0;
  std::vector<SubsetMask> generators_;
  // Expanded explicit members: generators, or their orbits when invariant,
  // deduplicated; reduced to minimal ones when upward.
  std::vector<SubsetMask> basis_;
  bool upward_ = false;
  bool invariant_ = false;
  ActionPtr action_;
  std::optional<MeasureTable> measure_;
};

/// The family {A : mu(A) > 0}.
SetFamily positive_family(const MeasureTable& mu);

struct FlagReport {
  bool upward_closed = true;
  bool invariant = true;
  bool sampled = false;
  std::size_t sets_checked = 0;
  /// (member A, superset C not a member)
  std::optional<std::pair<SubsetMask, SubsetMask>> upward_witness;
  /// (A, g, gA) with membership differing between A and gA
  struct InvarianceWitness {
    SubsetMask set;
    ElementId g;
    SubsetMask translated;
  };
  std::optional<InvarianceWitness> invariance_witness;
};

struct FlagCheckOptions {
  std::size_t exhaustive_max_points = kMaxEnumerablePoints;
  std::size_t samples = 4096;
};

/// Verifies upward closure (A ∈ F ⇒ A ∪ {x} ∈ F) and invariance
/// (A ∈ F ⇔ gA ∈ F) against the membership predicate; exhaustive over all
/// 2^m sets up to the bound, seeded random sampling above it.
FlagReport check_flags(const SetFamily& f, const ActionTable& action, const FlagCheckOptions& options = {});

/// Every member, ascending by cardinality then lexicographically.
/// Throws SizeLimitError when points() > kMaxEnumerablePoints.
void for_each_member(const SetFamily& f, const std::function<bool(const SubsetMask&)>& fn);
std::vector<SubsetMask> family_members(const SetFamily& f, bool minimal_only = false);

}  // namespace grec
