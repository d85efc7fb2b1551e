#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "grec/action.hpp"
#include "grec/family.hpp"
#include "grec/subset_mask.hpp"

namespace grec {

/// The return set of A: all g moving some member B ⊆ A of F back into A.
struct DeltaResult {
  SubsetMask set;
  /// One certificate per element of `set`, ascending by g. The B is the
  /// canonically least member of F with B ⊆ A and gB ⊆ A.
  std::vector<std::pair<ElementId, SubsetMask>> witnesses;
};

struct DeltaOptions {
  /// Evaluate the definition literally for A outside F instead of raising
  /// DomainError. The result then need not contain the identity.
  bool permissive = false;
};

DeltaResult delta(const ActionTable& action, const SetFamily& f, const SubsetMask& a,
                  const DeltaOptions& options = {});

/// {g : gA ∩ A ∈ F}. Agrees with delta() on invariant upward-closed
/// families; refuses (ValidationError) any other family.
SubsetMask delta_simple(const ActionTable& action, const SetFamily& f, const SubsetMask& a);

struct RecurrenceReport {
  bool recurrent = true;
  std::size_t sets_checked = 0;
  /// Canonically least member A whose return set misses R, and that set.
  std::optional<std::pair<SubsetMask, SubsetMask>> failing;
};

/// R is F-recurrent iff it meets the return set of every member. Return
/// sets grow with A, so only the minimal members are examined.
RecurrenceReport is_recurrent(const ActionTable& action, const SetFamily& f, const SubsetMask& r);

/// Base of the filter generated by the return sets of F. On a finite
/// universe the return sets of the minimal members suffice.
struct FilterBase {
  std::vector<SubsetMask> sources;     // minimal members A
  std::vector<SubsetMask> generators;  // their return sets, same order
  SubsetMask kernel;                   // intersection of generators (G if none)
};

FilterBase recurrence_filter_base(const ActionTable& action, const SetFamily& f);

/// R is recurrent iff it meets every generator.
bool meets_every_generator(const FilterBase& fb, const SubsetMask& r);

struct LeftTopologicalReport {
  bool left_topological = true;
  SubsetMask kernel;
  /// Least (x, y) in the kernel with xy outside it.
  std::optional<std::pair<ElementId, ElementId>> witness;
};

/// On a finite group the filter is principal, generated by its kernel K,
/// and is left topological iff K·K ⊆ K.
LeftTopologicalReport is_left_topological(const SubsetMask& kernel, const GroupTable& group);
LeftTopologicalReport is_left_topological(const FilterBase& fb, const GroupTable& group);

enum class MemberScope {
  automatic,  // every member when points <= 10, minimal members otherwise
  all,
  minimal,
};

struct Prop1Report {
  bool holds = true;
  bool all_members = false;
  std::size_t pairs_checked = 0;
  /// (A, g) with no certificate B.
  std::optional<std::pair<SubsetMask, ElementId>> failing;
};

/// For every A ∈ F and g in its return set, looks for B ∈ F, B ⊆ A,
/// gB ⊆ A with g·Δ(B) ⊆ Δ(A).
Prop1Report prop1_witness_check(const ActionTable& action, const SetFamily& f,
                                MemberScope scope = MemberScope::automatic);

}  // namespace grec
