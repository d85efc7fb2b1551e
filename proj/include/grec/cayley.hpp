#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grec/graph.hpp"
#include "grec/group.hpp"
#include "grec/subset_mask.hpp"

namespace grec {

/// Cayley graph of a group for a symmetric connection set S: x ~ y iff
/// x^-1 y ∈ S and x != y. The identity is not stored in S.
class CayleyGraph {
 public:
  const GroupTable& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  /// The stored connection set, identity removed.
  const SubsetMask& connection() const noexcept { return connection_; }
  const Graph& graph() const noexcept { return graph_; }
  bool adjacent(ElementId x, ElementId y) const noexcept { return graph_.adjacent(x, y); }

 private:
  friend CayleyGraph cayley_graph(GroupPtr group, const SubsetMask& a);
  GroupPtr group_;
  SubsetMask connection_;
  Graph graph_;
};

/// Requires e ∈ a and a = a^-1; ValidationError otherwise (see symmetrize).
CayleyGraph cayley_graph(GroupPtr group, const SubsetMask& a);
/// a ∪ a^-1 ∪ {e}. Never applied implicitly.
SubsetMask symmetrize(const SubsetMask& a, const GroupTable& group);
bool is_symmetric_with_identity(const SubsetMask& a, const GroupTable& group);

struct AlphaResult {
  std::size_t alpha = 0;
  SubsetMask witness;
  std::uint64_t node_count = 0;
};

/// Maximum independent set of the Cayley graph, optionally of the subgraph
/// induced on `induced_on`. Lexicographically least witness.
AlphaResult independence_number(const CayleyGraph& gr, const std::optional<SubsetMask>& induced_on = std::nullopt);
AlphaResult max_clique(const CayleyGraph& gr, const std::optional<SubsetMask>& induced_on = std::nullopt);
/// Same queries answered by subset enumeration (at most kMaxOracleVertices vertices).
AlphaResult independence_number_oracle(const CayleyGraph& gr,
                                       const std::optional<SubsetMask>& induced_on = std::nullopt);
AlphaResult max_clique_oracle(const CayleyGraph& gr, const std::optional<SubsetMask>& induced_on = std::nullopt);

/// Least n such that every n-subset of G contains x != y with x^-1 y ∈ a,
/// i.e. alpha(Γ_a) + 1.
std::size_t delta_parameter(GroupPtr group, const SubsetMask& a);
bool is_delta_n_set(GroupPtr group, const SubsetMask& a, std::size_t n);

/// Lexicographically least ordered tuple (x_0, ..., x_k) of distinct
/// elements with x_i^-1 x_j ∈ a for all i < j. `a` may be asymmetric.
std::optional<std::vector<ElementId>> find_delta_system(const GroupTable& group, const SubsetMask& a, std::size_t k);

namespace oracle {
/// Plain lexicographic enumeration of ordered tuples of distinct elements.
std::optional<std::vector<ElementId>> brute_force_delta_system(const GroupTable& group, const SubsetMask& a,
                                                               std::size_t k);
}  // namespace oracle

enum class RamseySide { in_set, off_set };

struct RamseyReport {
  RamseySide side = RamseySide::in_set;
  SubsetMask z;
};

/// Larger of the maximum clique and maximum independent set of Γ_a induced
/// on y; ties go to the clique side.
RamseyReport ramsey_extract(const CayleyGraph& gr, const SubsetMask& y);

struct ScanHit {
  SubsetMask connection;  // includes the identity
  std::size_t alpha = 0;
};

struct ScanReport {
  std::vector<ScanHit> hits;
  std::size_t examined = 0;
  bool exhausted = false;  // every symmetric connection set was examined
};

/// Walks symmetric identity-containing connection sets in canonical order
/// (ascending size, then lexicographic), examining at most `budget` of
/// them, and keeps those whose Cayley graph has alpha < alpha_bound.
ScanReport scan_bounded_alpha(GroupPtr group, std::size_t alpha_bound, std::size_t budget);

/// Every symmetric identity-containing subset, canonical order. Throws
/// SizeLimitError past 2^limit_log2 sets.
std::vector<SubsetMask> symmetric_connection_sets(const GroupTable& group, std::size_t limit_log2 = 20);

/// Inverse classes {x, x^-1} of the non-identity elements, ascending by least member.
std::vector<std::vector<ElementId>> inverse_classes(const GroupTable& group);

}  // namespace grec
