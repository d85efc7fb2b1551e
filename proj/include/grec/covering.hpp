#pragma once

#include <cstdint>
#include <vector>

#include "grec/action.hpp"
#include "grec/family.hpp"
#include "grec/group.hpp"
#include "grec/subset_mask.hpp"

namespace grec {

enum class CoverMethod { exact, point_greedy };

struct CoverResult {
  SubsetMask cover;  // F with FA = G
  std::size_t size = 0;
  CoverMethod method = CoverMethod::exact;
  bool optimal = false;
};

struct CoverOptions {
  /// Groups up to this order are searched without a node limit.
  std::size_t unlimited_order = 64;
  /// Search-node budget above unlimited_order; when exhausted the best cover
  /// found so far is returned with optimal = false.
  std::uint64_t node_limit = 20'000'000;
};

/// Minimum F with FA = G, lexicographically least among minimum covers.
/// Exact search over translates, warm-started by the max-gain greedy cover.
CoverResult min_cover(const GroupTable& group, const SubsetMask& a, const CoverOptions& options = {});

/// Adds the least not-yet-covered element until FA = G. When the identity is
/// missing from a, an uncovered element can already be in F; the least
/// element outside F whose translate covers something new is taken instead.
CoverResult point_greedy_cover(const GroupTable& group, const SubsetMask& a);

namespace oracle {
/// Enumerates every subset F of G (order at most 20).
CoverResult brute_force_min_cover(const GroupTable& group, const SubsetMask& a);
}  // namespace oracle

struct PackingResult {
  /// Size of a largest F-disjoint family of distinct translates gA.
  std::size_t family_size = 0;
  /// Number of distinct translate sets (vertices of the conflict graph).
  std::size_t distinct_translates = 0;
  /// Least g producing each chosen translate, ascending.
  std::vector<ElementId> representatives;
  std::size_t conflict_graph_alpha = 0;
};

/// Maximum independent set of the conflict graph on the distinct translates
/// of a, with an edge when two translates meet inside F. Requires a ∈ F.
PackingResult max_disjoint_translates(const ActionTable& action, const SetFamily& f, const SubsetMask& a);

struct Prop2Report {
  bool equal = false;
  std::size_t packing = 0;
  std::size_t alpha_of_delta_graph = 0;
  SubsetMask delta;
};

/// Compares the largest F-disjoint translate family of a with the
/// independence number of the Cayley graph of Δ_F(a). Left-regular action,
/// invariant upward-closed family, a ∈ F.
Prop2Report prop2_check(const ActionTable& action, const SetFamily& f, const SubsetMask& a);

}  // namespace grec
