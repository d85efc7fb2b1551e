#include "grec/covering.hpp"

#include <algorithm>
#include <bit>

#include "grec/cayley.hpp"
#include "grec/error.hpp"
#include "grec/graph.hpp"
#include "grec/recurrence.hpp"

namespace grec {

namespace {

void require_nonempty_group_set(const SubsetMask& a, const GroupTable& group, const char* op) {
  if (a.universe() != Universe::group || a.universe_size() != group.order()) {
    throw ValidationError(std::string(op) + ": expected a subset of the group of order " +
                          std::to_string(group.order()));
  }
  if (a.empty()) throw ValidationError(std::string(op) + ": set must be nonempty");
}

struct NodeBudgetExceeded {};

class CoverSearch {
 public:
  CoverSearch(const GroupTable& group, const SubsetMask& a, std::uint64_t node_limit)
      : group_(group), a_size_(a.count()), node_limit_(node_limit) {
    const std::size_t n = group.order();
    const SubsetMask a_inv = inverse_set(a, group);
    for (ElementId x = 0; x < n; ++x) {
      translates_.push_back(left_translate(x, a, group));
      coverers_.push_back(left_translate(x, a_inv, group));
    }
  }

  const SubsetMask& translate_of(ElementId x) const { return translates_[x]; }

  /// Is there a set of at most `budget` elements, each >= min_allowed,
  /// whose translates cover the complement of `covered`?
  bool exists(const SubsetMask& covered, std::size_t budget, ElementId min_allowed) {
    if (++nodes_ > node_limit_) throw NodeBudgetExceeded{};
    const SubsetMask uncovered = covered.complement();
    const std::size_t missing = uncovered.count();
    if (missing == 0) return true;
    if (budget == 0 || (missing + a_size_ - 1) / a_size_ > budget) return false;
    const auto u = static_cast<ElementId>(uncovered.first());
    const SubsetMask& options = coverers_[u];
    for (auto x = options.first(); x < options.universe_size(); x = options.next(x)) {
      if (x < min_allowed) continue;
      if (exists(covered | translates_[x], budget - 1, min_allowed)) return true;
    }
    return false;
  }

 private:
  const GroupTable& group_;
  std::size_t a_size_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::vector<SubsetMask> translates_;
  std::vector<SubsetMask> coverers_;
};

SubsetMask max_gain_greedy(const GroupTable& group, CoverSearch& search) {
  SubsetMask covered = group.empty_set();
  SubsetMask cover = group.empty_set();
  const SubsetMask all = group.full_set();
  while (covered != all) {
    std::size_t best_gain = 0;
    ElementId best = 0;
    for (ElementId x = 0; x < group.order(); ++x) {
      const std::size_t gain = (search.translate_of(x) - covered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = x;
      }
    }
    cover.set(best);
    covered |= search.translate_of(best);
  }
  return cover;
}

}  // namespace

CoverResult min_cover(const GroupTable& group, const SubsetMask& a, const CoverOptions& options) {
  require_nonempty_group_set(a, group, "min_cover");
  const std::size_t n = group.order();
  const std::uint64_t limit = n <= options.unlimited_order ? UINT64_MAX : options.node_limit;
  CoverSearch search(group, a, limit);
  const SubsetMask greedy = max_gain_greedy(group, search);

  CoverResult result{greedy, greedy.count(), CoverMethod::exact, false};
  try {
    const std::size_t a_size = a.count();
    std::size_t k = (n + a_size - 1) / a_size;
    while (k < greedy.count() && !search.exists(group.empty_set(), k, 0)) ++k;
    // Fix the members one at a time, smallest first, keeping a size-k cover reachable.
    SubsetMask cover = group.empty_set();
    SubsetMask covered = group.empty_set();
    ElementId next_min = 0;
    for (std::size_t chosen = 0; chosen < k; ++chosen) {
      for (ElementId x = next_min; x < n; ++x) {
        const SubsetMask with = covered | search.translate_of(x);
        if (search.exists(with, k - chosen - 1, x + 1)) {
          cover.set(x);
          covered = with;
          next_min = x + 1;
          break;
        }
      }
    }
    result = CoverResult{cover, cover.count(), CoverMethod::exact, true};
  } catch (const NodeBudgetExceeded&) {
  }
  return result;
}

CoverResult point_greedy_cover(const GroupTable& group, const SubsetMask& a) {
  require_nonempty_group_set(a, group, "point_greedy_cover");
  const SubsetMask all = group.full_set();
  SubsetMask covered = group.empty_set();
  SubsetMask cover = group.empty_set();
  while (covered != all) {
    SubsetMask pick_from = (all - covered) - cover;
    ElementId pick = 0;
    if (!pick_from.empty()) {
      pick = static_cast<ElementId>(pick_from.first());
    } else {
      for (ElementId x = 0; x < group.order(); ++x) {
        if (!cover.test(x) && !left_translate(x, a, group).is_subset_of(covered)) {
          pick = x;
          break;
        }
      }
    }
    cover.set(pick);
    covered |= left_translate(pick, a, group);
  }
  return CoverResult{cover, cover.count(), CoverMethod::point_greedy, false};
}

namespace oracle {

CoverResult brute_force_min_cover(const GroupTable& group, const SubsetMask& a) {
  require_nonempty_group_set(a, group, "brute_force_min_cover");
  const std::size_t n = group.order();
  if (n > 20) throw SizeLimitError("brute_force_min_cover: order exceeds 20");
  std::vector<std::uint32_t> cov(n, 0);
  for (ElementId x = 0; x < n; ++x)
    a.for_each([&](ElementId y) { cov[x] |= 1U << group.mul(x, y); });
  const std::uint32_t full = (1U << n) - 1;
  const std::uint32_t limit = 1U << n;
  std::vector<std::uint32_t> reach(limit, 0);
  std::uint32_t best = 0;
  int best_size = static_cast<int>(n) + 1;
  for (std::uint32_t s = 1; s < limit; ++s) {
    const auto low = static_cast<std::uint32_t>(std::countr_zero(s));
    reach[s] = reach[s & (s - 1)] | cov[low];
    if (reach[s] != full) continue;
    const int size = std::popcount(s);
    const std::uint32_t diff = s ^ best;
    if (size < best_size || (size == best_size && (s & (diff & (~diff + 1))) != 0)) {
      best = s;
      best_size = size;
    }
  }
  SubsetMask cover = group.empty_set();
  for (ElementId x = 0; x < n; ++x)
    if ((best >> x) & 1U) cover.set(x);
  return CoverResult{cover, cover.count(), CoverMethod::exact, true};
}

}  // namespace oracle

PackingResult max_disjoint_translates(const ActionTable& action, const SetFamily& f, const SubsetMask& a) {
  if (!f.contains(a)) {
    throw DomainError("max_disjoint_translates: " + a.to_string() + " is not a member of " + f.describe());
  }
  std::vector<SubsetMask> translates;
  std::vector<ElementId> reps;
  for (ElementId g = 0; g < action.group().order(); ++g) {
    SubsetMask t = translate(g, a, action);
    if (std::find(translates.begin(), translates.end(), t) == translates.end()) {
      translates.push_back(std::move(t));
      reps.push_back(g);
    }
  }
  Graph conflict(translates.size());
  for (std::uint32_t i = 0; i < translates.size(); ++i)
    for (std::uint32_t j = i + 1; j < translates.size(); ++j)
      if (f.contains(translates[i] & translates[j])) conflict.add_edge(i, j);
  const auto mis = max_independent_set(conflict);
  PackingResult out;
  out.family_size = mis.size;
  out.distinct_translates = translates.size();
  out.conflict_graph_alpha = mis.size;
  for (auto v : mis.vertices) out.representatives.push_back(reps[v]);
  return out;
}

Prop2Report prop2_check(const ActionTable& action, const SetFamily& f, const SubsetMask& a) {
  if (!action.is_left_regular()) throw ValidationError("prop2_check: action must be left regular");
  if (!f.structurally_upward() || !f.structurally_invariant_under(action)) {
    throw ValidationError("prop2_check: " + f.describe() + " is not both upward closed and invariant");
  }
  Prop2Report r;
  r.packing = max_disjoint_translates(action, f, a).family_size;
  r.delta = delta(action, f, a).set;
  r.alpha_of_delta_graph = independence_number(cayley_graph(action.group_ptr(), r.delta)).alpha;
  r.equal = r.packing == r.alpha_of_delta_graph;
  return r;
}

}  // namespace grec
