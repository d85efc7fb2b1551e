#include "grec/cayley.hpp"

#include <algorithm>
#include <functional>

#include "grec/action.hpp"
#include "grec/error.hpp"

namespace grec {

namespace {

void require_group_set(const SubsetMask& a, const GroupTable& group, const char* op) {
  if (a.universe() != Universe::group || a.universe_size() != group.order()) {
    throw ValidationError(std::string(op) + ": expected a subset of the group of order " +
                          std::to_string(group.order()));
  }
}

SubsetMask to_group_mask(const std::vector<std::uint32_t>& local, const std::vector<std::uint32_t>& vertices,
                         std::size_t order) {
  SubsetMask m(Universe::group, order);
  for (auto i : local) m.set(vertices[i]);
  return m;
}

template <class Solve>
AlphaResult solve_on(const CayleyGraph& gr, const std::optional<SubsetMask>& induced_on, Solve&& solve) {
  const std::size_t n = gr.group().order();
  if (!induced_on) {
    auto r = solve(gr.graph());
    std::vector<std::uint32_t> identity(n);
    for (std::uint32_t i = 0; i < n; ++i) identity[i] = i;
    return AlphaResult{r.size, to_group_mask(r.vertices, identity, n), r.nodes};
  }
  require_group_set(*induced_on, gr.group(), "induced subgraph");
  const auto vertices = induced_on->elements();
  auto r = solve(gr.graph().induced(vertices));
  return AlphaResult{r.size, to_group_mask(r.vertices, vertices, n), r.nodes};
}

}  // namespace

bool is_symmetric_with_identity(const SubsetMask& a, const GroupTable& group) {
  require_group_set(a, group, "connection set");
  return a.test(GroupTable::identity()) && inverse_set(a, group) == a;
}

SubsetMask symmetrize(const SubsetMask& a, const GroupTable& group) {
  require_group_set(a, group, "symmetrize");
  SubsetMask out = a | inverse_set(a, group);
  out.set(GroupTable::identity());
  return out;
}

CayleyGraph cayley_graph(GroupPtr group, const SubsetMask& a) {
  if (!group) throw ValidationError("cayley_graph: missing group");
  require_group_set(a, *group, "cayley_graph");
  if (!a.test(GroupTable::identity())) {
    throw ValidationError("cayley_graph: connection set " + a.to_string() +
                          " must contain the identity; symmetrize() gives " + symmetrize(a, *group).to_string());
  }
  const SubsetMask inv = inverse_set(a, *group);
  if (inv != a) {
    const auto bad = (a - inv).first();
    throw ValidationError("cayley_graph: connection set " + a.to_string() + " is asymmetric (inverse of " +
                          std::to_string(bad) + " is " + std::to_string(group->inv(static_cast<ElementId>(bad))) +
                          ", which is not in the set); symmetrize() gives " + symmetrize(a, *group).to_string());
  }
  CayleyGraph gr;
  gr.connection_ = a;
  gr.connection_.reset(GroupTable::identity());
  const std::size_t n = group->order();
  gr.graph_ = Graph(n);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = x + 1; y < n; ++y)
      if (gr.connection_.test(group->mul(group->inv(x), y))) gr.graph_.add_edge(x, y);
  gr.group_ = std::move(group);
  return gr;
}

AlphaResult independence_number(const CayleyGraph& gr, const std::optional<SubsetMask>& induced_on) {
  return solve_on(gr, induced_on, [](const Graph& g) { return max_independent_set(g); });
}

AlphaResult max_clique(const CayleyGraph& gr, const std::optional<SubsetMask>& induced_on) {
  return solve_on(gr, induced_on, [](const Graph& g) { return max_clique(g); });
}

AlphaResult independence_number_oracle(const CayleyGraph& gr, const std::optional<SubsetMask>& induced_on) {
  return solve_on(gr, induced_on, [](const Graph& g) { return oracle::brute_force_independent_set(g); });
}

AlphaResult max_clique_oracle(const CayleyGraph& gr, const std::optional<SubsetMask>& induced_on) {
  return solve_on(gr, induced_on, [](const Graph& g) { return oracle::brute_force_clique(g); });
}

std::size_t delta_parameter(GroupPtr group, const SubsetMask& a) {
  return independence_number(cayley_graph(std::move(group), a)).alpha + 1;
}

bool is_delta_n_set(GroupPtr group, const SubsetMask& a, std::size_t n) {
  return delta_parameter(std::move(group), a) <= n;
}

std::optional<std::vector<ElementId>> find_delta_system(const GroupTable& group, const SubsetMask& a, std::size_t k) {
  require_group_set(a, group, "find_delta_system");
  if (k == 0) throw ValidationError("find_delta_system: k must be positive");
  const std::size_t want = k + 1;
  if (want > group.order()) return std::nullopt;

  std::vector<ElementId> tuple;
  // candidates: elements y with x_i^-1 y ∈ a for every chosen x_i, not yet chosen.
  std::function<bool(const SubsetMask&)> extend = [&](const SubsetMask& candidates) -> bool {
    if (tuple.size() == want) return true;
    if (candidates.count() < want - tuple.size()) return false;
    for (auto y = candidates.first(); y < candidates.universe_size(); y = candidates.next(y)) {
      const auto x = static_cast<ElementId>(y);
      SubsetMask next = candidates & left_translate(x, a, group);
      next.reset(x);
      tuple.push_back(x);
      if (extend(next)) return true;
      tuple.pop_back();
    }
    return false;
  };
  if (extend(group.full_set())) return tuple;
  return std::nullopt;
}

namespace oracle {

std::optional<std::vector<ElementId>> brute_force_delta_system(const GroupTable& group, const SubsetMask& a,
                                                               std::size_t k) {
  const std::size_t n = group.order();
  const std::size_t want = k + 1;
  if (k == 0 || want > n) return std::nullopt;
  std::vector<ElementId> tuple;
  std::vector<bool> used(n, false);
  std::function<bool()> rec = [&]() -> bool {
    if (tuple.size() == want) {
      for (std::size_t i = 0; i < want; ++i)
        for (std::size_t j = i + 1; j < want; ++j)
          if (!a.test(group.mul(group.inv(tuple[i]), tuple[j]))) return false;
      return true;
    }
    for (ElementId x = 0; x < n; ++x) {
      if (used[x]) continue;
      used[x] = true;
      tuple.push_back(x);
      if (rec()) return true;
      tuple.pop_back();
      used[x] = false;
    }
    return false;
  };
  if (rec()) return tuple;
  return std::nullopt;
}

}  // namespace oracle

RamseyReport ramsey_extract(const CayleyGraph& gr, const SubsetMask& y) {
  const auto clique = max_clique(gr, y);
  const auto indep = independence_number(gr, y);
  if (indep.alpha > clique.alpha) return RamseyReport{RamseySide::off_set, indep.witness};
  return RamseyReport{RamseySide::in_set, clique.witness};
}

std::vector<std::vector<ElementId>> inverse_classes(const GroupTable& group) {
  std::vector<std::vector<ElementId>> classes;
  for (ElementId x = 1; x < group.order(); ++x) {
    const ElementId xi = group.inv(x);
    if (xi < x) continue;
    if (xi == x) {
      classes.push_back({x});
    } else {
      classes.push_back({x, xi});
    }
  }
  return classes;
}

namespace {

// Calls fn for every symmetric identity-containing set of exactly `size`
// elements, in lexicographic order.
void for_each_symmetric_of_size(const GroupTable& group, const std::vector<std::vector<ElementId>>& classes,
                                std::size_t size, const std::function<bool(const SubsetMask&)>& fn) {
  std::vector<SubsetMask> level;
  SubsetMask cur = group.empty_set();
  cur.set(GroupTable::identity());
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t have) {
    if (have == size) {
      level.push_back(cur);
      return;
    }
    for (std::size_t c = from; c < classes.size(); ++c) {
      if (have + classes[c].size() > size) continue;
      for (auto x : classes[c]) cur.set(x);
      rec(c + 1, have + classes[c].size());
      for (auto x : classes[c]) cur.reset(x);
    }
  };
  rec(0, 1);
  std::sort(level.begin(), level.end(), lex_less);
  for (const auto& s : level)
    if (!fn(s)) return;
}

}  // namespace

std::vector<SubsetMask> symmetric_connection_sets(const GroupTable& group, std::size_t limit_log2) {
  const auto classes = inverse_classes(group);
  if (classes.size() > limit_log2) {
    throw SizeLimitError("symmetric connection sets of " + group.name() + ": 2^" + std::to_string(classes.size()) +
                         " sets exceed 2^" + std::to_string(limit_log2));
  }
  std::vector<SubsetMask> out;
  for (std::size_t s = 1; s <= group.order(); ++s) {
    for_each_symmetric_of_size(group, classes, s, [&](const SubsetMask& m) {
      out.push_back(m);
      return true;
    });
  }
  return out;
}

ScanReport scan_bounded_alpha(GroupPtr group, std::size_t alpha_bound, std::size_t budget) {
  if (!group) throw ValidationError("scan_bounded_alpha: missing group");
  const auto classes = inverse_classes(*group);
  if (classes.size() > 24) {
    throw SizeLimitError("scan_bounded_alpha: " + std::to_string(classes.size()) +
                         " inverse classes exceed the scanner limit 24");
  }
  ScanReport report;
  bool stopped = false;
  for (std::size_t s = 1; s <= group->order() && !stopped; ++s) {
    for_each_symmetric_of_size(*group, classes, s, [&](const SubsetMask& conn) {
      if (report.examined == budget) {
        stopped = true;
        return false;
      }
      ++report.examined;
      const auto alpha = independence_number(cayley_graph(group, conn)).alpha;
      if (alpha < alpha_bound) report.hits.push_back(ScanHit{conn, alpha});
      return true;
    });
  }
  report.exhausted = !stopped;
  return report;
}

}  // namespace grec
