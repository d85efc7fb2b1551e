#include "grec/recurrence.hpp"

#include <map>

#include "grec/error.hpp"

namespace grec {

namespace {

void require_compatible(const ActionTable& action, const SetFamily& f, const SubsetMask& a, const char* op) {
  if (f.points() != action.points()) {
    throw ValidationError(std::string(op) + ": family over " + std::to_string(f.points()) + " points, action over " +
                          std::to_string(action.points()));
  }
  if (a.universe() != Universe::points || a.universe_size() != action.points()) {
    throw ValidationError(std::string(op) + ": set must be over the " + std::to_string(action.points()) +
                          " points of the action");
  }
}

}  // namespace

DeltaResult delta(const ActionTable& action, const SetFamily& f, const SubsetMask& a, const DeltaOptions& options) {
  require_compatible(action, f, a, "delta");
  if (!options.permissive && !f.contains(a)) {
    throw DomainError("delta: " + a.to_string() + " is not a member of " + f.describe());
  }
  const auto candidates = f.members_within(a);
  const GroupTable& group = action.group();
  DeltaResult out{group.empty_set(), {}};
  for (ElementId g = 0; g < group.order(); ++g) {
    for (const auto& b : candidates) {
      if (translate_within(g, b, a, action)) {
        out.set.set(g);
        out.witnesses.emplace_back(g, b);
        break;
      }
    }
  }
  return out;
}

SubsetMask delta_simple(const ActionTable& action, const SetFamily& f, const SubsetMask& a) {
  require_compatible(action, f, a, "delta_simple");
  if (!f.structurally_upward() || !f.structurally_invariant_under(action)) {
    throw ValidationError("delta_simple: " + f.describe() + " is not both upward closed and invariant under the action");
  }
  const GroupTable& group = action.group();
  SubsetMask out = group.empty_set();
  for (ElementId g = 0; g < group.order(); ++g) {
    if (f.contains(translate(g, a, action) & a)) out.set(g);
  }
  return out;
}

RecurrenceReport is_recurrent(const ActionTable& action, const SetFamily& f, const SubsetMask& r) {
  if (r.universe() != Universe::group || r.universe_size() != action.group().order()) {
    throw ValidationError("is_recurrent: R must be a subset of the group");
  }
  RecurrenceReport report;
  for (const auto& a : f.minimal_members()) {
    ++report.sets_checked;
    auto d = delta(action, f, a);
    if (!d.set.intersects(r)) {
      report.recurrent = false;
      report.failing.emplace(a, std::move(d.set));
      break;
    }
  }
  return report;
}

FilterBase recurrence_filter_base(const ActionTable& action, const SetFamily& f) {
  FilterBase fb;
  fb.kernel = action.group().full_set();
  fb.sources = f.minimal_members();
  fb.generators.reserve(fb.sources.size());
  for (const auto& a : fb.sources) {
    fb.generators.push_back(delta(action, f, a).set);
    fb.kernel &= fb.generators.back();
  }
  return fb;
}

bool meets_every_generator(const FilterBase& fb, const SubsetMask& r) {
  for (const auto& g : fb.generators)
    if (!g.intersects(r)) return false;
  return true;
}

LeftTopologicalReport is_left_topological(const SubsetMask& kernel, const GroupTable& group) {
  if (kernel.universe() != Universe::group || kernel.universe_size() != group.order()) {
    throw ValidationError("is_left_topological: kernel must be a subset of the group");
  }
  LeftTopologicalReport report{true, kernel, std::nullopt};
  const auto elems = kernel.elements();
  for (auto x : elems) {
    for (auto y : elems) {
      if (!kernel.test(group.mul(x, y))) {
        report.left_topological = false;
        report.witness.emplace(x, y);
        return report;
      }
    }
  }
  return report;
}

LeftTopologicalReport is_left_topological(const FilterBase& fb, const GroupTable& group) {
  return is_left_topological(fb.kernel, group);
}

Prop1Report prop1_witness_check(const ActionTable& action, const SetFamily& f, MemberScope scope) {
  if (scope == MemberScope::automatic) scope = f.points() <= 10 ? MemberScope::all : MemberScope::minimal;
  Prop1Report report;
  report.all_members = scope == MemberScope::all;

  std::map<SubsetMask, SubsetMask, CanonicalLess> cache;
  auto delta_of = [&](const SubsetMask& s) -> const SubsetMask& {
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, delta(action, f, s).set).first;
    return it->second;
  };

  const GroupTable& group = action.group();
  auto check_member = [&](const SubsetMask& a) {
    const SubsetMask da = delta_of(a);
    const auto candidates = f.members_within(a);
    for (auto g = static_cast<ElementId>(da.first()); g < da.universe_size();
         g = static_cast<ElementId>(da.next(g))) {
      ++report.pairs_checked;
      bool certified = false;
      for (const auto& b : candidates) {
        if (!translate_within(g, b, a, action)) continue;
        if (left_translate(g, delta_of(b), group).is_subset_of(da)) {
          certified = true;
          break;
        }
      }
      if (!certified) {
        report.holds = false;
        report.failing.emplace(a, g);
        return false;
      }
    }
    return true;
  };

  if (scope == MemberScope::all) {
    for_each_member(f, check_member);
  } else {
    for (const auto& a : f.minimal_members())
      if (!check_member(a)) break;
  }
  return report;
}

}  // namespace grec
