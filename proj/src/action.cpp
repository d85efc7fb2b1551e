#include "grec/action.hpp"

#include <string>

#include "grec/error.hpp"

namespace grec {

namespace {

void require_universe(const SubsetMask& a, Universe u, std::size_t size, const char* op) {
  if (a.universe() != u || a.universe_size() != size) {
    throw ValidationError(std::string(op) + ": expected a " + to_string(u) + " set of size " + std::to_string(size) +
                          ", got " + to_string(a.universe()) + " set of size " + std::to_string(a.universe_size()));
  }
}

}  // namespace

ActionTable ActionTable::from_table(GroupPtr group, std::vector<std::vector<PointId>> table) {
  if (!group) throw ValidationError("action: missing group");
  const std::size_t n = group->order();
  if (table.size() != n) {
    throw ValidationError("action table has " + std::to_string(table.size()) + " rows, expected group order " +
                          std::to_string(n));
  }
  const std::size_t m = table.front().size();
  if (m == 0) throw ValidationError("action: point set must be nonempty");
  ActionTable a;
  a.group_ = std::move(group);
  a.points_ = m;
  a.act_.resize(n * m);
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != m) {
      throw ValidationError("action table row " + std::to_string(g) + " has " + std::to_string(table[g].size()) +
                            " entries, expected " + std::to_string(m));
    }
    for (std::size_t x = 0; x < m; ++x) {
      if (table[g][x] >= m) {
        throw ValidationError("action entry (" + std::to_string(g) + "," + std::to_string(x) + ") = " +
                              std::to_string(table[g][x]) + " out of range");
      }
      a.act_[g * m + x] = table[g][x];
    }
  }
  for (PointId x = 0; x < m; ++x) {
    if (a.act(0, x) != x) throw ValidationError("action identity law fails at point (" + std::to_string(x) + ")");
  }
  const GroupTable& G = *a.group_;
  for (ElementId g = 0; g < n; ++g)
    for (ElementId h = 0; h < n; ++h)
      for (PointId x = 0; x < m; ++x)
        if (a.act(g, a.act(h, x)) != a.act(G.mul(g, h), x)) {
          throw ValidationError("action compatibility law fails at (g,h,x) = (" + std::to_string(g) + "," +
                                std::to_string(h) + "," + std::to_string(x) + ")");
        }
  return a;
}

ActionTable ActionTable::left_regular(GroupPtr group) {
  if (!group) throw ValidationError("action: missing group");
  ActionTable a;
  const std::size_t n = group->order();
  a.points_ = n;
  a.act_.resize(n * n);
  for (ElementId g = 0; g < n; ++g)
    for (ElementId x = 0; x < n; ++x) a.act_[g * n + x] = group->mul(g, x);
  a.group_ = std::move(group);
  return a;
}

bool ActionTable::is_left_regular() const noexcept {
  const std::size_t n = group_->order();
  if (points_ != n) return false;
  for (ElementId g = 0; g < n; ++g)
    for (ElementId x = 0; x < n; ++x)
      if (act(g, x) != group_->mul(g, x)) return false;
  return true;
}

SubsetMask translate(ElementId g, const SubsetMask& a, const ActionTable& action) {
  require_universe(a, Universe::points, action.points(), "translate");
  if (g >= action.group().order()) throw ValidationError("translate: element " + std::to_string(g) + " out of range");
  SubsetMask out(Universe::points, action.points());
  a.for_each([&](PointId x) { out.set(action.act(g, x)); });
  return out;
}

bool translate_within(ElementId g, const SubsetMask& b, const SubsetMask& a, const ActionTable& action) {
  bool inside = true;
  for (auto x = b.first(); x < b.universe_size(); x = b.next(x)) {
    if (!a.test(action.act(g, static_cast<PointId>(x)))) {
      inside = false;
      break;
    }
  }
  return inside;
}

SubsetMask inverse_set(const SubsetMask& a, const GroupTable& group) {
  require_universe(a, Universe::group, group.order(), "inverse_set");
  SubsetMask out = group.empty_set();
  a.for_each([&](ElementId x) { out.set(group.inv(x)); });
  return out;
}

SubsetMask product_set(const SubsetMask& a, const SubsetMask& b, const GroupTable& group) {
  require_universe(a, Universe::group, group.order(), "product_set");
  require_universe(b, Universe::group, group.order(), "product_set");
  SubsetMask out = group.empty_set();
  const auto bs = b.elements();
  a.for_each([&](ElementId x) {
    for (auto y : bs) out.set(group.mul(x, y));
  });
  return out;
}

SubsetMask left_translate(ElementId g, const SubsetMask& a, const GroupTable& group) {
  require_universe(a, Universe::group, group.order(), "left_translate");
  SubsetMask out = group.empty_set();
  a.for_each([&](ElementId x) { out.set(group.mul(g, x)); });
  return out;
}

}  // namespace grec
