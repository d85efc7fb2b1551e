#pragma once

#include <string>
#include <vector>

#include "grec/group.hpp"

namespace grec {

/// Declarative description of a group construction.
struct GroupSpec {
  enum class Kind { cyclic, dihedral, symmetric, product, table };

  Kind kind = Kind::cyclic;
  std::size_t n = 1;
  std::vector<GroupSpec> factors;                // product: exactly two
  std::vector<std::vector<ElementId>> table;     // table

  static GroupSpec cyclic(std::size_t n) { return {Kind::cyclic, n, {}, {}}; }
  static GroupSpec dihedral(std::size_t n) { return {Kind::dihedral, n, {}, {}}; }
  static GroupSpec symmetric(std::size_t n) { return {Kind::symmetric, n, {}, {}}; }
  static GroupSpec product(GroupSpec a, GroupSpec b) { return {Kind::product, 0, {std::move(a), std::move(b)}, {}}; }
  static GroupSpec explicit_table(std::vector<std::vector<ElementId>> t) { return {Kind::table, 0, {}, std::move(t)}; }

  bool operator==(const GroupSpec&) const = default;
};

const char* to_string(GroupSpec::Kind kind) noexcept;

/// Builds and validates the group. Errors propagate from the constructors.
GroupPtr build_group(const GroupSpec& spec);

struct CatalogueEntry {
  std::string name;
  GroupSpec spec;
};

/// Z2..Z12, D3..D6, S3, S4, Z2xZ4.
std::vector<CatalogueEntry> default_catalogue();

/// Every cyclic, dihedral and symmetric group and every Z2 x Zm of order at
/// most max_order, in that order.
std::vector<CatalogueEntry> extended_catalogue(std::size_t max_order = 72);

}  // namespace grec
