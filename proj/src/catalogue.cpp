#include "grec/catalogue.hpp"

#include <memory>

#include "grec/error.hpp"

namespace grec {

const char* to_string(GroupSpec::Kind kind) noexcept {
  switch (kind) {
    case GroupSpec::Kind::cyclic:
      return "cyclic";
    case GroupSpec::Kind::dihedral:
      return "dihedral";
    case GroupSpec::Kind::symmetric:
      return "symmetric";
    case GroupSpec::Kind::product:
      return "product";
    case GroupSpec::Kind::table:
      return "table";
  }
  return "unknown";
}

GroupPtr build_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
      return std::make_shared<const GroupTable>(make_cyclic(spec.n));
    case GroupSpec::Kind::dihedral:
      return std::make_shared<const GroupTable>(make_dihedral(spec.n));
    case GroupSpec::Kind::symmetric:
      return std::make_shared<const GroupTable>(make_symmetric(static_cast<unsigned>(spec.n)));
    case GroupSpec::Kind::product: {
      if (spec.factors.size() != 2) throw ValidationError("product group needs exactly two factors");
      const auto a = build_group(spec.factors[0]);
      const auto b = build_group(spec.factors[1]);
      return std::make_shared<const GroupTable>(make_product(*a, *b));
    }
    case GroupSpec::Kind::table:
      return std::make_shared<const GroupTable>(GroupTable::from_table(spec.table));
  }
  throw ValidationError("unknown group kind");
}

std::vector<CatalogueEntry> default_catalogue() {
  std::vector<CatalogueEntry> out;
  for (std::size_t n = 2; n <= 12; ++n) out.push_back({"Z" + std::to_string(n), GroupSpec::cyclic(n)});
  for (std::size_t n = 3; n <= 6; ++n) out.push_back({"D" + std::to_string(n), GroupSpec::dihedral(n)});
  out.push_back({"S3", GroupSpec::symmetric(3)});
  out.push_back({"S4", GroupSpec::symmetric(4)});
  out.push_back({"Z2xZ4", GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(4))});
  return out;
}

}  // namespace grec

namespace grec {

std::vector<CatalogueEntry> extended_catalogue(std::size_t max_order) {
  std::vector<CatalogueEntry> out;
  for (std::size_t n = 2; n <= max_order; ++n) out.push_back({"Z" + std::to_string(n), GroupSpec::cyclic(n)});
  for (std::size_t n = 3; 2 * n <= max_order; ++n) out.push_back({"D" + std::to_string(n), GroupSpec::dihedral(n)});
  std::size_t fact = 2;
  for (unsigned n = 3; fact * n <= max_order; ++n) {
    fact *= n;
    out.push_back({"S" + std::to_string(n), GroupSpec::symmetric(n)});
  }
  for (std::size_t m = 2; 2 * m <= max_order; ++m)
    out.push_back({"Z2xZ" + std::to_string(m), GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(m))});
  return out;
}

}  // namespace grec
