#include <doctest.h>

#include <memory>
#include <random>

#include "grec/action.hpp"
#include "grec/catalogue.hpp"
#include "grec/error.hpp"
#include "grec/family.hpp"

using namespace grec;

namespace {

ActionPtr regular(std::size_t n) {
  return std::make_shared<const ActionTable>(
      ActionTable::left_regular(std::make_shared<const GroupTable>(make_cyclic(n))));
}

ActionPtr z2_on_pairs() {
  auto z2 = std::make_shared<const GroupTable>(make_cyclic(2));
  return std::make_shared<const ActionTable>(ActionTable::from_table(z2, {{0, 1, 2, 3}, {1, 0, 3, 2}}));
}

}  // namespace

TEST_CASE("family_contains") {
  const auto z6 = regular(6);
  SUBCASE("invariant upward closure of {0,1}") {
    const auto f = SetFamily::explicit_family(6, {z6->set_of({0, 1})}, true, true, z6);
    CHECK(f.contains(z6->set_of({2, 3, 5})));
    CHECK_FALSE(f.contains(z6->set_of({0, 2, 4})));
    CHECK(f.contains(z6->set_of({5, 0})));
  }
  SUBCASE("min size") {
    const auto f = SetFamily::min_size(3, 2);
    CHECK_FALSE(f.contains(SubsetMask::of(Universe::points, 3, {1})));
    CHECK(f.contains(SubsetMask::of(Universe::points, 3, {0, 2})));
  }
  SUBCASE("positive measure") {
    auto z1 = std::make_shared<const GroupTable>(make_cyclic(1));
    auto trivial = std::make_shared<const ActionTable>(ActionTable::from_table(z1, {{0, 1, 2}}));
    const auto f = positive_family(MeasureTable({{0, 1}, {0, 1}, {1, 1}}, trivial));
    CHECK_FALSE(f.contains(trivial->set_of({0, 1})));
    CHECK(f.contains(trivial->set_of({2})));
  }
  SUBCASE("empty set excluded by default") {
    CHECK_FALSE(SetFamily::min_size(4, 0).contains(SubsetMask(Universe::points, 4)));
    CHECK(SetFamily::min_size(4, 0, false).contains(SubsetMask(Universe::points, 4)));
  }
  SUBCASE("no flags: exact generator match") {
    const auto f = SetFamily::explicit_family(6, {z6->set_of({0, 1})}, false, false);
    CHECK(f.contains(z6->set_of({0, 1})));
    CHECK_FALSE(f.contains(z6->set_of({0, 1, 2})));
    CHECK_FALSE(f.contains(z6->set_of({1, 2})));
  }
  SUBCASE("universe mismatch") {
    const auto f = SetFamily::min_size(6, 1);
    CHECK_THROWS_AS(f.contains(SubsetMask::of(Universe::group, 6, {0})), ValidationError);
    CHECK_THROWS_AS(f.contains(SubsetMask::of(Universe::points, 5, {0})), ValidationError);
  }
}

TEST_CASE("check_flags") {
  const auto z6 = regular(6);
  SUBCASE("min size is upward and invariant") {
    const auto r = check_flags(SetFamily::min_size(6, 2), *z6);
    CHECK(r.upward_closed);
    CHECK(r.invariant);
    CHECK_FALSE(r.sampled);
    CHECK(r.sets_checked == 64);
  }
  SUBCASE("bare generator list on Z6") {
    const auto r = check_flags(SetFamily::explicit_family(6, {z6->set_of({0, 1})}, false, false), *z6);
    CHECK_FALSE(r.upward_closed);
    REQUIRE(r.upward_witness);
    CHECK(r.upward_witness->first == z6->set_of({0, 1}));
    CHECK(r.upward_witness->second == z6->set_of({0, 1, 2}));
    CHECK_FALSE(r.invariant);
    REQUIRE(r.invariance_witness);
    CHECK(r.invariance_witness->set == z6->set_of({0, 1}));
    CHECK(r.invariance_witness->g == 1);
  }
  SUBCASE("positive measure is upward") {
    const auto mu = MeasureTable({{1, 2}, {1, 2}, {0, 1}, {0, 1}}, z2_on_pairs());
    const auto r = check_flags(positive_family(mu), *z2_on_pairs());
    CHECK(r.upward_closed);
    CHECK(r.invariant);
  }
  SUBCASE("upward-only family is not invariant") {
    const auto r = check_flags(SetFamily::explicit_family(6, {z6->set_of({0, 1})}, true, false), *z6);
    CHECK(r.upward_closed);
    CHECK_FALSE(r.invariant);
  }
  SUBCASE("sampled mode above the exhaustive bound") {
    const auto r = check_flags(SetFamily::min_size(6, 2), *z6, FlagCheckOptions{4, 256});
    CHECK(r.sampled);
    CHECK(r.upward_closed);
    CHECK(r.invariant);
  }
}

TEST_CASE("positive_family and measure validation") {
  const auto z6 = regular(6);
  const std::vector<Rational> uniform(6, Rational{1, 6});
  const auto f = positive_family(MeasureTable(uniform, z6));
  for (std::uint32_t m = 0; m < 64; ++m) {
    SubsetMask a(Universe::points, 6);
    for (PointId x = 0; x < 6; ++x)
      if ((m >> x) & 1U) a.set(x);
    CHECK(f.contains(a) == !a.empty());
  }

  const auto mu = MeasureTable({Rational::parse("1/2"), Rational::parse("0.5"), {0, 1}, {0, 1}}, z2_on_pairs());
  CHECK_FALSE(positive_family(mu).contains(z2_on_pairs()->set_of({2, 3})));

  // Sum 0.9
  CHECK_THROWS_AS(MeasureTable({Rational::parse("0.3"), Rational::parse("0.3"), Rational::parse("0.3"), {0, 1}},
                               z2_on_pairs()),
                  ValidationError);
  // Not constant on the orbit {0,1}
  CHECK_THROWS_AS(MeasureTable({Rational::parse("3/4"), Rational::parse("1/4"), {0, 1}, {0, 1}}, z2_on_pairs()),
                  ValidationError);
  CHECK_THROWS_AS(Rational::parse("1/x"), ValidationError);
}

TEST_CASE("family_members") {
  const auto z6 = regular(6);
  SUBCASE("min size 5 on 6 points") {
    const auto members = family_members(SetFamily::min_size(6, 5));
    CHECK(members.size() == 7);  // C(6,5) + C(6,6)
    CHECK(members.front() == z6->set_of({0, 1, 2, 3, 4}));
    CHECK(members.back() == z6->full_set());
  }
  SUBCASE("minimal members of the closure of {0,1}") {
    const auto f = SetFamily::explicit_family(6, {z6->set_of({0, 1})}, true, true, z6);
    const auto minimal = family_members(f, true);
    REQUIRE(minimal.size() == 6);
    CHECK(minimal[0] == z6->set_of({0, 1}));
    CHECK(minimal[1] == z6->set_of({0, 5}));
    CHECK(minimal[5] == z6->set_of({4, 5}));
  }
  SUBCASE("empty generator list") {
    const auto f = SetFamily::explicit_family(6, {}, true, true, z6);
    CHECK(family_members(f).empty());
    CHECK(family_members(f, true).empty());
  }
  SUBCASE("enumeration bound") {
    CHECK_THROWS_AS(family_members(SetFamily::min_size(23, 1)), SizeLimitError);
    CHECK(family_members(SetFamily::min_size(23, 22), true).size() == 23);
  }
  SUBCASE("ascending size then lexicographic") {
    const auto members = family_members(SetFamily::min_size(5, 2));
    for (std::size_t i = 1; i < members.size(); ++i) CHECK(canonical_less(members[i - 1], members[i]));
  }
}

TEST_CASE("property: closure laws and the minimal-member reduction") {
  std::mt19937 rng(11);
  for (const std::size_t n : {4u, 6u, 8u, 10u, 12u}) {
    const auto act = regular(n);
    for (int trial = 0; trial < 6; ++trial) {
      SubsetMask gen(Universe::points, n);
      const std::size_t k = 1 + rng() % 3;
      while (gen.count() < k) gen.set(static_cast<PointId>(rng() % n));
      std::vector<SetFamily> families = {SetFamily::explicit_family(n, {gen}, true, true, act),
                                         SetFamily::explicit_family(n, {gen}, true, false),
                                         SetFamily::min_size(n, k)};
      for (const auto& f : families) {
        CAPTURE(f.describe());
        const auto minimal = f.minimal_members();
        for_each_member(f, [&](const SubsetMask& a) {
          for (PointId x = 0; x < n; ++x) {
            SubsetMask b = a;
            b.set(x);
            REQUIRE(f.contains(b));
          }
          return true;
        });
        for (std::uint32_t m = 0; m < (1U << n); m += 1 + rng() % 7) {
          SubsetMask a(Universe::points, n);
          for (PointId x = 0; x < n; ++x)
            if ((m >> x) & 1U) a.set(x);
          const bool via_minimal =
              std::any_of(minimal.begin(), minimal.end(), [&](const SubsetMask& b) { return b.is_subset_of(a); });
          REQUIRE(f.contains(a) == via_minimal);
          if (f.structurally_invariant_under(*act)) {
            for (ElementId g = 0; g < n; ++g) REQUIRE(f.contains(a) == f.contains(translate(g, a, *act)));
          }
        }
      }
    }
  }
}
