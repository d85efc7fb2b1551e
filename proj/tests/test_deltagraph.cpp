#include <doctest.h>

#include <memory>
#include <random>

#include "grec/action.hpp"
#include "grec/cayley.hpp"
#include "grec/catalogue.hpp"
#include "grec/error.hpp"
#include "oracles.hpp"

using namespace grec;

namespace {

GroupPtr cyclic(std::size_t n) { return std::make_shared<const GroupTable>(make_cyclic(n)); }

int cyclic_diff(int x, int y, int n) { return ((y - x) % n + n) % n; }

/// Oracle-side alpha of a circulant graph with the given difference set.
std::vector<int> circulant_alpha(int n, const oracle_ref::Set& diffs) {
  return oracle_ref::max_unrelated_set(n, [&](int x, int y) { return diffs.count(cyclic_diff(x, y, n)) > 0; });
}

std::vector<int> as_vector(const SubsetMask& m) {
  std::vector<int> v;
  m.for_each([&](std::uint32_t x) { v.push_back(static_cast<int>(x)); });
  return v;
}

}  // namespace

TEST_CASE("cayley_graph construction") {
  const auto z5 = cyclic(5);
  const auto c5 = cayley_graph(z5, z5->set_of({0, 1, 4}));
  CHECK(c5.graph().edge_count() == 5);
  CHECK(c5.graph().edge_list() == "0 1\n0 4\n1 2\n2 3\n3 4\n");
  CHECK(c5.connection() == z5->set_of({1, 4}));

  const auto z6 = cyclic(6);
  const auto c6 = cayley_graph(z6, z6->set_of({0, 1, 5}));
  CHECK(c6.graph().edge_list() == "0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n");

  try {
    cayley_graph(z6, z6->set_of({0, 2}));
    FAIL("expected asymmetric error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("asymmetric") != std::string::npos);
    CHECK(std::string(e.what()).find("{0,2,4}") != std::string::npos);
  }
  CHECK_THROWS_AS(cayley_graph(z6, z6->set_of({1, 5})), ValidationError);
  CHECK(symmetrize(z6->set_of({2}), *z6) == z6->set_of({0, 2, 4}));
  CHECK(cayley_graph(z6, z6->set_of({0})).graph().edge_list().empty());
}

TEST_CASE("independence_number") {
  SUBCASE("5-cycle") {
    const auto expected = circulant_alpha(5, {1, 4});
    CHECK(expected.size() == 2);
    const auto z5 = cyclic(5);
    const auto r = independence_number(cayley_graph(z5, z5->set_of({0, 1, 4})));
    CHECK(r.alpha == 2);
    CHECK(as_vector(r.witness) == expected);
  }
  SUBCASE("6-cycle") {
    const auto expected = circulant_alpha(6, {1, 5});
    CHECK(expected == std::vector<int>{0, 2, 4});
    const auto z6 = cyclic(6);
    const auto r = independence_number(cayley_graph(z6, z6->set_of({0, 1, 5})));
    CHECK(r.alpha == 3);
    CHECK(as_vector(r.witness) == expected);
  }
  SUBCASE("edgeless") {
    const auto z6 = cyclic(6);
    CHECK(independence_number(cayley_graph(z6, z6->set_of({0}))).alpha == 6);
  }
  SUBCASE("oracle size limit") {
    const auto z21 = cyclic(21);
    CHECK_THROWS_AS(independence_number_oracle(cayley_graph(z21, z21->set_of({0}))), SizeLimitError);
  }
}

TEST_CASE("max_clique") {
  const auto z6 = cyclic(6);
  const auto c6 = cayley_graph(z6, z6->set_of({0, 1, 5}));
  CHECK(max_clique(c6).alpha == 2);
  const auto z4 = cyclic(4);
  CHECK(max_clique(cayley_graph(z4, z4->full_set())).alpha == 4);
  const auto induced = max_clique(c6, z6->set_of({0, 1, 3}));
  CHECK(induced.alpha == 2);
  CHECK(induced.witness == z6->set_of({0, 1}));
}

TEST_CASE("delta_parameter") {
  const auto z5 = cyclic(5);
  CHECK(delta_parameter(z5, z5->set_of({0, 1, 4})) == 3);
  const auto z6 = cyclic(6);
  CHECK(delta_parameter(z6, z6->set_of({0, 1, 5})) == 4);
  CHECK(delta_parameter(z6, z6->full_set()) == 2);
  CHECK(is_delta_n_set(z6, z6->set_of({0, 1, 5}), 4));
  CHECK_FALSE(is_delta_n_set(z6, z6->set_of({0, 1, 5}), 3));
  CHECK(is_delta_n_set(z6, z6->set_of({0, 1, 5}), 7));
}

TEST_CASE("find_delta_system") {
  const auto z6 = make_cyclic(6);
  const auto t = find_delta_system(z6, z6.set_of({1, 2}), 2);
  REQUIRE(t);
  CHECK(*t == std::vector<ElementId>{0, 1, 2});
  CHECK_FALSE(find_delta_system(z6, z6.set_of({0, 1, 5}), 2));
  const auto whole = find_delta_system(z6, z6.set_of({1, 2, 3, 4, 5}), 5);
  REQUIRE(whole);
  CHECK(*whole == std::vector<ElementId>{0, 1, 2, 3, 4, 5});
  CHECK_FALSE(find_delta_system(z6, z6.full_set(), 6));
  CHECK_THROWS_AS(find_delta_system(z6, z6.full_set(), 0), ValidationError);

  // Ordered: a = {5} forces descending tuples.
  const auto down = find_delta_system(z6, z6.set_of({5}), 1);
  REQUIRE(down);
  CHECK(*down == std::vector<ElementId>{0, 5});
}

TEST_CASE("ramsey_extract") {
  const auto z7 = cyclic(7);
  const auto c7 = cayley_graph(z7, z7->set_of({0, 1, 6}));
  const auto r = ramsey_extract(c7, z7->full_set());
  CHECK(r.side == RamseySide::off_set);
  CHECK(r.z == z7->set_of({0, 2, 4}));

  const auto edge = ramsey_extract(c7, z7->set_of({3, 4}));
  CHECK(edge.side == RamseySide::in_set);
  CHECK(edge.z == z7->set_of({3, 4}));

  const auto complete = cayley_graph(z7, z7->full_set());
  const auto y = z7->set_of({1, 2, 5});
  const auto all = ramsey_extract(complete, y);
  CHECK(all.side == RamseySide::in_set);
  CHECK(all.z == y);
}

TEST_CASE("scan_bounded_alpha") {
  const auto z6 = cyclic(6);
  const auto two = scan_bounded_alpha(z6, 2, 1000);
  CHECK(two.exhausted);
  REQUIRE(two.hits.size() == 1);
  CHECK(two.hits[0].connection == z6->full_set());
  CHECK(two.hits[0].alpha == 1);

  const auto three = scan_bounded_alpha(z6, 3, 1000);
  const auto expected_alpha = circulant_alpha(6, {2, 3, 4}).size();
  CHECK(expected_alpha == 2);
  const auto it = std::find_if(three.hits.begin(), three.hits.end(),
                               [&](const ScanHit& h) { return h.connection == z6->set_of({0, 2, 3, 4}); });
  REQUIRE(it != three.hits.end());
  CHECK(it->alpha == 2);

  const auto z5 = cyclic(5);
  const auto five = scan_bounded_alpha(z5, 2, 1000);
  REQUIRE(five.hits.size() == 1);
  CHECK(five.hits[0].connection == z5->full_set());

  const auto limited = scan_bounded_alpha(z6, 7, 3);
  CHECK(limited.examined == 3);
  CHECK_FALSE(limited.exhausted);
  CHECK(limited.hits.size() == 3);
  CHECK(limited.hits[0].connection == z6->set_of({0}));
  CHECK(limited.hits[1].connection == z6->set_of({0, 3}));
  CHECK(limited.hits[2].connection == z6->set_of({0, 1, 5}));
}

TEST_CASE("property: solver, oracle and translation invariance") {
  std::mt19937 rng(3);
  for (const auto& entry : default_catalogue()) {
    const auto g = build_group(entry.spec);
    if (g->order() > 16) continue;
    CAPTURE(entry.name);
    for (const auto& conn : symmetric_connection_sets(*g)) {
      if (rng() % 4 != 0) continue;
      const auto gr = cayley_graph(g, conn);
      const auto alpha = independence_number(gr);
      const auto alpha_ref = independence_number_oracle(gr);
      REQUIRE(alpha.alpha == alpha_ref.alpha);
      REQUIRE(alpha.witness == alpha_ref.witness);
      const auto omega = max_clique(gr);
      REQUIRE(omega.witness == max_clique_oracle(gr).witness);
      // complement duality
      REQUIRE(omega.alpha == max_independent_set(gr.graph().complement()).size);
      // left translates of the witness stay independent
      for (ElementId h = 0; h < g->order(); ++h) {
        const auto moved = left_translate(h, alpha.witness, *g);
        const auto v = moved.elements();
        for (std::size_t i = 0; i < v.size(); ++i)
          for (std::size_t j = i + 1; j < v.size(); ++j) REQUIRE_FALSE(gr.adjacent(v[i], v[j]));
      }
      for (std::size_t n = 1; n + 1 < g->order(); ++n)
        REQUIRE((is_delta_n_set(g, conn, n) <= is_delta_n_set(g, conn, n + 1)));
    }
  }
}

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("finding: alpha of an intersection is bounded by Ramsey, not by the product") {
  // Independent sets of Γ_{a∩b} are sets where Γ_a has no (alpha_a+1)-independent
  // set and no (alpha_b+1)-clique, so alpha(a∩b) < R(alpha_a+1, alpha_b+1)
  // <= C(alpha_a+alpha_b, alpha_a).
  std::size_t product_violations = 0;
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto g = cyclic(n);
    const auto sets = symmetric_connection_sets(*g);
    for (const auto& a : sets) {
      for (const auto& b : sets) {
        const auto aa = independence_number(cayley_graph(g, a)).alpha;
        const auto ab = independence_number(cayley_graph(g, b)).alpha;
        const auto ai = independence_number(cayley_graph(g, a & b)).alpha;
        REQUIRE(ai < binom(aa + ab, aa));
        if (ai > aa * ab) ++product_violations;
      }
    }
  }
  // The multiplicative bound fails already on Z5: C5 and its complement.
  const auto z5 = cyclic(5);
  CHECK(independence_number(cayley_graph(z5, z5->set_of({0, 1, 4}))).alpha == 2);
  CHECK(independence_number(cayley_graph(z5, z5->set_of({0, 2, 3}))).alpha == 2);
  CHECK(independence_number(cayley_graph(z5, z5->set_of({0}))).alpha == 5);
  CHECK(product_violations > 0);
}
