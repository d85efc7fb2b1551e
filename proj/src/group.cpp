#include "grec/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "grec/error.hpp"

namespace grec {

namespace {

void require_order(std::size_t n, const char* what) {
  if (n == 0) throw ValidationError(std::string(what) + ": order must be positive");
  if (n > kMaxGroupOrder) {
    throw SizeLimitError(std::string(what) + ": order " + std::to_string(n) + " exceeds limit " +
                         std::to_string(kMaxGroupOrder));
  }
}

std::string triple(ElementId a, ElementId b, ElementId c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

GroupTable GroupTable::from_table(std::vector<std::vector<ElementId>> table, std::string name,
                                  const GroupOptions& options) {
  const std::size_t n = table.size();
  require_order(n, "group table");
  GroupTable g;
  g.order_ = n;
  g.name_ = std::move(name);
  g.mul_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw ValidationError("group table row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                            " entries, expected " + std::to_string(n));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        throw ValidationError("group table entry (" + std::to_string(a) + "," + std::to_string(b) + ") = " +
                              std::to_string(table[a][b]) + " out of range");
      }
      g.mul_[a * n + b] = table[a][b];
    }
  }

  for (ElementId x = 0; x < n; ++x) {
    if (g.mul(0, x) != x || g.mul(x, 0) != x) {
      throw ValidationError("element 0 is not an identity: fails at element " + std::to_string(x));
    }
  }

  g.inv_.assign(n, 0);
  for (ElementId x = 0; x < n; ++x) {
    bool found = false;
    for (ElementId y = 0; y < n; ++y) {
      if (g.mul(x, y) == 0 && g.mul(y, x) == 0) {
        g.inv_[x] = y;
        found = true;
        break;
      }
    }
    if (!found) throw ValidationError("no inverse for element " + std::to_string(x));
  }

  auto check = [&](ElementId a, ElementId b, ElementId c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
      throw ValidationError("associativity fails at triple " + triple(a, b, c));
    }
  };
  if (n <= options.exhaustive_associativity_bound) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        for (ElementId c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x67726563ULL);
    for (std::size_t i = 0; i < 10 * n; ++i) {
      check(static_cast<ElementId>(rng() % n), static_cast<ElementId>(rng() % n), static_cast<ElementId>(rng() % n));
    }
  }
  return g;
}

bool GroupTable::is_abelian() const noexcept {
  for (ElementId a = 0; a < order_; ++a)
    for (ElementId b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupTable make_cyclic(std::size_t n) {
  require_order(n, "cyclic");
  std::vector<std::vector<ElementId>> t(n, std::vector<ElementId>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<ElementId>((a + b) % n);
  return GroupTable::from_table(std::move(t), "Z" + std::to_string(n));
}

GroupTable make_dihedral(std::size_t n) {
  if (n == 0) throw ValidationError("dihedral: n must be positive");
  require_order(2 * n, "dihedral");
  // Element (flip, k) acts on Z_n as x -> (flip ? -x : x) + k.
  auto decode = [n](std::size_t i) { return std::pair<bool, std::size_t>{i >= n, i % n}; };
  auto encode = [n](bool flip, std::size_t k) { return static_cast<ElementId>((flip ? n : 0) + k % n); };
  const std::size_t order = 2 * n;
  std::vector<std::vector<ElementId>> t(order, std::vector<ElementId>(order));
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      const auto [fa, ka] = decode(a);
      const auto [fb, kb] = decode(b);
      // a(b(x)) = sa*(sb*x + kb) + ka
      const std::size_t k = fa ? (ka + n - kb) % n : (ka + kb) % n;
      t[a][b] = encode(fa != fb, k);
    }
  }
  return GroupTable::from_table(std::move(t), "D" + std::to_string(n));
}

GroupTable make_symmetric(unsigned n) {
  if (n == 0) throw ValidationError("symmetric: degree must be positive");
  if (n > kMaxSymmetricDegree) {
    throw SizeLimitError("symmetric: degree " + std::to_string(n) + " exceeds limit " +
                         std::to_string(kMaxSymmetricDegree));
  }
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0U);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<unsigned>, ElementId> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<ElementId>(i));

  const std::size_t order = perms.size();
  std::vector<std::vector<ElementId>> t(order, std::vector<ElementId>(order));
  std::vector<unsigned> r(n);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (unsigned x = 0; x < n; ++x) r[x] = perms[a][perms[b][x]];
      t[a][b] = index.at(r);
    }
  }
  GroupTable g = GroupTable::from_table(std::move(t), "S" + std::to_string(n));
  g.labels_.reserve(order);
  for (const auto& perm : perms) g.labels_.push_back(cycle_notation(perm));
  return g;
}

GroupTable make_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  require_order(ng * nh, "product");
  const std::size_t n = ng * nh;
  std::vector<std::vector<ElementId>> t(n, std::vector<ElementId>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto i = static_cast<ElementId>(a / nh);
      const auto j = static_cast<ElementId>(a % nh);
      const auto k = static_cast<ElementId>(b / nh);
      const auto l = static_cast<ElementId>(b % nh);
      t[a][b] = static_cast<ElementId>(g.mul(i, k) * nh + h.mul(j, l));
    }
  }
  return GroupTable::from_table(std::move(t), g.name() + "x" + h.name());
}

std::string cycle_notation(const std::vector<unsigned>& one_line) {
  std::string out;
  std::vector<bool> seen(one_line.size(), false);
  for (unsigned start = 0; start < one_line.size(); ++start) {
    if (seen[start] || one_line[start] == start) continue;
    out += '(';
    unsigned x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = one_line[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace grec
