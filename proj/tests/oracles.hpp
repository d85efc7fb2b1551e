#pragma once

// Reference computations for the tests. They work on plain integer vectors
// and enumerate definitions literally, sharing no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle_ref {

using Set = std::set<int>;
using Table = std::vector<std::vector<int>>;  // table[g][x] = gx

inline Table cyclic_table(int n) {
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

inline int inverse(const Table& mul, int x) {
  for (int y = 0; y < static_cast<int>(mul.size()); ++y)
    if (mul[x][y] == 0) return y;
  return -1;
}

inline Set image(const Table& act, int g, const Set& a) {
  Set out;
  for (int x : a) out.insert(act[g][x]);
  return out;
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline std::vector<Set> all_subsets(const Set& a) {
  std::vector<int> v(a.begin(), a.end());
  std::vector<Set> out;
  for (std::uint32_t m = 0; m < (1U << v.size()); ++m) {
    Set s;
    for (std::size_t i = 0; i < v.size(); ++i)
      if ((m >> i) & 1U) s.insert(v[i]);
    out.push_back(s);
  }
  return out;
}

/// {g : gB ⊆ A for some member B ⊆ A}, by enumerating every B ⊆ A.
inline Set delta_by_definition(const Table& act, const std::function<bool(const Set&)>& member, const Set& a) {
  Set out;
  const auto bs = all_subsets(a);
  for (int g = 0; g < static_cast<int>(act.size()); ++g) {
    for (const auto& b : bs) {
      if (member(b) && subset(image(act, g, b), a)) {
        out.insert(g);
        break;
      }
    }
  }
  return out;
}

/// Largest set of vertices with no related pair, lexicographically least.
inline std::vector<int> max_unrelated_set(int n, const std::function<bool(int, int)>& related) {
  std::vector<int> best;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1U) s.push_back(i);
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i)
      for (std::size_t j = i + 1; j < s.size() && ok; ++j) ok = !related(s[i], s[j]);
    if (!ok) continue;
    if (s.size() > best.size() || (s.size() == best.size() && s < best)) best = s;
  }
  return best;
}

/// Smallest F (lexicographically least among smallest) with FA = G.
inline std::vector<int> min_cover(const Table& mul, const Set& a) {
  const int n = static_cast<int>(mul.size());
  std::vector<int> best;
  bool found = false;
  for (std::uint32_t m = 1; m < (1U << n); ++m) {
    std::vector<int> f;
    Set covered;
    for (int x = 0; x < n; ++x) {
      if (!((m >> x) & 1U)) continue;
      f.push_back(x);
      for (int y : a) covered.insert(mul[x][y]);
    }
    if (static_cast<int>(covered.size()) != n) continue;
    if (!found || f.size() < best.size() || (f.size() == best.size() && f < best)) {
      best = f;
      found = true;
    }
  }
  return best;
}

}  // namespace oracle_ref
