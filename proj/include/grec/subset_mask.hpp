#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace grec {

/// Dense element index of a finite group. The identity is always 0.
using ElementId = std::uint32_t;
/// Dense point index of a finite G-space.
using PointId = std::uint32_t;

/// Which kind of ground set a mask lives over. Masks over different
/// universes never combine.
enum class Universe : std::uint8_t { group, points };

const char* to_string(Universe u) noexcept;

/// Fixed-width bit set over {0, ..., size-1} of a tagged universe.
///
/// All binary operations require equal universe tag and size and throw
/// ValidationError otherwise.
class SubsetMask {
 public:
  SubsetMask() = default;
  SubsetMask(Universe universe, std::size_t size);

  static SubsetMask full(Universe universe, std::size_t size);
  /// Throws ValidationError when an element is out of range.
  static SubsetMask of(Universe universe, std::size_t size, std::span<const std::uint32_t> elements);
  static SubsetMask of(Universe universe, std::size_t size, std::initializer_list<std::uint32_t> elements);

  Universe universe() const noexcept { return universe_; }
  std::size_t universe_size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  /// Smallest member, or universe_size() when empty.
  std::size_t first() const noexcept;
  /// Smallest member strictly greater than i, or universe_size().
  std::size_t next(std::size_t i) const noexcept;

  bool is_subset_of(const SubsetMask& other) const;
  bool intersects(const SubsetMask& other) const;

  SubsetMask& operator|=(const SubsetMask& other);
  SubsetMask& operator&=(const SubsetMask& other);
  SubsetMask& operator-=(const SubsetMask& other);
  SubsetMask complement() const;

  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) { return a |= b; }
  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) { return a &= b; }
  friend SubsetMask operator-(SubsetMask a, const SubsetMask& b) { return a -= b; }

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;

  std::vector<std::uint32_t> elements() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(static_cast<std::uint32_t>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  /// "{0,1,5}" rendering for diagnostics.
  std::string to_string() const;

 private:
  void require_compatible(const SubsetMask& other) const;
  void trim() noexcept;

  Universe universe_ = Universe::group;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order of the ascending element lists.
bool lex_less(const SubsetMask& a, const SubsetMask& b);

/// Canonical order used for every enumeration and tie-break: ascending
/// cardinality, then lexicographic.
bool canonical_less(const SubsetMask& a, const SubsetMask& b);

struct CanonicalLess {
  bool operator()(const SubsetMask& a, const SubsetMask& b) const { return canonical_less(a, b); }
};

/// Calls fn(mask) for every k-subset of `pool` in lexicographic order.
/// Stops early when fn returns false.
template <class Fn>
void for_each_k_subset(const SubsetMask& pool, std::size_t k, Fn&& fn) {
  const auto elems = pool.elements();
  const std::size_t n = elems.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  SubsetMask cur(pool.universe(), pool.universe_size());
  while (true) {
    cur = SubsetMask(pool.universe(), pool.universe_size());
    for (auto i : idx) cur.set(elems[i]);
    if (!fn(cur)) return;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace grec
