#include "grec/subset_mask.hpp"

#include <sstream>

#include "grec/error.hpp"

namespace grec {

const char* to_string(Universe u) noexcept {
  return u == Universe::group ? "group" : "points";
}

SubsetMask::SubsetMask(Universe universe, std::size_t size)
    : universe_(universe), size_(size), words_((size + 63) / 64, 0) {}

SubsetMask SubsetMask::full(Universe universe, std::size_t size) {
  SubsetMask m(universe, size);
  for (auto& w : m.words_) w = ~std::uint64_t{0};
  m.trim();
  return m;
}

SubsetMask SubsetMask::of(Universe universe, std::size_t size, std::span<const std::uint32_t> elements) {
  SubsetMask m(universe, size);
  for (auto e : elements) {
    if (e >= size) {
      throw ValidationError("element " + std::to_string(e) + " out of range for " + grec::to_string(universe) +
                            " universe of size " + std::to_string(size));
    }
    m.set(e);
  }
  return m;
}

SubsetMask SubsetMask::of(Universe universe, std::size_t size, std::initializer_list<std::uint32_t> elements) {
  return of(universe, size, std::span<const std::uint32_t>(elements.begin(), elements.size()));
}

std::size_t SubsetMask::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool SubsetMask::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

std::size_t SubsetMask::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return size_;
}

std::size_t SubsetMask::next(std::size_t i) const noexcept {
  ++i;
  if (i >= size_) return size_;
  std::size_t w = i >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (bits != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return size_;
    bits = words_[w];
  }
}

void SubsetMask::require_compatible(const SubsetMask& other) const {
  if (universe_ != other.universe_ || size_ != other.size_) {
    throw ValidationError(std::string("universe mismatch: ") + grec::to_string(universe_) + "[" + std::to_string(size_) +
                          "] vs " + grec::to_string(other.universe_) + "[" + std::to_string(other.size_) + "]");
  }
}

void SubsetMask::trim() noexcept {
  if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

bool SubsetMask::is_subset_of(const SubsetMask& other) const {
  require_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

bool SubsetMask::intersects(const SubsetMask& other) const {
  require_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & other.words_[w]) != 0) return true;
  return false;
}

SubsetMask& SubsetMask::operator|=(const SubsetMask& other) {
  require_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

SubsetMask& SubsetMask::operator&=(const SubsetMask& other) {
  require_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

SubsetMask& SubsetMask::operator-=(const SubsetMask& other) {
  require_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

SubsetMask SubsetMask::complement() const {
  SubsetMask m = *this;
  for (auto& w : m.words_) w = ~w;
  m.trim();
  return m;
}

std::vector<std::uint32_t> SubsetMask::elements() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for_each([&](std::uint32_t i) { out.push_back(i); });
  return out;
}

std::string SubsetMask::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first_elem = true;
  for_each([&](std::uint32_t i) {
    if (!first_elem) os << ',';
    os << i;
    first_elem = false;
  });
  os << '}';
  return os.str();
}

bool lex_less(const SubsetMask& a, const SubsetMask& b) {
  // The lowest element of the symmetric difference decides, unless the
  // set lacking it has nothing beyond it (then that set is a prefix).
  const auto wa = a.words();
  const auto wb = b.words();
  if (wa.size() != wb.size() || a.universe() != b.universe()) {
    throw ValidationError("lex_less: universe mismatch");
  }
  for (std::size_t w = 0; w < wa.size(); ++w) {
    const std::uint64_t diff = wa[w] ^ wb[w];
    if (diff == 0) continue;
    const auto bit = static_cast<std::size_t>(std::countr_zero(diff));
    const std::size_t i = w * 64 + bit;
    const bool in_a = (wa[w] >> bit) & 1U;
    const SubsetMask& other = in_a ? b : a;
    const bool other_continues = other.next(i) < other.universe_size();
    return in_a ? other_continues : !other_continues;
  }
  return false;
}

bool canonical_less(const SubsetMask& a, const SubsetMask& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

}  // namespace grec
