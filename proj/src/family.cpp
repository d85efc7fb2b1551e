#include "grec/family.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>

#include "grec/error.hpp"

namespace grec {

namespace {

Rational reduced(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) throw ValidationError("malformed rational '" + whole + "'");
  return v;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return static_cast<std::uint64_t>(r + 0.5L);
}

void require_enumerable_count(std::uint64_t count, const std::string& what) {
  if (count > kMaxMinimalMembers) {
    throw SizeLimitError(what + ": " + std::to_string(count) + " sets exceed the enumeration limit " +
                         std::to_string(kMaxMinimalMembers));
  }
}

std::vector<SubsetMask> inclusion_minimal(std::vector<SubsetMask> sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<SubsetMask> out;
  for (const auto& s : sets) {
    // Canonical order puts every proper subset of s before s.
    const bool dominated = std::any_of(out.begin(), out.end(), [&](const SubsetMask& m) { return m.is_subset_of(s); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    return reduced(parse_int(std::string_view(text).substr(0, slash), text),
                   parse_int(std::string_view(text).substr(slash + 1), text));
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    const std::string frac = text.substr(dot + 1);
    if (frac.size() > 15) throw ValidationError("rational '" + text + "' has too many decimals");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t whole = dot == 0 ? 0 : parse_int(std::string_view(text).substr(0, dot), text);
    const std::int64_t part = frac.empty() ? 0 : parse_int(frac, text);
    return reduced(whole * den + part, den);
  }
  return reduced(parse_int(text, text), 1);
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::operator+(const Rational& o) const {
  const std::int64_t l = std::lcm(den, o.den);
  return reduced(num * (l / den) + o.num * (l / o.den), l);
}

MeasureTable::MeasureTable(std::vector<Rational> weights, ActionPtr action)
    : weights_(std::move(weights)), action_(std::move(action)) {
  if (!action_) throw ValidationError("measure: missing action");
  if (weights_.size() != action_->points()) {
    throw ValidationError("measure: " + std::to_string(weights_.size()) + " weights for " +
                          std::to_string(action_->points()) + " points");
  }
  Rational total;
  for (std::size_t x = 0; x < weights_.size(); ++x) {
    if (weights_[x].num < 0) throw ValidationError("measure: negative weight at point " + std::to_string(x));
    total = total + weights_[x];
  }
  if (!(total == Rational{1, 1})) {
    throw ValidationError("measure: weights sum to " + total.to_string() + ", expected 1");
  }
  for (ElementId g = 0; g < action_->group().order(); ++g) {
    for (PointId x = 0; x < action_->points(); ++x) {
      const PointId y = action_->act(g, x);
      if (!(weights_[x] == weights_[y])) {
        throw ValidationError("measure: not invariant, points " + std::to_string(x) + " and " + std::to_string(y) +
                              " share an orbit but have weights " + weights_[x].to_string() + " and " +
                              weights_[y].to_string());
      }
    }
  }
}

bool MeasureTable::positive_mass(const SubsetMask& a) const {
  bool positive = false;
  a.for_each([&](PointId x) { positive = positive || weights_[x].positive(); });
  return positive;
}

SetFamily SetFamily::explicit_family(std::size_t points, std::vector<SubsetMask> generators, bool upward,
                                     bool invariant, ActionPtr action, bool excludes_empty) {
  if (points == 0) throw ValidationError("family: point set must be nonempty");
  SetFamily f;
  f.kind_ = Kind::explicit_list;
  f.points_ = points;
  f.excludes_empty_ = excludes_empty;
  f.upward_ = upward;
  f.invariant_ = invariant;
  f.action_ = std::move(action);
  for (const auto& g : generators) f.require_points(g);
  if (invariant) {
    if (!f.action_) throw ValidationError("family: invariant flag requires an action");
    if (f.action_->points() != points) throw ValidationError("family: action point count differs from family");
  }
  f.generators_ = std::move(generators);

  std::vector<SubsetMask> members;
  for (const auto& g : f.generators_) {
    if (invariant) {
      for (ElementId h = 0; h < f.action_->group().order(); ++h) members.push_back(translate(h, g, *f.action_));
    } else {
      members.push_back(g);
    }
  }
  SubsetMask none(Universe::points, points);
  const bool had_empty = std::find(members.begin(), members.end(), none) != members.end();
  if (excludes_empty && had_empty) {
    std::erase(members, none);
    if (upward) {
      for (PointId x = 0; x < points; ++x) members.push_back(SubsetMask::of(Universe::points, points, {x}));
    }
  }
  if (upward) {
    f.basis_ = inclusion_minimal(std::move(members));
  } else {
    std::sort(members.begin(), members.end(), canonical_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    f.basis_ = std::move(members);
  }
  return f;
}

SetFamily SetFamily::min_size(std::size_t points, std::size_t k, bool excludes_empty) {
  if (points == 0) throw ValidationError("family: point set must be nonempty");
  SetFamily f;
  f.kind_ = Kind::min_size;
  f.points_ = points;
  f.k_ = k;
  f.excludes_empty_ = excludes_empty;
  return f;
}

SetFamily positive_family(const MeasureTable& mu) {
  SetFamily f;
  f.kind_ = SetFamily::Kind::positive_measure;
  f.points_ = mu.action()->points();
  f.excludes_empty_ = true;
  f.measure_ = mu;
  f.action_ = mu.action();
  return f;
}

void SetFamily::require_points(const SubsetMask& a) const {
  if (a.universe() != Universe::points || a.universe_size() != points_) {
    throw ValidationError("family over " + std::to_string(points_) + " points given a " + to_string(a.universe()) +
                          " set of size " + std::to_string(a.universe_size()));
  }
}

bool SetFamily::contains(const SubsetMask& a) const {
  require_points(a);
  if (excludes_empty_ && a.empty()) return false;
  switch (kind_) {
    case Kind::min_size:
      return a.count() >= k_;
    case Kind::positive_measure:
      return measure_->positive_mass(a);
    case Kind::explicit_list:
      if (upward_) {
        return std::any_of(basis_.begin(), basis_.end(), [&](const SubsetMask& b) { return b.is_subset_of(a); });
      }
      return std::binary_search(basis_.begin(), basis_.end(), a, canonical_less);
  }
  return false;
}

bool SetFamily::structurally_upward() const noexcept {
  return kind_ != Kind::explicit_list || upward_ || basis_.empty();
}

bool SetFamily::structurally_invariant_under(const ActionTable& action) const {
  if (action.points() != points_) return false;
  switch (kind_) {
    case Kind::min_size:
      return true;
    case Kind::positive_measure:
      return *measure_->action() == action;
    case Kind::explicit_list:
      return basis_.empty() || (invariant_ && *action_ == action);
  }
  return false;
}

std::vector<SubsetMask> SetFamily::minimal_members() const {
  switch (kind_) {
    case Kind::explicit_list:
      return upward_ ? basis_ : inclusion_minimal(basis_);
    case Kind::min_size: {
      const std::size_t k = effective_k();
      std::vector<SubsetMask> out;
      if (k > points_) return out;
      require_enumerable_count(binomial(points_, k), "minimal members of " + describe());
      for_each_k_subset(SubsetMask::full(Universe::points, points_), k, [&](const SubsetMask& s) {
        out.push_back(s);
        return true;
      });
      return out;
    }
    case Kind::positive_measure: {
      std::vector<SubsetMask> out;
      for (PointId x = 0; x < points_; ++x)
        if (measure_->weights()[x].positive()) out.push_back(SubsetMask::of(Universe::points, points_, {x}));
      return out;
    }
  }
  return {};
}

std::vector<SubsetMask> SetFamily::members_within(const SubsetMask& a) const {
  require_points(a);
  std::vector<SubsetMask> out;
  switch (kind_) {
    case Kind::explicit_list:
      for (const auto& b : basis_)
        if (b.is_subset_of(a)) out.push_back(b);
      break;
    case Kind::min_size: {
      const std::size_t k = effective_k();
      require_enumerable_count(binomial(a.count(), k), "members of " + describe() + " inside " + a.to_string());
      for_each_k_subset(a, k, [&](const SubsetMask& s) {
        out.push_back(s);
        return true;
      });
      break;
    }
    case Kind::positive_measure:
      a.for_each([&](PointId x) {
        if (measure_->weights()[x].positive()) out.push_back(SubsetMask::of(Universe::points, points_, {x}));
      });
      break;
  }
  return out;
}

std::string SetFamily::describe() const {
  switch (kind_) {
    case Kind::min_size:
      return k_ <= 1 && excludes_empty_ ? std::string("all_nonempty") : "min_size " + std::to_string(k_);
    case Kind::positive_measure:
      return "positive_measure";
    case Kind::explicit_list: {
      std::string s = "explicit[";
      for (std::size_t i = 0; i < generators_.size(); ++i) s += (i ? "," : "") + generators_[i].to_string();
      s += "]";
      if (upward_) s += " upward";
      if (invariant_) s += " invariant";
      return s;
    }
  }
  return "family";
}

FlagReport check_flags(const SetFamily& f, const ActionTable& action, const FlagCheckOptions& options) {
  if (action.points() != f.points()) throw ValidationError("check_flags: action point count differs from family");
  FlagReport report;
  const std::size_t m = f.points();
  const std::size_t n = action.group().order();

  auto examine = [&](const SubsetMask& a) {
    ++report.sets_checked;
    const bool in = f.contains(a);
    if (in && !report.upward_witness) {
      for (PointId x = 0; x < m; ++x) {
        if (a.test(x)) continue;
        SubsetMask c = a;
        c.set(x);
        if (!f.contains(c)) {
          report.upward_closed = false;
          report.upward_witness.emplace(a, c);
          break;
        }
      }
    }
    if (!report.invariance_witness) {
      for (ElementId g = 0; g < n; ++g) {
        SubsetMask ga = translate(g, a, action);
        if (f.contains(ga) != in) {
          report.invariant = false;
          report.invariance_witness = FlagReport::InvarianceWitness{a, g, std::move(ga)};
          break;
        }
      }
    }
    return !(report.upward_witness && report.invariance_witness);
  };

  if (m <= options.exhaustive_max_points) {
    const SubsetMask all = SubsetMask::full(Universe::points, m);
    bool go = true;
    for (std::size_t k = 0; k <= m && go; ++k) for_each_k_subset(all, k, [&](const SubsetMask& a) { return go = examine(a); });
  } else {
    report.sampled = true;
    std::mt19937_64 rng(0x666c616773ULL);
    for (std::size_t i = 0; i < options.samples; ++i) {
      SubsetMask a(Universe::points, m);
      const std::size_t density = rng() % (m + 1);
      for (PointId x = 0; x < m; ++x)
        if (rng() % m < density) a.set(x);
      if (!examine(a)) break;
    }
  }
  return report;
}

void for_each_member(const SetFamily& f, const std::function<bool(const SubsetMask&)>& fn) {
  const std::size_t m = f.points();
  if (m > kMaxEnumerablePoints) {
    throw SizeLimitError("family_members: " + std::to_string(m) + " points exceed the 2^" +
                         std::to_string(kMaxEnumerablePoints) +
                         " enumeration bound; use minimal_only or sampled modes");
  }
  const SubsetMask all = SubsetMask::full(Universe::points, m);
  bool go = true;
  for (std::size_t k = 0; k <= m && go; ++k) {
    for_each_k_subset(all, k, [&](const SubsetMask& a) {
      if (f.contains(a)) go = fn(a);
      return go;
    });
  }
}

std::vector<SubsetMask> family_members(const SetFamily& f, bool minimal_only) {
  if (minimal_only) return f.minimal_members();
  std::vector<SubsetMask> out;
  for_each_member(f, [&](const SubsetMask& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

}  // namespace grec
