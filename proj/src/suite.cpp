#include "grec/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "grec/action.hpp"
#include "grec/cayley.hpp"
#include "grec/covering.hpp"
#include "grec/family.hpp"
#include "grec/recurrence.hpp"

namespace grec {

namespace {

const char* const kDeltaIdentities = "delta_identities";
const char* const kLeftTopological = "left_topological_filter";
const char* const kPacking = "packing_equals_alpha";
const char* const kCoverBounds = "cover_bounds";
const char* const kRamsey = "ramsey_floor";
const char* const kOracle = "solver_oracle_agreement";
const char* const kDeltaSystem = "delta_system_witness";

/// Records instances and keeps the first counterexample.
class CellBuilder {
 public:
  CellBuilder(std::string check, std::string family) {
    cell_.check = std::move(check);
    cell_.family = std::move(family);
  }

  void count(std::uint64_t n = 1) { cell_.instances += n; }

  /// Returns false so callers can stop at the first failure.
  bool fail(const std::string& what) {
    if (cell_.passed) {
      cell_.passed = false;
      cell_.counterexample = what;
    }
    return false;
  }

  bool passed() const { return cell_.passed; }
  SuiteCell take() { return std::move(cell_); }

 private:
  SuiteCell cell_;
};

SubsetMask as_group_set(const SubsetMask& points, const GroupTable& g) {
  return SubsetMask::of(Universe::group, g.order(), points.elements());
}

struct NamedFamily {
  std::string name;
  std::vector<SetFamily> members;  // one family, or the closure batch
};

/// all_nonempty, min_size 2, min_size 3, and the invariant upward closures of
/// every subset of size at most 3 through the identity (one batch).
std::vector<NamedFamily> suite_families(const ActionPtr& act) {
  const std::size_t n = act->points();
  std::vector<NamedFamily> out;
  out.push_back({"all_nonempty", {SetFamily::all_nonempty(n)}});
  out.push_back({"min_size 2", {SetFamily::min_size(n, 2)}});
  out.push_back({"min_size 3", {SetFamily::min_size(n, 3)}});
  NamedFamily closures{"closures of sets through e of size <= 3", {}};
  SubsetMask rest = act->full_set();
  rest.reset(0);
  for (std::size_t k = 0; k <= 2 && k < n; ++k) {
    for_each_k_subset(rest, k, [&](const SubsetMask& s) {
      SubsetMask gen = s;
      gen.set(0);
      closures.members.push_back(SetFamily::explicit_family(n, {gen}, true, true, act));
      return true;
    });
  }
  out.push_back(std::move(closures));
  return out;
}

std::string family_tag(const NamedFamily& nf, const SetFamily& f) {
  return nf.members.size() == 1 ? std::string() : " in " + f.describe();
}

// ---------------------------------------------------------------- checks

void check_delta_identities(const ActionPtr& act, const NamedFamily& nf, CellBuilder& cell) {
  const GroupTable& g = act->group();
  for (const auto& f : nf.members) {
    for (const auto& a : f.minimal_members()) {
      cell.count();
      const auto d = delta(*act, f, a);
      const auto ga = as_group_set(a, g);
      const std::string where = "A=" + a.to_string() + family_tag(nf, f);
      if (!d.set.test(0)) { cell.fail(where + ": identity missing from delta"); return; }
      if (inverse_set(d.set, g) != d.set) { cell.fail(where + ": delta " + d.set.to_string() + " not symmetric"); return; }
      if (!d.set.is_subset_of(product_set(ga, inverse_set(ga, g), g))) {
        cell.fail(where + ": delta " + d.set.to_string() + " not inside AA^-1");
        return;
      }
      const auto simple = delta_simple(*act, f, a);
      if (simple != d.set) {
        cell.fail(where + ": delta " + d.set.to_string() + " != delta_simple " + simple.to_string());
        return;
      }
    }
  }
}

void check_left_topological(const ActionPtr& act, const NamedFamily& nf, CellBuilder& cell) {
  for (const auto& f : nf.members) {
    const auto fb = recurrence_filter_base(*act, f);
    const auto lt = is_left_topological(fb, act->group());
    cell.count();
    if (!lt.left_topological) {
      cell.fail("kernel " + lt.kernel.to_string() + " not closed: " + std::to_string(lt.witness->first) + "*" +
                std::to_string(lt.witness->second) + family_tag(nf, f));
      return;
    }
    const auto p = prop1_witness_check(*act, f);
    cell.count(p.pairs_checked);
    if (!p.holds) {
      cell.fail("no certificate for A=" + p.failing->first.to_string() + ", g=" + std::to_string(p.failing->second) +
                family_tag(nf, f));
      return;
    }
  }
}

void check_packing(const ActionPtr& act, const NamedFamily& nf, CellBuilder& cell) {
  for (const auto& f : nf.members) {
    for (const auto& a : f.minimal_members()) {
      cell.count();
      const auto r = prop2_check(*act, f, a);
      if (!r.equal) {
        cell.fail("A=" + a.to_string() + family_tag(nf, f) + ": packing " + std::to_string(r.packing) +
                  " != alpha " + std::to_string(r.alpha_of_delta_graph));
        return;
      }
    }
  }
}

/// Symmetric connection sets through e: all of them up to `exhaustive_order`
/// or when there are at most `samples`; otherwise `samples` seeded random
/// unions of inverse classes.
std::vector<SubsetMask> connection_sets(const GroupTable& g, std::size_t exhaustive_order, std::size_t samples,
                                        std::uint64_t seed) {
  const auto classes = inverse_classes(g);
  if (g.order() <= exhaustive_order || (classes.size() < 63 && (std::size_t{1} << classes.size()) <= samples))
    return symmetric_connection_sets(g);
  std::mt19937_64 rng(seed);
  std::vector<SubsetMask> out;
  for (std::size_t i = 0; i < samples; ++i) {
    SubsetMask s = g.set_of({0});
    for (const auto& c : classes)
      if (rng() & 1U)
        for (auto x : c) s.set(x);
    out.push_back(std::move(s));
  }
  return out;
}

std::uint64_t seed_for(const GroupTable& g, std::uint64_t salt) {
  return 0x9E3779B97F4A7C15ULL ^ (static_cast<std::uint64_t>(g.order()) << 32) ^ salt;
}

void check_cover_bounds(const GroupPtr& g, const SuiteOptions& opt, CellBuilder& cell) {
  for (const auto& a : connection_sets(*g, opt.cover_exhaustive_order, opt.connection_samples, seed_for(*g, 1))) {
    cell.count();
    const auto exact = min_cover(*g, a);
    const auto greedy = point_greedy_cover(*g, a);
    const auto alpha = independence_number(cayley_graph(g, a)).alpha;
    const std::string where = "a=" + a.to_string() + ": ";
    if (product_set(exact.cover, a, *g) != g->full_set()) { cell.fail(where + "min_cover does not cover"); return; }
    if (product_set(greedy.cover, a, *g) != g->full_set()) { cell.fail(where + "greedy does not cover"); return; }
    if (!exact.optimal) { cell.fail(where + "min_cover not proved optimal"); return; }
    if (!(exact.size <= greedy.size && greedy.size <= alpha)) {
      cell.fail(where + std::to_string(exact.size) + " <= " + std::to_string(greedy.size) + " <= " +
                std::to_string(alpha) + " fails");
      return;
    }
  }
}

bool is_clique(const CayleyGraph& gr, const std::vector<std::uint32_t>& v, bool want_edges) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (gr.adjacent(v[i], v[j]) != want_edges) return false;
  return true;
}

void check_ramsey(const GroupPtr& g, const SuiteOptions& opt, CellBuilder& cell) {
  const std::size_t n = g->order();
  std::mt19937_64 rng(seed_for(*g, 2));
  std::vector<std::uint32_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint32_t>(i);

  for (const auto& a : symmetric_connection_sets(*g)) {
    const auto gr = cayley_graph(g, a);
    auto probe = [&](const SubsetMask& y) {
      cell.count();
      const auto r = ramsey_extract(gr, y);
      const auto z = r.z.elements();
      if (z.size() < 3 || !r.z.is_subset_of(y) || !is_clique(gr, z, r.side == RamseySide::in_set))
        return cell.fail("a=" + a.to_string() + ", Y=" + y.to_string() + ": z=" + r.z.to_string());
      return true;
    };
    if (n <= opt.ramsey_exhaustive_order) {
      for_each_k_subset(g->full_set(), 6, probe);
    } else {
      for (std::size_t s = 0; s < opt.ramsey_samples && cell.passed(); ++s) {
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<std::uint32_t> pick(pool.begin(), pool.begin() + 6);
        probe(SubsetMask::of(Universe::group, n, pick));
      }
    }
    if (!cell.passed()) return;
  }
}

SubsetMask random_subset(const GroupTable& g, std::mt19937_64& rng) {
  SubsetMask s = g.empty_set();
  while (s.empty())
    for (ElementId x = 0; x < g.order(); ++x)
      if (rng() & 1U) s.set(x);
  return s;
}

void check_oracle(const GroupPtr& g, const SuiteOptions& opt, CellBuilder& cell) {
  std::mt19937_64 rng(seed_for(*g, 3));
  for (const auto& a : connection_sets(*g, opt.cover_exhaustive_order, opt.connection_samples, seed_for(*g, 1))) {
    const auto gr = cayley_graph(g, a);
    const std::string where = "a=" + a.to_string();

    auto compare = [&](const AlphaResult& fast, const AlphaResult& slow, const std::string& what) {
      cell.count();
      if (fast.alpha != slow.alpha || fast.witness != slow.witness)
        return cell.fail(where + " " + what + ": solver " + fast.witness.to_string() + ", oracle " +
                         slow.witness.to_string());
      return true;
    };
    if (!compare(independence_number(gr), independence_number_oracle(gr), "alpha")) return;
    if (!compare(max_clique(gr), max_clique_oracle(gr), "omega")) return;
    for (std::size_t i = 0; i < opt.induced_samples; ++i) {
      const auto y = random_subset(*g, rng);
      if (!compare(independence_number(gr, y), independence_number_oracle(gr, y), "alpha on " + y.to_string()))
        return;
      if (!compare(max_clique(gr, y), max_clique_oracle(gr, y), "omega on " + y.to_string())) return;
    }
    cell.count();
    const auto cover = min_cover(*g, a);
    const auto ref = oracle::brute_force_min_cover(*g, a);
    if (cover.size != ref.size || cover.cover != ref.cover) {
      cell.fail(where + " min_cover: solver " + cover.cover.to_string() + ", oracle " + ref.cover.to_string());
      return;
    }
  }
  if (g->order() > opt.asymmetric_cover_max_order) return;
  // Every nonempty a, symmetric or not.
  const std::size_t n = g->order();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    SubsetMask a = g->empty_set();
    for (ElementId x = 0; x < n; ++x)
      if ((m >> x) & 1U) a.set(x);
    cell.count();
    const auto cover = min_cover(*g, a);
    const auto ref = oracle::brute_force_min_cover(*g, a);
    if (cover.size != ref.size || cover.cover != ref.cover) {
      cell.fail("a=" + a.to_string() + " min_cover: solver " + cover.cover.to_string() + ", oracle " +
                ref.cover.to_string());
      return;
    }
  }
}

std::string tuple_string(const std::optional<std::vector<ElementId>>& t) {
  if (!t) return "none";
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t->size(); ++i) os << (i ? "," : "") << (*t)[i];
  os << ")";
  return os.str();
}

void check_delta_system(const GroupPtr& g, const SuiteOptions& opt, CellBuilder& cell) {
  const std::size_t n = g->order();
  std::vector<SubsetMask> sets;
  if (n <= 6) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      SubsetMask a = g->empty_set();
      for (ElementId x = 0; x < n; ++x)
        if ((m >> x) & 1U) a.set(x);
      sets.push_back(std::move(a));
    }
  } else {
    std::mt19937_64 rng(seed_for(*g, 4));
    for (std::size_t i = 0; i < opt.delta_system_samples; ++i) {
      // Dense sets, so that systems of several sizes exist.
      SubsetMask a = g->empty_set();
      const auto density = 2 + rng() % 3;  // keep 2/4 .. 4/4 of the elements
      for (ElementId x = 0; x < n; ++x)
        if (rng() % 4 < density) a.set(x);
      sets.push_back(std::move(a));
    }
  }
  const std::size_t max_k = n <= 8 ? 4 : 3;
  for (const auto& a : sets) {
    for (std::size_t k = 1; k <= max_k; ++k) {
      cell.count();
      const auto fast = find_delta_system(*g, a, k);
      const auto slow = oracle::brute_force_delta_system(*g, a, k);
      const std::string where = "a=" + a.to_string() + ", k=" + std::to_string(k);
      if (fast.has_value() != slow.has_value() || (fast && *fast != *slow)) {
        cell.fail(where + ": solver " + tuple_string(fast) + ", oracle " + tuple_string(slow));
        return;
      }
      if (!fast) continue;
      const auto& t = *fast;
      bool ok = t.size() == k + 1;
      for (std::size_t i = 0; ok && i < t.size(); ++i)
        for (std::size_t j = i + 1; ok && j < t.size(); ++j)
          ok = t[i] != t[j] && a.test(g->mul(g->inv(t[i]), t[j]));
      if (!ok) {
        cell.fail(where + ": invalid witness " + tuple_string(fast));
        return;
      }
    }
  }
}

// ---------------------------------------------------------------- scheduling

struct Task {
  std::size_t entry;
  std::size_t slot;  // index into the entry's ordered cell slots
  std::string check;
  std::function<std::vector<SuiteCell>()> run;
};

template <class Fn>
std::vector<SuiteCell> per_family(const ActionPtr& act, const char* check, Fn fn) {
  std::vector<SuiteCell> cells;
  for (const auto& nf : suite_families(act)) {
    CellBuilder cell(check, nf.name);
    try {
      fn(act, nf, cell);
    } catch (const std::exception& e) {
      cell.fail(std::string("error: ") + e.what());
    }
    cells.push_back(cell.take());
  }
  return cells;
}

template <class Fn>
std::vector<SuiteCell> single(const GroupPtr& g, const SuiteOptions& opt, const char* check, Fn fn) {
  CellBuilder cell(check, "");
  try {
    fn(g, opt, cell);
  } catch (const std::exception& e) {
    cell.fail(std::string("error: ") + e.what());
  }
  return {cell.take()};
}

}  // namespace

const std::vector<std::string>& suite_checks() {
  static const std::vector<std::string> checks = {kDeltaIdentities, kLeftTopological, kPacking, kCoverBounds,
                                                  kRamsey,          kOracle,          kDeltaSystem};
  return checks;
}

bool SuiteReport::all_passed() const {
  for (const auto& e : entries)
    for (const auto& c : e.cells)
      if (!c.passed) return false;
  return true;
}

bool SuiteReport::any_invalid() const {
  return std::any_of(entries.begin(), entries.end(), [](const SuiteEntry& e) { return !e.valid; });
}

std::uint64_t SuiteReport::instances(const std::string& check) const {
  std::uint64_t total = 0;
  for (const auto& e : entries)
    for (const auto& c : e.cells)
      if (c.check == check) total += c.instances;
  return total;
}

ExitCode SuiteReport::exit_code() const {
  if (!all_passed()) return ExitCode::property_failure;
  if (any_invalid()) return ExitCode::validation;
  return ExitCode::ok;
}

SuiteReport run_suite(const std::vector<CatalogueEntry>& catalogue, const SuiteOptions& options) {
  for (const auto& c : options.checks)
    if (std::find(suite_checks().begin(), suite_checks().end(), c) == suite_checks().end())
      throw ValidationError("checks: unknown check '" + c + "'");
  SuiteReport report;
  std::vector<GroupPtr> groups;
  for (const auto& entry : catalogue) {
    SuiteEntry e;
    e.name = entry.name;
    e.spec = entry.spec;
    GroupPtr g;
    try {
      g = build_group(entry.spec);
      e.order = g->order();
    } catch (const std::exception& ex) {
      e.valid = false;
      e.error = ex.what();
    }
    if (e.valid && options.max_order && e.order > *options.max_order) continue;
    report.entries.push_back(std::move(e));
    groups.push_back(std::move(g));
  }

  std::vector<Task> tasks;
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    if (!report.entries[i].valid) continue;
    const GroupPtr g = groups[i];
    const std::size_t n = g->order();
    const auto act = std::make_shared<const ActionTable>(ActionTable::left_regular(g));
    const SuiteOptions& o = options;
    std::size_t slot = 0;
    auto add = [&](const char* check, std::function<std::vector<SuiteCell>()> fn) {
      if (!o.checks.empty() && std::find(o.checks.begin(), o.checks.end(), check) == o.checks.end()) return;
      tasks.push_back({i, slot++, check, std::move(fn)});
    };
    if (n <= o.return_set_max_order)
      add(kDeltaIdentities, [act] { return per_family(act, kDeltaIdentities, check_delta_identities); });
    if (n <= o.filter_max_order)
      add(kLeftTopological, [act] { return per_family(act, kLeftTopological, check_left_topological); });
    if (n <= o.return_set_max_order)
      add(kPacking, [act] { return per_family(act, kPacking, check_packing); });
    if (n <= o.cover_max_order)
      add(kCoverBounds, [g, &o] { return single(g, o, kCoverBounds, check_cover_bounds); });
    if (n >= o.ramsey_min_order && n <= o.ramsey_max_order)
      add(kRamsey, [g, &o] { return single(g, o, kRamsey, check_ramsey); });
    if (n <= o.oracle_max_order)
      add(kOracle, [g, &o] { return single(g, o, kOracle, check_oracle); });
    if (n <= o.delta_system_max_order)
      add(kDeltaSystem, [g, &o] { return single(g, o, kDeltaSystem, check_delta_system); });
  }

  // Largest groups first keeps the workers busy; results land in fixed slots.
  std::vector<std::size_t> order(tasks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return report.entries[tasks[x].entry].order > report.entries[tasks[y].entry].order;
  });

  std::vector<std::vector<SuiteCell>> results(tasks.size());
  std::vector<double> seconds(tasks.size(), 0.0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < order.size(); k = next++) {
      const std::size_t t = order[k];
      const auto start = std::chrono::steady_clock::now();
      results[t] = tasks[t].run();
      seconds[t] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, tasks.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (std::size_t t = 0; t < tasks.size(); ++t) {
    auto& cells = report.entries[tasks[t].entry].cells;
    for (auto& c : results[t]) cells.push_back(std::move(c));
    report.seconds[tasks[t].check] += seconds[t];
  }
  return report;
}

Json suite_report_json(const SuiteReport& report, const std::vector<CatalogueEntry>& catalogue,
                       const SuiteOptions& options) {
  Json opts;
  opts["checks"] = options.checks.empty() ? suite_checks() : options.checks;
  if (options.max_order) opts["max_order"] = *options.max_order;
  else opts["max_order"] = nullptr;

  Json groups = Json::array();
  std::size_t failed_cells = 0;
  std::size_t cells = 0;
  std::size_t invalid = 0;
  Json instances = Json::object();
  for (const auto& c : suite_checks()) instances[c] = 0;
  for (const auto& e : report.entries) {
    Json g;
    g["name"] = e.name;
    g["group"] = group_spec_json(e.spec);
    if (!e.valid) {
      ++invalid;
      g["status"] = "invalid";
      g["error"] = e.error;
      g["order"] = nullptr;
      g["cells"] = Json::array();
      groups.push_back(g);
      continue;
    }
    g["order"] = e.order;
    Json arr = Json::array();
    bool ok = true;
    for (const auto& c : e.cells) {
      ++cells;
      if (!c.passed) {
        ++failed_cells;
        ok = false;
      }
      instances[c.check] = instances[c.check].get<std::uint64_t>() + c.instances;
      Json j;
      j["check"] = c.check;
      j["family"] = c.family.empty() ? Json(nullptr) : Json(c.family);
      j["passed"] = c.passed;
      j["instances"] = c.instances;
      j["counterexample"] = c.counterexample ? Json(*c.counterexample) : Json(nullptr);
      arr.push_back(j);
    }
    g["status"] = ok ? "passed" : "failed";
    g["cells"] = arr;
    groups.push_back(g);
  }

  Json r;
  r["schema"] = kReportSchema;
  r["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  r["seed"] = 0;
  r["command"] = "suite";
  r["inputs"] = {{"catalogue", catalogue_json(catalogue)}, {"options", opts}};
  r["result"] = {{"groups", groups},
                 {"summary",
                  {{"groups", report.entries.size()},
                   {"invalid_groups", invalid},
                   {"cells", cells},
                   {"failed_cells", failed_cells},
                   {"instances", instances}}}};
  const auto code = report.exit_code();
  r["status"] = code == ExitCode::ok ? "ok" : code == ExitCode::property_failure ? "property_failure" : "invalid_entries";
  if (options.timing) {
    Json t = Json::object();
    for (const auto& [check, s] : report.seconds) t[check] = s;
    r["timing"] = {{"task_seconds", t}};
  }
  return r;
}

std::vector<CatalogueEntry> parse_catalogue(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("catalogue: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("catalogue: expected an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "schema" && key != "groups") throw ParseError(key + ": unknown field");
  }
  if (doc.value("schema", std::string()) != kCatalogueSchema)
    throw ParseError(std::string("schema: expected '") + kCatalogueSchema + "'");
  const auto it = doc.find("groups");
  if (it == doc.end() || !it->is_array()) throw ParseError("groups: expected an array");
  std::vector<CatalogueEntry> out;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const std::string path = "groups[" + std::to_string(i) + "]";
    const Json& e = (*it)[i];
    if (!e.is_object()) throw ParseError(path + ": expected an object");
    for (const auto& [key, value] : e.items()) {
      (void)value;
      if (key != "name" && key != "group") throw ParseError(path + "." + key + ": unknown field");
    }
    if (!e.contains("name") || !e["name"].is_string()) throw ParseError(path + ".name: expected a string");
    if (!e.contains("group")) throw ParseError(path + ".group: missing required field");
    out.push_back({e["name"].get<std::string>(), parse_group_spec(e["group"], path + ".group")});
  }
  return out;
}

Json catalogue_json(const std::vector<CatalogueEntry>& catalogue) {
  Json groups = Json::array();
  for (const auto& e : catalogue) groups.push_back({{"name", e.name}, {"group", group_spec_json(e.spec)}});
  return {{"schema", kCatalogueSchema}, {"groups", groups}};
}

}  // namespace grec
