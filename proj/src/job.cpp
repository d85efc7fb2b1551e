#include "grec/job.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "grec/action.hpp"
#include "grec/cayley.hpp"
#include "grec/covering.hpp"
#include "grec/family.hpp"
#include "grec/recurrence.hpp"

namespace grec {

ExitCode exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse:
      return ExitCode::parse;
    case ErrorKind::validation:
    case ErrorKind::domain:
      return ExitCode::validation;
    case ErrorKind::size_limit:
      return ExitCode::size_limit;
  }
  return ExitCode::validation;
}

namespace {

// ---------------------------------------------------------------- parsing

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message);
}

void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& path) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      fail(path.empty() ? key : path + "." + key, "unknown field");
  }
}

const Json& require_key(const Json& j, const char* key, const std::string& path) {
  const auto it = j.find(key);
  if (it == j.end()) fail(path.empty() ? key : path + "." + key, "missing required field");
  return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

std::size_t get_uint(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

bool get_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::uint32_t> get_elements(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of element indices");
  std::set<std::uint32_t> s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto v = get_uint(j[i], path + "[" + std::to_string(i) + "]");
    if (v > 0xFFFFFFFFULL) fail(path + "[" + std::to_string(i) + "]", "index too large");
    s.insert(static_cast<std::uint32_t>(v));
  }
  return {s.begin(), s.end()};
}

std::vector<std::vector<std::uint32_t>> get_table(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) fail(rp, "expected a row array");
    std::vector<std::uint32_t> row;
    for (std::size_t c = 0; c < j[i].size(); ++c) {
      const auto v = get_uint(j[i][c], rp + "[" + std::to_string(c) + "]");
      row.push_back(static_cast<std::uint32_t>(std::min<std::size_t>(v, 0xFFFFFFFFULL)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SetRef get_set_ref(const Json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) return get_elements(j, path);
  fail(path, "expected a set label or an array of element indices");
}

Json set_ref_json(const SetRef& r) {
  if (const auto* label = std::get_if<std::string>(&r)) return *label;
  return std::get<std::vector<std::uint32_t>>(r);
}

GroupSpec parse_group(const Json& j, const std::string& path) {
  require_object(j, path);
  const std::string kind = get_string(require_key(j, "kind", path), join(path, "kind"));
  if (kind == "cyclic" || kind == "dihedral" || kind == "symmetric") {
    check_keys(j, {"kind", "n"}, path);
    const std::size_t n = get_uint(require_key(j, "n", path), join(path, "n"));
    if (kind == "cyclic") return GroupSpec::cyclic(n);
    if (kind == "dihedral") return GroupSpec::dihedral(n);
    return GroupSpec::symmetric(n);
  }
  if (kind == "product") {
    check_keys(j, {"kind", "factors"}, path);
    const Json& factors = require_key(j, "factors", path);
    if (!factors.is_array() || factors.size() != 2) fail(join(path, "factors"), "expected exactly two groups");
    return GroupSpec::product(parse_group(factors[0], join(path, "factors[0]")),
                              parse_group(factors[1], join(path, "factors[1]")));
  }
  if (kind == "table") {
    check_keys(j, {"kind", "table"}, path);
    return GroupSpec::explicit_table(get_table(require_key(j, "table", path), join(path, "table")));
  }
  fail(join(path, "kind"), "unknown group kind '" + kind + "'");
}

Json group_json(const GroupSpec& g) {
  Json j;
  j["kind"] = to_string(g.kind);
  switch (g.kind) {
    case GroupSpec::Kind::cyclic:
    case GroupSpec::Kind::dihedral:
    case GroupSpec::Kind::symmetric:
      j["n"] = g.n;
      break;
    case GroupSpec::Kind::product:
      j["factors"] = Json::array({group_json(g.factors[0]), group_json(g.factors[1])});
      break;
    case GroupSpec::Kind::table:
      j["table"] = g.table;
      break;
  }
  return j;
}

ActionSpec parse_action(const Json& j) {
  require_object(j, "action");
  const std::string kind = get_string(require_key(j, "kind", "action"), "action.kind");
  if (kind == "left_regular") {
    check_keys(j, {"kind"}, "action");
    return {};
  }
  if (kind == "table") {
    check_keys(j, {"kind", "table"}, "action");
    return {false, get_table(require_key(j, "table", "action"), "action.table")};
  }
  fail("action.kind", "unknown action kind '" + kind + "'");
}

Json action_json(const ActionSpec& a) {
  if (a.left_regular) return {{"kind", "left_regular"}};
  return {{"kind", "table"}, {"table", a.table}};
}

const char* family_kind_name(FamilySpec::Kind k) {
  switch (k) {
    case FamilySpec::Kind::all_nonempty:
      return "all_nonempty";
    case FamilySpec::Kind::min_size:
      return "min_size";
    case FamilySpec::Kind::explicit_list:
      return "explicit";
    case FamilySpec::Kind::positive_measure:
      return "positive_measure";
  }
  return "all_nonempty";
}

FamilySpec parse_family(const Json& j) {
  require_object(j, "family");
  const std::string kind = get_string(require_key(j, "kind", "family"), "family.kind");
  FamilySpec f;
  if (const auto it = j.find("excludes_empty"); it != j.end()) f.excludes_empty = get_bool(*it, "family.excludes_empty");
  if (kind == "all_nonempty") {
    check_keys(j, {"kind"}, "family");
    f.kind = FamilySpec::Kind::all_nonempty;
  } else if (kind == "min_size") {
    check_keys(j, {"kind", "k", "excludes_empty"}, "family");
    f.kind = FamilySpec::Kind::min_size;
    f.k = get_uint(require_key(j, "k", "family"), "family.k");
  } else if (kind == "explicit") {
    check_keys(j, {"kind", "generators", "upward", "invariant", "excludes_empty"}, "family");
    f.kind = FamilySpec::Kind::explicit_list;
    const Json& gens = require_key(j, "generators", "family");
    if (!gens.is_array()) fail("family.generators", "expected an array of sets");
    for (std::size_t i = 0; i < gens.size(); ++i)
      f.generators.push_back(get_set_ref(gens[i], "family.generators[" + std::to_string(i) + "]"));
    if (const auto it = j.find("upward"); it != j.end()) f.upward = get_bool(*it, "family.upward");
    if (const auto it = j.find("invariant"); it != j.end()) f.invariant = get_bool(*it, "family.invariant");
  } else if (kind == "positive_measure") {
    check_keys(j, {"kind", "weights"}, "family");
    f.kind = FamilySpec::Kind::positive_measure;
    const Json& w = require_key(j, "weights", "family");
    if (!w.is_array()) fail("family.weights", "expected an array of rationals");
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::string path = "family.weights[" + std::to_string(i) + "]";
      std::string text;
      if (w[i].is_string()) {
        text = w[i].get<std::string>();
      } else if (w[i].is_number_integer()) {
        text = std::to_string(w[i].get<std::int64_t>());
      } else {
        fail(path, "expected a rational such as \"1/6\"");
      }
      try {
        f.weights.push_back(Rational::parse(text).to_string());
      } catch (const Error& e) {
        fail(path, e.what());
      }
    }
  } else {
    fail("family.kind", "unknown family kind '" + kind + "'");
  }
  return f;
}

Json family_json(const FamilySpec& f) {
  Json j;
  j["kind"] = family_kind_name(f.kind);
  switch (f.kind) {
    case FamilySpec::Kind::all_nonempty:
      return j;
    case FamilySpec::Kind::min_size:
      j["k"] = f.k;
      break;
    case FamilySpec::Kind::explicit_list: {
      Json gens = Json::array();
      for (const auto& g : f.generators) gens.push_back(set_ref_json(g));
      j["generators"] = gens;
      j["upward"] = f.upward;
      j["invariant"] = f.invariant;
      break;
    }
    case FamilySpec::Kind::positive_measure:
      j["weights"] = f.weights;
      return j;
  }
  j["excludes_empty"] = f.excludes_empty;
  return j;
}

// ---------------------------------------------------------------- commands

enum class ParamType { group_set, point_set, count, flag, word };

struct ParamSpec {
  const char* name;
  ParamType type;
  bool required;
  std::vector<std::string> words;
};

struct CommandSpec {
  std::vector<ParamSpec> params;
};

const std::map<std::string, CommandSpec>& command_table() {
  using P = ParamType;
  static const std::map<std::string, CommandSpec> table = {
      {"make_group", {}},
      {"make_action", {}},
      {"left_regular_action", {}},
      {"set_ops",
       {{{"op", P::word, true, {"complement", "difference", "intersection", "inverse", "product", "union"}},
         {"a", P::group_set, true, {}},
         {"b", P::group_set, false, {}}}}},
      {"translate", {{{"g", P::count, true, {}}, {"a", P::point_set, true, {}}}}},
      {"family_contains", {{{"a", P::point_set, true, {}}}}},
      {"check_flags", {}},
      {"positive_family", {}},
      {"family_members", {{{"minimal_only", P::flag, false, {}}}}},
      {"delta", {{{"a", P::point_set, true, {}}, {"permissive", P::flag, false, {}}}}},
      {"delta_simple", {{{"a", P::point_set, true, {}}}}},
      {"is_recurrent", {{{"r", P::group_set, true, {}}}}},
      {"recurrence_filter_base", {}},
      {"is_left_topological", {{{"kernel", P::group_set, false, {}}}}},
      {"prop1_witness_check", {{{"scope", P::word, false, {"all", "automatic", "minimal"}}}}},
      {"cayley_graph", {{{"a", P::group_set, true, {}}}}},
      {"independence_number", {{{"a", P::group_set, true, {}}, {"induced_on", P::group_set, false, {}}}}},
      {"max_clique", {{{"a", P::group_set, true, {}}, {"induced_on", P::group_set, false, {}}}}},
      {"delta_parameter", {{{"a", P::group_set, true, {}}}}},
      {"find_delta_system", {{{"a", P::group_set, true, {}}, {"k", P::count, true, {}}}}},
      {"ramsey_extract", {{{"a", P::group_set, true, {}}, {"y", P::group_set, true, {}}}}},
      {"scan_bounded_alpha", {{{"alpha_bound", P::count, true, {}}, {"budget", P::count, true, {}}}}},
      {"min_cover", {{{"a", P::group_set, true, {}}}}},
      {"point_greedy_cover", {{{"a", P::group_set, true, {}}}}},
      {"max_disjoint_translates", {{{"a", P::point_set, true, {}}}}},
      {"prop2_check", {{{"a", P::point_set, true, {}}}}},
  };
  return table;
}

Json parse_params(const Json& j, const CommandSpec& spec, const std::string& command) {
  require_object(j, "params");
  Json out = Json::object();
  for (const auto& [key, value] : j.items()) {
    const auto it = std::find_if(spec.params.begin(), spec.params.end(),
                                 [&](const ParamSpec& p) { return key == p.name; });
    if (it == spec.params.end()) fail("params." + key, "not a parameter of " + command);
    const std::string path = "params." + key;
    switch (it->type) {
      case ParamType::group_set:
      case ParamType::point_set:
        out[key] = set_ref_json(get_set_ref(value, path));
        break;
      case ParamType::count:
        out[key] = get_uint(value, path);
        break;
      case ParamType::flag:
        out[key] = get_bool(value, path);
        break;
      case ParamType::word: {
        const std::string w = get_string(value, path);
        if (std::find(it->words.begin(), it->words.end(), w) == it->words.end()) {
          std::string allowed;
          for (const auto& x : it->words) allowed += (allowed.empty() ? "" : ", ") + x;
          fail(path, "expected one of " + allowed);
        }
        out[key] = w;
        break;
      }
    }
  }
  for (const auto& p : spec.params)
    if (p.required && !out.contains(p.name)) fail(std::string("params.") + p.name, "missing required parameter");
  return out;
}

void check_label(const SetRef& ref, const std::set<std::string>& labels, const std::string& path) {
  if (const auto* label = std::get_if<std::string>(&ref))
    if (!labels.count(*label)) fail(path, "undefined set label '" + *label + "'");
}

}  // namespace

GroupSpec parse_group_spec(const Json& doc, const std::string& path) { return parse_group(doc, path); }
Json group_spec_json(const GroupSpec& spec) { return group_json(spec); }

std::vector<std::string> job_commands() {
  std::vector<std::string> names;
  for (const auto& [name, spec] : command_table()) {
    (void)spec;
    names.push_back(name);
  }
  return names;
}

JobConfig parse_job(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("document: ") + e.what());
  }
  return parse_job(doc);
}

JobConfig parse_job(const Json& doc) {
  require_object(doc, "document");
  check_keys(doc, {"schema", "group", "action", "family", "sets", "command", "params", "output"}, "");
  const std::string schema = get_string(require_key(doc, "schema", ""), "schema");
  if (schema != kJobSchema) fail("schema", "expected '" + std::string(kJobSchema) + "', got '" + schema + "'");

  JobConfig cfg;
  cfg.group = parse_group(require_key(doc, "group", ""), "group");
  if (const auto it = doc.find("action"); it != doc.end()) cfg.action = parse_action(*it);
  if (const auto it = doc.find("family"); it != doc.end()) cfg.family = parse_family(*it);

  std::set<std::string> labels;
  if (const auto it = doc.find("sets"); it != doc.end()) {
    if (!it->is_array()) fail("sets", "expected an array of {label, elements}");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "sets[" + std::to_string(i) + "]";
      const Json& s = (*it)[i];
      require_object(s, path);
      check_keys(s, {"label", "elements"}, path);
      NamedSet ns;
      ns.label = get_string(require_key(s, "label", path), path + ".label");
      if (ns.label.empty()) fail(path + ".label", "empty label");
      if (!labels.insert(ns.label).second) fail(path + ".label", "duplicate label '" + ns.label + "'");
      ns.elements = get_elements(require_key(s, "elements", path), path + ".elements");
      cfg.sets.push_back(std::move(ns));
    }
  }

  cfg.command = get_string(require_key(doc, "command", ""), "command");
  const auto cmd = command_table().find(cfg.command);
  if (cmd == command_table().end()) fail("command", "unknown command '" + cfg.command + "'");
  cfg.params = parse_params(doc.value("params", Json::object()), cmd->second, cfg.command);

  if (const auto it = doc.find("output"); it != doc.end()) {
    require_object(*it, "output");
    check_keys(*it, {"timing"}, "output");
    if (const auto t = it->find("timing"); t != it->end()) cfg.timing = get_bool(*t, "output.timing");
  }

  for (std::size_t i = 0; i < cfg.family.generators.size(); ++i)
    check_label(cfg.family.generators[i], labels, "family.generators[" + std::to_string(i) + "]");
  for (const auto& [key, value] : cfg.params.items())
    if (value.is_string() || value.is_array()) {
      const auto& spec = cmd->second.params;
      const auto p = std::find_if(spec.begin(), spec.end(), [&](const ParamSpec& s) { return key == s.name; });
      if (p->type == ParamType::group_set || p->type == ParamType::point_set)
        check_label(get_set_ref(value, "params." + key), labels, "params." + key);
    }
  return cfg;
}

Json normalized_inputs(const JobConfig& c) {
  Json j;
  j["schema"] = kJobSchema;
  j["group"] = group_json(c.group);
  j["action"] = action_json(c.action);
  j["family"] = family_json(c.family);
  Json sets = Json::array();
  for (const auto& s : c.sets) sets.push_back({{"label", s.label}, {"elements", s.elements}});
  j["sets"] = sets;
  j["command"] = c.command;
  j["params"] = c.params;
  j["output"] = {{"timing", c.timing}};
  return j;
}

std::string canonical_dump(const Json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------- execution

namespace {

class Context {
 public:
  explicit Context(const JobConfig& cfg) : cfg_(cfg) {
    group_ = build_group(cfg.group);
    if (cfg.action.left_regular) {
      action_ = std::make_shared<const ActionTable>(ActionTable::left_regular(group_));
    } else {
      action_ = std::make_shared<const ActionTable>(ActionTable::from_table(group_, cfg.action.table));
    }
  }

  const GroupTable& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const ActionTable& action() const { return *action_; }

  const SetFamily& family() {
    if (!family_) family_ = build_family();
    return *family_;
  }

  bool has(const char* key) const { return cfg_.params.contains(key); }
  std::size_t count(const char* key) const { return cfg_.params.at(key).get<std::size_t>(); }
  bool flag(const char* key) const { return cfg_.params.value(key, false); }
  std::string word(const char* key, const std::string& fallback) const { return cfg_.params.value(key, fallback); }

  SubsetMask group_set(const char* key) const {
    return resolve(get_set_ref(cfg_.params.at(key), key), Universe::group, group_->order(), std::string("params.") + key);
  }
  SubsetMask point_set(const char* key) const {
    return resolve(get_set_ref(cfg_.params.at(key), key), Universe::points, action_->points(),
                   std::string("params.") + key);
  }

 private:
  SubsetMask resolve(const SetRef& ref, Universe u, std::size_t size, const std::string& path) const {
    const std::vector<std::uint32_t>* elems = nullptr;
    std::string where = path;
    if (const auto* label = std::get_if<std::string>(&ref)) {
      for (const auto& s : cfg_.sets)
        if (s.label == *label) elems = &s.elements;
      where += " (set '" + *label + "')";
    } else {
      elems = &std::get<std::vector<std::uint32_t>>(ref);
    }
    for (auto x : *elems)
      if (x >= size)
        throw ValidationError(where + ": element " + std::to_string(x) + " out of range for " +
                              (u == Universe::group ? "group of order " : "space of ") + std::to_string(size) +
                              (u == Universe::group ? "" : " points"));
    return SubsetMask::of(u, size, *elems);
  }

  SetFamily build_family() const {
    const auto& f = cfg_.family;
    const std::size_t m = action_->points();
    switch (f.kind) {
      case FamilySpec::Kind::all_nonempty:
        return SetFamily::all_nonempty(m);
      case FamilySpec::Kind::min_size:
        return SetFamily::min_size(m, f.k, f.excludes_empty);
      case FamilySpec::Kind::explicit_list: {
        std::vector<SubsetMask> gens;
        for (std::size_t i = 0; i < f.generators.size(); ++i)
          gens.push_back(resolve(f.generators[i], Universe::points, m, "family.generators[" + std::to_string(i) + "]"));
        return SetFamily::explicit_family(m, std::move(gens), f.upward, f.invariant, action_, f.excludes_empty);
      }
      case FamilySpec::Kind::positive_measure: {
        std::vector<Rational> w;
        for (const auto& s : f.weights) w.push_back(Rational::parse(s));
        return positive_family(MeasureTable(std::move(w), action_));
      }
    }
    throw ValidationError("family.kind: unsupported");
  }

  const JobConfig& cfg_;
  GroupPtr group_;
  ActionPtr action_;
  std::optional<SetFamily> family_;
};

/// Writes sets and elements into result objects, with cycle-notation
/// companions (`<key>_cycles`, `<key>_cycle`) for labeled groups.
class Writer {
 public:
  explicit Writer(const GroupTable& g) : g_(g) {}

  void set(Json& obj, const std::string& key, const SubsetMask& m) const {
    obj[key] = m.elements();
    if (labeled(m)) obj[key + "_cycles"] = cycles(m);
  }

  void sets(Json& obj, const std::string& key, const std::vector<SubsetMask>& ms) const {
    Json arr = Json::array();
    Json cyc = Json::array();
    bool any_labeled = false;
    for (const auto& m : ms) {
      arr.push_back(m.elements());
      if (labeled(m)) {
        cyc.push_back(cycles(m));
        any_labeled = true;
      }
    }
    obj[key] = arr;
    if (any_labeled) obj[key + "_cycles"] = cyc;
  }

  void element(Json& obj, const std::string& key, ElementId g) const {
    obj[key] = g;
    if (g_.has_labels()) obj[key + "_cycle"] = g_.labels()[g];
  }

  void elements(Json& obj, const std::string& key, const std::vector<ElementId>& v) const {
    obj[key] = v;
    if (g_.has_labels()) {
      Json cyc = Json::array();
      for (auto x : v) cyc.push_back(g_.labels()[x]);
      obj[key + "_cycles"] = cyc;
    }
  }

 private:
  bool labeled(const SubsetMask& m) const { return m.universe() == Universe::group && g_.has_labels(); }
  Json cycles(const SubsetMask& m) const {
    Json c = Json::array();
    m.for_each([&](std::uint32_t x) { c.push_back(g_.labels()[x]); });
    return c;
  }

  const GroupTable& g_;
};

const char* method_name(CoverMethod m) { return m == CoverMethod::exact ? "exact" : "point_greedy"; }

Json cover_json(const CoverResult& r, const Writer& w) {
  Json j;
  w.set(j, "cover", r.cover);
  j["size"] = r.size;
  j["method"] = method_name(r.method);
  j["optimal"] = r.optimal;
  return j;
}

Json alpha_json(const AlphaResult& r, const char* size_key, const Writer& w) {
  Json j;
  j[size_key] = r.alpha;
  w.set(j, "witness", r.witness);
  j["node_count"] = r.node_count;
  return j;
}

struct Outcome {
  Json result;
  bool property_failure = false;
};

using Handler = std::function<Outcome(Context&, const Writer&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"make_group",
       [](Context& c, const Writer&) {
         Json j;
         j["order"] = c.group().order();
         j["abelian"] = c.group().is_abelian();
         j["name"] = c.group().name();
         if (c.group().has_labels()) j["labels"] = c.group().labels();
         return Outcome{j};
       }},
      {"make_action",
       [](Context& c, const Writer&) {
         return Outcome{{{"points", c.action().points()}, {"left_regular", c.action().is_left_regular()}}};
       }},
      {"left_regular_action",
       [](Context& c, const Writer&) {
         if (!c.action().is_left_regular()) throw ValidationError("action: left_regular_action needs a left-regular action");
         return Outcome{{{"points", c.action().points()}, {"left_regular", true}}};
       }},
      {"set_ops",
       [](Context& c, const Writer& w) {
         const std::string op = c.word("op", "");
         const auto a = c.group_set("a");
         const bool binary = op == "union" || op == "intersection" || op == "difference" || op == "product";
         if (binary && !c.has("b")) throw ParseError("params.b: required for op " + op);
         SubsetMask r = a;
         if (op == "union") r = a | c.group_set("b");
         if (op == "intersection") r = a & c.group_set("b");
         if (op == "difference") r = a - c.group_set("b");
         if (op == "product") r = product_set(a, c.group_set("b"), c.group());
         if (op == "complement") r = a.complement();
         if (op == "inverse") r = inverse_set(a, c.group());
         Json j;
         w.set(j, "set", r);
         return Outcome{j};
       }},
      {"translate",
       [](Context& c, const Writer& w) {
         const auto g = c.count("g");
         if (g >= c.group().order()) throw ValidationError("params.g: element " + std::to_string(g) + " out of range");
         Json j;
         w.set(j, "set", translate(static_cast<ElementId>(g), c.point_set("a"), c.action()));
         return Outcome{j};
       }},
      {"family_contains",
       [](Context& c, const Writer&) { return Outcome{{{"contains", c.family().contains(c.point_set("a"))}}}; }},
      {"check_flags",
       [](Context& c, const Writer& w) {
         const auto& f = c.family();
         const auto r = check_flags(f, c.action());
         Json j;
         j["upward_closed"] = r.upward_closed;
         j["invariant"] = r.invariant;
         j["sampled"] = r.sampled;
         j["sets_checked"] = r.sets_checked;
         j["upward_witness"] = nullptr;
         j["invariance_witness"] = nullptr;
         if (r.upward_witness) {
           Json u;
           w.set(u, "member", r.upward_witness->first);
           w.set(u, "superset", r.upward_witness->second);
           j["upward_witness"] = u;
         }
         if (r.invariance_witness) {
           Json v;
           w.set(v, "set", r.invariance_witness->set);
           w.element(v, "g", r.invariance_witness->g);
           w.set(v, "translated", r.invariance_witness->translated);
           j["invariance_witness"] = v;
         }
         const bool declared_up = f.structurally_upward();
         const bool declared_inv = f.structurally_invariant_under(c.action());
         j["declared"] = {{"upward", declared_up}, {"invariant", declared_inv}};
         const bool broken = (declared_up && !r.upward_closed) || (declared_inv && !r.invariant);
         return Outcome{j, broken};
       }},
      {"positive_family",
       [](Context& c, const Writer& w) {
         if (c.family().kind() != SetFamily::Kind::positive_measure)
           throw ValidationError("family.kind: positive_family needs a positive_measure family");
         Json j;
         j["description"] = c.family().describe();
         w.sets(j, "minimal_members", c.family().minimal_members());
         return Outcome{j};
       }},
      {"family_members",
       [](Context& c, const Writer& w) {
         const auto members = family_members(c.family(), c.flag("minimal_only"));
         Json j;
         j["count"] = members.size();
         w.sets(j, "members", members);
         return Outcome{j};
       }},
      {"delta",
       [](Context& c, const Writer& w) {
         const auto d = delta(c.action(), c.family(), c.point_set("a"), DeltaOptions{c.flag("permissive")});
         Json j;
         w.set(j, "set", d.set);
         Json wit = Json::array();
         for (const auto& [g, b] : d.witnesses) {
           Json e;
           w.element(e, "g", g);
           w.set(e, "b", b);
           wit.push_back(e);
         }
         j["witnesses"] = wit;
         return Outcome{j};
       }},
      {"delta_simple",
       [](Context& c, const Writer& w) {
         Json j;
         w.set(j, "set", delta_simple(c.action(), c.family(), c.point_set("a")));
         return Outcome{j};
       }},
      {"is_recurrent",
       [](Context& c, const Writer& w) {
         const auto r = is_recurrent(c.action(), c.family(), c.group_set("r"));
         Json j;
         j["recurrent"] = r.recurrent;
         j["sets_checked"] = r.sets_checked;
         j["failing"] = nullptr;
         if (r.failing) {
           Json f;
           w.set(f, "a", r.failing->first);
           w.set(f, "delta", r.failing->second);
           j["failing"] = f;
         }
         return Outcome{j};
       }},
      {"recurrence_filter_base",
       [](Context& c, const Writer& w) {
         const auto fb = recurrence_filter_base(c.action(), c.family());
         Json j;
         w.sets(j, "sources", fb.sources);
         w.sets(j, "generators", fb.generators);
         w.set(j, "kernel", fb.kernel);
         return Outcome{j};
       }},
      {"is_left_topological",
       [](Context& c, const Writer& w) {
         const bool from_family = !c.has("kernel");
         const auto r = from_family ? is_left_topological(recurrence_filter_base(c.action(), c.family()), c.group())
                                    : is_left_topological(c.group_set("kernel"), c.group());
         Json j;
         j["left_topological"] = r.left_topological;
         w.set(j, "kernel", r.kernel);
         j["witness"] = nullptr;
         if (r.witness) {
           Json x;
           w.element(x, "x", r.witness->first);
           w.element(x, "y", r.witness->second);
           j["witness"] = x;
         }
         return Outcome{j, from_family && !r.left_topological};
       }},
      {"prop1_witness_check",
       [](Context& c, const Writer& w) {
         const std::string s = c.word("scope", "automatic");
         const MemberScope scope = s == "all" ? MemberScope::all : s == "minimal" ? MemberScope::minimal
                                                                                  : MemberScope::automatic;
         const auto r = prop1_witness_check(c.action(), c.family(), scope);
         Json j;
         j["holds"] = r.holds;
         j["all_members"] = r.all_members;
         j["pairs_checked"] = r.pairs_checked;
         j["failing"] = nullptr;
         if (r.failing) {
           Json f;
           w.set(f, "a", r.failing->first);
           w.element(f, "g", r.failing->second);
           j["failing"] = f;
         }
         return Outcome{j, !r.holds};
       }},
      {"cayley_graph",
       [](Context& c, const Writer& w) {
         const auto gr = cayley_graph(c.group_ptr(), c.group_set("a"));
         Json j;
         w.set(j, "connection", gr.connection());
         j["edge_count"] = gr.graph().edge_count();
         Json edges = Json::array();
         const auto n = static_cast<std::uint32_t>(gr.graph().size());
         for (std::uint32_t u = 0; u < n; ++u)
           for (std::uint32_t v = u + 1; v < n; ++v)
             if (gr.adjacent(u, v)) edges.push_back({u, v});
         j["edges"] = edges;
         return Outcome{j};
       }},
      {"independence_number",
       [](Context& c, const Writer& w) {
         const auto gr = cayley_graph(c.group_ptr(), c.group_set("a"));
         std::optional<SubsetMask> on;
         if (c.has("induced_on")) on = c.group_set("induced_on");
         return Outcome{alpha_json(independence_number(gr, on), "alpha", w)};
       }},
      {"max_clique",
       [](Context& c, const Writer& w) {
         const auto gr = cayley_graph(c.group_ptr(), c.group_set("a"));
         std::optional<SubsetMask> on;
         if (c.has("induced_on")) on = c.group_set("induced_on");
         return Outcome{alpha_json(max_clique(gr, on), "omega", w)};
       }},
      {"delta_parameter",
       [](Context& c, const Writer&) {
         return Outcome{{{"delta_parameter", delta_parameter(c.group_ptr(), c.group_set("a"))}}};
       }},
      {"find_delta_system",
       [](Context& c, const Writer& w) {
         const auto t = find_delta_system(c.group(), c.group_set("a"), c.count("k"));
         Json j;
         j["found"] = t.has_value();
         j["tuple"] = nullptr;
         if (t) w.elements(j, "tuple", *t);
         return Outcome{j};
       }},
      {"ramsey_extract",
       [](Context& c, const Writer& w) {
         const auto gr = cayley_graph(c.group_ptr(), c.group_set("a"));
         const auto r = ramsey_extract(gr, c.group_set("y"));
         Json j;
         j["side"] = r.side == RamseySide::in_set ? "in_set" : "off_set";
         w.set(j, "z", r.z);
         return Outcome{j};
       }},
      {"scan_bounded_alpha",
       [](Context& c, const Writer& w) {
         const auto r = scan_bounded_alpha(c.group_ptr(), c.count("alpha_bound"), c.count("budget"));
         Json hits = Json::array();
         for (const auto& h : r.hits) {
           Json e;
           w.set(e, "connection", h.connection);
           e["alpha"] = h.alpha;
           hits.push_back(e);
         }
         return Outcome{{{"hits", hits}, {"examined", r.examined}, {"exhausted", r.exhausted}}};
       }},
      {"min_cover",
       [](Context& c, const Writer& w) { return Outcome{cover_json(min_cover(c.group(), c.group_set("a")), w)}; }},
      {"point_greedy_cover",
       [](Context& c, const Writer& w) {
         return Outcome{cover_json(point_greedy_cover(c.group(), c.group_set("a")), w)};
       }},
      {"max_disjoint_translates",
       [](Context& c, const Writer& w) {
         const auto r = max_disjoint_translates(c.action(), c.family(), c.point_set("a"));
         Json j;
         j["family_size"] = r.family_size;
         j["distinct_translates"] = r.distinct_translates;
         w.elements(j, "representatives", r.representatives);
         j["conflict_graph_alpha"] = r.conflict_graph_alpha;
         return Outcome{j};
       }},
      {"prop2_check",
       [](Context& c, const Writer& w) {
         const auto r = prop2_check(c.action(), c.family(), c.point_set("a"));
         Json j;
         j["equal"] = r.equal;
         j["packing"] = r.packing;
         j["alpha_of_delta_graph"] = r.alpha_of_delta_graph;
         w.set(j, "delta", r.delta);
         return Outcome{j, !r.equal};
       }},
  };
  return table;
}

}  // namespace

JobOutcome run_job(const JobConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Context ctx(config);
  const Writer writer(ctx.group());
  const auto handler = handlers().find(config.command);
  if (handler == handlers().end()) throw ParseError("command: unknown command '" + config.command + "'");
  const Outcome out = handler->second(ctx, writer);

  JobOutcome outcome;
  Json& r = outcome.report;
  r["schema"] = kReportSchema;
  r["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  r["seed"] = 0;
  r["command"] = config.command;
  r["inputs"] = normalized_inputs(config);
  r["result"] = out.result;
  r["status"] = out.property_failure ? "property_failure" : "ok";
  if (config.timing) {
    const auto us =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    r["timing"] = {{"elapsed_us", us}};
  }
  outcome.exit_code = out.property_failure ? ExitCode::property_failure : ExitCode::ok;
  return outcome;
}

std::string export_graph(const JobConfig& config) {
  if (!config.params.contains("a")) throw ParseError("params.a: required to select a connection set");
  Context ctx(config);
  return cayley_graph(ctx.group_ptr(), ctx.group_set("a")).graph().edge_list();
}

}  // namespace grec
