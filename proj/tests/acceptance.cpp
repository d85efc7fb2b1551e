// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "grec/suite.hpp"

using namespace grec;

namespace {

struct Line {
  int id;
  std::string title;
  bool passed;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool check_passed(const SuiteReport& r, const std::string& check, std::string& detail) {
  std::size_t cells = 0;
  for (const auto& e : r.entries) {
    if (!e.valid) {
      detail = e.name + " invalid: " + e.error;
      return false;
    }
    for (const auto& c : e.cells) {
      if (c.check != check) continue;
      ++cells;
      if (!c.passed) {
        detail = e.name + " / " + (c.family.empty() ? check : c.family) + ": " + c.counterexample.value_or("");
        return false;
      }
    }
  }
  if (cells == 0) {
    detail = "no cells ran";
    return false;
  }
  detail = std::to_string(cells) + " cells, " + std::to_string(r.instances(check)) + " instances";
  return true;
}

std::size_t groups_with(const SuiteReport& r, const std::string& check) {
  std::size_t n = 0;
  for (const auto& e : r.entries)
    for (const auto& c : e.cells)
      if (c.check == check) {
        ++n;
        break;
      }
  return n;
}

}  // namespace

int main() {
  std::vector<Line> lines;
  const auto catalogue = default_catalogue();

  // Criterion 7 first: three full runs under different schedulers.
  std::vector<std::string> dumps;
  SuiteReport report;
  double suite_seconds = 0;
  for (const std::size_t threads : {1, 2, 4}) {
    SuiteOptions opt;
    opt.threads = threads;
    const auto t0 = std::chrono::steady_clock::now();
    auto r = run_suite(catalogue, opt);
    suite_seconds = std::max(suite_seconds, seconds_since(t0));
    dumps.push_back(canonical_dump(suite_report_json(r, catalogue, opt)));
    if (threads == 1) report = std::move(r);
  }

  {
    SuiteOptions opt;
    opt.checks = {"delta_identities"};
    const auto extended = extended_catalogue(72);
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = run_suite(extended, opt);
    const double secs = seconds_since(t0);
    std::string detail;
    bool ok = check_passed(r, "delta_identities", detail);
    ok = ok && r.entries.size() == extended.size() && secs <= 300.0;
    lines.push_back({1, "return-set identities, " + std::to_string(extended.size()) + " groups up to order 72", ok,
                     detail + ", " + std::to_string(secs) + " s"});
  }
  {
    std::string detail;
    bool ok = check_passed(report, "left_topological_filter", detail);
    ok = ok && report.seconds.at("left_topological_filter") <= 300.0;
    lines.push_back({2, "filter kernel closed under products, return-set certificates", ok, detail});
  }
  {
    std::string detail;
    const bool ok = check_passed(report, "packing_equals_alpha", detail);
    lines.push_back({3, "translate packing equals alpha of the return-set graph", ok, detail});
  }
  {
    std::string detail;
    bool ok = check_passed(report, "cover_bounds", detail);
    ok = ok && report.seconds.at("cover_bounds") <= 600.0;
    lines.push_back({4, "min_cover <= point_greedy_cover <= alpha", ok, detail});
  }
  {
    std::string detail;
    std::size_t expected = 0;
    for (const auto& e : report.entries)
      if (e.order >= 6 && e.order <= 13) ++expected;
    const bool ok = check_passed(report, "ramsey_floor", detail) && groups_with(report, "ramsey_floor") == expected;
    lines.push_back({5, "every 6-subset holds a monochromatic triple", ok, detail});
  }
  {
    std::string detail;
    const bool ok = check_passed(report, "solver_oracle_agreement", detail) &&
                    report.instances("solver_oracle_agreement") >= 10000;
    lines.push_back({6, "solvers agree with brute force on >= 10^4 instances", ok, detail});
  }
  {
    const bool ok = dumps.size() == 3 && dumps[0] == dumps[1] && dumps[1] == dumps[2] && report.all_passed();
    lines.push_back({7, "three suite runs (1, 2, 4 threads) are byte-identical", ok,
                     std::to_string(dumps[0].size()) + " bytes, slowest run " + std::to_string(suite_seconds) + " s"});
  }
  {
    std::string detail;
    const bool ok = check_passed(report, "delta_system_witness", detail);
    lines.push_back({8, "ordered delta-system witnesses match brute force", ok, detail});
  }

  bool all = true;
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.id < b.id; });
  for (const auto& l : lines) {
    std::printf("%s criterion %d: %s (%s)\n", l.passed ? "PASS" : "FAIL", l.id, l.title.c_str(), l.detail.c_str());
    all = all && l.passed;
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
