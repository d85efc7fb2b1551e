// Command-line front end: run jobs, the catalogue suite, graph export and
// the bounded-alpha scanner.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "grec/error.hpp"
#include "grec/job.hpp"
#include "grec/suite.hpp"

namespace {

const char* kind_name(grec::ErrorKind kind) {
  switch (kind) {
    case grec::ErrorKind::parse:
      return "parse error";
    case grec::ErrorKind::validation:
      return "validation error";
    case grec::ErrorKind::size_limit:
      return "size limit";
    case grec::ErrorKind::domain:
      return "domain error";
  }
  return "error";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw grec::ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw grec::ValidationError(output + ": cannot write output file");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recurrence sets, Cayley-graph parameters and covering numbers on finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", grec::kToolVersion);

  std::string output;
  app.add_option("--output,-o", output, "Write the report here instead of standard output");

  std::string config_path;
  auto* run = app.add_subcommand("run", "Execute the command named in a job config");
  run->add_option("config", config_path, "Job config (JSON)")->required();

  std::string catalogue_path;
  std::size_t max_order = 0;
  std::size_t threads = std::max(1U, std::thread::hardware_concurrency());
  bool timing = false;
  bool extended = false;
  std::vector<std::string> checks;
  auto* suite = app.add_subcommand("suite", "Run every check over a group catalogue");
  suite->add_option("--catalogue", catalogue_path, "Catalogue file (default: built-in catalogue)");
  suite->add_option("--max-order", max_order, "Skip groups larger than this");
  suite->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  suite->add_flag("--timing", timing, "Include per-check task time in the report");
  suite->add_flag("--extended", extended, "Use every listed-kind group up to --max-order (default 72)");
  suite->add_option("--check", checks, "Run only these checks (repeatable)");

  auto* exp = app.add_subcommand("export-graph", "Print the Cayley graph of params.a as an edge list");
  exp->add_option("config", config_path, "Job config (JSON)")->required();

  std::size_t alpha_bound = 0;
  std::size_t budget = 0;
  auto* scan = app.add_subcommand("scan", "List connection sets whose Cayley graph has small alpha");
  scan->add_option("config", config_path, "Job config naming the group")->required();
  scan->add_option("--alpha-bound", alpha_bound, "Report sets with alpha below this")->required();
  scan->add_option("--budget", budget, "Connection sets to examine")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(grec::ExitCode::parse);
  }

  try {
    if (*run) {
      const auto outcome = grec::run_job(grec::parse_job(read_file(config_path)));
      emit(grec::canonical_dump(outcome.report), output);
      return static_cast<int>(outcome.exit_code);
    }
    if (*suite) {
      if (extended && !catalogue_path.empty()) throw grec::ParseError("--extended: conflicts with --catalogue");
      const auto catalogue = !catalogue_path.empty() ? grec::parse_catalogue(read_file(catalogue_path))
                             : extended ? grec::extended_catalogue(suite->count("--max-order") ? max_order : 72)
                                        : grec::default_catalogue();
      grec::SuiteOptions opts;
      opts.checks = checks;
      if (suite->count("--max-order")) opts.max_order = max_order;
      opts.threads = threads;
      opts.timing = timing;
      const auto report = grec::run_suite(catalogue, opts);
      emit(grec::canonical_dump(grec::suite_report_json(report, catalogue, opts)), output);
      if (!report.all_passed()) std::cerr << "grec: suite: one or more checks failed\n";
      return static_cast<int>(report.exit_code());
    }
    if (*exp) {
      emit(grec::export_graph(grec::parse_job(read_file(config_path))), output);
      return 0;
    }
    if (*scan) {
      auto cfg = grec::parse_job(read_file(config_path));
      cfg.command = "scan_bounded_alpha";
      cfg.params = {{"alpha_bound", alpha_bound}, {"budget", budget}};
      const auto outcome = grec::run_job(cfg);
      emit(grec::canonical_dump(outcome.report), output);
      return static_cast<int>(outcome.exit_code);
    }
  } catch (const grec::Error& e) {
    std::cerr << "grec: " << kind_name(e.kind()) << ": " << e.what() << "\n";
    return static_cast<int>(grec::exit_code_for(e.kind()));
  } catch (const std::exception& e) {
    std::cerr << "grec: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
