#include "cli.hpp"

#include <cubedist/identities.hpp>
#include <cubedist/io.hpp>
#include <cubedist/negative_type.hpp>
#include <cubedist/search.hpp>
#include <cubedist/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

namespace cubedist::cli {

namespace {

struct RunConfig {
  std::string input = "-";
  std::string output;

  ScanOptions scan;

  unsigned n = 0;
  std::size_t m = 0;
  std::string mode = "exhaustive";
  std::uint64_t trials = 10'000;
  std::uint64_t seed = 0;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t budget = 100'000'000;

  VerifyOptions verify;
  bool verify_json = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Parse>
auto read_input(const std::string& path, Parse parse) {
  if (path == "-") return parse(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse(in);
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output);
  if (!file) throw InputError("cannot write '" + config.output + "'");
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int run_report(const RunConfig& config, std::ostream& out) {
  const PointSet s = read_input(config.input, [](std::istream& in) { return parse_point_set(in); });
  emit(config, out, dump(to_json(full_report(s))));
  return kOk;
}

int run_tree(const RunConfig& config, std::ostream& out) {
  const UnweightedTree t = read_input(config.input, [](std::istream& in) { return parse_tree(in); });
  emit(config, out, dump(tree_report_json(t)));
  return kOk;
}

int run_negtype(const RunConfig& config, std::ostream& out) {
  const PointSet s = read_input(config.input, [](std::istream& in) { return parse_point_set(in); });
  const NegTypeReport r = sanchez_wp(s, config.scan);
  Json j = to_json(r);
  j["affinely_independent"] = affinely_independent(s);
  emit(config, out, dump(j));
  return r.root_kind == RootKind::none_below_cap ? kBudgetError : kOk;
}

int run_search(const RunConfig& config, std::ostream& out) {
  const SearchOptions options{config.workers, config.budget};
  const SearchResult r = config.mode == "exhaustive"
                             ? min_dinv_ones(config.n, config.m, options)
                             : random_probe(config.n, config.m, config.trials, config.seed, options);
  emit(config, out, dump(Json(to_json(r))));
  return r.violations.empty() && r.slice_mismatches == 0 ? kOk : kFailure;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  VerifyOptions options = config.verify;
  options.workers = config.workers;
  const VerifySummary summary = verify_identities(options);
  if (config.verify_json) {
    emit(config, out, dump(Json(to_json(summary))));
  } else {
    std::ostringstream text;
    for (const auto& c : summary.checks) {
      text << std::left << std::setw(18) << c.name << " passed " << std::setw(8) << c.passed << " failed "
           << c.failed << (c.failed == 0 ? "  PASS" : "  FAIL") << "\n";
    }
    text << (summary.all_passed() ? "all identities hold\n" : "identity failures detected\n");
    emit(config, out, text.str());
  }
  return summary.all_passed() ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Distance-matrix invariants of Hamming cube subsets"};
  app.require_subcommand(1);

  auto add_io = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", config.input, std::string(what) + " file, '-' for stdin")->capture_default_str();
    sub->add_option("-o,--output", config.output, "write JSON here instead of stdout");
  };

  CLI::App* report = app.add_subcommand("report", "determinant identities of a point set");
  add_io(report, "point-set");

  CLI::App* tree = app.add_subcommand("tree", "tree distance matrix, Graham-Lovasz inverse and <D^-1 1,1>");
  add_io(tree, "tree");

  CLI::App* negtype = app.add_subcommand("negtype", "supremal negative type of a point set");
  add_io(negtype, "point-set");
  negtype->add_option("--cap", config.scan.cap, "upper end of the p scan")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  negtype->add_option("--tol", config.scan.tol, "bisection width and eigenvalue tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  negtype->add_option("--grid", config.scan.grid, "coarse scan step")->check(CLI::PositiveNumber)->capture_default_str();

  CLI::App* search = app.add_subcommand("search", "minimum of <D^-1 1,1> over affinely independent subsets");
  search->add_option("--n", config.n, "cube dimension")->required()->check(CLI::Range(2u, 64u));
  search->add_option("--m", config.m, "number of nonzero points")->required()->check(CLI::PositiveNumber);
  search->add_option("--mode", config.mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}))
      ->capture_default_str();
  search->add_option("--trials", config.trials, "random mode: number of sampled subsets")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  search->add_option("--seed", config.seed, "random mode: seed")->check(CLI::NonNegativeNumber)->capture_default_str();
  search->add_option("--workers", config.workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  search->add_option("--budget", config.budget, "largest exhaustive enumeration allowed")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "run the exhaustive identity suites");
  verify->add_option("--n-cap", config.verify.n_cap, "exhaustive sweep up to this dimension")
      ->check(CLI::Range(2u, 5u))
      ->capture_default_str();
  verify->add_option("--random-n-max", config.verify.random_n_max, "random sets above n-cap up to this dimension")
      ->check(CLI::Range(2u, 64u))
      ->capture_default_str();
  verify->add_option("--samples", config.verify.samples, "random sets per dimension")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--seed", config.verify.seed, "seed for random sets")->capture_default_str();
  verify->add_option("--tree-cap", config.verify.tree_vertex_cap, "largest tree (vertices) in the Pruefer sweep")
      ->check(CLI::Range(3, 10))
      ->capture_default_str();
  verify->add_option("--workers", config.workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_flag("--json", config.verify_json, "emit JSON instead of a table");
  verify->add_flag("--inject-fault", config.verify.inject_fault)->group("");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help arrives as CallForHelp from the subcommand itself.
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*report) return run_report(config, out);
    if (*tree) return run_tree(config, out);
    if (*negtype) return run_negtype(config, out);
    if (*search) return run_search(config, out);
    if (*verify) return run_verify(config, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetError;
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kBudgetError;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  }
  return kParseError;
}

}  // namespace cubedist::cli
