#include "cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;
using cubedist::cli::run;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cubedist");
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("cubedist_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("report") {
    Scratch scratch;
    const auto example = scratch.write("h3.txt", "3 4\n000\n100\n010\n111\n");
    const auto r = invoke({"report", example});
    CHECK(r.status == cubedist::cli::kOk);
    const auto j = parse(r.out);
    CHECK(j["det_D"] == "-12");
    CHECK(j["dinv_ones"] == "2/3");
    CHECK(j["gram_quad"] == "3");

    const auto dep = invoke({"report", scratch.write("h2.txt", "2 4\n00\n10\n01\n11\n")});
    CHECK(dep.status == 0);
    CHECK(parse(dep.out)["det_D"] == "0");
    CHECK(parse(dep.out)["dinv_ones"].is_null());

    const auto out_file = scratch.path("report.json");
    const auto to_file = invoke({"report", example, "-o", out_file});
    CHECK(to_file.status == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(out_file);
    CHECK(nlohmann::json::parse(in)["det_D"] == "-12");
  }

  TEST_CASE("report errors") {
    Scratch scratch;
    const auto bad = invoke({"report", scratch.write("bad.txt", "3 2\n000\n1x1\n")});
    CHECK(bad.status == cubedist::cli::kParseError);
    CHECK(bad.err.find("line 3") != std::string::npos);

    const auto dup = invoke({"report", scratch.write("dup.txt", "3 2\n101\n101\n")});
    CHECK(dup.status == cubedist::cli::kDomainError);

    CHECK(invoke({"report", scratch.path("missing.txt")}).status == cubedist::cli::kParseError);
    CHECK(invoke({"report", "--bogus"}).status == cubedist::cli::kParseError);
    CHECK(invoke({}).status == cubedist::cli::kParseError);
    CHECK(invoke({"frobnicate"}).status == cubedist::cli::kParseError);
  }

  TEST_CASE("help") {
    const auto top = invoke({"--help"});
    CHECK(top.status == 0);
    CHECK(top.out.find("search") != std::string::npos);
    const auto sub = invoke({"negtype", "--help"});
    CHECK(sub.status == 0);
    CHECK(sub.out.find("--grid") != std::string::npos);
  }

  TEST_CASE("tree") {
    Scratch scratch;
    const auto r = invoke({"tree", scratch.write("star.txt", "4\n0 1\n0 2\n0 3\n")});
    CHECK(r.status == 0);
    const auto j = parse(r.out);
    CHECK(j["det"] == "-12");
    CHECK(j["dinv_ones"] == "2/3");
    CHECK(j["d_star"][0][0] == "-4/3");

    CHECK(invoke({"tree", scratch.write("cycle.txt", "3\n0 1\n1 2\n0 2\n")}).status == cubedist::cli::kDomainError);
    CHECK(invoke({"tree", scratch.write("edge.txt", "2\n0 1\n")}).status == cubedist::cli::kDomainError);
    CHECK(invoke({"tree", scratch.write("junk.txt", "3\n0 one\n")}).status == cubedist::cli::kParseError);
  }

  TEST_CASE("negtype") {
    Scratch scratch;
    const auto path = scratch.write("path.txt", "2 3\n00\n10\n11\n");
    const auto r = invoke({"negtype", path});
    CHECK(r.status == 0);
    const auto j = parse(r.out);
    CHECK(std::abs(j["wp"].get<double>() - 2.0) <= 1e-6);
    CHECK(j["root_kind"] == "bordered");
    CHECK(j.contains("bracket"));
    CHECK(j.contains("residual"));

    const auto dep = parse(invoke({"negtype", scratch.write("h2.txt", "2 4\n00\n10\n01\n11\n")}).out);
    CHECK(dep["wp"] == 1.0);
    CHECK(dep["exact"] == true);

    const auto capped = invoke({"negtype", scratch.write("simplex.txt", "3 3\n000\n110\n101\n")});
    CHECK(capped.status == cubedist::cli::kBudgetError);
    CHECK(parse(capped.out)["root_kind"] == "none-below-cap");

    CHECK(invoke({"negtype", path, "--cap", "-1"}).status == cubedist::cli::kParseError);
    CHECK(invoke({"negtype", path, "--tol", "0"}).status == cubedist::cli::kParseError);
    CHECK(invoke({"negtype", path, "--grid", "abc"}).status == cubedist::cli::kParseError);
    CHECK(invoke({"negtype", path, "--cap", "0.5"}).status == cubedist::cli::kDomainError);
    CHECK(invoke({"negtype", path, "--cap", "1.5"}).status == cubedist::cli::kBudgetError);
  }

  TEST_CASE("search") {
    const auto r = invoke({"search", "--n", "3", "--m", "3", "--workers", "1"});
    CHECK(r.status == 0);
    CHECK(parse(r.out)["min_value"] == "2/3");

    const auto budget = invoke({"search", "--n", "5", "--m", "5", "--budget", "100"});
    CHECK(budget.status == cubedist::cli::kBudgetError);
    CHECK(budget.err.find("169911") != std::string::npos);

    CHECK(invoke({"search", "--n", "3"}).status == cubedist::cli::kParseError);
    CHECK(invoke({"search", "--n", "3", "--m", "3", "--mode", "fast"}).status == cubedist::cli::kParseError);
    CHECK(invoke({"search", "--n", "1", "--m", "1"}).status == cubedist::cli::kParseError);
    CHECK(invoke({"search", "--n", "2", "--m", "4"}).status == cubedist::cli::kDomainError);
    CHECK(invoke({"search", "--n", "3", "--m", "3", "--workers", "0"}).status == cubedist::cli::kParseError);
  }

  TEST_CASE("search output is deterministic") {
    const std::vector<std::string> random{"search", "--n", "8", "--m", "6", "--mode", "random", "--trials", "500", "--seed", "42"};
    auto one = random;
    one.insert(one.end(), {"--workers", "1"});
    auto four = random;
    four.insert(four.end(), {"--workers", "4"});
    const auto a = invoke(one);
    CHECK(a.status == 0);
    CHECK(a.out == invoke(one).out);
    CHECK(a.out == invoke(four).out);
    CHECK(parse(a.out)["seed"] == 42);

    const auto e1 = invoke({"search", "--n", "4", "--m", "3", "--workers", "1"});
    const auto e4 = invoke({"search", "--n", "4", "--m", "3", "--workers", "4"});
    CHECK(e1.out == e4.out);
  }

  TEST_CASE("verify") {
    const auto small = invoke({"verify", "--n-cap", "2", "--random-n-max", "3", "--samples", "50", "--tree-cap", "5"});
    CHECK(small.status == 0);
    CHECK(small.out.find("det_formula") != std::string::npos);
    CHECK(small.out.find("FAIL") == std::string::npos);

    const auto json = invoke({"verify", "--n-cap", "2", "--random-n-max", "2", "--tree-cap", "4", "--json"});
    CHECK(json.status == 0);
    CHECK(parse(json.out)["all_passed"] == true);

    const auto fault = invoke({"verify", "--n-cap", "2", "--random-n-max", "2", "--tree-cap", "3", "--inject-fault"});
    CHECK(fault.status == cubedist::cli::kFailure);
    CHECK(fault.out.find("FAIL") != std::string::npos);
  }
}
