#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "infinigb");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int status = infinigb::cli::run_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("orders-demo prints the four chains") {
  const auto r = run({"--format", "tsv", "orders-demo"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "hlex\tx4 > x1*x3 > x2^2 > x1^2*x2 > x1^4\n"
        "halex\tx1^4 > x1^2*x2 > x1*x3 > x2^2 > x4\n"
        "hrevlex\tx4 > x2^2 > x1*x3 > x1^2*x2 > x1^4\n"
        "harevlex\tx1^4 > x1^2*x2 > x2^2 > x1*x3 > x4\n"
        "# comparisons 40 verdict PASS\n");
  const auto j = json_of(run({"orders-demo"}));
  CHECK(j["verdict"] == "PASS");
  CHECK(j["chains"].size() == 4);
}

TEST_CASE("bijection with n = 0 is a single empty row") {
  const auto r = run({"bijection", "--preset", "AB", "--n", "0"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("lambda\tphi\tphi_oracle\n()\t()\t()\n# ", 0) == 0);
  const auto j = json_of(run({"--format", "json", "bijection", "--preset", "AB", "--n", "0"}));
  CHECK(j["rows"].size() == 1);
  CHECK(j["summary"]["verdict"] == "PASS");
}

TEST_CASE("identities and hilbert verdicts") {
  CHECK(json_of(run({"identities", "--schur", "--N", "40"}))["verdict"] == "PASS");
  CHECK(json_of(run({"identities", "--rr", "--N", "30"}))["verdict"] == "PASS");
  CHECK(json_of(run({"hilbert", "--preset", "schur-p3", "--N", "20"}))["verdict"] == "PASS");
}

TEST_CASE("divide and gb") {
  const auto d = json_of(run({"divide", "--order", "harevlex", "--divisor", "x1*x2 - x3",
                              "--divisor", "x1^2 - x2", "--input", "x1^2*x2"}));
  CHECK(d["remainder"] == "x2^2");
  const auto g = run({"gb", "--order", "harevlex", "--gen", "x1*x2 - x3", "--gen", "x1^2 - x2",
                      "--n", "3", "--deg", "8", "--reduced"});
  CHECK(g.status == 0);
  const auto j = nlohmann::json::parse(g.out);
  std::vector<std::string> basis = j["elements"];
  CHECK(basis == std::vector<std::string>{"x1^2 - x2", "x1*x2 - x3", "x2^2 - x1*x3"});
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run({"bijection", "--preset", "ZZ", "--n", "3"}).status == 2);
  const auto bad = run({"divide", "--divisor", "x1 +", "--input", "x1"});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("position 4") != std::string::npos);
  CHECK(run({"gb", "--gen", "x1", "--n", "100000"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"--order", "nope", "orders-demo"}).status == 2);
}

TEST_CASE("config file precedence") {
  const auto path = std::filesystem::temp_directory_path() / "infinigb_cli_test.toml";
  {
    std::ofstream f(path);
    f << "preset = \"AB\"\nn = 10\nformat = \"json\"\n";
  }
  const auto from_file = json_of(run({"--config", path.string(), "bijection"}));
  CHECK(from_file["summary"]["n"] == 10);
  CHECK(from_file["rows"].size() == 4);
  const auto overridden = json_of(run({"--config", path.string(), "bijection", "--n", "3"}));
  CHECK(overridden["summary"]["n"] == 3);
  std::filesystem::remove(path);
}

TEST_CASE("output is deterministic") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"properties", "--seed", "7", "--count", "5"},
        std::vector<std::string>{"gb", "--family", "x{i}^p - x{p*i}", "--W", "odd", "--p", "3",
                                 "--n", "9", "--deg", "12"},
        std::vector<std::string>{"--format", "tsv", "bijection", "--preset", "AC", "--n", "12"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
  const auto p = json_of(run({"properties", "--seed", "7", "--count", "5"}));
  CHECK(p["seed"] == 7);
}
