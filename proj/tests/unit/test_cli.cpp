#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "modhowe/cli/cli.hpp"

using modhowe::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "modhowe");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("count") {
    const auto r = invoke({"count", "--p", "3", "--e", "1", "--variety", "Ytilde", "--n", "2", "--level", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "variety,n,level,count\nYtilde,2,q^2,24\n");
    const auto torsor = invoke({"count", "--p", "3", "--variety", "torsor", "--n", "2", "--level", "2"});
    CHECK(torsor.code == 0);
    CHECK(torsor.out.find("ratio,2,q^2,4\n") != std::string::npos);
    CHECK(invoke({"count", "--p", "3", "--variety", "nope"}).code == 2);
    CHECK(invoke({"count", "--p", "3", "--variety", "Y", "--level", "3"}).code == 2);
    CHECK(invoke({"count", "--p", "2", "--e", "2", "--variety", "Xprime", "--n", "3", "--level", "4", "--budget", "10"})
              .code == 2);
  }

  TEST_CASE("verify exit codes") {
    CHECK(invoke({"verify", "--p", "3", "--e", "1", "--n", "2", "--ell", "5"}).code == 0);
    const auto two = invoke({"verify", "--p", "3", "--e", "1", "--n", "2", "--ell", "2"});
    CHECK(two.code == 2);
    CHECK(two.err.find("ell = 2") != std::string::npos);
    CHECK(invoke({"verify", "--p", "2", "--e", "1", "--n", "2", "--ell", "3"}).code == 0);
    CHECK(invoke({"verify", "--p", "3", "--n", "1", "--ell", "5"}).code == 2);
    CHECK(invoke({"verify", "--p", "3", "--n", "2", "--ell", "3"}).code == 2);
    CHECK(invoke({"verify", "--p", "3", "--n", "2"}).code == 2);
  }

  TEST_CASE("howe tables") {
    const auto md = invoke({"howe", "--p", "2", "--e", "1", "--n", "2", "--ell", "3", "--format", "md"});
    CHECK(md.code == 0);
    CHECK(md.out.find("| (1,+) | 5 | NontrivialExtensionOfTrivialByIrreducible") != std::string::npos);
    const auto ord = invoke({"howe", "--p", "3", "--n", "2", "--ordinary"});
    CHECK(ord.code == 0);
    const auto j = nlohmann::json::parse(ord.out);
    CHECK(j["params"]["mode"] == "ordinary");
    CHECK(j["entries"].size() == 5);
    const auto js = invoke({"howe", "--p", "3", "--n", "2", "--ell", "5", "--format", "json"});
    CHECK(js.code == 0);
    CHECK(nlohmann::json::accept(js.out));
    CHECK(invoke({"howe", "--p", "3", "--n", "2", "--ell", "5", "--ordinary"}).code == 2);
    CHECK(invoke({"howe", "--p", "3", "--n", "2", "--format", "xml", "--ordinary"}).code == 2);
    CHECK(invoke({"howe", "--p", "3", "--n", "2"}).code == 2);
  }

  TEST_CASE("gauss, fixed points and characters") {
    const auto g = invoke({"gauss", "--p", "3"});
    CHECK(g.code == 0);
    CHECK(nlohmann::json::parse(g.out)["all_pass"] == true);
    CHECK(invoke({"gauss", "--p", "2"}).code == 2);
    CHECK(invoke({"gauss", "--p", "3", "--a", "0"}).code == 2);
    const auto fp = invoke({"fixed-points", "--p", "3", "--format", "csv"});
    CHECK(fp.code == 0);
    CHECK(std::count(fp.out.begin(), fp.out.end(), '\n') == 1 + 2 * 12);
    CHECK(invoke({"fixed-points", "--p", "2", "--with-u", "yes"}).code == 2);
    CHECK(invoke({"fixed-points", "--p", "2"}).code == 0);
    CHECK(invoke({"characters", "--p", "3", "--format", "md"}).code == 0);
    CHECK(invoke({"characters", "--p", "2", "--ell", "3"}).code == 0);
  }

  TEST_CASE("usage errors") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"count", "--variety", "Y"}).code == 2);
    CHECK(invoke({"count", "--p", "4", "--variety", "Y"}).code == 2);
    CHECK(invoke({"count", "--p", "3", "--variety", "Y", "--workers", "0"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
  }

  TEST_CASE("output is deterministic across runs and worker counts") {
    const std::vector<std::vector<std::string>> commands{
        {"count", "--p", "2", "--e", "2", "--variety", "all", "--n", "2", "--level", "4", "--format", "json"},
        {"fixed-points", "--p", "5", "--format", "json"},
        {"verify", "--p", "3", "--n", "2", "--ell", "5", "--format", "csv"}};
    for (auto cmd : commands) {
      const auto a = invoke(cmd);
      const auto b = invoke(cmd);
      cmd.push_back("--workers");
      cmd.push_back("3");
      const auto c = invoke(cmd);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
      CHECK(a.out == c.out);
    }
  }

  TEST_CASE("output files and the default output directory") {
    const auto dir = std::filesystem::temp_directory_path() / "modhowe_cli_test";
    std::filesystem::remove_all(dir);
    ::setenv("MODHOWE_OUTPUT_DIR", dir.c_str(), 1);
    const auto r = invoke({"howe", "--p", "2", "--n", "2", "--ell", "3", "--output", "table.json"});
    ::unsetenv("MODHOWE_OUTPUT_DIR");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(dir / "table.json");
    REQUIRE(in.good());
    const auto j = nlohmann::json::parse(in);
    CHECK(j["entries"][0]["status"] == "NontrivialExtensionOfTrivialByIrreducible");
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("the installed binary reports exit codes") {
    const std::string bin = MODHOWE_CLI_PATH;
    CHECK(std::system((bin + " howe --p 2 --n 2 --ell 3 > /dev/null").c_str()) == 0);
    const int status = std::system((bin + " verify --p 3 --n 2 --ell 2 > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(status) == 2);
  }
}
