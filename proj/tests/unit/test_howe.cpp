#include <set>

#include "doctest.h"
#include "modhowe/errors.hpp"
#include "modhowe/howe/report.hpp"

using namespace modhowe;
using namespace modhowe::howe;

namespace {

std::vector<std::string> dims_of(const HoweTable& t) {
  std::vector<std::string> out;
  for (const auto& e : t.entries) out.push_back(e.tau_name + "=" + e.dim_theta.get_str());
  return out;
}

bool checks_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    INFO(c.name << ": expected " << c.expected << ", got " << c.actual);
    CHECK(c.pass);
    if (!c.pass) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("howe") {
  TEST_CASE("ordinary tables") {
    const auto t3 = theta_ordinary(2, 3, 3);
    CHECK(dims_of(t3) == std::vector<std::string>{"(1,+)=15", "(1,-)=6", "(nu,+)=10", "(nu,-)=10", "sigma_1=20"});
    const auto t2 = theta_ordinary(2, 2, 2);
    CHECK(dims_of(t2) == std::vector<std::string>{"(1,+)=5", "(1,-)=1", "sigma_1=5"});
    for (const auto& e : t3.entries) CHECK(e.status == EntryStatus::kIrreducibleOrdinary);
    CHECK(checks_pass(t3.checks));
    CHECK(checks_pass(t2.checks));
    CHECK_THROWS_AS(theta_ordinary(1, 3, 3), InvalidArgument);
  }

  TEST_CASE("mod-ell table with the extension row") {
    const auto t = theta_mod_ell(2, 2, 2, 3);
    REQUIRE(t.entries.size() == 2);
    CHECK(t.entries[0].tau_name == "(1,+)");
    CHECK(t.entries[0].dim_theta == 5);
    CHECK(t.entries[0].status == EntryStatus::kNontrivialExtension);
    REQUIRE(t.entries[0].constituents.size() == 2);
    CHECK(t.entries[0].constituents[0].dim == 4);
    CHECK(t.entries[0].constituents[0].name == "ker delta^+");
    CHECK(t.entries[0].constituents[1].dim == 1);
    CHECK(t.entries[1].dim_theta == 1);
    CHECK(t.entries[1].status == EntryStatus::kIrreducible);
    CHECK(t.entries[0].status_provenance == std::string(kAsserted));
    CHECK(t.entries[0].dim_provenance == std::string(kComputed));
    CHECK(checks_pass(t.checks));
  }

  TEST_CASE("ell prime to q+1 reproduces the ordinary dimensions") {
    const auto ord = theta_ordinary(2, 3, 3);
    const auto mod = theta_mod_ell(2, 3, 3, 5);
    REQUIRE(ord.entries.size() == mod.entries.size());
    for (std::size_t i = 0; i < ord.entries.size(); ++i) {
      CHECK(ord.entries[i].tau == mod.entries[i].tau);
      CHECK(ord.entries[i].dim_theta == mod.entries[i].dim_theta);
      CHECK(mod.entries[i].status == EntryStatus::kIrreducible);
    }
  }

  TEST_CASE("p = 2 has no nu labels") {
    const auto t = theta_mod_ell(2, 4, 2, 5);
    for (const auto& e : t.entries) CHECK(e.tau_name.find("nu") == std::string::npos);
    CHECK(t.entries[0].status == EntryStatus::kNontrivialExtension);
    CHECK(checks_pass(t.checks));
  }

  TEST_CASE("parametrization cardinalities and flags across parameters") {
    for (auto [n, q, ell] : std::vector<std::tuple<std::uint32_t, std::uint64_t, std::uint64_t>>{
             {2, 2, 3}, {2, 3, 5}, {2, 4, 5}, {3, 2, 3}, {2, 5, 3}, {3, 8, 3}, {2, 9, 5}, {4, 7, 3}}) {
      std::uint32_t p = 2;
      while (q % p != 0) ++p;
      const auto t = theta_mod_ell(n, q, p, ell);
      INFO("n=" << n << " q=" << q << " ell=" << ell);
      CHECK(checks_pass(t.checks));
      CHECK(t.pairwise_disjoint);
      std::set<std::string> names;
      for (const auto& e : t.entries) names.insert(e.tau_name);
      CHECK(names.size() == t.entries.size());
      for (const auto& row : compare_semisimplifications(n, q, p, ell)) {
        CHECK(row.deficit == (row.exceptional_family ? 1 : 0));
        if ((q + 1) % ell != 0) CHECK_FALSE(row.exceptional_family);
      }
    }
  }

  TEST_CASE("the exceptional family is exactly chi_r = 1, chi_{ell^a} != 1") {
    // q = 5, ell = 3: sigma_2 has chi_2 = chi_{ell^a}, prime-to-ell part trivial.
    const auto rows = compare_semisimplifications(2, 5, 5, 3);
    std::vector<std::string> flagged;
    for (const auto& r : rows) {
      if (r.exceptional_family) flagged.push_back(r.pi_name);
    }
    CHECK(flagged == std::vector<std::string>{"sigma_2"});
  }

  TEST_CASE("unsupported ell") {
    CHECK_THROWS_AS(theta_mod_ell(2, 3, 3, 2), UnsupportedCase);
    CHECK_THROWS_AS(theta_mod_ell(2, 3, 3, 3), UnsupportedCase);
    CHECK_THROWS_AS(verify_all(2, 3, 2, 3), UnsupportedCase);
  }

  TEST_CASE("full verification runs pass") {
    const auto a = verify_all(2, 3, 5, 3);
    CHECK(checks_pass(a.checks));
    CHECK(a.all_pass());
    const auto b = verify_all(2, 2, 3, 2);
    CHECK(b.all_pass());
    bool saw_extension_check = false;
    for (const auto& c : b.checks) saw_extension_check |= c.name.find("extension_flag") != std::string::npos;
    CHECK(saw_extension_check);
  }

  TEST_CASE("JSON schema") {
    const auto t = theta_mod_ell(2, 2, 2, 3);
    const auto j = table_to_json(t, compare_semisimplifications(2, 2, 2, 3));
    REQUIRE(j.contains("params"));
    REQUIRE(j.contains("entries"));
    REQUIRE(j.contains("checks"));
    CHECK(j["params"]["ell"] == 3);
    for (const auto& e : j["entries"]) {
      for (const char* key : {"tau", "dim", "status", "constituents", "provenance"}) CHECK(e.contains(key));
      CHECK(e["dim"].is_string());
    }
    for (const auto& c : j["checks"]) {
      for (const char* key : {"name", "expected", "actual", "pass"}) CHECK(c.contains(key));
    }
    const auto md = table_to_markdown(t);
    CHECK(md.find("NontrivialExtensionOfTrivialByIrreducible") != std::string::npos);
    CHECK(table_to_csv(t).rfind("tau,dim,status,constituents\n", 0) == 0);
  }
}
