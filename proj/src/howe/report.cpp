#include "modhowe/howe/report.hpp"

#include <sstream>

namespace modhowe::howe {

namespace {

nlohmann::json params_json(std::uint32_t n, std::uint64_t q, std::uint32_t p, std::uint64_t ell) {
  nlohmann::json j;
  j["n"] = n;
  j["q"] = q;
  j["p"] = p;
  if (ell == 0) {
    j["ell"] = nullptr;
    j["mode"] = "ordinary";
  } else {
    j["ell"] = ell;
    j["mode"] = "mod_ell";
  }
  return j;
}

std::string constituents_text(const HoweEntry& e) {
  std::string out;
  for (const auto& c : e.constituents) {
    if (!out.empty()) out += " + ";
    out += c.name + " (" + c.dim.get_str() + ")";
  }
  return out.empty() ? "-" : out;
}

std::string reduction_text(const SemisimplificationRow& row, std::uint64_t q) {
  std::string out;
  for (const auto& [tau, m] : row.reduction) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + " ";
    out += characters::irrep_name(tau, q);
  }
  return out;
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string pass_text(bool pass) { return pass ? "PASS" : "FAIL"; }

void checks_markdown(std::ostringstream& os, const std::vector<Check>& checks) {
  os << "| check | expected | actual | result |\n|---|---|---|---|\n";
  for (const auto& c : checks) {
    os << "| " << c.name << " | " << c.expected << " | " << c.actual << " | " << pass_text(c.pass) << " |\n";
  }
}

}  // namespace

nlohmann::json checks_to_json(const std::vector<Check>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  return arr;
}

nlohmann::json table_to_json(const HoweTable& t, const std::vector<SemisimplificationRow>& comparison) {
  nlohmann::json j;
  j["params"] = params_json(t.n, t.q, t.p, t.ell);
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : t.entries) {
    nlohmann::json cons = nlohmann::json::array();
    for (const auto& c : e.constituents) cons.push_back({{"dim", c.dim.get_str()}, {"name", c.name}});
    entries.push_back({{"tau", e.tau_name},
                       {"dim", e.dim_theta.get_str()},
                       {"status", status_name(e.status)},
                       {"constituents", cons},
                       {"lusztig_note", e.lusztig_note},
                       {"provenance", {{"dim", e.dim_provenance}, {"status", e.status_provenance}}}});
  }
  j["entries"] = entries;
  j["pairwise_disjoint"] = t.pairwise_disjoint;
  if (!comparison.empty()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : comparison) {
      nlohmann::json red = nlohmann::json::array();
      for (const auto& [tau, m] : r.reduction) {
        red.push_back({{"tau", characters::irrep_name(tau, t.q)}, {"multiplicity", m}});
      }
      rows.push_back({{"pi", r.pi_name},
                      {"dim_theta", r.dim_theta.get_str()},
                      {"reduction", red},
                      {"dim_theta_ell_of_reduction", r.dim_theta_ell.get_str()},
                      {"deficit", r.deficit.get_str()},
                      {"exceptional_family", r.exceptional_family}});
    }
    j["semisimplification"] = rows;
  }
  j["checks"] = checks_to_json(t.checks);
  return j;
}

std::string table_to_markdown(const HoweTable& t, const std::vector<SemisimplificationRow>& comparison) {
  std::ostringstream os;
  os << "# Howe correspondence, n = " << t.n << ", q = " << t.q;
  if (t.ell == 0) {
    os << " (ordinary)\n\n";
  } else {
    os << ", ell = " << t.ell << "\n\n";
  }
  os << "| tau | dim | status | constituents | series | provenance |\n|---|---|---|---|---|---|\n";
  for (const auto& e : t.entries) {
    os << "| " << e.tau_name << " | " << e.dim_theta.get_str() << " | " << status_name(e.status) << " | "
       << constituents_text(e) << " | " << e.lusztig_note << " | dim " << e.dim_provenance << ", status "
       << e.status_provenance << " |\n";
  }
  os << "\nPairwise disjoint: " << (t.pairwise_disjoint ? "yes" : "no") << "\n";
  if (!comparison.empty()) {
    os << "\n## Reduction of the ordinary table\n\n"
       << "| pi | dim Theta(pi) | reduction | dim Theta_ell | deficit | exceptional |\n|---|---|---|---|---|---|\n";
    for (const auto& r : comparison) {
      os << "| " << r.pi_name << " | " << r.dim_theta.get_str() << " | " << reduction_text(r, t.q) << " | "
         << r.dim_theta_ell.get_str() << " | " << r.deficit.get_str() << " | " << (r.exceptional_family ? "yes" : "no")
         << " |\n";
    }
  }
  os << "\n## Checks\n\n";
  checks_markdown(os, t.checks);
  return os.str();
}

std::string table_to_csv(const HoweTable& t) {
  std::ostringstream os;
  os << "tau,dim,status,constituents\n";
  for (const auto& e : t.entries) {
    std::string cons;
    for (const auto& c : e.constituents) {
      if (!cons.empty()) cons += ";";
      cons += c.name + ":" + c.dim.get_str();
    }
    os << csv_field(e.tau_name) << "," << e.dim_theta.get_str() << "," << status_name(e.status) << "," << csv_field(cons)
       << "\n";
  }
  return os.str();
}

nlohmann::json summary_to_json(const VerifySummary& s) {
  nlohmann::json j;
  j["params"] = params_json(s.n, s.q, s.p, s.ell);
  j["checks"] = checks_to_json(s.checks);
  j["all_pass"] = s.all_pass();
  return j;
}

std::string summary_to_markdown(const VerifySummary& s) {
  std::ostringstream os;
  os << "# Verification, n = " << s.n << ", q = " << s.q << ", ell = " << s.ell << "\n\n";
  checks_markdown(os, s.checks);
  os << "\nOverall: " << pass_text(s.all_pass()) << "\n";
  return os.str();
}

std::string summary_to_csv(const VerifySummary& s) {
  std::ostringstream os;
  os << "name,expected,actual,pass\n";
  for (const auto& c : s.checks) {
    os << csv_field(c.name) << "," << csv_field(c.expected) << "," << csv_field(c.actual) << "," << (c.pass ? "true" : "false") << "\n";
  }
  return os.str();
}

}  // namespace modhowe::howe
