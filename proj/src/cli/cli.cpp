#include "modhowe/cli/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "modhowe/characters/dihedral.hpp"
#include "modhowe/cyclotomic/characters.hpp"
#include "modhowe/errors.hpp"
#include "modhowe/howe/report.hpp"
#include "modhowe/varieties/fixed_points.hpp"
#include "modhowe/varieties/varieties.hpp"

namespace modhowe::cli {

namespace {

using nlohmann::json;

struct Emitted {
  std::string text;
  int code = kExitPass;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::uint64_t q_of(const RunConfig& cfg) { return field::PrimePower::make(cfg.p, cfg.e).q; }

std::uint64_t require_ell(const RunConfig& cfg) {
  if (!cfg.ell) throw InvalidArgument("--ell is required for this command");
  return *cfg.ell;
}

Emitted cmd_count(const RunConfig& cfg) {
  const field::TowerContext ctx(cfg.p, cfg.e);
  const field::Level level = field::parse_level(cfg.level);
  varieties::CountOptions opts;
  opts.workers = cfg.workers;
  opts.budget = cfg.budget;

  std::vector<varieties::CountRow> rows;
  auto add = [&](varieties::VarietyKind kind) {
    const varieties::VarietySpec spec{kind, cfg.n};
    rows.push_back({varieties::variety_name(kind), varieties::variety_uses_n(kind) ? cfg.n : 0u,
                    field::level_name(level), varieties::count_points(spec, ctx, level, opts)});
  };
  std::optional<mpq_class> ratio;
  if (cfg.variety == "torsor") {
    add(varieties::VarietyKind::kYtilde);
    add(varieties::VarietyKind::kY);
    if (rows[1].count != 0) {
      ratio = mpq_class(rows[0].count, rows[1].count);
      ratio->canonicalize();
    }
  } else if (cfg.variety == "all") {
    for (auto kind : varieties::all_variety_kinds()) add(kind);
  } else {
    add(varieties::parse_variety(cfg.variety));
  }

  switch (cfg.format) {
    case Format::kCsv: {
      std::string text = varieties::counts_to_csv(rows);
      if (ratio) text += "ratio," + std::to_string(cfg.n) + "," + field::level_name(level) + "," + ratio->get_str() + "\n";
      return {text};
    }
    case Format::kMarkdown: {
      std::ostringstream os;
      os << "| variety | n | level | count |\n|---|---|---|---|\n";
      for (const auto& r : rows) os << "| " << r.variety << " | " << r.n << " | " << r.level << " | " << r.count.get_str() << " |\n";
      if (ratio) os << "\nRatio Ytilde/Y: " << ratio->get_str() << " (q+1 = " << ctx.q() + 1 << ")\n";
      return {os.str()};
    }
    case Format::kJson: {
      json j;
      j["params"] = {{"p", cfg.p}, {"e", cfg.e}, {"q", ctx.q()}, {"n", cfg.n}, {"level", field::level_name(level)}};
      json arr = json::array();
      for (const auto& r : rows) arr.push_back({{"variety", r.variety}, {"n", r.n}, {"level", r.level}, {"count", r.count.get_str()}});
      j["rows"] = arr;
      if (ratio) j["ratio"] = ratio->get_str();
      return {dump(j)};
    }
  }
  return {};
}

Emitted cmd_verify(const RunConfig& cfg) {
  howe::VerifyOptions opts;
  opts.workers = cfg.workers;
  opts.include_varieties = !cfg.skip_varieties;
  const auto summary = howe::verify_all(cfg.n, q_of(cfg), require_ell(cfg), cfg.p, opts);
  const int code = summary.all_pass() ? kExitPass : kExitFail;
  switch (cfg.format) {
    case Format::kCsv:
      return {howe::summary_to_csv(summary), code};
    case Format::kMarkdown:
      return {howe::summary_to_markdown(summary), code};
    case Format::kJson:
      return {dump(howe::summary_to_json(summary)), code};
  }
  return {};
}

Emitted cmd_howe(const RunConfig& cfg) {
  const std::uint64_t q = q_of(cfg);
  howe::HoweTable table;
  std::vector<howe::SemisimplificationRow> comparison;
  if (cfg.ordinary) {
    if (cfg.ell) throw InvalidArgument("--ordinary and --ell are mutually exclusive");
    table = howe::theta_ordinary(cfg.n, q, cfg.p);
  } else {
    const std::uint64_t ell = require_ell(cfg);
    table = howe::theta_mod_ell(cfg.n, q, cfg.p, ell);
    comparison = howe::compare_semisimplifications(cfg.n, q, cfg.p, ell);
  }
  bool ok = true;
  for (const auto& c : table.checks) ok = ok && c.pass;
  const int code = ok ? kExitPass : kExitFail;
  switch (cfg.format) {
    case Format::kCsv:
      return {howe::table_to_csv(table), code};
    case Format::kMarkdown:
      return {howe::table_to_markdown(table, comparison), code};
    case Format::kJson:
      return {dump(howe::table_to_json(table, comparison)), code};
  }
  return {};
}

Emitted cmd_gauss(const RunConfig& cfg) {
  const field::TowerContext ctx(cfg.p, cfg.e);
  if (ctx.p() == 2) throw UnsupportedCase("Gauss sums of the quadratic character need p odd");
  const auto psi1 = cyclotomic::additive_character(ctx, 1);
  const auto g1 = cyclotomic::gauss_sum(ctx, psi1);
  const long sign = field::legendre_symbol(ctx, ctx.neg(ctx.one(field::Level::kQ)));
  const auto target = cyclotomic::CycNumber::integer(sign * static_cast<long>(ctx.q()));

  std::vector<std::int64_t> codes;
  if (cfg.a) {
    if (*cfg.a <= 0 || static_cast<std::uint64_t>(*cfg.a) >= ctx.q()) throw InvalidArgument("--a must encode a nonzero element of F_q");
    codes.push_back(*cfg.a);
  } else {
    for (std::uint64_t c = 1; c < ctx.q(); ++c) codes.push_back(static_cast<std::int64_t>(c));
  }
  struct Row {
    std::int64_t a;
    cyclotomic::CycNumber g;
    bool square_ok;
    bool twist_ok;
  };
  std::vector<Row> rows;
  bool all = true;
  for (auto c : codes) {
    const auto g = cyclotomic::gauss_sum(ctx, cyclotomic::additive_character(ctx, c));
    const int leg = field::legendre_symbol(ctx, ctx.from_encoding(static_cast<std::uint64_t>(c), field::Level::kQ));
    Row r{c, g, g * g == target, g == g1 * mpq_class(leg)};
    all = all && r.square_ok && r.twist_ok;
    rows.push_back(r);
  }
  const int code = all ? kExitPass : kExitFail;
  switch (cfg.format) {
    case Format::kCsv: {
      std::ostringstream os;
      os << "a,gauss_sum,square_identity,twist_identity\n";
      for (const auto& r : rows) {
        os << r.a << ",\"" << r.g.to_string() << "\"," << (r.square_ok ? "true" : "false") << ","
           << (r.twist_ok ? "true" : "false") << "\n";
      }
      return {os.str(), code};
    }
    case Format::kMarkdown: {
      std::ostringstream os;
      os << "# Gauss sums, q = " << ctx.q() << " (z = exp(2 pi i / " << g1.m() << "))\n\n"
         << "| a | G(psi_a) | G^2 = " << target.to_string() << " | G(psi_a) = (a/q) G(psi_1) |\n|---|---|---|---|\n";
      for (const auto& r : rows) {
        os << "| " << r.a << " | " << r.g.to_string() << " | " << (r.square_ok ? "PASS" : "FAIL") << " | "
           << (r.twist_ok ? "PASS" : "FAIL") << " |\n";
      }
      return {os.str(), code};
    }
    case Format::kJson: {
      json j;
      j["params"] = {{"p", cfg.p}, {"e", cfg.e}, {"q", ctx.q()}};
      j["expected_square"] = target.to_json();
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"a", r.a}, {"gauss_sum", r.g.to_json()}, {"square_identity", r.square_ok}, {"twist_identity", r.twist_ok}});
      }
      j["values"] = arr;
      j["all_pass"] = all;
      return {dump(j), code};
    }
  }
  return {};
}

Emitted cmd_fixed_points(const RunConfig& cfg) {
  const field::TowerContext ctx(cfg.p, cfg.e);
  std::vector<bool> modes;
  if (cfg.with_u == "both") {
    modes = {false, true};
    if (ctx.p() == 2) modes = {false};
  } else if (cfg.with_u == "yes") {
    modes = {true};
  } else if (cfg.with_u == "no") {
    modes = {false};
  } else {
    throw InvalidArgument("--with-u must be both, yes or no");
  }
  if (ctx.p() == 2 && modes.back()) throw UnsupportedCase("the grid with u is indexed by nu, which needs p odd");

  std::vector<varieties::GridRow> rows;
  for (bool with_u : modes) {
    auto part = varieties::fixed_point_grid(ctx, with_u, cfg.workers);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  bool all = true;
  auto row_ok = [](const varieties::GridRow& r) {
    return r.report.total == r.expected && r.report.points_verified && r.report.sigma_equations_hold &&
           r.report.all_transversal;
  };
  for (const auto& r : rows) all = all && row_ok(r);
  const int code = all ? kExitPass : kExitFail;
  auto partition_text = [](const varieties::GridRow& r) {
    std::string s;
    for (auto v : r.report.sigma_partition) s += (s.empty() ? "" : "/") + std::to_string(v);
    return s;
  };
  switch (cfg.format) {
    case Format::kCsv: {
      std::ostringstream os;
      os << "with_u,eta,zeta_log,expected,count,sigma_partition,field_degree,transversal,match\n";
      for (const auto& r : rows) {
        os << (r.with_u ? "true" : "false") << "," << r.eta_code << "," << r.zeta_log << "," << r.expected << ","
           << r.report.total << "," << partition_text(r) << "," << r.report.field_degree << ","
           << (r.report.all_transversal ? "true" : "false") << "," << (row_ok(r) ? "true" : "false") << "\n";
      }
      return {os.str(), code};
    }
    case Format::kMarkdown: {
      std::ostringstream os;
      os << "# Fixed points on Xbar, q = " << ctx.q() << "\n\n"
         << "| u | eta | log zeta | expected | count | Sigma sizes | field | transversal | match |\n"
         << "|---|---|---|---|---|---|---|---|---|\n";
      for (const auto& r : rows) {
        os << "| " << (r.with_u ? "yes" : "no") << " | " << r.eta_code << " | " << r.zeta_log << " | " << r.expected
           << " | " << r.report.total << " | " << partition_text(r) << " | F_{q^" << r.report.field_degree << "} | "
           << (r.report.all_transversal ? "yes" : "no") << " | " << (row_ok(r) ? "PASS" : "FAIL") << " |\n";
      }
      return {os.str(), code};
    }
    case Format::kJson: {
      json j;
      j["params"] = {{"p", cfg.p}, {"e", cfg.e}, {"q", ctx.q()}};
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"with_u", r.with_u},
                       {"eta", r.eta_code},
                       {"zeta_log", r.zeta_log},
                       {"expected", r.expected},
                       {"count", r.report.total},
                       {"sigma_partition", r.report.sigma_partition},
                       {"cocycle_period", r.report.cocycle_period},
                       {"field_degree", r.report.field_degree},
                       {"transversal", r.report.all_transversal},
                       {"match", row_ok(r)}});
      }
      j["rows"] = arr;
      j["all_pass"] = all;
      return {dump(j), code};
    }
  }
  return {};
}

Emitted cmd_characters(const RunConfig& cfg) {
  const std::uint64_t q = q_of(cfg);
  const auto table = characters::o_minus_table(q, cfg.p, cfg.ell.value_or(0));
  const bool ok = table.ell != 0 || (characters::row_orthogonality_holds(table) &&
                                     characters::column_orthogonality_holds(table));
  const int code = ok ? kExitPass : kExitFail;
  auto class_name = [](const characters::ConjugacyClass& c) {
    return "(" + std::to_string(c.rep.j) + "," + std::to_string(c.rep.i) + ")";
  };
  switch (cfg.format) {
    case Format::kCsv: {
      std::ostringstream os;
      os << "irrep";
      for (const auto& c : table.classes) os << "," << class_name(c);
      os << "\n";
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        os << characters::irrep_name(table.rows[r], q);
        for (const auto& v : table.values[r]) os << ",\"" << v.to_string() << "\"";
        os << "\n";
      }
      return {os.str(), code};
    }
    case Format::kMarkdown: {
      std::ostringstream os;
      os << "# O_2^-(F_" << q << ")" << (table.ell ? " Brauer" : "") << " character table";
      if (table.ell) os << ", ell = " << table.ell;
      os << "\n\n| irrep |";
      for (const auto& c : table.classes) os << " " << class_name(c) << " [" << c.size << "] |";
      os << "\n|---|";
      for (std::size_t i = 0; i < table.classes.size(); ++i) os << "---|";
      os << "\n";
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        os << "| " << characters::irrep_name(table.rows[r], q) << " |";
        for (const auto& v : table.values[r]) os << " " << v.to_string() << " |";
        os << "\n";
      }
      return {os.str(), code};
    }
    case Format::kJson:
      return {dump(characters::table_to_json(table)), code};
  }
  return {};
}

std::filesystem::path resolve_output(const std::string& output) {
  std::filesystem::path path(output);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("MODHOWE_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / path;
    }
  }
  return path;
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Emitted result;
    if (cfg.command == "count") {
      result = cmd_count(cfg);
    } else if (cfg.command == "verify") {
      result = cmd_verify(cfg);
    } else if (cfg.command == "howe") {
      result = cmd_howe(cfg);
    } else if (cfg.command == "gauss") {
      result = cmd_gauss(cfg);
    } else if (cfg.command == "fixed-points") {
      result = cmd_fixed_points(cfg);
    } else if (cfg.command == "characters") {
      result = cmd_characters(cfg);
    } else {
      err << "error: unknown command '" << cfg.command << "'\n";
      return kExitUsage;
    }
    if (cfg.output.empty()) {
      out << result.text;
    } else {
      const auto path = resolve_output(cfg.output);
      if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
      std::ofstream file(path, std::ios::binary);
      if (!file) {
        err << "error: cannot write " << path.string() << "\n";
        return kExitUsage;
      }
      file << result.text;
    }
    return result.code;
  } catch (const UnsupportedCase& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-field verification suite for the (Sp_2n, O_2^-) Howe correspondence", "modhowe"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::map<std::string, Format> formats{{"json", Format::kJson}, {"csv", Format::kCsv}, {"md", Format::kMarkdown}};

  auto common = [&](CLI::App* sub, Format default_format) {
    cfg.format = default_format;
    sub->add_option("--p", cfg.p, "characteristic")->required();
    sub->add_option("--e", cfg.e, "q = p^e")->capture_default_str();
    sub->add_option("--format", cfg.format, "json, csv or md")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--output", cfg.output, "write to this file instead of stdout");
    sub->add_option("--workers", cfg.workers, "enumeration threads")->check(CLI::Range(1u, 256u));
  };

  auto* count = app.add_subcommand("count", "exact point counts of the named varieties");
  count->add_option("--variety", cfg.variety, "variety name, 'torsor' for Ytilde and Y with their ratio, or 'all'")
      ->required();
  count->add_option("--n", cfg.n, "dimension parameter")->check(CLI::Range(1u, 64u));
  count->add_option("--level", cfg.level, "field level: 1, 2 or 4 (F_q, F_q^2, F_q^4)");
  count->add_option("--budget", cfg.budget, "enumeration budget");

  auto* verify = app.add_subcommand("verify", "run every verification suite");
  verify->add_option("--n", cfg.n)->check(CLI::Range(1u, 64u));
  verify->add_option("--ell", cfg.ell)->required();
  verify->add_flag("--skip-varieties", cfg.skip_varieties, "omit the fixed-point and trace suites");

  auto* howe_cmd = app.add_subcommand("howe", "ordinary or mod-ell Howe correspondence table");
  howe_cmd->add_option("--n", cfg.n)->check(CLI::Range(1u, 64u));
  howe_cmd->add_option("--ell", cfg.ell);
  howe_cmd->add_flag("--ordinary", cfg.ordinary);

  auto* gauss = app.add_subcommand("gauss", "quadratic Gauss sums and their identities");
  gauss->add_option("--a", cfg.a, "encoding of a in F_q^x (default: all)");

  auto* fixed = app.add_subcommand("fixed-points", "fixed-point grid on the surface Xbar");
  fixed->add_option("--with-u", cfg.with_u, "both, yes or no");

  auto* chars = app.add_subcommand("characters", "character table of O_2^-(F_q)");
  chars->add_option("--ell", cfg.ell, "Brauer table for this ell");

  for (auto* sub : {count, verify, howe_cmd, gauss, fixed, chars}) {
    common(sub, Format::kJson);
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }
  // Counts default to CSV rows.
  count->preparse_callback([&cfg](std::size_t) { cfg.format = Format::kCsv; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (cfg.command == "howe" || cfg.command == "verify") {
    if (cfg.n < 2) {
      err << "error: --n must be at least 2 for " << cfg.command << "\n";
      return kExitUsage;
    }
  }
  return execute(cfg, out, err);
}

}  // namespace modhowe::cli
