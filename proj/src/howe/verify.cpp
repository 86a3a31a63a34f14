#include "modhowe/howe/verify.hpp"

#include <algorithm>

#include "modhowe/characters/dihedral.hpp"
#include "modhowe/characters/dimensions.hpp"
#include "modhowe/cyclotomic/characters.hpp"
#include "modhowe/errors.hpp"
#include "modhowe/field/galois_field.hpp"
#include "modhowe/varieties/fixed_points.hpp"
#include "modhowe/varieties/sheaf_trace.hpp"
#include "modhowe/varieties/varieties.hpp"

namespace modhowe::howe {

bool VerifySummary::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

Check boolean_check(std::string name, bool ok) { return {std::move(name), "true", ok ? "true" : "false", ok}; }

Check value_check(std::string name, const std::string& expected, const std::string& actual) {
  return {std::move(name), expected, actual, expected == actual};
}

std::uint32_t exponent_of(std::uint64_t q, std::uint32_t p) {
  std::uint32_t e = 0;
  while (q > 1) {
    if (q % p != 0) throw InvalidArgument("q must be a power of p");
    q /= p;
    ++e;
  }
  return e;
}

void dimension_checks(std::uint32_t n, std::uint64_t q, std::uint32_t p, std::uint64_t ell, std::vector<Check>& out) {
  mpz_class v_sum = 0;
  for (std::uint64_t k = 0; k <= q; ++k) v_sum += characters::dim_V_isotypic(n, q, {k});
  out.push_back(value_check("dimensions.V_sum", characters::q_power(q, n).get_str(), v_sum.get_str()));

  mpz_class w_sum = 0;
  for (const auto& label : characters::all_isotypic_labels(q, p)) {
    w_sum += characters::dim_W_isotypic(n, q, p, label);
  }
  out.push_back(value_check("dimensions.W_sum", characters::q_power(q, 2 * n).get_str(), w_sum.get_str()));

  const bool ell_divides = (q + 1) % ell == 0;
  bool reduces = true;
  for (std::uint64_t k : characters::mod_ell_character_indices(q, ell)) {
    const mpz_class d = characters::dim_mod_ell_unitary(2 * n, q, p, ell, {k});
    if (!ell_divides) reduces = reduces && d == characters::dim_V_isotypic(2 * n, q, {k});
  }
  out.push_back(boolean_check("dimensions.mod_ell_reduces_to_ordinary", reduces));
  const mpz_class q2n = characters::q_power(q, 2 * n);
  const mpz_class trivial_expected = ell_divides ? mpz_class((q2n - 1) / (q + 1) + 1) : mpz_class((q2n + q) / (q + 1));
  out.push_back(value_check("dimensions.mod_ell_trivial_part", trivial_expected.get_str(),
                            characters::dim_mod_ell_unitary(2 * n, q, p, ell, {0}).get_str()));
}

void dihedral_checks(std::uint64_t q, std::uint32_t p, std::uint64_t ell, std::vector<Check>& out) {
  const auto ord = characters::o_minus_table(q, p);
  out.push_back(boolean_check("dihedral.row_orthogonality", characters::row_orthogonality_holds(ord)));
  out.push_back(boolean_check("dihedral.column_orthogonality", characters::column_orthogonality_holds(ord)));
  std::uint64_t dim_sq = 0;
  for (const auto& r : ord.rows) dim_sq += r.dim() * r.dim();
  out.push_back(value_check("dihedral.sum_dim_squared", std::to_string(2 * (q + 1)), std::to_string(dim_sq)));
  out.push_back(value_check("dihedral.irreps_equal_classes", std::to_string(ord.classes.size()),
                            std::to_string(ord.rows.size())));
  const auto mod = characters::o_minus_table(q, p, ell);
  out.push_back(value_check("dihedral.mod_ell_irreps_equal_regular_classes", std::to_string(mod.classes.size()),
                            std::to_string(mod.rows.size())));
  bool brauer_ok = true;
  for (const auto& rho : ord.rows) {
    std::uint64_t d = 0;
    for (const auto& [tau, m] : characters::brauer_decompose_dihedral(q, p, ell, rho)) d += tau.dim() * m;
    brauer_ok = brauer_ok && d == rho.dim();
  }
  out.push_back(boolean_check("dihedral.brauer_decomposition_dims", brauer_ok));
}

void semisimplification_checks(std::uint32_t n, std::uint64_t q, std::uint32_t p, std::uint64_t ell,
                               std::vector<Check>& out) {
  bool ok = true;
  std::uint64_t exceptional = 0;
  for (const auto& row : compare_semisimplifications(n, q, p, ell)) {
    const mpz_class want = row.exceptional_family ? mpz_class(1) : mpz_class(0);
    ok = ok && row.deficit == want;
    if (row.exceptional_family) ++exceptional;
  }
  out.push_back(boolean_check("semisimplification.deficit_only_on_exceptional_family", ok));
  out.push_back(value_check("semisimplification.exceptional_family_nonempty_iff_ell_divides",
                            (q + 1) % ell == 0 ? "true" : "false", exceptional > 0 ? "true" : "false"));
}

void varieties_checks(std::uint32_t n, const field::TowerContext& ctx, const VerifyOptions& opts,
                      std::vector<Check>& out) {
  const std::uint64_t q = ctx.q();
  const bool odd = ctx.p() != 2;
  const auto mu = field::enumerate_mu(ctx, q + 1);

  {
    varieties::CountOptions copts;
    copts.workers = opts.workers;
    const mpz_class ytilde =
        varieties::count_points({varieties::VarietyKind::kYtilde, n}, ctx, field::Level::kQ2, copts);
    const mpz_class y = varieties::count_points({varieties::VarietyKind::kY, n}, ctx, field::Level::kQ2, copts);
    out.push_back(value_check("varieties.torsor_ratio_over_q2", mpz_class(y * static_cast<unsigned long>(q + 1)).get_str(),
                              ytilde.get_str()));
  }

  for (bool with_u : {false, true}) {
    if (with_u && !odd) continue;
    bool grid_ok = true;
    bool transversal = true;
    for (const auto& row : varieties::fixed_point_grid(ctx, with_u, opts.workers)) {
      grid_ok = grid_ok && row.report.total == row.expected && row.report.points_verified &&
                row.report.sigma_equations_hold;
      transversal = transversal && row.report.all_transversal;
    }
    const std::string tag = with_u ? "with_u" : "without_u";
    out.push_back(boolean_check("fixed_points.grid_" + tag, grid_ok));
    out.push_back(boolean_check("fixed_points.transversal_" + tag, transversal));
  }

  const auto psi = cyclotomic::additive_character(ctx, 1);
  bool plane_ok = true;
  for (const auto& zeta : mu) {
    plane_ok = plane_ok && varieties::sheaf_trace_A2(zeta, false, psi, ctx) ==
                               cyclotomic::CycNumber::integer(static_cast<long>(q));
  }
  out.push_back(boolean_check("traces.plane_trace_equals_q", plane_ok));
  if (!odd) return;

  const auto g = cyclotomic::gauss_sum(ctx, psi);
  const field::FieldElement minus_one = ctx.neg(ctx.one(field::Level::kQ));
  const long sign = field::legendre_symbol(ctx, minus_one);
  bool gauss_ok = true;
  for (const auto& a : ctx.enumerate(field::Level::kQ)) {
    if (ctx.is_zero(a)) continue;
    const auto psi_a = cyclotomic::additive_character(ctx, static_cast<std::int64_t>(ctx.encode(a)));
    const auto ga = cyclotomic::gauss_sum(ctx, psi_a);
    gauss_ok = gauss_ok && ga * ga == cyclotomic::CycNumber::integer(sign * static_cast<long>(q)) &&
               ga == g * mpq_class(field::legendre_symbol(ctx, a));
  }
  out.push_back(boolean_check("gauss.square_and_twist_identities", gauss_ok));
  out.push_back(boolean_check("traces.nu_weighted_plane_trace_equals_gauss_sum",
                              varieties::nu_weighted_plane_trace(psi, ctx) == g));
  const auto discrepancy = varieties::weighted_product_trace(n, psi, ctx);
  const auto expected = g * mpq_class(characters::q_power(q, n - 1));
  out.push_back(value_check("traces.discrepancy_n", expected.to_string(), discrepancy.to_string()));
}

}  // namespace

VerifySummary verify_all(std::uint32_t n, std::uint64_t q, std::uint64_t ell, std::uint32_t p,
                         const VerifyOptions& opts) {
  if (!field::is_prime(p)) throw InvalidArgument("p must be prime");
  const std::uint32_t e = exponent_of(q, p);
  if (n < 2) throw InvalidArgument("n must be at least 2");
  characters::check_ell(p, ell, true);

  VerifySummary s;
  s.n = n;
  s.q = q;
  s.p = p;
  s.ell = ell;
  auto append = [&s](const std::string& prefix, const HoweTable& t) {
    for (const auto& c : t.checks) s.checks.push_back({prefix + c.name, c.expected, c.actual, c.pass});
  };
  append("ordinary.", theta_ordinary(n, q, p));
  append("mod_ell.", theta_mod_ell(n, q, p, ell));
  semisimplification_checks(n, q, p, ell, s.checks);
  dimension_checks(n, q, p, ell, s.checks);
  dihedral_checks(q, p, ell, s.checks);
  if (opts.include_varieties) {
    const field::TowerContext ctx(p, e);
    varieties_checks(n, ctx, opts, s.checks);
  }
  return s;
}

}  // namespace modhowe::howe
