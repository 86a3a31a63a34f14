#include "doctest.h"
#include "modhowe/cyclotomic/characters.hpp"
#include "modhowe/errors.hpp"
#include "modhowe/varieties/fixed_points.hpp"
#include "modhowe/varieties/sheaf_trace.hpp"

using namespace modhowe;
using namespace modhowe::varieties;
using cyclotomic::CycNumber;
using field::Level;

namespace {

std::uint64_t q_squared_plus(std::uint64_t q) { return q * q + q + 1; }

}  // namespace

TEST_SUITE("fixed_points") {
  TEST_CASE("closed forms at q = 3") {
    const field::TowerContext ctx(3, 1);
    const auto mu = field::enumerate_mu(ctx, 4);
    const auto zero = ctx.zero(Level::kQ);
    for (const auto& z : mu) {
      CHECK(expected_fixed_points_without_u(ctx, zero) == 4 * 10);
      CHECK(expected_fixed_points_with_u(ctx, zero, z) == q_squared_plus(3));
      for (std::int64_t c : {1, 2}) {
        const auto eta = ctx.from_int(c);
        CHECK(expected_fixed_points_without_u(ctx, eta) == 13);
        const auto v = expected_fixed_points_with_u(ctx, eta, z);
        CHECK((v == 2 * 9 + 3 + 1 || v == 4));
      }
    }
  }

  TEST_CASE("solver matches the closed forms, Sigma sizes and transversality") {
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
      const field::TowerContext ctx(p, e);
      for (bool with_u : {false, true}) {
        if (with_u && p == 2) continue;
        for (const auto& row : fixed_point_grid(ctx, with_u)) {
          INFO("q=" << ctx.q() << " with_u=" << with_u << " eta=" << row.eta_code << " log zeta=" << row.zeta_log);
          CHECK(row.report.total == row.expected);
          CHECK(row.report.points_verified);
          CHECK(row.report.sigma_equations_hold);
          CHECK(row.report.all_transversal);
          std::uint64_t sum = 0;
          for (auto s : row.report.sigma_partition) sum += s;
          CHECK(sum == row.report.total);
          const EndoSpec spec{true, ctx.from_encoding(row.eta_code, Level::kQ),
                              ctx.pow(field::mu_generator(ctx, ctx.q() + 1), row.zeta_log), with_u};
          CHECK(row.report.sigma_partition[0] == expected_sigma1(ctx, spec));
        }
      }
    }
  }

  TEST_CASE("solver agrees with chart-by-chart brute force at q = 3") {
    const field::TowerContext ctx(3, 1);
    for (bool with_u : {false, true}) {
      for (const auto& zeta : field::enumerate_mu(ctx, 4)) {
        for (const auto& eta : ctx.enumerate(Level::kQ)) {
          const EndoSpec spec{true, eta, zeta, with_u};
          CHECK(fixed_points_bruteforce(spec, ctx) == fixed_points_surface(spec, ctx).total);
        }
      }
    }
  }

  TEST_CASE("kept points are normalized and distinct") {
    const field::TowerContext ctx(3, 1);
    const EndoSpec spec{true, ctx.zero(Level::kQ), ctx.one(Level::kQ2), false};
    const auto rep = fixed_points_surface(spec, ctx, true);
    REQUIRE(rep.points.size() == rep.total);
    const auto& g = *rep.field;
    for (const auto& pt : rep.points) {
      std::size_t first = 0;
      while (g.is_zero(pt.coords[first])) ++first;
      CHECK(pt.coords[first] == g.one());
      CHECK(pt.transversal);
    }
  }

  TEST_CASE("invalid inputs") {
    const field::TowerContext ctx(3, 1);
    const auto not_in_mu = ctx.embed(ctx.from_int(1), Level::kQ2);
    const auto gen8 = field::mu_generator(ctx, 8);
    CHECK_THROWS_AS(fixed_points_surface({true, ctx.zero(Level::kQ), gen8, true}, ctx), InvalidArgument);
    CHECK_NOTHROW(fixed_points_surface({true, ctx.zero(Level::kQ), not_in_mu, true}, ctx));
    const field::TowerContext even(2, 1);
    CHECK_THROWS_AS(expected_fixed_points_with_u(even, even.zero(Level::kQ), even.one(Level::kQ2)), UnsupportedCase);
  }

  TEST_CASE("plane traces") {
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}}) {
      const field::TowerContext ctx(p, e);
      const auto psi = cyclotomic::additive_character(ctx, 1);
      for (const auto& zeta : field::enumerate_mu(ctx, ctx.q() + 1)) {
        CHECK(sheaf_trace_A2(zeta, false, psi, ctx) == CycNumber::integer(static_cast<long>(ctx.q())));
      }
      const auto g = cyclotomic::gauss_sum(ctx, psi);
      CHECK(nu_weighted_plane_trace(psi, ctx) == g);
      long qn = 1;
      for (std::uint32_t n = 1; n <= 3; ++n) {
        const auto d = weighted_product_trace(n, psi, ctx);
        CHECK(d == g * mpq_class(qn));
        CHECK_FALSE(d.is_zero());
        qn *= static_cast<long>(ctx.q());
      }
    }
  }
}
