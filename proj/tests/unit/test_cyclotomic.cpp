#include <random>

#include "doctest.h"
#include "modhowe/cyclotomic/characters.hpp"
#include "modhowe/cyclotomic/cyc_number.hpp"
#include "modhowe/errors.hpp"

using namespace modhowe;
using namespace modhowe::cyclotomic;
using field::Level;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallTowers = {{2, 1}, {3, 1}, {2, 2}, {5, 1},
                                                                            {7, 1}, {2, 3}, {3, 2}};

CycNumber random_cyc(std::mt19937& rng, std::uint32_t m) {
  CycNumber x = CycNumber::zero(m);
  for (int i = 0; i < 4; ++i) {
    const long k = static_cast<long>(rng() % m);
    mpq_class c(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
    c.canonicalize();
    x += CycNumber::root_of_unity(m, k) * c;
  }
  return x;
}

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(CyclotomicField::get(30)->phi() == 8);
  }

  TEST_CASE("roots of unity") {
    for (std::uint32_t m : {1u, 3u, 4u, 12u, 15u, 20u, 30u}) {
      const auto z = CycNumber::root_of_unity(m, 1);
      CHECK(z.pow(m) == CycNumber::one(m));
      CycNumber sum = CycNumber::zero(m);
      for (std::uint32_t k = 0; k < m; ++k) sum += CycNumber::root_of_unity(m, static_cast<long>(k));
      CHECK(sum == (m == 1 ? CycNumber::one(1) : CycNumber::zero(m)));
      CHECK(z * z.conj() == CycNumber::one(m));
    }
    CHECK(CycNumber::root_of_unity(4, 2) == CycNumber::integer(-1));
    CHECK(CycNumber::root_of_unity(12, 3) == CycNumber::root_of_unity(4, 1));
  }

  TEST_CASE("exact arithmetic on random elements") {
    std::mt19937 rng(3);
    for (std::uint32_t m : {12u, 20u, 24u, 30u, 70u}) {
      for (int trial = 0; trial < 30; ++trial) {
        const auto x = random_cyc(rng, m), y = random_cyc(rng, m), z = random_cyc(rng, m);
        CHECK((x + y) - y == x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x.galois(1) == x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x / mpq_class(9)).divide_by_q_power(3, 0) * mpq_class(9) == x);
        CHECK(x.lift_to(2 * m) == x);
      }
    }
  }

  TEST_CASE("mixed conductors combine through the lcm") {
    const auto a = CycNumber::root_of_unity(3, 1);
    const auto b = CycNumber::root_of_unity(4, 1);
    const auto c = a * b;
    CHECK(c.m() == 12);
    CHECK(c == CycNumber::root_of_unity(12, 7));
    CHECK(a + CycNumber::rational(mpq_class(1, 2)) - a == CycNumber::rational(mpq_class(1, 2)));
  }

  TEST_CASE("rationality and Tate twists") {
    const auto x = CycNumber::integer(27);
    CHECK(x.is_rational());
    CHECK(x.divide_by_q_power(3, 2) == CycNumber::integer(3));
    CHECK(x.divide_by_q_power(3, 4).rational_value() == mpq_class(1, 3));
    CHECK_FALSE(CycNumber::root_of_unity(5, 1).is_rational());
    CHECK_THROWS_AS(CycNumber::root_of_unity(5, 1).rational_value(), InvalidArgument);
  }

  TEST_CASE("JSON round trip keeps decimal strings") {
    const auto x = CycNumber::root_of_unity(12, 5) * mpq_class(7, 3) + CycNumber::integer(2);
    const auto j = x.to_json();
    CHECK(j["conductor"] == 12);
    for (const auto& c : j["coefficients"]) CHECK(c.is_string());
    CHECK(CycNumber::from_json(j) == x);
  }

  TEST_CASE("additive characters are orthogonal") {
    for (auto [p, e] : kSmallTowers) {
      const field::TowerContext ctx(p, e);
      for (const auto& a : ctx.enumerate(Level::kQ)) {
        const AdditiveCharacter psi{a};
        CycNumber sum = CycNumber::zero(conductor(ctx));
        for (const auto& x : ctx.enumerate(Level::kQ)) sum += evaluate_additive(ctx, psi, x);
        CHECK(sum == CycNumber::integer(ctx.is_zero(a) ? static_cast<long>(ctx.q()) : 0));
        CHECK(evaluate_additive(ctx, psi, ctx.zero(Level::kQ)) == CycNumber::one(1));
      }
    }
  }

  TEST_CASE("central characters are orthogonal") {
    for (auto [p, e] : kSmallTowers) {
      const field::TowerContext ctx(p, e);
      const auto mu = field::enumerate_mu(ctx, ctx.q() + 1);
      for (std::uint64_t k = 0; k <= ctx.q(); ++k) {
        CycNumber sum = CycNumber::zero(conductor(ctx));
        for (const auto& z : mu) sum += evaluate_central(ctx, {k}, z);
        CHECK(sum == CycNumber::integer(k == 0 ? static_cast<long>(ctx.q() + 1) : 0));
      }
      CHECK(evaluate_central(ctx, {0}, mu.back()) == CycNumber::one(1));
    }
  }

  TEST_CASE("the quadratic character of mu_{q+1}") {
    for (auto [p, e] : kSmallTowers) {
      const field::TowerContext ctx(p, e);
      if (p == 2) {
        CHECK_THROWS_AS(quadratic_character(ctx), UnsupportedCase);
        continue;
      }
      const auto nu = quadratic_character(ctx);
      CycNumber sum = CycNumber::zero(conductor(ctx));
      int plus = 0;
      for (const auto& z : field::enumerate_mu(ctx, ctx.q() + 1)) {
        const auto v = evaluate_central(ctx, nu, z);
        CHECK((v == CycNumber::integer(1) || v == CycNumber::integer(-1)));
        if (v == CycNumber::integer(1)) ++plus;
        sum += v;
      }
      CHECK(sum.is_zero());
      CHECK(plus == static_cast<int>((ctx.q() + 1) / 2));
    }
  }

  TEST_CASE("Gauss sums") {
    {
      const field::TowerContext ctx(3, 1);
      const auto g = gauss_sum(ctx, additive_character(ctx, 1));
      CHECK(g * g == CycNumber::integer(-3));
    }
    {
      const field::TowerContext ctx(5, 1);
      const auto g = gauss_sum(ctx, additive_character(ctx, 1));
      CHECK(g * g == CycNumber::integer(5));
    }
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
      const field::TowerContext ctx(p, e);
      const long sign = field::legendre_symbol(ctx, ctx.from_int(-1));
      const auto g1 = gauss_sum(ctx, additive_character(ctx, 1));
      for (std::uint64_t code = 1; code < ctx.q(); ++code) {
        const auto ga = gauss_sum(ctx, additive_character(ctx, static_cast<std::int64_t>(code)));
        CHECK(ga * ga == CycNumber::integer(sign * static_cast<long>(ctx.q())));
        const int leg = field::legendre_symbol(ctx, ctx.from_encoding(code, Level::kQ));
        CHECK(ga == g1 * mpq_class(leg));
      }
    }
    const field::TowerContext even(2, 2);
    CHECK_THROWS_AS(gauss_sum(even, additive_character(even, 1)), UnsupportedCase);
    const field::TowerContext odd(3, 1);
    CHECK_THROWS_AS(gauss_sum(odd, additive_character(odd, 0)), InvalidArgument);
  }
}
