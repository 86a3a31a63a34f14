#include <random>

#include "doctest.h"
#include "modhowe/errors.hpp"
#include "modhowe/field/tower.hpp"
#include "modhowe/varieties/count_engine.hpp"

using namespace modhowe;
using namespace modhowe::varieties;
using field::GaloisField;

namespace {

mpz_class brute_sum_count(const std::vector<std::vector<std::uint16_t>>& values, std::uint32_t target,
                          const AdditiveCodec& codec) {
  mpz_class count = 0;
  std::vector<std::size_t> idx(values.size(), 0);
  while (true) {
    std::uint32_t s = 0;
    for (std::size_t b = 0; b < values.size(); ++b) s = codec.add(s, values[b][idx[b]]);
    if (s == target) ++count;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == values[pos].size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return count;
}

}  // namespace

TEST_SUITE("count_engine") {
  TEST_CASE("additive codec matches field addition") {
    for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {3, 3}, {5, 2}, {7, 2}, {2, 8}}) {
      const GaloisField f(p, d);
      const AdditiveCodec codec(f);
      CHECK(codec.size() == f.size());
      const auto all = f.elements();
      for (const auto& a : all) {
        for (const auto& b : all) {
          CHECK(codec.add(static_cast<std::uint32_t>(f.encode(a)), static_cast<std::uint32_t>(f.encode(b))) ==
                f.encode(f.add(a, b)));
        }
        CHECK(codec.neg(static_cast<std::uint32_t>(f.encode(a))) == f.encode(f.neg(a)));
      }
    }
  }

  TEST_CASE("enumeration and convolution agree with brute force") {
    std::mt19937 rng(5);
    const GaloisField f(3, 3);
    const AdditiveCodec codec(f);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::vector<std::uint16_t>> values(1 + rng() % 4);
      for (auto& v : values) {
        v.resize(1 + rng() % 30);
        for (auto& x : v) x = static_cast<std::uint16_t>(rng() % 27);
      }
      const auto target = static_cast<std::uint32_t>(rng() % 27);
      const mpz_class expect = brute_sum_count(values, target, codec);
      for (auto method : {CountMethod::kEnumerate, CountMethod::kConvolve, CountMethod::kAuto}) {
        for (unsigned workers : {1u, 3u}) {
          CountOptions opts;
          opts.method = method;
          opts.workers = workers;
          CHECK(count_sum_equals(values, target, codec, opts) == expect);
        }
      }
    }
  }

  TEST_CASE("budget is enforced") {
    const GaloisField f(2, 8);
    const AdditiveCodec codec(f);
    std::vector<std::vector<std::uint16_t>> values(4, std::vector<std::uint16_t>(256));
    for (auto& v : values)
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<std::uint16_t>(i);
    CountOptions opts;
    opts.budget = 1000;
    CHECK_THROWS_AS(count_sum_equals(values, 0, codec, opts), BudgetExceeded);
    opts.budget = CountOptions::kDefaultBudget;
    CHECK(count_sum_equals(values, 0, codec, opts) == mpz_class(256) * 256 * 256);
  }

  TEST_CASE("projective space sizes") {
    CHECK(projective_space_size(3, 1) == 1);
    CHECK(projective_space_size(3, 2) == 4);
    CHECK(projective_space_size(4, 4) == 85);
  }

  TEST_CASE("affine and projective counts of a norm equation") {
    const field::TowerContext ctx(3, 1);
    const GaloisField& f = ctx.field(field::Level::kQ2);
    SeparableEquation eq;
    eq.num_coords = 2;
    eq.target = f.zero();
    for (std::size_t i = 0; i < 2; ++i) {
      eq.blocks.push_back({{i}, [](const GaloisField& g, const GaloisField::Elem* c) { return g.pow(c[0], 4); }});
    }
    CountOptions opts;
    // x^4 + y^4 = 0 over F_9: 1 + 8*4 affine points, 4 projective points.
    CHECK(count_affine(eq, f, {Coord::kFree, Coord::kFree}, opts) == 33);
    CHECK(count_projective(eq, f, opts) == 4);
    CHECK(count_affine(eq, f, {Coord::kOne, Coord::kFree}, opts) == 4);
    CHECK(count_affine(eq, f, {Coord::kZero, Coord::kFree}, opts) == 1);
  }
}
