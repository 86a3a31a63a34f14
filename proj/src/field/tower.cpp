#include "modhowe/field/tower.hpp"

#include <algorithm>
#include <numeric>

#include "modhowe/errors.hpp"

namespace modhowe::field {

std::uint32_t level_exponent(Level level) { return static_cast<std::uint32_t>(level); }

std::string level_name(Level level) {
  switch (level) {
    case Level::kQ:
      return "q";
    case Level::kQ2:
      return "q^2";
    case Level::kQ4:
      return "q^4";
  }
  return "?";
}

Level parse_level(const std::string& text) {
  if (text == "1" || text == "q") return Level::kQ;
  if (text == "2" || text == "q2" || text == "q^2") return Level::kQ2;
  if (text == "4" || text == "q4" || text == "q^4") return Level::kQ4;
  throw InvalidArgument("unknown field level '" + text + "' (expected 1, 2 or 4)");
}

namespace {

PrimePower checked_prime_power(std::uint32_t p, std::uint32_t e) {
  PrimePower pp = PrimePower::make(p, e);
  if (pp.q > TowerContext::kMaxQ) {
    throw BudgetExceeded("q = " + std::to_string(pp.q) + " exceeds the enumeration bound q <= " +
                         std::to_string(TowerContext::kMaxQ));
  }
  return pp;
}

// Solves E c = x for c, E injective; nullopt if x is outside the image.
std::optional<std::vector<std::uint8_t>> solve_injective(const FpMatrix& e, const GaloisField::Elem& x) {
  FpMatrix aug(e.rows(), e.cols() + 1, e.p());
  for (std::size_t i = 0; i < e.rows(); ++i) {
    for (std::size_t j = 0; j < e.cols(); ++j) aug.at(i, j) = e.at(i, j);
    aug.at(i, e.cols()) = x[i];
  }
  const auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == e.cols()) return std::nullopt;
  std::vector<std::uint8_t> c(e.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) c[pivots[i]] = aug.at(i, e.cols());
  return c;
}

}  // namespace

TowerContext::TowerContext(std::uint32_t p, std::uint32_t e)
    : pp_(checked_prime_power(p, e)),
      fq_(p, e),
      fq2_(p, 2 * e),
      fq4_(p, 4 * e),
      q_to_q2_(fq_, fq2_),
      q2_to_q4_(fq2_, fq4_),
      q_to_q4_(q2_to_q4_.matrix() * q_to_q2_.matrix()) {}

const GaloisField& TowerContext::field(Level level) const {
  switch (level) {
    case Level::kQ:
      return fq_;
    case Level::kQ2:
      return fq2_;
    case Level::kQ4:
      return fq4_;
  }
  throw InvalidArgument("bad level");
}

std::uint64_t TowerContext::level_size(Level level) const { return field(level).size(); }

FieldElement TowerContext::zero(Level level) const { return {level, {}}; }
FieldElement TowerContext::one(Level level) const { return {level, field(level).one()}; }

FieldElement TowerContext::from_int(std::int64_t c, Level level) const {
  return {level, field(level).from_int(c)};
}

FieldElement TowerContext::from_encoding(std::uint64_t code, Level level) const {
  return {level, field(level).decode(code)};
}

std::uint64_t TowerContext::encode(const FieldElement& x) const { return field(x.level).encode(x.coeffs); }

FieldElement TowerContext::embed(const FieldElement& x, Level target) const {
  if (level_exponent(target) < level_exponent(x.level)) {
    throw InvalidArgument("embed target is smaller than the source level");
  }
  if (target == x.level) return x;
  FieldElement out{target, {}};
  const GaloisField& big = field(target);
  if (x.level == Level::kQ && target == Level::kQ2) {
    out.coeffs = q_to_q2_.apply(x.coeffs);
  } else if (x.level == Level::kQ2 && target == Level::kQ4) {
    out.coeffs = q2_to_q4_.apply(x.coeffs);
  } else {
    const auto v = q_to_q4_.apply(fq_.to_vector(x.coeffs));
    out.coeffs = big.from_vector(v);
  }
  return out;
}

std::optional<FieldElement> TowerContext::descend(const FieldElement& x, Level target) const {
  if (level_exponent(target) > level_exponent(x.level)) {
    throw InvalidArgument("descend target is larger than the source level");
  }
  if (target == x.level) return x;
  const FpMatrix* m = nullptr;
  if (x.level == Level::kQ2) {
    m = &q_to_q2_.matrix();
  } else if (target == Level::kQ2) {
    m = &q2_to_q4_.matrix();
  } else {
    m = &q_to_q4_;
  }
  const auto c = solve_injective(*m, x.coeffs);
  if (!c) return std::nullopt;
  return FieldElement{target, field(target).from_vector(*c)};
}

bool TowerContext::lies_in(const FieldElement& x, Level sub) const { return descend(x, sub).has_value(); }

namespace {

Level common_level(Level a, Level b) {
  return level_exponent(a) >= level_exponent(b) ? a : b;
}

}  // namespace

FieldElement TowerContext::add(const FieldElement& a, const FieldElement& b) const {
  const Level l = common_level(a.level, b.level);
  return {l, field(l).add(embed(a, l).coeffs, embed(b, l).coeffs)};
}

FieldElement TowerContext::sub(const FieldElement& a, const FieldElement& b) const {
  const Level l = common_level(a.level, b.level);
  return {l, field(l).sub(embed(a, l).coeffs, embed(b, l).coeffs)};
}

FieldElement TowerContext::mul(const FieldElement& a, const FieldElement& b) const {
  const Level l = common_level(a.level, b.level);
  return {l, field(l).mul(embed(a, l).coeffs, embed(b, l).coeffs)};
}

FieldElement TowerContext::neg(const FieldElement& a) const { return {a.level, field(a.level).neg(a.coeffs)}; }
FieldElement TowerContext::inv(const FieldElement& a) const { return {a.level, field(a.level).inv(a.coeffs)}; }

FieldElement TowerContext::pow(const FieldElement& a, std::uint64_t k) const {
  return {a.level, field(a.level).pow(a.coeffs, k)};
}

bool TowerContext::is_zero(const FieldElement& a) const { return field(a.level).is_zero(a.coeffs); }

bool TowerContext::equal(const FieldElement& a, const FieldElement& b) const {
  const Level l = common_level(a.level, b.level);
  return embed(a, l).coeffs == embed(b, l).coeffs;
}

FieldElement TowerContext::frobenius_q(const FieldElement& x, std::uint32_t times) const {
  return {x.level, field(x.level).frobenius(x.coeffs, pp_.e * times)};
}

std::vector<FieldElement> TowerContext::enumerate(Level level) const {
  std::vector<FieldElement> out;
  for (const auto& c : field(level).elements()) out.push_back({level, c});
  return out;
}

Embedding TowerContext::embedding_into(Level level, const GaloisField& big) const {
  return Embedding(field(level), big);
}

std::uint32_t trace_to_fp(const TowerContext& ctx, const FieldElement& x) {
  return ctx.field(x.level).trace_to_fp(x.coeffs);
}

FieldElement norm_q2_to_q(const TowerContext& ctx, const FieldElement& x) {
  if (x.level == Level::kQ4) throw InvalidArgument("norm_q2_to_q expects an element of F_{q^2}");
  const FieldElement y = ctx.embed(x, Level::kQ2);
  const FieldElement n = ctx.mul(y, ctx.frobenius_q(y));
  const auto down = ctx.descend(n, Level::kQ);
  if (!down) throw InternalError("norm left F_q");
  return *down;
}

namespace {

void require_divides_q2_minus_1(const TowerContext& ctx, std::uint64_t m) {
  const std::uint64_t order = ctx.q() * ctx.q() - 1;
  if (m == 0 || order % m != 0) {
    throw InvalidArgument("m = " + std::to_string(m) + " does not divide q^2 - 1 = " + std::to_string(order));
  }
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::vector<FieldElement> enumerate_mu(const TowerContext& ctx, std::uint64_t m) {
  require_divides_q2_minus_1(ctx, m);
  const GaloisField& f = ctx.field(Level::kQ2);
  std::vector<FieldElement> out;
  for (const auto& x : f.elements()) {
    if (!f.is_zero(x) && f.pow(x, m) == f.one()) out.push_back({Level::kQ2, x});
  }
  if (out.size() != m) throw InternalError("mu_m has the wrong size");
  return out;
}

FieldElement mu_generator(const TowerContext& ctx, std::uint64_t m) {
  require_divides_q2_minus_1(ctx, m);
  const GaloisField& f = ctx.field(Level::kQ2);
  const auto primes = prime_factors(m);
  for (const auto& x : f.elements()) {
    if (f.is_zero(x) || f.pow(x, m) != f.one()) continue;
    bool exact = true;
    for (std::uint64_t r : primes) {
      if (f.pow(x, m / r) == f.one()) {
        exact = false;
        break;
      }
    }
    if (exact) return {Level::kQ2, x};
  }
  throw InternalError("no generator of mu_m found");
}

std::uint64_t discrete_log_mu(const TowerContext& ctx, const FieldElement& zeta, std::uint64_t m) {
  if (zeta.level == Level::kQ4 && !ctx.lies_in(zeta, Level::kQ2)) {
    throw InvalidArgument("element is not in mu_m");
  }
  const FieldElement z = zeta.level == Level::kQ4 ? *ctx.descend(zeta, Level::kQ2) : ctx.embed(zeta, Level::kQ2);
  const GaloisField& f = ctx.field(Level::kQ2);
  const FieldElement g = mu_generator(ctx, m);
  GaloisField::Elem cur = f.one();
  for (std::uint64_t k = 0; k < m; ++k) {
    if (cur == z.coeffs) return k;
    cur = f.mul(cur, g.coeffs);
  }
  throw InvalidArgument("element is not in mu_" + std::to_string(m));
}

std::vector<FieldElement> f_q_epsilon_set(const TowerContext& ctx, int eps) {
  if (eps != 1 && eps != -1) throw InvalidArgument("epsilon must be +1 or -1");
  std::vector<FieldElement> out;
  for (const auto& a : ctx.enumerate(Level::kQ2)) {
    const FieldElement aq = ctx.frobenius_q(a);
    const FieldElement s = eps == 1 ? ctx.add(a, aq) : ctx.sub(a, aq);
    if (ctx.is_zero(s)) out.push_back(a);
  }
  return out;
}

int legendre_symbol(const TowerContext& ctx, const FieldElement& a) {
  if (ctx.p() == 2) throw UnsupportedCase("the Legendre symbol is undefined for p = 2");
  const auto x = ctx.descend(a, Level::kQ);
  if (!x) throw InvalidArgument("Legendre symbol argument is not in F_q");
  if (ctx.is_zero(*x)) throw InvalidArgument("Legendre symbol of zero");
  const FieldElement r = ctx.pow(*x, (ctx.q() - 1) / 2);
  if (ctx.equal(r, ctx.one(Level::kQ))) return 1;
  if (ctx.equal(r, ctx.from_int(-1))) return -1;
  throw InternalError("a^((q-1)/2) is not +-1");
}

}  // namespace modhowe::field
