#include "modhowe/cyclotomic/characters.hpp"

#include "modhowe/errors.hpp"

namespace modhowe::cyclotomic {

using field::FieldElement;
using field::Level;

std::uint32_t conductor(const field::TowerContext& ctx) {
  return static_cast<std::uint32_t>(ctx.p() * (ctx.q() + 1));
}

AdditiveCharacter additive_character(const field::TowerContext& ctx, std::int64_t a_encoding) {
  if (a_encoding < 0 || static_cast<std::uint64_t>(a_encoding) >= ctx.q()) {
    throw InvalidArgument("additive character index must be an encoding in [0, q)");
  }
  return {ctx.from_encoding(static_cast<std::uint64_t>(a_encoding), Level::kQ)};
}

CentralCharacter quadratic_character(const field::TowerContext& ctx) {
  if (ctx.p() == 2) throw UnsupportedCase("the quadratic character nu requires p != 2");
  return {(ctx.q() + 1) / 2};
}

CycNumber evaluate_additive(const field::TowerContext& ctx, const AdditiveCharacter& psi,
                            const FieldElement& x) {
  const auto xq = ctx.descend(x, Level::kQ);
  const auto aq = ctx.descend(psi.a, Level::kQ);
  if (!xq || !aq) throw InvalidArgument("additive characters are evaluated on F_q");
  const std::uint32_t t = field::trace_to_fp(ctx, ctx.mul(*aq, *xq));
  return CycNumber::root_of_unity(conductor(ctx), static_cast<long>(t * (ctx.q() + 1)));
}

CycNumber evaluate_central(const field::TowerContext& ctx, const CentralCharacter& chi,
                           const FieldElement& zeta) {
  const std::uint64_t n = ctx.q() + 1;
  const std::uint64_t j = field::discrete_log_mu(ctx, zeta, n);
  const std::uint64_t exponent = (chi.k % n) * j % n;
  return CycNumber::root_of_unity(conductor(ctx), static_cast<long>(exponent * ctx.p()));
}

CycNumber gauss_sum(const field::TowerContext& ctx, const AdditiveCharacter& psi) {
  if (ctx.p() == 2) throw UnsupportedCase("quadratic Gauss sums require p != 2");
  if (psi.is_trivial(ctx)) throw InvalidArgument("Gauss sum of the trivial additive character");
  CycNumber g = CycNumber::zero(conductor(ctx));
  for (const auto& x : ctx.enumerate(Level::kQ)) {
    if (ctx.is_zero(x)) continue;
    const int leg = field::legendre_symbol(ctx, x);
    const CycNumber v = evaluate_additive(ctx, psi, x);
    if (leg == 1) {
      g += v;
    } else {
      g -= v;
    }
  }
  return g;
}

}  // namespace modhowe::cyclotomic
