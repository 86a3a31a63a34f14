#include "modhowe/varieties/sheaf_trace.hpp"

#include "modhowe/errors.hpp"
#include "modhowe/varieties/fixed_points.hpp"

namespace modhowe::varieties {

using cyclotomic::CycNumber;
using field::Level;

CycNumber sheaf_trace_A2(const field::FieldElement& zeta, bool with_u, const cyclotomic::AdditiveCharacter& psi,
                         const field::TowerContext& ctx) {
  if (psi.is_trivial(ctx)) throw InvalidArgument("the plane trace needs a nontrivial additive character");
  CycNumber acc = CycNumber::zero(cyclotomic::conductor(ctx));
  for (const auto& eta : ctx.enumerate(Level::kQ)) {
    EndoSpec endo;
    endo.eta = eta;
    endo.zeta = zeta;
    endo.with_u = with_u;
    const FixedPointReport rep = fixed_points_surface(endo, ctx);
    const CycNumber weight = cyclotomic::evaluate_additive(ctx, psi, ctx.neg(eta));
    acc += weight * mpq_class(static_cast<unsigned long>(rep.total));
  }
  return acc.divide_by_q_power(ctx.q(), 2);
}

namespace {

CycNumber nu_weighted(std::uint32_t n, const cyclotomic::AdditiveCharacter& psi, const field::TowerContext& ctx) {
  if (ctx.p() == 2) throw UnsupportedCase("nu-weighted traces require p != 2");
  if (n == 0) throw InvalidArgument("n must be positive");
  const auto nu = cyclotomic::quadratic_character(ctx);
  CycNumber acc = CycNumber::zero(cyclotomic::conductor(ctx));
  for (const auto& zeta : field::enumerate_mu(ctx, ctx.q() + 1)) {
    CycNumber term = cyclotomic::evaluate_central(ctx, nu, zeta) * sheaf_trace_A2(zeta, true, psi, ctx);
    if (n > 1) term *= sheaf_trace_A2(zeta, false, psi, ctx).pow(n - 1);
    acc += term;
  }
  return acc / mpq_class(static_cast<unsigned long>(ctx.q() + 1));
}

}  // namespace

CycNumber nu_weighted_plane_trace(const cyclotomic::AdditiveCharacter& psi, const field::TowerContext& ctx) {
  return nu_weighted(1, psi, ctx);
}

CycNumber weighted_product_trace(std::uint32_t n, const cyclotomic::AdditiveCharacter& psi,
                              const field::TowerContext& ctx) {
  return nu_weighted(n, psi, ctx);
}

}  // namespace modhowe::varieties
