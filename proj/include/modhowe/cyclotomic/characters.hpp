#pragma once

#include <cstdint>

#include "modhowe/cyclotomic/cyc_number.hpp"
#include "modhowe/field/tower.hpp"

namespace modhowe::cyclotomic {

/// The conductor p(q+1) used for every character value of the tower.
std::uint32_t conductor(const field::TowerContext& ctx);

/// psi_a(x) = zeta_p^{Tr(a x)}.
struct AdditiveCharacter {
  field::FieldElement a;
  bool is_trivial(const field::TowerContext& ctx) const { return ctx.is_zero(a); }
};

/// chi_k(g^j) = zeta_{q+1}^{k j} for the fixed generator g of mu_{q+1}.
struct CentralCharacter {
  std::uint64_t k = 0;
  bool is_trivial(std::uint64_t q) const { return k % (q + 1) == 0; }
  bool is_quadratic_or_trivial(std::uint64_t q) const { return (2 * k) % (q + 1) == 0; }
};

AdditiveCharacter additive_character(const field::TowerContext& ctx, std::int64_t a_encoding);
/// The quadratic character nu = chi_{(q+1)/2}; UnsupportedCase for p = 2.
CentralCharacter quadratic_character(const field::TowerContext& ctx);

/// Throws InvalidArgument if x is not in F_q.
CycNumber evaluate_additive(const field::TowerContext& ctx, const AdditiveCharacter& psi,
                            const field::FieldElement& x);
/// Throws InvalidArgument if zeta is not in mu_{q+1}.
CycNumber evaluate_central(const field::TowerContext& ctx, const CentralCharacter& chi,
                           const field::FieldElement& zeta);

/// G(psi) = sum over x in F_q^x of (x / F_q) psi(x). Requires p odd, psi nontrivial.
CycNumber gauss_sum(const field::TowerContext& ctx, const AdditiveCharacter& psi);

}  // namespace modhowe::cyclotomic
