#pragma once

#include <cstdint>

#include "modhowe/cyclotomic/characters.hpp"
#include "modhowe/field/tower.hpp"

namespace modhowe::varieties {

/// Twisted trace on the compactly supported cohomology of the plane with
/// coefficients in the Artin-Schreier sheaf pulled back along
/// (x, y) -> x y^q - x^q y:
///   (1/q^2) * sum over eta in F_q of psi^{-1}(eta) * #Fix(f_{eta,zeta}),
/// with the fixed-point counts enumerated on Xbar.
cyclotomic::CycNumber sheaf_trace_A2(const field::FieldElement& zeta, bool with_u,
                                     const cyclotomic::AdditiveCharacter& psi, const field::TowerContext& ctx);

/// (1/(q+1)) * sum over zeta of nu(zeta) * sheaf_trace_A2(zeta, with_u = true).
/// Expected to equal the Gauss sum G(psi). Requires p != 2.
cyclotomic::CycNumber nu_weighted_plane_trace(const cyclotomic::AdditiveCharacter& psi,
                                              const field::TowerContext& ctx);

/// (1/(q+1)) * sum over zeta of nu(zeta) * T_u(zeta) * T(zeta)^{n-1}, where T_u
/// and T are the plane traces with and without u. Expected to equal
/// q^{n-1} G(psi). Requires p != 2 and n >= 1.
cyclotomic::CycNumber weighted_product_trace(std::uint32_t n, const cyclotomic::AdditiveCharacter& psi,
                                          const field::TowerContext& ctx);

}  // namespace modhowe::varieties
