#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "modhowe/cyclotomic/characters.hpp"

namespace modhowe::characters {

/// Character chi_k of mu_{q+1}, optionally with a Frobenius sign kappa (only
/// meaningful when chi^2 = 1).
struct IsotypicLabel {
  cyclotomic::CentralCharacter chi;
  std::optional<int> kappa;
};

/// q + 1 = ell^a * r with ell not dividing r.
struct EllSplit {
  std::uint32_t a = 0;
  std::uint64_t ell_part = 1;  // ell^a
  std::uint64_t r = 0;
  /// CRT idempotents mod q+1: e_ell = 1 mod ell^a, 0 mod r; e_r the reverse.
  std::uint64_t e_ell = 0;
  std::uint64_t e_r = 0;
};

EllSplit ell_split(std::uint64_t q, std::uint64_t ell);

/// Index of chi_{ell^a} and chi_r in the factorization chi_k = chi_{ell^a} chi_r.
std::uint64_t ell_part_index(const EllSplit& s, std::uint64_t q, std::uint64_t k);
std::uint64_t prime_to_ell_index(const EllSplit& s, std::uint64_t q, std::uint64_t k);

/// Characters of mu_{q+1} with values in mod-ell roots of unity, as indices k
/// (multiples of ell^a), ascending.
std::vector<std::uint64_t> mod_ell_character_indices(std::uint64_t q, std::uint64_t ell);

/// Validates (p, ell): ell prime, ell != p; UnsupportedCase for ell = 2 when
/// `require_odd` or ell = p.
void check_ell(std::uint32_t p, std::uint64_t ell, bool require_odd);

mpz_class q_power(std::uint64_t q, std::uint32_t n);

/// (q^n + (-1)^n q)/(q+1) for chi = 1, (q^n - (-1)^n)/(q+1) otherwise. n >= 2.
mpz_class dim_V_isotypic(std::uint32_t n, std::uint64_t q, const cyclotomic::CentralCharacter& chi);

/// Isotypic dimensions of the Weil representation of Sp_{2n}: with kappa for
/// chi^2 = 1, without kappa otherwise. n >= 1.
mpz_class dim_W_isotypic(std::uint32_t n, std::uint64_t q, std::uint32_t p, const IsotypicLabel& label);

/// All labels whose W-dimensions partition q^{2n}: (1,+), (1,-), (nu,+),
/// (nu,-) for p odd, and chi_k for every k with chi_k^2 != 1.
std::vector<IsotypicLabel> all_isotypic_labels(std::uint64_t q, std::uint32_t p);

/// Mod-ell dimension of the xi-part of the middle cohomology of Y_n. xi is a
/// character index; when ell | q+1 it must be a mod-ell character.
mpz_class dim_mod_ell_unitary(std::uint32_t n, std::uint64_t q, std::uint32_t p, std::uint64_t ell,
                              const cyclotomic::CentralCharacter& xi);

std::string label_name(const IsotypicLabel& label, std::uint64_t q);

}  // namespace modhowe::characters
