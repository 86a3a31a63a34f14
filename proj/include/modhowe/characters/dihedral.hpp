#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "modhowe/cyclotomic/cyc_number.hpp"

namespace modhowe::characters {

// O_2^-(F_q) is modelled as mu_{q+1} x| Z/2: the element (j, i) is g^j
// followed by i applications of Frobenius, which inverts mu_{q+1}.

struct DihedralElement {
  std::uint64_t j = 0;
  int i = 0;
};

DihedralElement dihedral_mul(std::uint64_t q, const DihedralElement& a, const DihedralElement& b);
std::uint64_t dihedral_order(std::uint64_t q, const DihedralElement& x);

struct ConjugacyClass {
  DihedralElement rep;
  std::uint64_t size = 0;
  std::uint64_t order = 0;
};

/// Classes in a fixed order: rotations g^j for j = 0..floor((q+1)/2), then the
/// reflection class of (0,1), then that of (1,1) when q+1 is even.
std::vector<ConjugacyClass> dihedral_classes(std::uint64_t q);

struct DihedralIrrep {
  enum class Kind { kOneDim, kTwoDim };
  Kind kind = Kind::kOneDim;
  /// OneDim: xi = chi_k with 2k = 0 mod q+1. TwoDim: orbit {k, q+1-k}, k < q+1-k.
  std::uint64_t k = 0;
  /// OneDim only.
  int kappa = 1;

  std::uint64_t dim() const { return kind == Kind::kOneDim ? 1 : 2; }
  bool operator==(const DihedralIrrep& o) const = default;
  bool operator<(const DihedralIrrep& o) const;
};

std::string irrep_name(const DihedralIrrep& rho, std::uint64_t q);
cyclotomic::CycNumber irrep_value(const DihedralIrrep& rho, std::uint64_t q, const DihedralElement& x);

/// Ordinary irreducibles, or (ell > 0) the mod-ell irreducibles indexed by
/// their Brauer lifts.
std::vector<DihedralIrrep> dihedral_irreps(std::uint64_t q, std::uint64_t ell = 0);

struct CharacterTable {
  std::uint64_t q = 0;
  std::uint64_t ell = 0;  // 0 = ordinary
  std::vector<DihedralIrrep> rows;
  std::vector<ConjugacyClass> classes;  // ell-regular classes in mod-ell mode
  std::vector<std::vector<cyclotomic::CycNumber>> values;
};

/// Ordinary (ell = 0) or mod-ell table. In mod-ell mode ell must be an odd
/// prime different from p.
CharacterTable o_minus_table(std::uint64_t q, std::uint32_t p, std::uint64_t ell = 0);

/// sum over classes |C| chi(C) conj(psi(C)) = |G| delta for all row pairs.
bool row_orthogonality_holds(const CharacterTable& t);
/// sum over rows chi(C) conj(chi(C')) = |C_G(C)| delta for all class pairs.
bool column_orthogonality_holds(const CharacterTable& t);

/// Multiplicities of mod-ell irreducibles in the reduction of rho, obtained by
/// solving the Brauer-character system exactly over Q.
std::vector<std::pair<DihedralIrrep, std::uint64_t>> brauer_decompose_dihedral(std::uint64_t q, std::uint32_t p,
                                                                               std::uint64_t ell,
                                                                               const DihedralIrrep& rho);

nlohmann::json table_to_json(const CharacterTable& t);

}  // namespace modhowe::characters
