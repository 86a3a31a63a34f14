#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "modhowe/characters/dihedral.hpp"

namespace modhowe::howe {

enum class EntryStatus { kIrreducibleOrdinary, kIrreducible, kNontrivialExtension };

std::string status_name(EntryStatus s);

struct Constituent {
  mpz_class dim;
  std::string name;
};

/// Epistemic status of a table field.
inline constexpr const char* kComputed = "computed";
inline constexpr const char* kAsserted = "asserted-by-theorem";

struct HoweEntry {
  characters::DihedralIrrep tau;
  std::string tau_name;
  mpz_class dim_theta;
  EntryStatus status = EntryStatus::kIrreducibleOrdinary;
  std::vector<Constituent> constituents;
  std::string lusztig_note;
  std::string dim_provenance = kComputed;
  std::string status_provenance = kAsserted;
};

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct HoweTable {
  std::uint32_t n = 0;
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint64_t ell = 0;  // 0 = ordinary
  std::vector<HoweEntry> entries;
  /// Distinct entries share no irreducible constituent.
  bool pairwise_disjoint = true;
  std::vector<Check> checks;
};

/// Ordinary correspondence: one entry per irreducible of O_2^-(F_q). n >= 2.
HoweTable theta_ordinary(std::uint32_t n, std::uint64_t q, std::uint32_t p);

/// Mod-ell correspondence over the mod-ell parametrization. n >= 2, ell odd
/// prime, ell != p.
HoweTable theta_mod_ell(std::uint32_t n, std::uint64_t q, std::uint32_t p, std::uint64_t ell);

struct SemisimplificationRow {
  characters::DihedralIrrep pi;
  std::string pi_name;
  mpz_class dim_theta;  // dim of Theta(pi), equal to its reduction's dim
  std::vector<std::pair<characters::DihedralIrrep, std::uint64_t>> reduction;
  mpz_class dim_theta_ell;  // dim Theta_ell of the semisimplified reduction
  mpz_class deficit;        // dim_theta_ell - dim_theta
  /// chi_r = 1 and chi_{ell^a} != 1 for the central character of pi.
  bool exceptional_family = false;
};

std::vector<SemisimplificationRow> compare_semisimplifications(std::uint32_t n, std::uint64_t q, std::uint32_t p,
                                                               std::uint64_t ell);

/// Number of characters xi of mu_{q+1} into mod-ell roots of unity with xi^2 = 1.
std::uint64_t quadratic_mod_ell_count(std::uint64_t q, std::uint64_t ell);

}  // namespace modhowe::howe
