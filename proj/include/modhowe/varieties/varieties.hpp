#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "modhowe/field/tower.hpp"
#include "modhowe/varieties/count_engine.hpp"

namespace modhowe::varieties {

/// Named varieties. For the primed kinds, n counts coordinate pairs: the
/// ambient space has coordinates (x_1..x_n, y_1..y_n).
enum class VarietyKind {
  kS,            // sum x_i^{q+1} = 0 in P^{n-1}
  kY,            // P^{n-1} minus S_n
  kYtilde,       // sum x_i^{q+1} = 1 in A^n
  kX,            // z^q + z = sum x_i^{q+1} in A^{n+1}
  kSprime,       // sum (x_i^q y_i - x_i y_i^q) = 0 in P^{2n-1}
  kYprime,       // P^{2n-1} minus S'_{2n}
  kYtildePrime,  // sum (x_i^q y_i - x_i y_i^q) = 1 in A^{2n}
  kXprime,       // z^q - z = sum (x_i y_i^q - x_i^q y_i) in A^{2n+1}
  kXbar,         // Z2^q Z3 - Z2 Z3^q = Z0 Z1^q - Z0^q Z1 in P^3
  kD,            // Xbar cap {Z3 = 0}
  kZprime,       // pi' = 0 in A^{2n}, pi' = sum (x_i y_i^q - x_i^q y_i)
  kZprime0,      // Z' minus the origin
  kUprime,       // pi' != 0 in A^{2n}
};

std::string variety_name(VarietyKind kind);
/// Accepts the names printed by variety_name (e.g. "Ytilde", "Xprime", "Xbar").
VarietyKind parse_variety(const std::string& name);
std::vector<VarietyKind> all_variety_kinds();
bool variety_uses_n(VarietyKind kind);

struct VarietySpec {
  VarietyKind kind = VarietyKind::kS;
  std::uint32_t n = 1;
};

/// Exact number of points over the given level of the tower.
mpz_class count_points(const VarietySpec& spec, const field::TowerContext& ctx, field::Level level,
                       const CountOptions& opts = {});

/// Same count computed by brute force over the ambient space, without the
/// separable decomposition. Only for tiny cases; throws BudgetExceeded above
/// `limit` ambient points.
mpz_class count_points_naive(const VarietySpec& spec, const field::TowerContext& ctx, field::Level level,
                             std::uint64_t limit = 5'000'000);

struct CountRow {
  std::string variety;
  std::uint32_t n = 0;
  std::string level;
  mpz_class count;
};

/// "variety,n,level,count" header plus rows; integers in decimal.
std::string counts_to_csv(const std::vector<CountRow>& rows);

/// Quotient models of Ytilde'_{2n}.
enum class DicksonQuotient { kU, kSL2 };

/// Points of {sum s_i t_i = 1} (U) or {sum s_i = 1} (SL2) in A^{2n} over a
/// level that is a power of q^2.
mpz_class dickson_quotient_count(std::uint32_t n, DicksonQuotient which, const field::TowerContext& ctx,
                                 field::Level level, const CountOptions& opts = {});

struct DicksonMapCheck {
  std::uint64_t source_points = 0;
  std::uint64_t images_on_target = 0;
  std::uint64_t distinct_images = 0;
  /// Points where the closed-form map has a vanishing denominator.
  std::uint64_t undefined = 0;
};

/// Applies the explicit quotient map to every point of Ytilde'_{2n}(level) and
/// checks that each image satisfies the target equation.
DicksonMapCheck dickson_map_check(std::uint32_t n, DicksonQuotient which, const field::TowerContext& ctx,
                                  field::Level level, std::uint64_t limit = 5'000'000);

}  // namespace modhowe::varieties
