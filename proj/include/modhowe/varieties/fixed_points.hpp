#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "modhowe/field/tower.hpp"

namespace modhowe::varieties {

/// The endomorphism [Z0:Z1:Z2:Z3] -> [(Z0 + Z1)^q : Z1^q : zeta (Z2 + eta Z3)^q : zeta Z3^q]
/// of the surface Xbar (with_u), or the same without the Z1 shear (F eta zeta).
struct EndoSpec {
  bool frobenius_included = true;
  field::FieldElement eta;   // in F_q
  field::FieldElement zeta;  // in mu_{q+1}
  bool with_u = true;
};

/// A fixed point in projective coordinates over F_{q^k}, first nonzero
/// coordinate equal to 1.
struct FixedPoint {
  std::array<field::GaloisField::Elem, 4> coords{};
  std::size_t sigma = 0;  // 1-based index of the Sigma set
  bool transversal = false;
};

struct FixedPointReport {
  std::uint64_t total = 0;
  /// Counts for Sigma_1, Sigma_2 (and Sigma_3 without u).
  std::vector<std::uint64_t> sigma_partition;
  /// Smallest k with M M^(q) ... M^(q^{k-1}) = 1 for the twisting matrix M.
  std::uint32_t cocycle_period = 0;
  /// The fixed points have coordinates in F_{q^field_degree}.
  std::uint32_t field_degree = 0;
  /// Every point satisfies the surface equation and f(P) = P projectively.
  bool points_verified = false;
  /// Every point lies in the Sigma set its coordinates select, per the
  /// explicit equations describing that set.
  bool sigma_equations_hold = false;
  /// (df - 1) restricted to the tangent plane has rank 2 at every point.
  bool all_transversal = false;
  std::vector<FixedPoint> points;
  /// The F_{q^field_degree} used for the coordinates.
  std::shared_ptr<const field::GaloisField> field;
};

/// Exact fixed points of the endomorphism on Xbar. Solves M W^(q) = W as an
/// F_p-linear system over F_{q^k}, k = lcm(cocycle period, 2); the solution
/// space is an F_q-space of dimension 4 whose nonzero vectors on the surface
/// give each projective fixed point q - 1 times.
FixedPointReport fixed_points_surface(const EndoSpec& endo, const field::TowerContext& ctx,
                                      bool keep_points = false);

/// Independent count by scanning every element of F_{q^{2p}} coordinate by
/// coordinate in each standard chart. Feasible for q = 3.
std::uint64_t fixed_points_bruteforce(const EndoSpec& endo, const field::TowerContext& ctx,
                                      std::uint64_t limit = 2'000'000);

/// Closed forms for the number of fixed points.
std::uint64_t expected_fixed_points_with_u(const field::TowerContext& ctx, const field::FieldElement& eta,
                                           const field::FieldElement& zeta);
std::uint64_t expected_fixed_points_without_u(const field::TowerContext& ctx, const field::FieldElement& eta);

/// Expected size of Sigma_1 (points with Z3 != 0).
std::uint64_t expected_sigma1(const field::TowerContext& ctx, const EndoSpec& endo);

struct GridRow {
  std::uint64_t eta_code = 0;
  std::uint64_t zeta_log = 0;
  bool with_u = true;
  std::uint64_t expected = 0;
  FixedPointReport report;
};

/// All (eta, zeta) pairs, zeta in mu_{q+1} ordered by discrete log.
std::vector<GridRow> fixed_point_grid(const field::TowerContext& ctx, bool with_u, unsigned workers = 1);

}  // namespace modhowe::varieties
