#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modhowe/field/galois_field.hpp"

namespace modhowe::field {

/// Tower level, named by the exponent of q.
enum class Level : std::uint32_t { kQ = 1, kQ2 = 2, kQ4 = 4 };

std::uint32_t level_exponent(Level level);
std::string level_name(Level level);
/// Parses "1", "2", "4", "q", "q2", "q^2", "q4", "q^4".
Level parse_level(const std::string& text);

struct FieldElement {
  Level level = Level::kQ;
  GaloisField::Elem coeffs{};
};

/// Immutable tower F_p ⊂ F_q ⊂ F_{q^2} ⊂ F_{q^4}. Every level is built over
/// F_p with its own least irreducible modulus; embeddings send generators to
/// least roots, so the composite F_q -> F_{q^4} agrees with the two-step map.
class TowerContext {
 public:
  /// Largest q accepted: enumeration kernels walk F_{q^4}.
  static constexpr std::uint64_t kMaxQ = 16;

  TowerContext(std::uint32_t p, std::uint32_t e);

  const PrimePower& prime_power() const { return pp_; }
  std::uint32_t p() const { return pp_.p; }
  std::uint32_t e() const { return pp_.e; }
  std::uint64_t q() const { return pp_.q; }

  const GaloisField& field(Level level) const;
  std::uint64_t level_size(Level level) const;

  FieldElement zero(Level level) const;
  FieldElement one(Level level) const;
  FieldElement from_int(std::int64_t c, Level level = Level::kQ) const;
  FieldElement from_encoding(std::uint64_t code, Level level) const;
  std::uint64_t encode(const FieldElement& x) const;

  FieldElement embed(const FieldElement& x, Level target) const;
  /// Inverse of embed; nullopt if x does not lie in the target subfield.
  std::optional<FieldElement> descend(const FieldElement& x, Level target) const;
  bool lies_in(const FieldElement& x, Level sub) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, std::uint64_t k) const;
  bool is_zero(const FieldElement& a) const;
  /// Equality after embedding both into the larger level.
  bool equal(const FieldElement& a, const FieldElement& b) const;

  /// x -> x^q at the same level.
  FieldElement frobenius_q(const FieldElement& x, std::uint32_t times = 1) const;

  /// All elements of a level in encoding order.
  std::vector<FieldElement> enumerate(Level level) const;

  /// Embedding of a tower level into an arbitrary extension field of F_p.
  Embedding embedding_into(Level level, const GaloisField& big) const;

 private:
  PrimePower pp_;
  GaloisField fq_;
  GaloisField fq2_;
  GaloisField fq4_;
  Embedding q_to_q2_;
  Embedding q2_to_q4_;
  FpMatrix q_to_q4_;
};

/// Tr_{F_{q^k}/F_p} for the element's level.
std::uint32_t trace_to_fp(const TowerContext& ctx, const FieldElement& x);
/// N_{F_{q^2}/F_q}(x) = x^{q+1}, returned at level q.
FieldElement norm_q2_to_q(const TowerContext& ctx, const FieldElement& x);

/// mu_m as a sorted list (by encoding) at level q^2. Requires m | q^2 - 1.
std::vector<FieldElement> enumerate_mu(const TowerContext& ctx, std::uint64_t m);
/// The least element of exact order m in F_{q^2}^x.
FieldElement mu_generator(const TowerContext& ctx, std::uint64_t m);
/// k in [0, m) with zeta = g^k for g = mu_generator(m).
std::uint64_t discrete_log_mu(const TowerContext& ctx, const FieldElement& zeta, std::uint64_t m);

/// {a in F_{q^2} : a + eps * a^q = 0}, sorted by encoding.
std::vector<FieldElement> f_q_epsilon_set(const TowerContext& ctx, int eps);

/// a^((q-1)/2) as +1 / -1 for a in F_q^x. Throws UnsupportedCase for p = 2.
int legendre_symbol(const TowerContext& ctx, const FieldElement& a);

}  // namespace modhowe::field
