#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "modhowe/field/fp_linear.hpp"

namespace modhowe::field {

/// True iff n is prime (trial division; inputs are small).
bool is_prime(std::uint64_t n);

/// q = p^e with p prime.
struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint64_t q = 0;

  /// Throws InvalidArgument unless p is prime and e >= 1.
  static PrimePower make(std::uint32_t p, std::uint32_t e);
};

/// Polynomials over F_p as little-endian coefficient vectors (index = degree).
namespace fp_poly {
using Poly = std::vector<std::uint32_t>;
void trim(Poly& f);
Poly mod(Poly a, const Poly& m, std::uint32_t p);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
bool is_irreducible(const Poly& f, std::uint32_t p);
/// Least monic irreducible polynomial of degree d; candidates are ordered by
/// the tuple (c_0, ..., c_{d-1}) with c_0 most significant.
Poly least_irreducible(std::uint32_t p, std::uint32_t d);
}  // namespace fp_poly

/// The field F_{p^d} in the polynomial basis 1, t, ..., t^{d-1} over the least
/// monic irreducible modulus. Elements are fixed-size coefficient arrays; the
/// encoding of an element is sum c_i p^i.
class GaloisField {
 public:
  static constexpr std::uint32_t kMaxDegree = 32;
  using Elem = std::array<std::uint8_t, kMaxDegree>;

  GaloisField(std::uint32_t p, std::uint32_t degree);

  std::uint32_t p() const { return p_; }
  std::uint32_t degree() const { return d_; }
  /// Whether the field size fits in 64 bits (required for encode/decode).
  bool size_fits() const { return size_fits_; }
  std::uint64_t size() const;
  const fp_poly::Poly& modulus() const { return modulus_; }

  Elem zero() const { return Elem{}; }
  Elem one() const;
  Elem from_int(std::int64_t c) const;
  /// The class of t, the chosen root of the modulus.
  Elem generator_t() const;

  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scale(const Elem& a, std::uint32_t c) const;
  Elem mul(const Elem& a, const Elem& b) const;
  /// Throws InvalidArgument on zero.
  Elem inv(const Elem& a) const;
  Elem pow(Elem a, std::uint64_t k) const;

  /// x^(p^k) via a cached F_p-linear matrix.
  Elem frobenius(const Elem& a, std::uint32_t k) const;
  /// Matrix of x -> x^(p^k) acting on coefficient columns.
  const FpMatrix& frobenius_matrix(std::uint32_t k) const;

  /// Absolute trace to F_p.
  std::uint32_t trace_to_fp(const Elem& a) const;

  std::uint64_t encode(const Elem& a) const;
  Elem decode(std::uint64_t code) const;

  std::vector<std::uint8_t> to_vector(const Elem& a) const;
  Elem from_vector(const std::vector<std::uint8_t>& v) const;

  /// Every element in encoding order. Throws BudgetExceeded above `limit`.
  std::vector<Elem> elements(std::uint64_t limit = 1u << 20) const;

  /// Human-readable polynomial form, e.g. "2t^2+1".
  std::string format(const Elem& a) const;

 private:
  std::uint32_t p_;
  std::uint32_t d_;
  bool size_fits_;
  fp_poly::Poly modulus_;
  mutable std::vector<FpMatrix> frob_cache_;  // filled eagerly in the ctor
};

/// An F_p-linear field embedding small -> big (small.degree | big.degree),
/// sending t_small to the least root (by encoding) of small's modulus in big.
class Embedding {
 public:
  Embedding() = default;
  Embedding(const GaloisField& small, const GaloisField& big);

  GaloisField::Elem apply(const GaloisField::Elem& x) const;
  const GaloisField::Elem& image_of_t() const { return root_; }
  const FpMatrix& matrix() const { return matrix_; }
  std::uint32_t small_degree() const { return small_degree_; }
  std::uint32_t big_degree() const { return big_degree_; }

 private:
  std::uint32_t small_degree_ = 0;
  std::uint32_t big_degree_ = 0;
  GaloisField::Elem root_{};
  FpMatrix matrix_;
};

/// Elements of `big` fixed by x -> x^(p^k), as an F_p-basis.
std::vector<GaloisField::Elem> fixed_field_basis(const GaloisField& big, std::uint32_t k);

}  // namespace modhowe::field
