#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace modhowe::cyclotomic {

/// Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1) modulo the m-th
/// cyclotomic polynomial. Instances are shared and immutable.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(std::uint32_t m);

  std::uint32_t m() const { return m_; }
  std::uint32_t phi() const { return phi_; }
  /// Integer coefficients of Phi_m, low degree first, length phi + 1.
  const std::vector<long>& cyclotomic_polynomial() const { return phi_poly_; }
  /// zeta^k reduced to the power basis, for k in [0, m).
  const std::vector<long>& reduced_power(std::uint32_t k) const { return powers_[k % m_]; }

  explicit CyclotomicField(std::uint32_t m);

 private:
  std::uint32_t m_;
  std::uint32_t phi_;
  std::vector<long> phi_poly_;
  std::vector<std::vector<long>> powers_;
};

/// Integer polynomial Phi_m (coefficients low degree first).
std::vector<long> cyclotomic_polynomial(std::uint32_t m);

/// Exact element of Q(zeta_m) with rational coefficients in canonical form.
/// Values with conductor 1 are plain rationals and combine with any conductor.
class CycNumber {
 public:
  CycNumber();
  CycNumber(std::uint32_t m, const mpq_class& r);

  static CycNumber zero(std::uint32_t m);
  static CycNumber one(std::uint32_t m);
  static CycNumber rational(const mpq_class& r);
  static CycNumber integer(long v);
  /// zeta_m^k for any integer k.
  static CycNumber root_of_unity(std::uint32_t m, long k);

  std::uint32_t m() const { return field_->m(); }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  CycNumber operator+(const CycNumber& o) const;
  CycNumber operator-(const CycNumber& o) const;
  CycNumber operator*(const CycNumber& o) const;
  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber operator*(const mpq_class& r) const;
  CycNumber operator/(const mpq_class& r) const;
  bool operator==(const CycNumber& o) const;
  bool operator!=(const CycNumber& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws InvalidArgument unless is_rational().
  mpq_class rational_value() const;

  /// Image under zeta -> zeta^k, gcd(k, m) = 1.
  CycNumber galois(long k) const;
  /// Complex conjugate: zeta -> zeta^{-1}.
  CycNumber conj() const;
  CycNumber pow(std::uint32_t k) const;
  /// Exact division by q^t.
  CycNumber divide_by_q_power(std::uint64_t q, std::uint32_t t) const;
  /// Re-express in Q(zeta_m') for a multiple m' of m.
  CycNumber lift_to(std::uint32_t m_big) const;

  /// Sum over exponents, e.g. "3 + -1*z^2" with z = zeta_m.
  std::string to_string() const;
  /// {"conductor": m, "coefficients": ["num/den", ...]}.
  nlohmann::json to_json() const;
  static CycNumber from_json(const nlohmann::json& j);

  /// Numerical value for diagnostics.
  std::pair<double, double> to_complex() const;

 private:
  CycNumber(std::shared_ptr<const CyclotomicField> f, std::vector<mpq_class> c);
  static std::uint32_t common_conductor(const CycNumber& a, const CycNumber& b);

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<mpq_class> coeffs_;
};

std::string mpq_to_string(const mpq_class& r);
mpq_class mpq_from_string(const std::string& s);

}  // namespace modhowe::cyclotomic
