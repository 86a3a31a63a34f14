#include "modhowe/cyclotomic/cyc_number.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "modhowe/errors.hpp"

namespace modhowe::cyclotomic {

std::vector<long> cyclotomic_polynomial(std::uint32_t m) {
  if (m == 0) throw InvalidArgument("conductor must be positive");
  // x^m - 1 divided by Phi_d for every proper divisor d of m.
  std::vector<long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (std::uint32_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const std::vector<long> den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<long> quot(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      const long c = num[k];
      quot[k - dd] = c;
      for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
    }
    num = std::move(quot);
  }
  return num;
}

CyclotomicField::CyclotomicField(std::uint32_t m) : m_(m), phi_poly_(modhowe::cyclotomic::cyclotomic_polynomial(m)) {
  phi_ = static_cast<std::uint32_t>(phi_poly_.size() - 1);
  powers_.assign(m_, std::vector<long>(phi_, 0));
  std::vector<long> cur(phi_, 0);
  cur[0] = 1;
  for (std::uint32_t k = 0; k < m_; ++k) {
    powers_[k] = cur;
    const long top = cur[phi_ - 1];
    for (std::uint32_t i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::uint32_t i = 0; i < phi_; ++i) cur[i] -= top * phi_poly_[i];
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(std::uint32_t m) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const CyclotomicField>> cache;
  if (m == 0) throw InvalidArgument("conductor must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const CyclotomicField>(m);
  cache.emplace(m, f);
  return f;
}

CycNumber::CycNumber() : CycNumber(1, mpq_class(0)) {}

CycNumber::CycNumber(std::uint32_t m, const mpq_class& r) : field_(CyclotomicField::get(m)) {
  coeffs_.assign(field_->phi(), mpq_class(0));
  coeffs_[0] = r;
}

CycNumber::CycNumber(std::shared_ptr<const CyclotomicField> f, std::vector<mpq_class> c)
    : field_(std::move(f)), coeffs_(std::move(c)) {}

CycNumber CycNumber::zero(std::uint32_t m) { return CycNumber(m, mpq_class(0)); }
CycNumber CycNumber::one(std::uint32_t m) { return CycNumber(m, mpq_class(1)); }
CycNumber CycNumber::rational(const mpq_class& r) { return CycNumber(1, r); }
CycNumber CycNumber::integer(long v) { return CycNumber(1, mpq_class(v)); }

CycNumber CycNumber::root_of_unity(std::uint32_t m, long k) {
  auto f = CyclotomicField::get(m);
  const long mm = static_cast<long>(m);
  const auto& pw = f->reduced_power(static_cast<std::uint32_t>(((k % mm) + mm) % mm));
  std::vector<mpq_class> c(pw.size());
  for (std::size_t i = 0; i < pw.size(); ++i) c[i] = pw[i];
  return CycNumber(f, std::move(c));
}

std::uint32_t CycNumber::common_conductor(const CycNumber& a, const CycNumber& b) {
  const std::uint32_t ma = a.m(), mb = b.m();
  if (ma == mb) return ma;
  return std::lcm(ma, mb);
}

CycNumber CycNumber::lift_to(std::uint32_t m_big) const {
  const std::uint32_t m0 = m();
  if (m_big == m0) return *this;
  if (m_big % m0 != 0) throw InvalidArgument("lift_to needs a multiple of the conductor");
  const std::uint32_t step = m_big / m0;
  CycNumber out = zero(m_big);
  const auto& f = *out.field_;
  std::vector<mpq_class> acc(f.phi(), mpq_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& pw = f.reduced_power(static_cast<std::uint32_t>(i * step % m_big));
    for (std::size_t j = 0; j < pw.size(); ++j) {
      if (pw[j] != 0) acc[j] += coeffs_[i] * pw[j];
    }
  }
  out.coeffs_ = std::move(acc);
  return out;
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
  CycNumber r = *this;
  r += o;
  return r;
}

CycNumber CycNumber::operator-(const CycNumber& o) const {
  CycNumber r = *this;
  r -= o;
  return r;
}

CycNumber CycNumber::operator*(const CycNumber& o) const {
  CycNumber r = *this;
  r *= o;
  return r;
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  const std::uint32_t mc = common_conductor(*this, o);
  if (mc != m()) *this = lift_to(mc);
  const CycNumber b = o.lift_to(mc);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
  const std::uint32_t mc = common_conductor(*this, o);
  if (mc != m()) *this = lift_to(mc);
  const CycNumber b = o.lift_to(mc);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  const std::uint32_t mc = common_conductor(*this, o);
  const CycNumber a = lift_to(mc);
  const CycNumber b = o.lift_to(mc);
  const auto& f = *a.field_;
  std::vector<mpq_class> by_exp(mc, mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      by_exp[(i + j) % mc] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  std::vector<mpq_class> acc(f.phi(), mpq_class(0));
  for (std::uint32_t k = 0; k < mc; ++k) {
    if (by_exp[k] == 0) continue;
    const auto& pw = f.reduced_power(k);
    for (std::size_t j = 0; j < pw.size(); ++j) {
      if (pw[j] != 0) acc[j] += by_exp[k] * pw[j];
    }
  }
  field_ = a.field_;
  coeffs_ = std::move(acc);
  return *this;
}

CycNumber CycNumber::operator*(const mpq_class& r) const {
  CycNumber out = *this;
  for (auto& c : out.coeffs_) c *= r;
  return out;
}

CycNumber CycNumber::operator/(const mpq_class& r) const {
  if (r == 0) throw InvalidArgument("division by zero");
  CycNumber out = *this;
  for (auto& c : out.coeffs_) c /= r;
  return out;
}

bool CycNumber::operator==(const CycNumber& o) const {
  const std::uint32_t mc = common_conductor(*this, o);
  const CycNumber a = lift_to(mc);
  const CycNumber b = o.lift_to(mc);
  return a.coeffs_ == b.coeffs_;
}

bool CycNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

mpq_class CycNumber::rational_value() const {
  if (!is_rational()) throw InvalidArgument("cyclotomic number is not rational: " + to_string());
  return coeffs_[0];
}

CycNumber CycNumber::galois(long k) const {
  const long mm = static_cast<long>(m());
  const long kk = ((k % mm) + mm) % mm;
  if (std::gcd(kk, mm) != 1) throw InvalidArgument("Galois exponent must be a unit mod m");
  CycNumber out = zero(m());
  const auto& f = *field_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& pw = f.reduced_power(static_cast<std::uint32_t>((static_cast<long>(i) * kk) % mm));
    for (std::size_t j = 0; j < pw.size(); ++j) {
      if (pw[j] != 0) out.coeffs_[j] += coeffs_[i] * pw[j];
    }
  }
  return out;
}

CycNumber CycNumber::conj() const { return galois(-1); }

CycNumber CycNumber::pow(std::uint32_t k) const {
  CycNumber acc = one(m());
  CycNumber base = *this;
  while (k > 0) {
    if (k & 1u) acc *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return acc;
}

CycNumber CycNumber::divide_by_q_power(std::uint64_t q, std::uint32_t t) const {
  mpz_class d = 1;
  for (std::uint32_t i = 0; i < t; ++i) d *= static_cast<unsigned long>(q);
  return *this / mpq_class(d);
}

std::string mpq_to_string(const mpq_class& r) { return r.get_str(10); }

mpq_class mpq_from_string(const std::string& s) {
  mpq_class r;
  if (r.set_str(s, 10) != 0) throw InvalidArgument("bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

std::string CycNumber::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += mpq_to_string(coeffs_[i]);
    if (i == 1) s += "*z";
    if (i >= 2) s += "*z^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

nlohmann::json CycNumber::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coeffs_) coeffs.push_back(mpq_to_string(c));
  return {{"conductor", m()}, {"coefficients", coeffs}};
}

CycNumber CycNumber::from_json(const nlohmann::json& j) {
  const auto m = j.at("conductor").get<std::uint32_t>();
  CycNumber out = zero(m);
  const auto& arr = j.at("coefficients");
  if (arr.size() != out.coeffs_.size()) throw InvalidArgument("coefficient array has wrong length");
  for (std::size_t i = 0; i < arr.size(); ++i) out.coeffs_[i] = mpq_from_string(arr[i].get<std::string>());
  return out;
}

std::pair<double, double> CycNumber::to_complex() const {
  double re = 0, im = 0;
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const double c = coeffs_[i].get_d();
    re += c * std::cos(two_pi * static_cast<double>(i) / m());
    im += c * std::sin(two_pi * static_cast<double>(i) / m());
  }
  return {re, im};
}

}  // namespace modhowe::cyclotomic
