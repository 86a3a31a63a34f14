#include "modhowe/field/galois_field.hpp"

#include <algorithm>
#include <limits>

#include "modhowe/errors.hpp"

namespace modhowe::field {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimePower PrimePower::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (e == 0) throw InvalidArgument("exponent e must be positive");
  PrimePower pp;
  pp.p = p;
  pp.e = e;
  pp.q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (pp.q > std::numeric_limits<std::uint64_t>::max() / p) {
      throw InvalidArgument("p^e overflows 64 bits");
    }
    pp.q *= p;
  }
  return pp;
}

namespace fp_poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint32_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return mod(std::move(r), m, p);
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

namespace {

Poly x_pow_p_iter(const Poly& f, std::uint32_t p, std::uint32_t k) {
  Poly x = mod(Poly{0, 1}, f, p);
  for (std::uint32_t it = 0; it < k; ++it) {
    Poly acc{1};
    Poly base = x;
    std::uint32_t e = p;
    while (e > 0) {
      if (e & 1u) acc = mul_mod(acc, base, f, p);
      base = mul_mod(base, base, f, p);
      e >>= 1;
    }
    x = std::move(acc);
  }
  return x;
}

Poly sub_x(Poly a, std::uint32_t p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  trim(a);
  return a;
}

}  // namespace

bool is_irreducible(const Poly& f_in, std::uint32_t p) {
  Poly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const auto d = static_cast<std::uint32_t>(f.size() - 1);
  if (d == 1) return true;
  if (!sub_x(x_pow_p_iter(f, p, d), p).empty()) return false;
  for (std::uint32_t r = 2; r <= d; ++r) {
    if (d % r != 0 || !is_prime(r)) continue;
    const Poly g = gcd(f, sub_x(x_pow_p_iter(f, p, d / r), p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Poly least_irreducible(std::uint32_t p, std::uint32_t d) {
  if (d == 0) throw InvalidArgument("degree must be positive");
  std::vector<std::uint32_t> digits(d, 0);  // digits[0] = c_0 is most significant
  if (d > 1) digits[0] = 1;
  auto has_root = [p](const Poly& f) {
    for (std::uint32_t a = 0; a < p; ++a) {
      std::uint64_t v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = (v * a + f[i]) % p;
      if (v == 0) return true;
    }
    return false;
  };
  while (true) {
    Poly f(d + 1, 0);
    for (std::uint32_t i = 0; i < d; ++i) f[i] = digits[i];
    f[d] = 1;
    if ((d == 1 || !has_root(f)) && is_irreducible(f, p)) return f;
    std::int64_t pos = static_cast<std::int64_t>(d) - 1;
    while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == p) {
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) throw InternalError("no irreducible polynomial found");
  }
}

}  // namespace fp_poly

GaloisField::GaloisField(std::uint32_t p, std::uint32_t degree) : p_(p), d_(degree) {
  if (!is_prime(p) || p >= 16) throw InvalidArgument("field characteristic must be a prime below 16");
  if (degree == 0 || degree > kMaxDegree) {
    throw InvalidArgument("field degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
  }
  size_fits_ = true;
  std::uint64_t s = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    if (s > std::numeric_limits<std::uint64_t>::max() / p_) {
      size_fits_ = false;
      break;
    }
    s *= p_;
  }
  modulus_ = fp_poly::least_irreducible(p_, d_);

  frob_cache_.reserve(d_);
  frob_cache_.push_back(FpMatrix::identity(d_, p_));
  FpMatrix step(d_, d_, p_);
  for (std::uint32_t j = 0; j < d_; ++j) {
    fp_poly::Poly tj(j + 1, 0);
    tj[j] = 1;
    fp_poly::Poly img{1};
    for (std::uint32_t k = 0; k < p_; ++k) img = fp_poly::mul_mod(img, tj, modulus_, p_);
    for (std::size_t i = 0; i < img.size(); ++i) step.at(i, j) = static_cast<std::uint8_t>(img[i]);
  }
  for (std::uint32_t k = 1; k < d_; ++k) frob_cache_.push_back(step * frob_cache_.back());
}

std::uint64_t GaloisField::size() const {
  if (!size_fits_) throw InvalidArgument("field size exceeds 64 bits");
  std::uint64_t s = 1;
  for (std::uint32_t i = 0; i < d_; ++i) s *= p_;
  return s;
}

GaloisField::Elem GaloisField::one() const {
  Elem e{};
  e[0] = 1;
  return e;
}

GaloisField::Elem GaloisField::from_int(std::int64_t c) const {
  Elem e{};
  const auto pp = static_cast<std::int64_t>(p_);
  e[0] = static_cast<std::uint8_t>(((c % pp) + pp) % pp);
  return e;
}

GaloisField::Elem GaloisField::generator_t() const {
  if (d_ == 1) return from_int(-static_cast<std::int64_t>(modulus_[0]));
  Elem e{};
  e[1] = 1;
  return e;
}

bool GaloisField::is_zero(const Elem& a) const {
  for (std::uint32_t i = 0; i < d_; ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

GaloisField::Elem GaloisField::add(const Elem& a, const Elem& b) const {
  Elem r{};
  for (std::uint32_t i = 0; i < d_; ++i) {
    const std::uint32_t s = a[i] + b[i];
    r[i] = static_cast<std::uint8_t>(s >= p_ ? s - p_ : s);
  }
  return r;
}

GaloisField::Elem GaloisField::sub(const Elem& a, const Elem& b) const {
  Elem r{};
  for (std::uint32_t i = 0; i < d_; ++i) {
    r[i] = static_cast<std::uint8_t>(a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i]);
  }
  return r;
}

GaloisField::Elem GaloisField::neg(const Elem& a) const { return sub(zero(), a); }

GaloisField::Elem GaloisField::scale(const Elem& a, std::uint32_t c) const {
  Elem r{};
  c %= p_;
  for (std::uint32_t i = 0; i < d_; ++i) r[i] = static_cast<std::uint8_t>(a[i] * c % p_);
  return r;
}

GaloisField::Elem GaloisField::mul(const Elem& a, const Elem& b) const {
  std::array<std::uint32_t, 2 * kMaxDegree> acc{};
  for (std::uint32_t i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < d_; ++j) acc[i + j] += static_cast<std::uint32_t>(a[i]) * b[j];
  }
  // Entries stay below 2^32: at most 32 products of size 15^2 between reductions.
  for (std::uint32_t k = 2 * d_ - 1; k-- > d_;) {
    const std::uint32_t c = acc[k] % p_;
    if (c == 0) continue;
    const std::uint32_t shift = k - d_;
    for (std::uint32_t i = 0; i < d_; ++i) {
      acc[shift + i] += c * (p_ - modulus_[i]);
    }
  }
  Elem r{};
  for (std::uint32_t i = 0; i < d_; ++i) r[i] = static_cast<std::uint8_t>(acc[i] % p_);
  return r;
}

GaloisField::Elem GaloisField::inv(const Elem& a) const {
  if (is_zero(a)) throw InvalidArgument("inverse of zero field element");
  // Extended Euclid on polynomials: s*a + t*m = g, g a nonzero constant.
  fp_poly::Poly r0 = modulus_;
  fp_poly::Poly r1(a.begin(), a.begin() + d_);
  fp_poly::trim(r1);
  fp_poly::Poly s0{}, s1{1};
  while (r1.size() > 1) {
    fp_poly::Poly quot(r0.size() - r1.size() + 1, 0);
    fp_poly::Poly rem = r0;
    const std::uint32_t lead_inv = inv_mod(r1.back(), p_);
    while (rem.size() >= r1.size() && !rem.empty()) {
      const std::uint32_t c = rem.back() * lead_inv % p_;
      const std::size_t shift = rem.size() - r1.size();
      quot[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) {
        rem[shift + i] = (rem[shift + i] + p_ - c * r1[i] % p_) % p_;
      }
      fp_poly::trim(rem);
    }
    // s2 = s0 - quot * s1
    fp_poly::Poly prod(quot.size() + s1.size(), 0);
    for (std::size_t i = 0; i < quot.size(); ++i) {
      for (std::size_t j = 0; j < s1.size(); ++j) prod[i + j] = (prod[i + j] + quot[i] * s1[j]) % p_;
    }
    fp_poly::Poly s2(std::max(prod.size(), s0.size()), 0);
    for (std::size_t i = 0; i < s2.size(); ++i) {
      const std::uint32_t x = i < s0.size() ? s0[i] : 0;
      const std::uint32_t y = i < prod.size() ? prod[i] : 0;
      s2[i] = (x + p_ - y) % p_;
    }
    fp_poly::trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const std::uint32_t c = inv_mod(r1.at(0), p_);
  s1 = fp_poly::mod(s1, modulus_, p_);
  Elem r{};
  for (std::size_t i = 0; i < s1.size(); ++i) r[i] = static_cast<std::uint8_t>(s1[i] * c % p_);
  return r;
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t k) const {
  Elem acc = one();
  while (k > 0) {
    if (k & 1u) acc = mul(acc, a);
    k >>= 1;
    if (k > 0) a = mul(a, a);
  }
  return acc;
}

const FpMatrix& GaloisField::frobenius_matrix(std::uint32_t k) const { return frob_cache_[k % d_]; }

GaloisField::Elem GaloisField::frobenius(const Elem& a, std::uint32_t k) const {
  const FpMatrix& m = frobenius_matrix(k);
  Elem r{};
  for (std::uint32_t i = 0; i < d_; ++i) {
    std::uint32_t acc = 0;
    const std::uint8_t* row = m.row(i);
    for (std::uint32_t j = 0; j < d_; ++j) acc += static_cast<std::uint32_t>(row[j]) * a[j];
    r[i] = static_cast<std::uint8_t>(acc % p_);
  }
  return r;
}

std::uint32_t GaloisField::trace_to_fp(const Elem& a) const {
  Elem acc{};
  for (std::uint32_t k = 0; k < d_; ++k) acc = add(acc, frobenius(a, k));
  for (std::uint32_t i = 1; i < d_; ++i) {
    if (acc[i] != 0) throw InternalError("trace left F_p");
  }
  return acc[0];
}

std::uint64_t GaloisField::encode(const Elem& a) const {
  if (!size_fits_) throw InvalidArgument("field too large for integer encoding");
  std::uint64_t code = 0;
  for (std::uint32_t i = d_; i-- > 0;) code = code * p_ + a[i];
  return code;
}

GaloisField::Elem GaloisField::decode(std::uint64_t code) const {
  Elem r{};
  for (std::uint32_t i = 0; i < d_; ++i) {
    r[i] = static_cast<std::uint8_t>(code % p_);
    code /= p_;
  }
  if (code != 0) throw InvalidArgument("encoding out of range");
  return r;
}

std::vector<std::uint8_t> GaloisField::to_vector(const Elem& a) const {
  return std::vector<std::uint8_t>(a.begin(), a.begin() + d_);
}

GaloisField::Elem GaloisField::from_vector(const std::vector<std::uint8_t>& v) const {
  if (v.size() != d_) throw InvalidArgument("coefficient vector has wrong length");
  Elem r{};
  for (std::uint32_t i = 0; i < d_; ++i) {
    if (v[i] >= p_) throw InvalidArgument("coefficient out of range");
    r[i] = v[i];
  }
  return r;
}

std::vector<GaloisField::Elem> GaloisField::elements(std::uint64_t limit) const {
  if (!size_fits_ || size() > limit) {
    throw BudgetExceeded("enumerating F_" + std::to_string(p_) + "^" + std::to_string(d_) +
                         " exceeds the element budget");
  }
  const std::uint64_t n = size();
  std::vector<Elem> out;
  out.reserve(n);
  Elem cur{};
  for (std::uint64_t i = 0; i < n; ++i) {
    out.push_back(cur);
    for (std::uint32_t j = 0; j < d_; ++j) {
      if (++cur[j] < p_) break;
      cur[j] = 0;
    }
  }
  return out;
}

std::string GaloisField::format(const Elem& a) const {
  std::string s;
  for (std::uint32_t i = d_; i-- > 0;) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += '+';
    if (i == 0 || a[i] != 1) s += std::to_string(a[i]);
    if (i >= 1) s += 't';
    if (i >= 2) s += '^' + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

namespace {

bool encoding_less(const GaloisField::Elem& a, const GaloisField::Elem& b, std::uint32_t d) {
  for (std::uint32_t i = d; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

std::vector<GaloisField::Elem> fixed_field_basis(const GaloisField& big, std::uint32_t k) {
  const FpMatrix diff = big.frobenius_matrix(k) - FpMatrix::identity(big.degree(), big.p());
  std::vector<GaloisField::Elem> basis;
  for (const auto& v : diff.kernel()) basis.push_back(big.from_vector(v));
  return basis;
}

Embedding::Embedding(const GaloisField& small, const GaloisField& big)
    : small_degree_(small.degree()), big_degree_(big.degree()), matrix_(big.degree(), small.degree(), big.p()) {
  if (small.p() != big.p() || big.degree() % small.degree() != 0) {
    throw InvalidArgument("no embedding between these fields");
  }
  const std::uint32_t p = big.p();
  const auto basis = fixed_field_basis(big, small.degree());
  if (basis.size() != small.degree()) throw InternalError("subfield basis has wrong dimension");

  const auto& mod = small.modulus();
  bool found = false;
  std::vector<std::uint32_t> coeffs(basis.size(), 0);
  while (true) {
    GaloisField::Elem x{};
    for (std::size_t i = 0; i < basis.size(); ++i) x = big.add(x, big.scale(basis[i], coeffs[i]));
    GaloisField::Elem val{};
    for (std::size_t i = mod.size(); i-- > 0;) val = big.add(big.mul(val, x), big.from_int(mod[i]));
    if (big.is_zero(val) && (!found || encoding_less(x, root_, big.degree()))) {
      root_ = x;
      found = true;
    }
    std::size_t pos = 0;
    while (pos < coeffs.size() && ++coeffs[pos] == p) coeffs[pos++] = 0;
    if (pos == coeffs.size()) break;
  }
  if (!found) throw InternalError("modulus has no root in the extension");

  GaloisField::Elem power = big.one();
  for (std::uint32_t j = 0; j < small.degree(); ++j) {
    for (std::uint32_t i = 0; i < big.degree(); ++i) matrix_.at(i, j) = power[i];
    power = big.mul(power, root_);
  }
}

GaloisField::Elem Embedding::apply(const GaloisField::Elem& x) const {
  GaloisField::Elem r{};
  const std::uint32_t p = matrix_.p();
  for (std::uint32_t i = 0; i < big_degree_; ++i) {
    std::uint32_t acc = 0;
    const std::uint8_t* row = matrix_.row(i);
    for (std::uint32_t j = 0; j < small_degree_; ++j) acc += static_cast<std::uint32_t>(row[j]) * x[j];
    r[i] = static_cast<std::uint8_t>(acc % p);
  }
  return r;
}

}  // namespace modhowe::field
