#include "modhowe/characters/dimensions.hpp"

#include "modhowe/errors.hpp"
#include "modhowe/field/galois_field.hpp"

namespace modhowe::characters {

EllSplit ell_split(std::uint64_t q, std::uint64_t ell) {
  EllSplit s;
  std::uint64_t r = q + 1;
  while (r % ell == 0) {
    r /= ell;
    s.ell_part *= ell;
    ++s.a;
  }
  s.r = r;
  const std::uint64_t n = q + 1;
  for (std::uint64_t x = 0; x < n; ++x) {
    if (x % s.ell_part == 1 % s.ell_part && x % r == 0) s.e_ell = x;
    if (x % r == 1 % r && x % s.ell_part == 0) s.e_r = x;
  }
  return s;
}

std::uint64_t ell_part_index(const EllSplit& s, std::uint64_t q, std::uint64_t k) { return k * s.e_ell % (q + 1); }

std::uint64_t prime_to_ell_index(const EllSplit& s, std::uint64_t q, std::uint64_t k) { return k * s.e_r % (q + 1); }

std::vector<std::uint64_t> mod_ell_character_indices(std::uint64_t q, std::uint64_t ell) {
  const EllSplit s = ell_split(q, ell);
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 0; k <= q; k += s.ell_part) out.push_back(k);
  return out;
}

void check_ell(std::uint32_t p, std::uint64_t ell, bool require_odd) {
  if (!field::is_prime(ell)) throw InvalidArgument("ell = " + std::to_string(ell) + " is not prime");
  if (ell == p) throw UnsupportedCase("ell must differ from the characteristic p");
  if (require_odd && ell == 2) throw UnsupportedCase("ell = 2 is outside the supported theory");
}

mpz_class q_power(std::uint64_t q, std::uint32_t n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, n);
  return r;
}

namespace {

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  if (a % b != 0) throw InternalError("dimension formula is not integral");
  return a / b;
}

int sign_pow(std::uint32_t n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

mpz_class dim_V_isotypic(std::uint32_t n, std::uint64_t q, const cyclotomic::CentralCharacter& chi) {
  if (n < 2) throw InvalidArgument("dim_V_isotypic needs n >= 2");
  const mpz_class qn = q_power(q, n);
  const mpz_class den = static_cast<unsigned long>(q + 1);
  if (chi.is_trivial(q)) return exact_div(qn + sign_pow(n) * mpz_class(static_cast<unsigned long>(q)), den);
  return exact_div(qn - sign_pow(n), den);
}

mpz_class dim_W_isotypic(std::uint32_t n, std::uint64_t q, std::uint32_t p, const IsotypicLabel& label) {
  if (n < 1) throw InvalidArgument("dim_W_isotypic needs n >= 1");
  const mpz_class qn = q_power(q, n);
  const mpz_class q2n = qn * qn;
  const mpz_class den = static_cast<unsigned long>(q + 1);
  const bool quadratic = label.chi.is_quadratic_or_trivial(q);
  if (label.kappa && !quadratic) throw InvalidArgument("a sign kappa requires chi^2 = 1");
  if (label.kappa && *label.kappa != 1 && *label.kappa != -1) throw InvalidArgument("kappa must be +1 or -1");
  if (label.chi.is_trivial(q)) {
    if (!label.kappa) return exact_div((qn + 1) * (qn + q) + (qn - 1) * (qn - q), 2 * den);
    const int k = *label.kappa;
    return exact_div((qn + k) * (qn + k * mpz_class(static_cast<unsigned long>(q))), 2 * den);
  }
  if (quadratic) {
    if (p == 2) throw UnsupportedCase("the label nu requires p != 2");
    if (!label.kappa) return exact_div(q2n - 1, den);
    return exact_div(q2n - 1, 2 * den);
  }
  return exact_div(q2n - 1, den);
}

std::vector<IsotypicLabel> all_isotypic_labels(std::uint64_t q, std::uint32_t p) {
  std::vector<IsotypicLabel> out;
  out.push_back({{0}, 1});
  out.push_back({{0}, -1});
  if (p != 2) {
    out.push_back({{(q + 1) / 2}, 1});
    out.push_back({{(q + 1) / 2}, -1});
  }
  for (std::uint64_t k = 1; k <= q; ++k) {
    if ((2 * k) % (q + 1) != 0) out.push_back({{k}, std::nullopt});
  }
  return out;
}

mpz_class dim_mod_ell_unitary(std::uint32_t n, std::uint64_t q, std::uint32_t p, std::uint64_t ell,
                              const cyclotomic::CentralCharacter& xi) {
  check_ell(p, ell, false);
  if (n < 2) throw InvalidArgument("dim_mod_ell_unitary needs n >= 2");
  if ((q + 1) % ell != 0) return dim_V_isotypic(n, q, xi);
  const EllSplit s = ell_split(q, ell);
  if (xi.k % (q + 1) % s.ell_part != 0) {
    throw InvalidArgument("chi_" + std::to_string(xi.k) + " is not a mod-ell character (ell^a must divide k)");
  }
  const mpz_class base = exact_div(q_power(q, n) - sign_pow(n), static_cast<unsigned long>(q + 1));
  if (!xi.is_trivial(q)) return base;
  return base + (1 + sign_pow(n)) / 2;
}

std::string label_name(const IsotypicLabel& label, std::uint64_t q) {
  std::string chi;
  const std::uint64_t k = label.chi.k % (q + 1);
  if (k == 0) {
    chi = "1";
  } else if (2 * k == q + 1) {
    chi = "nu";
  } else {
    chi = "chi_" + std::to_string(k);
  }
  if (!label.kappa) return chi;
  return "(" + chi + "," + (*label.kappa > 0 ? "+" : "-") + ")";
}

}  // namespace modhowe::characters
