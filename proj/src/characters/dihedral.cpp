#include "modhowe/characters/dihedral.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>

#include "modhowe/characters/dimensions.hpp"
#include "modhowe/errors.hpp"

namespace modhowe::characters {

using cyclotomic::CycNumber;

DihedralElement dihedral_mul(std::uint64_t q, const DihedralElement& a, const DihedralElement& b) {
  const std::uint64_t n = q + 1;
  const std::uint64_t jb = a.i == 0 ? b.j % n : (n - b.j % n) % n;
  return {(a.j + jb) % n, (a.i + b.i) % 2};
}

std::uint64_t dihedral_order(std::uint64_t q, const DihedralElement& x) {
  if (x.i == 1) return 2;
  const std::uint64_t n = q + 1;
  return n / std::gcd(x.j % n, n);
}

std::vector<ConjugacyClass> dihedral_classes(std::uint64_t q) {
  const std::uint64_t n = q + 1;
  std::vector<ConjugacyClass> out;
  for (std::uint64_t j = 0; 2 * j <= n; ++j) {
    const std::uint64_t size = (j == 0 || 2 * j == n) ? 1 : 2;
    out.push_back({{j, 0}, size, dihedral_order(q, {j, 0})});
  }
  if (n % 2 == 1) {
    out.push_back({{0, 1}, n, 2});
  } else {
    out.push_back({{0, 1}, n / 2, 2});
    out.push_back({{1, 1}, n / 2, 2});
  }
  return out;
}

bool DihedralIrrep::operator<(const DihedralIrrep& o) const {
  return std::tie(kind, k, kappa) < std::tie(o.kind, o.k, o.kappa);
}

std::string irrep_name(const DihedralIrrep& rho, std::uint64_t q) {
  if (rho.kind == DihedralIrrep::Kind::kTwoDim) return "sigma_" + std::to_string(rho.k);
  const std::string xi = rho.k == 0 ? "1" : (2 * rho.k == q + 1 ? "nu" : "chi_" + std::to_string(rho.k));
  return "(" + xi + "," + (rho.kappa > 0 ? "+" : "-") + ")";
}

CycNumber irrep_value(const DihedralIrrep& rho, std::uint64_t q, const DihedralElement& x) {
  const auto m = static_cast<std::uint32_t>(q + 1);
  const long e = static_cast<long>((rho.k * x.j) % (q + 1));
  if (rho.kind == DihedralIrrep::Kind::kOneDim) {
    CycNumber v = CycNumber::root_of_unity(m, e);
    return x.i == 1 && rho.kappa < 0 ? -v : v;
  }
  if (x.i == 1) return CycNumber::zero(m);
  return CycNumber::root_of_unity(m, e) + CycNumber::root_of_unity(m, -e);
}

std::vector<DihedralIrrep> dihedral_irreps(std::uint64_t q, std::uint64_t ell) {
  const std::uint64_t n = q + 1;
  std::vector<std::uint64_t> ks;
  if (ell == 0) {
    for (std::uint64_t k = 0; k < n; ++k) ks.push_back(k);
  } else {
    ks = mod_ell_character_indices(q, ell);
  }
  std::vector<DihedralIrrep> out;
  for (std::uint64_t k : ks) {
    if ((2 * k) % n == 0) {
      out.push_back({DihedralIrrep::Kind::kOneDim, k, 1});
      out.push_back({DihedralIrrep::Kind::kOneDim, k, -1});
    }
  }
  for (std::uint64_t k : ks) {
    if ((2 * k) % n != 0 && k < n - k) out.push_back({DihedralIrrep::Kind::kTwoDim, k, 1});
  }
  return out;
}

CharacterTable o_minus_table(std::uint64_t q, std::uint32_t p, std::uint64_t ell) {
  if (ell != 0) check_ell(p, ell, true);
  CharacterTable t;
  t.q = q;
  t.ell = ell;
  t.rows = dihedral_irreps(q, ell);
  for (const auto& c : dihedral_classes(q)) {
    if (ell == 0 || c.order % ell != 0) t.classes.push_back(c);
  }
  for (const auto& rho : t.rows) {
    std::vector<CycNumber> row;
    for (const auto& c : t.classes) row.push_back(irrep_value(rho, q, c.rep));
    t.values.push_back(std::move(row));
  }
  return t;
}

bool row_orthogonality_holds(const CharacterTable& t) {
  const std::uint64_t order = 2 * (t.q + 1);
  for (std::size_t a = 0; a < t.rows.size(); ++a) {
    for (std::size_t b = 0; b < t.rows.size(); ++b) {
      CycNumber s = CycNumber::zero(static_cast<std::uint32_t>(t.q + 1));
      for (std::size_t c = 0; c < t.classes.size(); ++c) {
        s += t.values[a][c] * t.values[b][c].conj() * mpq_class(static_cast<unsigned long>(t.classes[c].size));
      }
      const CycNumber expected = CycNumber::integer(a == b ? static_cast<long>(order) : 0);
      if (s != expected) return false;
    }
  }
  return true;
}

bool column_orthogonality_holds(const CharacterTable& t) {
  const std::uint64_t order = 2 * (t.q + 1);
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    for (std::size_t d = 0; d < t.classes.size(); ++d) {
      CycNumber s = CycNumber::zero(static_cast<std::uint32_t>(t.q + 1));
      for (std::size_t a = 0; a < t.rows.size(); ++a) s += t.values[a][c] * t.values[a][d].conj();
      const long centralizer = static_cast<long>(order / t.classes[c].size);
      if (s != CycNumber::integer(c == d ? centralizer : 0)) return false;
    }
  }
  return true;
}

namespace {

// Solves A x = b over Q; returns nullopt if inconsistent or not unique.
std::optional<std::vector<mpq_class>> solve_rational(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    std::swap(b[sel], b[r]);
    const mpq_class inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  if (pivots.size() != cols) return std::nullopt;
  std::vector<mpq_class> x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
  return x;
}

}  // namespace

std::vector<std::pair<DihedralIrrep, std::uint64_t>> brauer_decompose_dihedral(std::uint64_t q, std::uint32_t p,
                                                                               std::uint64_t ell,
                                                                               const DihedralIrrep& rho) {
  check_ell(p, ell, true);
  if (q % ell == 0) throw UnsupportedCase("ell must not divide q");
  const CharacterTable t = o_minus_table(q, p, ell);
  const auto m = static_cast<std::uint32_t>(q + 1);
  const std::uint32_t phi = cyclotomic::CyclotomicField::get(m)->phi();
  const std::size_t unknowns = t.rows.size();
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> b;
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    const CycNumber target = irrep_value(rho, q, t.classes[c].rep).lift_to(m);
    for (std::uint32_t coord = 0; coord < phi; ++coord) {
      std::vector<mpq_class> row(unknowns);
      for (std::size_t u = 0; u < unknowns; ++u) row[u] = t.values[u][c].lift_to(m).coefficients()[coord];
      a.push_back(std::move(row));
      b.push_back(target.coefficients()[coord]);
    }
  }
  const auto sol = solve_rational(std::move(a), std::move(b));
  if (!sol) throw InternalError("Brauer decomposition is not unique");
  std::vector<std::pair<DihedralIrrep, std::uint64_t>> out;
  for (std::size_t u = 0; u < unknowns; ++u) {
    const mpq_class& c = (*sol)[u];
    if (c.get_den() != 1 || c < 0) throw InternalError("Brauer decomposition is not a nonnegative integer combination");
    if (c != 0) out.emplace_back(t.rows[u], c.get_num().get_ui());
  }
  return out;
}

nlohmann::json table_to_json(const CharacterTable& t) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : t.classes) {
    classes.push_back({{"representative", {c.rep.j, c.rep.i}}, {"size", c.size}, {"order", c.order}});
  }
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : t.values[r]) vals.push_back(v.to_json());
    rows.push_back({{"label", irrep_name(t.rows[r], t.q)}, {"dim", t.rows[r].dim()}, {"values", vals}});
  }
  return {{"q", t.q},
          {"mode", t.ell == 0 ? "ordinary" : "mod-ell"},
          {"ell", t.ell},
          {"group_order", 2 * (t.q + 1)},
          {"classes", classes},
          {"rows", rows}};
}

}  // namespace modhowe::characters
