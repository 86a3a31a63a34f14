#include "modhowe/howe/howe_table.hpp"

#include <set>

#include "modhowe/characters/dimensions.hpp"
#include "modhowe/errors.hpp"

namespace modhowe::howe {

using characters::DihedralIrrep;

std::string status_name(EntryStatus s) {
  switch (s) {
    case EntryStatus::kIrreducibleOrdinary:
      return "IrreducibleOrdinary";
    case EntryStatus::kIrreducible:
      return "Irreducible";
    case EntryStatus::kNontrivialExtension:
      return "NontrivialExtensionOfTrivialByIrreducible";
  }
  return "?";
}

namespace {

void check_params(std::uint32_t n, std::uint64_t q, std::uint32_t p) {
  if (n < 2) throw InvalidArgument("the Howe tables need n >= 2");
  if (q < 2 || q % p != 0) throw InvalidArgument("q must be a power of p");
}

std::string xi_name(std::uint64_t k, std::uint64_t q) {
  if (k == 0) return "1";
  if (2 * k == q + 1) return "nu";
  return "chi_" + std::to_string(k);
}

std::string note_for(const DihedralIrrep& tau, std::uint64_t q) {
  if (tau.kind == DihedralIrrep::Kind::kTwoDim) {
    return "series {" + xi_name(tau.k, q) + "," + xi_name(q + 1 - tau.k, q) + "}";
  }
  return std::string("series ") + xi_name(tau.k, q) + "; Fr-eigenvalue sign " + (tau.kappa > 0 ? "+" : "-");
}

mpz_class theta_dim(std::uint32_t n, std::uint64_t q, std::uint32_t p, const DihedralIrrep& tau) {
  characters::IsotypicLabel label;
  label.chi.k = tau.k;
  if (tau.kind == DihedralIrrep::Kind::kOneDim) label.kappa = tau.kappa;
  return characters::dim_W_isotypic(n, q, p, label);
}

Check make_check(std::string name, const std::string& expected, const std::string& actual) {
  return {std::move(name), expected, actual, expected == actual};
}

std::string str(const mpz_class& v) { return v.get_str(); }

// Characters of mu_{q+1} with values in mod-ell roots of unity, found by
// testing the order of each chi_k directly.
std::vector<std::uint64_t> enumerate_mod_ell_characters(std::uint64_t q, std::uint64_t ell) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 0; k <= q; ++k) {
    std::uint64_t order = 1;
    while ((order * k) % (q + 1) != 0) ++order;
    if (ell == 0 || order % ell != 0) out.push_back(k);
  }
  return out;
}

void attach_table_checks(HoweTable& t) {
  const auto chars = enumerate_mod_ell_characters(t.q, t.ell);
  std::uint64_t quadratic = 0;
  for (auto k : chars) {
    if ((2 * k) % (t.q + 1) == 0) ++quadratic;
  }
  std::uint64_t orbits = 0, pairs = 0;
  std::set<std::pair<std::uint64_t, int>> seen;
  bool unique = true;
  for (const auto& e : t.entries) {
    if (e.tau.kind == DihedralIrrep::Kind::kTwoDim) {
      ++orbits;
    } else {
      ++pairs;
    }
    unique = seen.insert({e.tau.k, e.tau.kind == DihedralIrrep::Kind::kTwoDim ? 0 : e.tau.kappa}).second && unique;
  }
  t.checks.push_back(make_check("table.orbit_count", std::to_string((chars.size() - quadratic) / 2),
                                std::to_string(orbits)));
  t.checks.push_back(make_check("table.pair_count", std::to_string(2 * quadratic), std::to_string(pairs)));
  t.checks.push_back(make_check("table.entries_unique", "true", unique ? "true" : "false"));

  mpz_class total = 0;
  bool constituents_ok = true;
  bool flags_ok = true;
  const bool ell_divides = t.ell != 0 && (t.q + 1) % t.ell == 0;
  for (const auto& e : t.entries) {
    total += e.dim_theta * static_cast<unsigned long>(e.tau.dim());
    const bool expect_ext = ell_divides && e.tau.kind == DihedralIrrep::Kind::kOneDim && e.tau.k == 0 && e.tau.kappa > 0;
    flags_ok = flags_ok && (expect_ext == (e.status == EntryStatus::kNontrivialExtension));
    if (e.status == EntryStatus::kNontrivialExtension) {
      mpz_class sum = 0;
      for (const auto& c : e.constituents) sum += c.dim;
      constituents_ok = constituents_ok && sum == e.dim_theta && e.constituents.size() == 2;
    } else {
      constituents_ok = constituents_ok && e.constituents.empty();
    }
  }
  t.checks.push_back(make_check("table.extension_flag_iff_ell_divides_q_plus_1", "true", flags_ok ? "true" : "false"));
  t.checks.push_back(make_check("table.constituent_dims_sum", "true", constituents_ok ? "true" : "false"));
  t.checks.push_back(make_check("table.disjoint_tags", "true", t.pairwise_disjoint ? "true" : "false"));

  if (t.ell == 0) {
    t.checks.push_back(make_check("table.total_dimension", str(characters::q_power(t.q, 2 * t.n)), str(total)));
    return;
  }
  // Theta_ell dims against the mod-ell cohomology of Y'_{2n}: each [xi] row is
  // a whole xi-part, each sign pair splits one.
  bool dims_ok = true;
  for (auto k : chars) {
    if (2 * k > t.q + 1) continue;
    mpz_class got = 0;
    for (const auto& e : t.entries) {
      if (e.tau.k == k) got += e.dim_theta;
    }
    const mpz_class want = characters::dim_mod_ell_unitary(2 * t.n, t.q, t.p, t.ell, {k});
    dims_ok = dims_ok && got == want;
  }
  t.checks.push_back(make_check("table.dims_match_mod_ell_cohomology", "true", dims_ok ? "true" : "false"));
}

bool tags_distinct(const std::vector<HoweEntry>& entries) {
  std::set<std::string> tags;
  for (const auto& e : entries) tags.insert(e.lusztig_note);
  return tags.size() == entries.size();
}

}  // namespace

HoweTable theta_ordinary(std::uint32_t n, std::uint64_t q, std::uint32_t p) {
  check_params(n, q, p);
  HoweTable t;
  t.n = n;
  t.q = q;
  t.p = p;
  for (const auto& tau : characters::dihedral_irreps(q)) {
    HoweEntry e;
    e.tau = tau;
    e.tau_name = characters::irrep_name(tau, q);
    e.dim_theta = theta_dim(n, q, p, tau);
    e.status = EntryStatus::kIrreducibleOrdinary;
    e.lusztig_note = note_for(tau, q);
    t.entries.push_back(std::move(e));
  }
  t.pairwise_disjoint = tags_distinct(t.entries);
  attach_table_checks(t);
  return t;
}

HoweTable theta_mod_ell(std::uint32_t n, std::uint64_t q, std::uint32_t p, std::uint64_t ell) {
  check_params(n, q, p);
  characters::check_ell(p, ell, true);
  HoweTable t;
  t.n = n;
  t.q = q;
  t.p = p;
  t.ell = ell;
  const bool ell_divides = (q + 1) % ell == 0;
  for (const auto& tau : characters::dihedral_irreps(q, ell)) {
    HoweEntry e;
    e.tau = tau;
    e.tau_name = characters::irrep_name(tau, q);
    if (tau.kind == DihedralIrrep::Kind::kTwoDim) {
      e.dim_theta = characters::dim_mod_ell_unitary(2 * n, q, p, ell, {tau.k});
    } else {
      e.dim_theta = theta_dim(n, q, p, tau);
    }
    e.status = EntryStatus::kIrreducible;
    if (ell_divides && tau.k == 0 && tau.kappa > 0) {
      e.status = EntryStatus::kNontrivialExtension;
      e.constituents = {{e.dim_theta - 1, "ker delta^+"}, {1, "trivial"}};
    }
    e.lusztig_note = note_for(tau, q);
    t.entries.push_back(std::move(e));
  }
  t.pairwise_disjoint = tags_distinct(t.entries);
  attach_table_checks(t);
  return t;
}

std::uint64_t quadratic_mod_ell_count(std::uint64_t q, std::uint64_t ell) {
  std::uint64_t c = 0;
  for (std::uint64_t k : characters::mod_ell_character_indices(q, ell)) {
    if ((2 * k) % (q + 1) == 0) ++c;
  }
  return c;
}

std::vector<SemisimplificationRow> compare_semisimplifications(std::uint32_t n, std::uint64_t q, std::uint32_t p,
                                                               std::uint64_t ell) {
  const HoweTable ord = theta_ordinary(n, q, p);
  const HoweTable mod = theta_mod_ell(n, q, p, ell);
  const characters::EllSplit split = characters::ell_split(q, ell);
  std::vector<SemisimplificationRow> rows;
  for (const auto& entry : ord.entries) {
    SemisimplificationRow row;
    row.pi = entry.tau;
    row.pi_name = entry.tau_name;
    row.dim_theta = entry.dim_theta;
    row.reduction = characters::brauer_decompose_dihedral(q, p, ell, entry.tau);
    row.dim_theta_ell = 0;
    for (const auto& [tau, mult] : row.reduction) {
      const HoweEntry* match = nullptr;
      for (const auto& me : mod.entries) {
        if (me.tau == tau) match = &me;
      }
      if (match == nullptr) throw InternalError("reduction lands outside the mod-ell parametrization");
      row.dim_theta_ell += match->dim_theta * static_cast<unsigned long>(mult);
    }
    row.deficit = row.dim_theta_ell - row.dim_theta;
    const std::uint64_t k = entry.tau.k;
    row.exceptional_family = characters::prime_to_ell_index(split, q, k) == 0 &&
                             characters::ell_part_index(split, q, k) != 0;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace modhowe::howe
