#include "modhowe/varieties/fixed_points.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "modhowe/errors.hpp"

namespace modhowe::varieties {

using field::FieldElement;
using field::GaloisField;
using field::Level;
using Elem = GaloisField::Elem;

namespace {

std::shared_ptr<const GaloisField> extension_field(std::uint32_t p, std::uint32_t degree) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const GaloisField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, degree}];
  if (!slot) slot = std::make_shared<const GaloisField>(p, degree);
  return slot;
}

using Mat4 = std::array<Elem, 16>;

Mat4 mat_mul(const GaloisField& f, const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Elem acc{};
      for (int k = 0; k < 4; ++k) acc = f.add(acc, f.mul(a[i * 4 + k], b[k * 4 + j]));
      r[i * 4 + j] = acc;
    }
  }
  return r;
}

Mat4 mat_frob(const GaloisField& f, const Mat4& a, std::uint32_t times_e) {
  Mat4 r{};
  for (int i = 0; i < 16; ++i) r[i] = f.frobenius(a[i], times_e);
  return r;
}

Mat4 mat_identity(const GaloisField& f) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i) r[i * 5] = f.one();
  return r;
}

struct Validated {
  FieldElement eta_q2;
  FieldElement zeta_q2;
};

Validated validate(const EndoSpec& endo, const field::TowerContext& ctx) {
  if (!endo.frobenius_included) {
    throw InvalidArgument("only Frobenius-twisted endomorphisms have finitely many fixed points");
  }
  if (!ctx.lies_in(endo.eta, Level::kQ)) throw InvalidArgument("eta must lie in F_q");
  if (endo.zeta.level == Level::kQ4 && !ctx.lies_in(endo.zeta, Level::kQ2)) {
    throw InvalidArgument("zeta must lie in mu_{q+1}");
  }
  Validated v;
  v.eta_q2 = ctx.embed(endo.eta.level == Level::kQ4 ? *ctx.descend(endo.eta, Level::kQ) : endo.eta, Level::kQ2);
  v.zeta_q2 = endo.zeta.level == Level::kQ4 ? *ctx.descend(endo.zeta, Level::kQ2) : ctx.embed(endo.zeta, Level::kQ2);
  if (!ctx.equal(ctx.pow(v.zeta_q2, ctx.q() + 1), ctx.one(Level::kQ2))) {
    throw InvalidArgument("zeta must lie in mu_{q+1}");
  }
  return v;
}

// Twisting matrix M over F_{q^2}: f(Z) = M Z^(q).
Mat4 twisting_matrix(const field::TowerContext& ctx, const EndoSpec& endo, const Validated& v) {
  const GaloisField& f = ctx.field(Level::kQ2);
  Mat4 m{};
  m[0] = f.one();
  m[1] = endo.with_u ? f.one() : f.zero();
  m[5] = f.one();
  m[10] = v.zeta_q2.coeffs;
  m[11] = f.mul(v.zeta_q2.coeffs, v.eta_q2.coeffs);
  m[15] = v.zeta_q2.coeffs;
  return m;
}

// alt(a, b) = a^q b - a b^q
struct SurfaceOps {
  const GaloisField& g;
  std::uint32_t e;
  Elem fq(const Elem& x) const { return g.frobenius(x, e); }
  Elem alt(const Elem& a, const Elem& b) const { return g.sub(g.mul(fq(a), b), g.mul(a, fq(b))); }
  Elem surface(const std::array<Elem, 4>& z) const { return g.add(alt(z[2], z[3]), alt(z[0], z[1])); }
  std::array<Elem, 4> apply(const std::array<Elem, 16>& m, const std::array<Elem, 4>& z) const {
    std::array<Elem, 4> zq;
    for (int j = 0; j < 4; ++j) zq[j] = fq(z[j]);
    std::array<Elem, 4> out{};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) out[i] = g.add(out[i], g.mul(m[i * 4 + j], zq[j]));
    }
    return out;
  }
};

std::size_t rank_over(const GaloisField& g, std::vector<std::vector<Elem>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t sel = rank;
    while (sel < rows && g.is_zero(a[sel][c])) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[rank]);
    const Elem inv = g.inv(a[rank][c]);
    for (auto& x : a[rank]) x = g.mul(x, inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || g.is_zero(a[r][c])) continue;
      const Elem factor = a[r][c];
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = g.sub(a[r][j], g.mul(factor, a[rank][j]));
    }
    ++rank;
  }
  return rank;
}

// Rank of (d phi - 1) on the tangent plane, phi the endomorphism in the affine
// chart of the point's first nonzero coordinate.
bool transversal_at(const SurfaceOps& ops, const std::array<Elem, 16>& m, const std::array<Elem, 4>& pt,
                    std::uint32_t q_mod_p, std::uint64_t q) {
  const GaloisField& g = ops.g;
  std::size_t c = 0;
  while (c < 4 && g.is_zero(pt[c])) ++c;
  std::vector<std::size_t> chart;
  for (std::size_t j = 0; j < 4; ++j) {
    if (j != c) chart.push_back(j);
  }
  const Elem qp = g.from_int(q_mod_p);
  auto qpow = [&](const Elem& x) { return q >= 1 ? g.pow(x, q - 1) : g.one(); };
  // Partial derivatives of the surface form at pt.
  std::array<Elem, 4> grad;
  grad[0] = g.sub(g.mul(qp, g.mul(qpow(pt[0]), pt[1])), ops.fq(pt[1]));
  grad[1] = g.sub(ops.fq(pt[0]), g.mul(qp, g.mul(pt[0], qpow(pt[1]))));
  grad[2] = g.sub(g.mul(qp, g.mul(qpow(pt[2]), pt[3])), ops.fq(pt[3]));
  grad[3] = g.sub(ops.fq(pt[2]), g.mul(qp, g.mul(pt[2], qpow(pt[3]))));
  std::vector<Elem> row;
  for (std::size_t j : chart) row.push_back(grad[j]);
  if (rank_over(g, {row}) == 0) return false;

  // Tangent plane basis: kernel of the gradient row restricted to the chart.
  std::size_t piv = 0;
  while (g.is_zero(row[piv])) ++piv;
  std::vector<std::vector<Elem>> tangent;
  for (std::size_t j = 0; j < 3; ++j) {
    if (j == piv) continue;
    std::vector<Elem> v(3, g.zero());
    v[j] = g.one();
    v[piv] = g.neg(g.mul(row[j], g.inv(row[piv])));
    tangent.push_back(v);
  }

  // Jacobian of Z -> F_i(Z)/F_c(Z) in the chart; F_i = sum_j m_ij Z_j^q.
  const auto fz = ops.apply(m, pt);
  const Elem fc_inv = g.inv(fz[c]);
  std::array<std::array<Elem, 4>, 4> dF{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) dF[i][j] = g.mul(qp, g.mul(m[i * 4 + j], qpow(pt[j])));
  }
  std::vector<std::vector<Elem>> a(3, std::vector<Elem>(3, g.zero()));
  for (std::size_t r = 0; r < 3; ++r) {
    const std::size_t i = chart[r];
    for (std::size_t s = 0; s < 3; ++s) {
      const std::size_t j = chart[s];
      const Elem num = g.sub(g.mul(dF[i][j], fz[c]), g.mul(fz[i], dF[c][j]));
      Elem d = g.mul(num, g.mul(fc_inv, fc_inv));
      if (r == s) d = g.sub(d, g.one());
      a[r][s] = d;
    }
  }
  std::vector<std::vector<Elem>> image(3, std::vector<Elem>(2, g.zero()));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t t = 0; t < 2; ++t) {
      Elem acc{};
      for (std::size_t s = 0; s < 3; ++s) acc = g.add(acc, g.mul(a[r][s], tangent[t][s]));
      image[r][t] = acc;
    }
  }
  return rank_over(g, image) == 2;
}

}  // namespace

std::uint64_t expected_fixed_points_with_u(const field::TowerContext& ctx, const FieldElement& eta,
                                           const FieldElement& zeta) {
  if (ctx.p() == 2) throw UnsupportedCase("the closed form with u requires p != 2");
  const std::uint64_t q = ctx.q();
  if (ctx.is_zero(eta)) return q * q + q + 1;
  const std::uint64_t j = field::discrete_log_mu(ctx, zeta, q + 1);
  const int nu = j % 2 == 0 ? 1 : -1;
  const int leg = field::legendre_symbol(ctx, ctx.neg(eta));
  return nu * leg == 1 ? 2 * q * q + q + 1 : q + 1;
}

std::uint64_t expected_fixed_points_without_u(const field::TowerContext& ctx, const FieldElement& eta) {
  const std::uint64_t q = ctx.q();
  return ctx.is_zero(eta) ? (q + 1) * (q * q + 1) : q * q + q + 1;
}

std::uint64_t expected_sigma1(const field::TowerContext& ctx, const EndoSpec& endo) {
  const std::uint64_t q = ctx.q();
  if (endo.with_u) {
    if (ctx.is_zero(endo.eta)) return q * q;
    return expected_fixed_points_with_u(ctx, endo.eta, endo.zeta) == q + 1 ? 0 : 2 * q * q;
  }
  return ctx.is_zero(endo.eta) ? q * q * q : 0;
}

FixedPointReport fixed_points_surface(const EndoSpec& endo, const field::TowerContext& ctx, bool keep_points) {
  const Validated v = validate(endo, ctx);
  const GaloisField& f2 = ctx.field(Level::kQ2);
  const std::uint32_t p = ctx.p();
  const std::uint32_t e = ctx.e();
  const std::uint64_t q = ctx.q();
  const Mat4 m = twisting_matrix(ctx, endo, v);

  FixedPointReport rep;
  Mat4 prod = m;
  const Mat4 id = mat_identity(f2);
  std::uint32_t k = 1;
  while (prod != id) {
    prod = mat_mul(f2, prod, mat_frob(f2, m, e * k));
    ++k;
    if (k > 8 * p) throw InternalError("twisting cocycle does not trivialize");
  }
  rep.cocycle_period = k;
  rep.field_degree = std::lcm(k, 2u);
  rep.field = extension_field(p, e * rep.field_degree);
  const GaloisField& g = *rep.field;
  const field::Embedding emb(f2, g);
  std::array<Elem, 16> mg;
  for (int i = 0; i < 16; ++i) mg[i] = emb.apply(m[i]);
  const SurfaceOps ops{g, e};

  // L(W) = W - M W^(q) as an F_p-linear map on G^4.
  const std::size_t dg = g.degree();
  const std::size_t dim = 4 * dg;
  field::FpMatrix lin(dim, dim, p);
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t b = 0; b < dg; ++b) {
      Elem basis{};
      basis[b] = 1;
      const Elem bq = ops.fq(basis);
      for (std::size_t i = 0; i < 4; ++i) {
        Elem val = g.neg(g.mul(mg[i * 4 + j], bq));
        if (i == j) val = g.add(val, basis);
        for (std::size_t c = 0; c < dg; ++c) lin.at(i * dg + c, j * dg + b) = val[c];
      }
    }
  }
  const auto kernel = lin.kernel();
  if (kernel.size() != 4 * e) {
    throw InternalError("solution space has F_p-dimension " + std::to_string(kernel.size()) + ", expected " +
                        std::to_string(4 * e));
  }

  const std::size_t nsets = endo.with_u ? 2 : 3;
  rep.sigma_partition.assign(nsets, 0);
  std::map<std::array<std::uint8_t, 4 * GaloisField::kMaxDegree>, FixedPoint> distinct;
  std::uint64_t nonzero_on_surface = 0;
  std::vector<std::uint32_t> combo(kernel.size(), 0);
  while (true) {
    std::vector<std::uint32_t> w(dim, 0);
    for (std::size_t i = 0; i < kernel.size(); ++i) {
      if (combo[i] == 0) continue;
      for (std::size_t t = 0; t < dim; ++t) w[t] += combo[i] * kernel[i][t];
    }
    std::array<Elem, 4> z{};
    bool nonzero = false;
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t c = 0; c < dg; ++c) {
        z[j][c] = static_cast<std::uint8_t>(w[j * dg + c] % p);
        nonzero = nonzero || z[j][c] != 0;
      }
    }
    if (nonzero && g.is_zero(ops.surface(z))) {
      ++nonzero_on_surface;
      std::size_t sigma;
      if (!g.is_zero(z[3])) {
        sigma = 1;
      } else if (endo.with_u || !g.is_zero(z[2])) {
        sigma = 2;
      } else {
        sigma = 3;
      }
      ++rep.sigma_partition[sigma - 1];
      std::size_t first = 0;
      while (g.is_zero(z[first])) ++first;
      const Elem scale = g.inv(z[first]);
      FixedPoint fp;
      fp.sigma = sigma;
      std::array<std::uint8_t, 4 * GaloisField::kMaxDegree> key{};
      for (std::size_t j = 0; j < 4; ++j) {
        fp.coords[j] = g.mul(z[j], scale);
        for (std::size_t c = 0; c < dg; ++c) key[j * GaloisField::kMaxDegree + c] = fp.coords[j][c];
      }
      distinct.emplace(key, fp);
    }
    std::size_t pos = 0;
    while (pos < combo.size() && ++combo[pos] == p) combo[pos++] = 0;
    if (pos == combo.size()) break;
  }
  if (nonzero_on_surface % (q - 1) != 0) throw InternalError("solution count not divisible by q - 1");
  for (auto& s : rep.sigma_partition) {
    if (s % (q - 1) != 0) throw InternalError("Sigma count not divisible by q - 1");
    s /= (q - 1);
  }
  rep.total = nonzero_on_surface / (q - 1);
  if (distinct.size() != rep.total) throw InternalError("projective classes disagree with the F_q^x count");

  const Elem zeta = emb.apply(v.zeta_q2.coeffs);
  const Elem eta = emb.apply(v.eta_q2.coeffs);
  const Elem neg_eta = g.neg(eta);
  const std::uint32_t q_mod_p = static_cast<std::uint32_t>(q % p);
  rep.points_verified = true;
  rep.sigma_equations_hold = true;
  rep.all_transversal = true;
  for (auto& [key, fp] : distinct) {
    const auto& z = fp.coords;
    const auto image = ops.apply(mg, z);
    bool ok = g.is_zero(ops.surface(z));
    bool image_nonzero = false;
    for (const auto& x : image) image_nonzero = image_nonzero || !g.is_zero(x);
    ok = ok && image_nonzero;
    for (int i = 0; i < 4 && ok; ++i) {
      for (int j = i + 1; j < 4; ++j) ok = ok && g.mul(image[i], z[j]) == g.mul(image[j], z[i]);
    }
    rep.points_verified = rep.points_verified && ok;

    bool in_sigma = true;
    auto twisted = [&](const Elem& x) { return ops.fq(x) == g.mul(zeta, x); };
    if (fp.sigma == 1) {
      const Elem inv3 = g.inv(z[3]);
      const Elem x = g.mul(z[0], inv3), y = g.mul(z[1], inv3), w = g.mul(z[2], inv3);
      const Elem zq_minus_z = g.sub(ops.fq(w), w);
      if (endo.with_u) {
        in_sigma = g.sub(ops.fq(x), g.mul(zeta, x)) == g.neg(g.mul(zeta, y)) && twisted(y) &&
                   g.mul(ops.fq(y), y) == neg_eta && zq_minus_z == neg_eta;
      } else {
        in_sigma = zq_minus_z == neg_eta && g.sub(g.mul(x, ops.fq(y)), g.mul(ops.fq(x), y)) == neg_eta &&
                   twisted(x) && twisted(y);
      }
    } else if (fp.sigma == 2) {
      if (endo.with_u) {
        // [x:0:1:0] with x^q = zeta x, or [1:0:0:0].
        in_sigma = g.is_zero(z[1]) && (g.is_zero(z[2]) ? z[0] == g.one() : twisted(g.mul(z[0], g.inv(z[2]))));
      } else {
        const Elem inv2 = g.inv(z[2]);
        in_sigma = twisted(g.mul(z[0], inv2)) && twisted(g.mul(z[1], inv2));
      }
    } else {
      const Elem other = g.is_zero(z[0]) ? g.zero() : z[1];
      in_sigma = ops.fq(other) == other && g.is_zero(z[2]) && g.is_zero(z[3]);
    }
    rep.sigma_equations_hold = rep.sigma_equations_hold && in_sigma;

    fp.transversal = transversal_at(ops, mg, z, q_mod_p, q);
    rep.all_transversal = rep.all_transversal && fp.transversal;
    if (keep_points) rep.points.push_back(fp);
  }
  return rep;
}

std::uint64_t fixed_points_bruteforce(const EndoSpec& endo, const field::TowerContext& ctx, std::uint64_t limit) {
  const Validated v = validate(endo, ctx);
  const std::uint32_t p = ctx.p();
  const std::uint32_t e = ctx.e();
  const auto g_ptr = extension_field(p, 2 * p * e);
  const GaloisField& g = *g_ptr;
  if (!g.size_fits() || g.size() > limit) {
    throw BudgetExceeded("brute-force fixed-point scan over F_{q^" + std::to_string(2 * p) + "} exceeds the budget");
  }
  const field::Embedding emb(ctx.field(Level::kQ2), g);
  const Elem zeta = emb.apply(v.zeta_q2.coeffs);
  const Elem eta = emb.apply(v.eta_q2.coeffs);
  const Elem s = endo.with_u ? g.one() : g.zero();
  const SurfaceOps ops{g, e};
  const auto elems = g.elements(limit);

  std::vector<Elem> ys, zs;
  for (const auto& y : elems) {
    if (ops.fq(y) == g.mul(zeta, y)) ys.push_back(y);
  }
  for (const auto& z : elems) {
    if (ops.fq(g.add(z, eta)) == z) zs.push_back(z);
  }
  std::uint64_t count = 0;
  for (const auto& y : ys) {
    const Elem sy = g.mul(s, y);
    for (const auto& x : elems) {
      if (ops.fq(g.add(x, sy)) != g.mul(zeta, x)) continue;
      // Chart Z3 = 1.
      const Elem rhs = ops.alt(x, y);
      for (const auto& z : zs) {
        if (g.is_zero(g.add(g.sub(ops.fq(z), z), rhs))) ++count;
      }
      // Chart Z3 = 0, Z2 = 1.
      if (g.is_zero(rhs)) ++count;
    }
  }
  // Chart Z3 = Z2 = 0, Z1 = 1.
  for (const auto& x : elems) {
    if (ops.fq(g.add(x, s)) == x && ops.fq(x) == x) ++count;
  }
  // [1:0:0:0].
  return count + 1;
}

std::vector<GridRow> fixed_point_grid(const field::TowerContext& ctx, bool with_u, unsigned workers) {
  const std::uint64_t q = ctx.q();
  const FieldElement g = field::mu_generator(ctx, q + 1);
  std::vector<GridRow> rows;
  std::vector<EndoSpec> specs;
  for (std::uint64_t code = 0; code < q; ++code) {
    FieldElement zeta = ctx.one(Level::kQ2);
    for (std::uint64_t j = 0; j <= q; ++j) {
      EndoSpec spec;
      spec.eta = ctx.from_encoding(code, Level::kQ);
      spec.zeta = zeta;
      spec.with_u = with_u;
      GridRow row;
      row.eta_code = code;
      row.zeta_log = j;
      row.with_u = with_u;
      row.expected = with_u ? expected_fixed_points_with_u(ctx, spec.eta, zeta)
                            : expected_fixed_points_without_u(ctx, spec.eta);
      rows.push_back(row);
      specs.push_back(spec);
      zeta = ctx.mul(zeta, g);
    }
  }
  const unsigned nw = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(rows.size())));
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < rows.size(); i += nw) rows[i].report = fixed_points_surface(specs[i], ctx);
  };
  if (nw == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < nw; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  return rows;
}

}  // namespace modhowe::varieties
