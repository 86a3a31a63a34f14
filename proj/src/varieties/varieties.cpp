#include "modhowe/varieties/varieties.hpp"

#include <set>
#include <sstream>

#include "modhowe/errors.hpp"

namespace modhowe::varieties {

using field::GaloisField;
using field::Level;
using Elem = GaloisField::Elem;

namespace {

struct NameEntry {
  VarietyKind kind;
  const char* name;
};

constexpr NameEntry kNames[] = {
    {VarietyKind::kS, "S"},
    {VarietyKind::kY, "Y"},
    {VarietyKind::kYtilde, "Ytilde"},
    {VarietyKind::kX, "X"},
    {VarietyKind::kSprime, "Sprime"},
    {VarietyKind::kYprime, "Yprime"},
    {VarietyKind::kYtildePrime, "Ytildeprime"},
    {VarietyKind::kXprime, "Xprime"},
    {VarietyKind::kXbar, "Xbar"},
    {VarietyKind::kD, "D"},
    {VarietyKind::kZprime, "Zprime"},
    {VarietyKind::kZprime0, "Zprime0"},
    {VarietyKind::kUprime, "Uprime"},
};

// x^q for the tower's q, inside an arbitrary level field.
struct Ops {
  const GaloisField& f;
  std::uint32_t e;
  Elem fq(const Elem& x) const { return f.frobenius(x, e); }
  Elem norm(const Elem& x) const { return f.mul(fq(x), x); }
  // x^q y - x y^q
  Elem alt(const Elem& x, const Elem& y) const { return f.sub(f.mul(fq(x), y), f.mul(x, fq(y))); }
};

using BlockFn = std::function<Elem(const GaloisField&, const Elem*)>;

BlockFn norm_fn(std::uint32_t e) {
  return [e](const GaloisField& f, const Elem* c) { return Ops{f, e}.norm(c[0]); };
}

// x^q y - x y^q on (x, y); sign -1 gives x y^q - x^q y.
BlockFn alt_fn(std::uint32_t e, int sign) {
  return [e, sign](const GaloisField& f, const Elem* c) {
    const Elem v = Ops{f, e}.alt(c[0], c[1]);
    return sign > 0 ? v : f.neg(v);
  };
}

SeparableEquation fermat(std::uint32_t n, std::uint32_t e, const GaloisField& f, std::int64_t target) {
  SeparableEquation eq;
  eq.num_coords = n;
  for (std::size_t i = 0; i < n; ++i) eq.blocks.push_back({{i}, norm_fn(e)});
  eq.target = f.from_int(target);
  return eq;
}

SeparableEquation symplectic(std::uint32_t n, std::uint32_t e, const GaloisField& f, int sign, std::int64_t target) {
  SeparableEquation eq;
  eq.num_coords = 2 * n;
  for (std::size_t i = 0; i < n; ++i) eq.blocks.push_back({{i, n + i}, alt_fn(e, sign)});
  eq.target = f.from_int(target);
  return eq;
}

void require_n(const VarietySpec& spec) {
  if (variety_uses_n(spec.kind) && spec.n == 0) throw InvalidArgument("n must be positive");
}

// Full equation LHS - RHS for the naive route, and whether membership means
// "equals zero" (true) or "is nonzero" (false).
struct NaiveModel {
  std::size_t num_coords;
  bool projective;
  std::function<bool(const Ops&, const std::vector<Elem>&)> member;
};

NaiveModel naive_model(const VarietySpec& spec) {
  const std::uint32_t n = spec.n;
  auto fermat_sum = [n](const Ops& o, const std::vector<Elem>& c) {
    Elem s{};
    for (std::uint32_t i = 0; i < n; ++i) s = o.f.add(s, o.norm(c[i]));
    return s;
  };
  auto pi_prime = [n](const Ops& o, const std::vector<Elem>& c) {
    Elem s{};
    for (std::uint32_t i = 0; i < n; ++i) s = o.f.sub(s, o.alt(c[i], c[n + i]));
    return s;
  };
  switch (spec.kind) {
    case VarietyKind::kS:
      return {n, true, [=](const Ops& o, const auto& c) { return o.f.is_zero(fermat_sum(o, c)); }};
    case VarietyKind::kY:
      return {n, true, [=](const Ops& o, const auto& c) { return !o.f.is_zero(fermat_sum(o, c)); }};
    case VarietyKind::kYtilde:
      return {n, false, [=](const Ops& o, const auto& c) { return fermat_sum(o, c) == o.f.one(); }};
    case VarietyKind::kX:
      return {n + 1, false, [=](const Ops& o, const auto& c) {
                const Elem z = c[n];
                return o.f.add(o.fq(z), z) == fermat_sum(o, c);
              }};
    case VarietyKind::kSprime:
      return {2 * n, true, [=](const Ops& o, const auto& c) { return o.f.is_zero(pi_prime(o, c)); }};
    case VarietyKind::kYprime:
      return {2 * n, true, [=](const Ops& o, const auto& c) { return !o.f.is_zero(pi_prime(o, c)); }};
    case VarietyKind::kYtildePrime:
      return {2 * n, false, [=](const Ops& o, const auto& c) { return o.f.neg(pi_prime(o, c)) == o.f.one(); }};
    case VarietyKind::kXprime:
      return {2 * n + 1, false, [=](const Ops& o, const auto& c) {
                const Elem z = c[2 * n];
                return o.f.sub(o.fq(z), z) == pi_prime(o, c);
              }};
    case VarietyKind::kXbar:
      return {4, true, [](const Ops& o, const auto& c) {
                return o.f.sub(o.alt(c[2], c[3]), o.f.neg(o.alt(c[0], c[1]))) == Elem{};
              }};
    case VarietyKind::kD:
      return {3, true, [](const Ops& o, const auto& c) { return o.f.is_zero(o.alt(c[0], c[1])); }};
    case VarietyKind::kZprime:
      return {2 * n, false, [=](const Ops& o, const auto& c) { return o.f.is_zero(pi_prime(o, c)); }};
    case VarietyKind::kZprime0:
      return {2 * n, false, [=](const Ops& o, const auto& c) {
                bool origin = true;
                for (const auto& x : c) origin = origin && o.f.is_zero(x);
                return !origin && o.f.is_zero(pi_prime(o, c));
              }};
    case VarietyKind::kUprime:
      return {2 * n, false, [=](const Ops& o, const auto& c) { return !o.f.is_zero(pi_prime(o, c)); }};
  }
  throw InvalidArgument("unknown variety");
}

}  // namespace

std::string variety_name(VarietyKind kind) {
  for (const auto& e : kNames) {
    if (e.kind == kind) return e.name;
  }
  return "?";
}

VarietyKind parse_variety(const std::string& name) {
  for (const auto& e : kNames) {
    if (name == e.name) return e.kind;
  }
  throw InvalidArgument("unknown variety '" + name + "'");
}

std::vector<VarietyKind> all_variety_kinds() {
  std::vector<VarietyKind> out;
  for (const auto& e : kNames) out.push_back(e.kind);
  return out;
}

bool variety_uses_n(VarietyKind kind) { return kind != VarietyKind::kXbar && kind != VarietyKind::kD; }

mpz_class count_points(const VarietySpec& spec, const field::TowerContext& ctx, Level level,
                       const CountOptions& opts) {
  require_n(spec);
  const GaloisField& f = ctx.field(level);
  const std::uint32_t e = ctx.e();
  const std::uint32_t n = spec.n;
  const mpz_class big_n = static_cast<unsigned long>(f.size());
  auto full = [](std::size_t k) { return std::vector<Coord>(k, Coord::kFree); };
  auto power = [&](std::size_t k) {
    mpz_class r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= big_n;
    return r;
  };

  switch (spec.kind) {
    case VarietyKind::kS:
      return count_projective(fermat(n, e, f, 0), f, opts);
    case VarietyKind::kY:
      return projective_space_size(f.size(), n) - count_projective(fermat(n, e, f, 0), f, opts);
    case VarietyKind::kYtilde:
      return count_affine(fermat(n, e, f, 1), f, full(n), opts);
    case VarietyKind::kX: {
      SeparableEquation eq = fermat(n, e, f, 0);
      eq.num_coords = n + 1;
      eq.blocks.push_back({{n}, [e](const GaloisField& g, const Elem* c) {
                             return g.neg(g.add(g.frobenius(c[0], e), c[0]));
                           }});
      return count_affine(eq, f, full(n + 1), opts);
    }
    case VarietyKind::kSprime:
      return count_projective(symplectic(n, e, f, 1, 0), f, opts);
    case VarietyKind::kYprime:
      return projective_space_size(f.size(), 2 * n) - count_projective(symplectic(n, e, f, 1, 0), f, opts);
    case VarietyKind::kYtildePrime:
      return count_affine(symplectic(n, e, f, 1, 1), f, full(2 * n), opts);
    case VarietyKind::kXprime: {
      SeparableEquation eq = symplectic(n, e, f, -1, 0);
      eq.num_coords = 2 * n + 1;
      eq.blocks.push_back({{2 * n}, [e](const GaloisField& g, const Elem* c) {
                             return g.neg(g.sub(g.frobenius(c[0], e), c[0]));
                           }});
      return count_affine(eq, f, full(2 * n + 1), opts);
    }
    case VarietyKind::kXbar: {
      SeparableEquation eq;
      eq.num_coords = 4;
      eq.blocks.push_back({{0, 1}, alt_fn(e, 1)});  // -(Z0 Z1^q - Z0^q Z1)
      eq.blocks.push_back({{2, 3}, alt_fn(e, 1)});
      eq.target = f.zero();
      return count_projective(eq, f, opts);
    }
    case VarietyKind::kD: {
      SeparableEquation eq;
      eq.num_coords = 3;
      eq.blocks.push_back({{0, 1}, alt_fn(e, 1)});
      eq.target = f.zero();
      return count_projective(eq, f, opts);
    }
    case VarietyKind::kZprime:
      return count_affine(symplectic(n, e, f, -1, 0), f, full(2 * n), opts);
    case VarietyKind::kZprime0:
      return count_affine(symplectic(n, e, f, -1, 0), f, full(2 * n), opts) - 1;
    case VarietyKind::kUprime:
      return power(2 * n) - count_affine(symplectic(n, e, f, -1, 0), f, full(2 * n), opts);
  }
  throw InvalidArgument("unknown variety");
}

mpz_class count_points_naive(const VarietySpec& spec, const field::TowerContext& ctx, Level level,
                             std::uint64_t limit) {
  require_n(spec);
  const GaloisField& f = ctx.field(level);
  const Ops ops{f, ctx.e()};
  const NaiveModel model = naive_model(spec);
  const std::vector<Elem> elems = f.elements();
  const std::uint64_t n = elems.size();
  long double ambient = 1;
  for (std::size_t i = 0; i < model.num_coords; ++i) ambient *= static_cast<long double>(n);
  if (ambient > static_cast<long double>(limit)) {
    throw BudgetExceeded("naive enumeration of " + std::to_string(static_cast<double>(ambient)) + " points");
  }
  std::vector<std::size_t> idx(model.num_coords, 0);
  std::vector<Elem> coords(model.num_coords, f.zero());
  mpz_class count = 0;
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) coords[i] = elems[idx[i]];
    bool normalized = true;
    if (model.projective) {
      std::size_t first = 0;
      while (first < coords.size() && f.is_zero(coords[first])) ++first;
      normalized = first < coords.size() && coords[first] == f.one();
    }
    if (normalized && model.member(ops, coords)) ++count;
    std::size_t pos = idx.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < n) break;
      idx[pos] = 0;
      if (pos == 0) return count;
    }
    if (idx.empty()) return count;
  }
}

std::string counts_to_csv(const std::vector<CountRow>& rows) {
  std::ostringstream out;
  out << "variety,n,level,count\n";
  for (const auto& r : rows) out << r.variety << ',' << r.n << ',' << r.level << ',' << r.count.get_str() << '\n';
  return out.str();
}

namespace {

void require_square_level(Level level) {
  if (level == Level::kQ) throw InvalidArgument("Dickson quotients are defined over powers of q^2");
}

}  // namespace

mpz_class dickson_quotient_count(std::uint32_t n, DicksonQuotient which, const field::TowerContext& ctx,
                                 Level level, const CountOptions& opts) {
  if (n == 0) throw InvalidArgument("n must be positive");
  require_square_level(level);
  const GaloisField& f = ctx.field(level);
  SeparableEquation eq;
  eq.num_coords = 2 * n;
  eq.target = f.one();
  for (std::size_t i = 0; i < n; ++i) {
    if (which == DicksonQuotient::kU) {
      eq.blocks.push_back({{i, n + i}, [](const GaloisField& g, const Elem* c) { return g.mul(c[0], c[1]); }});
    } else {
      eq.blocks.push_back({{i}, [](const GaloisField&, const Elem* c) { return c[0]; }});
    }
  }
  return count_affine(eq, f, std::vector<Coord>(2 * n, Coord::kFree), opts);
}

DicksonMapCheck dickson_map_check(std::uint32_t n, DicksonQuotient which, const field::TowerContext& ctx,
                                  Level level, std::uint64_t limit) {
  if (n == 0) throw InvalidArgument("n must be positive");
  require_square_level(level);
  const GaloisField& f = ctx.field(level);
  const Ops o{f, ctx.e()};
  const std::vector<Elem> elems = f.elements();
  const std::uint64_t size = elems.size();
  long double ambient = 1;
  for (std::uint32_t i = 0; i < 2 * n; ++i) ambient *= static_cast<long double>(size);
  if (ambient > static_cast<long double>(limit)) throw BudgetExceeded("Dickson map check exceeds the budget");

  DicksonMapCheck out;
  std::set<std::vector<std::uint64_t>> images;
  std::vector<std::size_t> idx(2 * n, 0);
  const std::uint32_t e2 = 2 * ctx.e();
  while (true) {
    Elem form{};
    for (std::uint32_t i = 0; i < n; ++i) form = f.add(form, o.alt(elems[idx[i]], elems[idx[n + i]]));
    if (form == f.one()) {
      ++out.source_points;
      std::vector<std::uint64_t> image;
      Elem check{};
      bool defined = true;
      for (std::uint32_t i = 0; i < n && defined; ++i) {
        const Elem& x = elems[idx[i]];
        const Elem& y = elems[idx[n + i]];
        Elem s, t;
        if (which == DicksonQuotient::kU) {
          // (x^q - x y^{q-1}, y)
          s = f.sub(o.fq(x), f.mul(x, f.pow(y, ctx.q() - 1)));
          t = y;
          check = f.add(check, f.mul(s, t));
        } else {
          const Elem den = o.alt(x, y);
          if (f.is_zero(den)) {
            defined = false;
            break;
          }
          s = den;
          const Elem num = f.sub(f.mul(f.frobenius(x, e2), y), f.mul(x, f.frobenius(y, e2)));
          t = f.mul(num, f.inv(den));
          check = f.add(check, s);
        }
        image.push_back(f.encode(s));
        image.push_back(f.encode(t));
      }
      if (!defined) {
        ++out.undefined;
      } else {
        if (check == f.one()) ++out.images_on_target;
        images.insert(std::move(image));
      }
    }
    std::size_t pos = idx.size();
    bool done = false;
    while (true) {
      if (pos == 0) {
        done = true;
        break;
      }
      --pos;
      if (++idx[pos] < size) break;
      idx[pos] = 0;
    }
    if (done) break;
  }
  out.distinct_images = images.size();
  return out;
}

}  // namespace modhowe::varieties
