#include "modhowe/varieties/count_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <thread>

#include "modhowe/errors.hpp"
#include "modhowe/simd/kernels.hpp"

namespace modhowe::varieties {

using field::GaloisField;
using u128 = unsigned __int128;

namespace {

constexpr std::uint64_t kMaxBlockArray = 1ULL << 28;

std::uint32_t ipow(std::uint32_t base, std::uint32_t exp) {
  std::uint32_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) r *= base;
  return r;
}

mpz_class to_mpz(u128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  const auto lo = static_cast<std::uint64_t>(v);
  mpz_class r = static_cast<unsigned long>(hi);
  r <<= 64;
  r += static_cast<unsigned long>(lo);
  return r;
}

}  // namespace

AdditiveCodec::AdditiveCodec(const GaloisField& f) {
  if (!f.size_fits() || f.size() > (1u << 16)) {
    throw BudgetExceeded("point counting supports fields with at most 65536 elements");
  }
  const std::uint32_t p = f.p();
  const std::uint32_t d = f.degree();
  const std::uint32_t d_lo = d / 2;
  size_ = static_cast<std::uint32_t>(f.size());
  lo_size_ = ipow(p, d_lo);
  hi_size_ = ipow(p, d - d_lo);
  auto digit_table = [p](std::uint32_t digits, std::uint32_t n) {
    std::vector<std::uint32_t> t(static_cast<std::size_t>(n) * n);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        std::uint32_t x = a, y = b, r = 0, scale = 1;
        for (std::uint32_t i = 0; i < digits; ++i) {
          r += ((x % p + y % p) % p) * scale;
          x /= p;
          y /= p;
          scale *= p;
        }
        t[static_cast<std::size_t>(a) * n + b] = r;
      }
    }
    return t;
  };
  lo_ = digit_table(d_lo, lo_size_);
  hi_ = digit_table(d - d_lo, hi_size_);
  neg_.resize(size_);
  for (std::uint32_t a = 0; a < size_; ++a) neg_[a] = static_cast<std::uint32_t>(f.encode(f.neg(f.decode(a))));
}

mpz_class projective_space_size(std::uint64_t field_size, std::size_t dim_plus_one) {
  mpz_class total = 0, pw = 1;
  for (std::size_t i = 0; i < dim_plus_one; ++i) {
    total += pw;
    pw *= static_cast<unsigned long>(field_size);
  }
  return total;
}

namespace {

struct Reduced {
  std::vector<const std::vector<std::uint16_t>*> arrays;
  std::uint32_t target = 0;
  u128 multiplicity = 1;
};

Reduced fold_constants(const std::vector<std::vector<std::uint16_t>>& values, std::uint32_t target,
                       const AdditiveCodec& codec) {
  Reduced r;
  r.target = target;
  for (const auto& v : values) {
    if (v.empty()) {
      r.multiplicity = 0;
      continue;
    }
    const bool constant = std::all_of(v.begin(), v.end(), [&](std::uint16_t x) { return x == v[0]; });
    if (constant) {
      r.target = codec.sub(r.target, v[0]);
      r.multiplicity *= v.size();
    } else {
      r.arrays.push_back(&v);
    }
  }
  return r;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

mpz_class enumerate_route(const Reduced& r, const AdditiveCodec& codec, unsigned workers) {
  std::size_t last = 0;
  for (std::size_t i = 1; i < r.arrays.size(); ++i) {
    if (r.arrays[i]->size() > r.arrays[last]->size()) last = i;
  }
  std::vector<const std::vector<std::uint16_t>*> outer;
  for (std::size_t i = 0; i < r.arrays.size(); ++i) {
    if (i != last) outer.push_back(r.arrays[i]);
  }
  const std::span<const std::uint16_t> inner(*r.arrays[last]);
  std::uint64_t outer_total = 1;
  for (const auto* a : outer) outer_total *= a->size();

  const unsigned nw = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(outer_total, 1024))));
  std::vector<std::uint64_t> partial(nw, 0);
  auto run = [&](unsigned w) {
    const std::uint64_t begin = outer_total * w / nw;
    const std::uint64_t end = outer_total * (w + 1) / nw;
    if (begin >= end) return;
    const std::size_t k = outer.size();
    std::vector<std::size_t> digit(k, 0);
    std::uint64_t rem = begin;
    for (std::size_t i = k; i-- > 0;) {
      digit[i] = rem % outer[i]->size();
      rem /= outer[i]->size();
    }
    std::vector<std::uint32_t> prefix(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = codec.add(prefix[i], (*outer[i])[digit[i]]);
    std::uint64_t local = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const auto need = static_cast<std::uint16_t>(codec.sub(r.target, prefix[k]));
      local += simd::count_equal(inner, need);
      std::size_t pos = k;
      while (pos > 0) {
        --pos;
        if (++digit[pos] < outer[pos]->size()) break;
        digit[pos] = 0;
      }
      for (std::size_t i = pos; i < k; ++i) prefix[i + 1] = codec.add(prefix[i], (*outer[i])[digit[i]]);
    }
    partial[w] = local;
  };
  if (nw == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < nw; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  mpz_class total = 0;
  for (std::uint64_t c : partial) total += static_cast<unsigned long>(c);
  return total;
}

mpz_class convolve_route(const Reduced& r, const AdditiveCodec& codec) {
  const std::uint32_t n = codec.size();
  auto histogram = [n](const std::vector<std::uint16_t>& v) {
    std::vector<u128> h(n, 0);
    for (std::uint16_t x : v) h[x] += 1;
    return h;
  };
  std::vector<u128> acc(n, 0);
  acc[0] = 1;
  for (std::size_t b = 0; b + 1 < r.arrays.size(); ++b) {
    const auto h = histogram(*r.arrays[b]);
    std::vector<std::uint32_t> support;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (h[v] != 0) support.push_back(v);
    }
    std::vector<u128> next(n, 0);
    for (std::uint32_t s = 0; s < n; ++s) {
      if (acc[s] == 0) continue;
      for (std::uint32_t v : support) next[codec.add(s, v)] += acc[s] * h[v];
    }
    acc = std::move(next);
  }
  const auto h_last = histogram(*r.arrays.back());
  u128 total = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (h_last[v] != 0) total += h_last[v] * acc[codec.sub(r.target, v)];
  }
  return to_mpz(total);
}

}  // namespace

mpz_class count_sum_equals(const std::vector<std::vector<std::uint16_t>>& values, std::uint32_t target,
                           const AdditiveCodec& codec, const CountOptions& opts) {
  const Reduced r = fold_constants(values, target, codec);
  if (r.multiplicity == 0) return 0;
  if (r.arrays.empty()) return r.target == 0 ? to_mpz(r.multiplicity) : mpz_class(0);

  // Overflow guard for 128-bit histogram arithmetic.
  long double log_total = 0;
  for (const auto* a : r.arrays) log_total += std::log2(static_cast<long double>(a->size()));
  if (log_total > 120) throw BudgetExceeded("point count exceeds 128-bit histogram range");

  std::uint64_t outer_total = 1, largest = 0;
  for (const auto* a : r.arrays) largest = std::max<std::uint64_t>(largest, a->size());
  for (const auto* a : r.arrays) outer_total = saturating_mul(outer_total, a->size());
  outer_total /= largest;
  const std::uint64_t enum_cost = saturating_mul(outer_total, largest);
  const std::uint64_t conv_cost =
      saturating_mul(static_cast<std::uint64_t>(r.arrays.size()), saturating_mul(codec.size(), codec.size()));

  CountMethod method = opts.method;
  if (method == CountMethod::kAuto) {
    method = enum_cost / 8 <= conv_cost ? CountMethod::kEnumerate : CountMethod::kConvolve;
  }
  const std::uint64_t cost = method == CountMethod::kEnumerate ? enum_cost : conv_cost;
  if (cost > opts.budget) {
    throw BudgetExceeded("enumeration needs about " + std::to_string(cost) + " steps, budget is " +
                         std::to_string(opts.budget));
  }
  const mpz_class base = method == CountMethod::kEnumerate ? enumerate_route(r, codec, opts.workers) : convolve_route(r, codec);
  return base * to_mpz(r.multiplicity);
}

mpz_class count_affine(const SeparableEquation& eq, const GaloisField& f, const std::vector<Coord>& constraints,
                       const CountOptions& opts) {
  if (constraints.size() != eq.num_coords) throw InvalidArgument("constraint vector has the wrong length");
  const AdditiveCodec codec(f);
  const std::vector<GaloisField::Elem> elems = f.elements();
  const std::uint64_t n = elems.size();

  std::vector<bool> covered(eq.num_coords, false);
  std::vector<std::vector<std::uint16_t>> arrays;
  for (const Block& b : eq.blocks) {
    std::vector<std::size_t> free_pos;
    std::vector<GaloisField::Elem> coords(b.coords.size(), f.zero());
    for (std::size_t i = 0; i < b.coords.size(); ++i) {
      covered[b.coords[i]] = true;
      switch (constraints[b.coords[i]]) {
        case Coord::kZero:
          break;
        case Coord::kOne:
          coords[i] = f.one();
          break;
        case Coord::kFree:
          free_pos.push_back(i);
          break;
      }
    }
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < free_pos.size(); ++i) size = saturating_mul(size, n);
    if (size > kMaxBlockArray || size > opts.budget) {
      throw BudgetExceeded("a block would enumerate " + std::to_string(size) + " tuples");
    }
    std::vector<std::uint16_t> vals;
    vals.reserve(size);
    std::vector<std::size_t> idx(free_pos.size(), 0);
    for (std::uint64_t t = 0; t < size; ++t) {
      for (std::size_t i = 0; i < free_pos.size(); ++i) coords[free_pos[i]] = elems[idx[i]];
      vals.push_back(static_cast<std::uint16_t>(f.encode(b.value(f, coords.data()))));
      for (std::size_t i = free_pos.size(); i-- > 0;) {
        if (++idx[i] < n) break;
        idx[i] = 0;
      }
    }
    arrays.push_back(std::move(vals));
  }
  mpz_class free_factor = 1;
  for (std::size_t c = 0; c < eq.num_coords; ++c) {
    if (!covered[c] && constraints[c] == Coord::kFree) free_factor *= static_cast<unsigned long>(n);
  }
  const auto target = static_cast<std::uint32_t>(f.encode(eq.target));
  return free_factor * count_sum_equals(arrays, target, codec, opts);
}

mpz_class count_projective(const SeparableEquation& eq, const GaloisField& f, const CountOptions& opts) {
  mpz_class total = 0;
  for (std::size_t pivot = 0; pivot < eq.num_coords; ++pivot) {
    std::vector<Coord> c(eq.num_coords, Coord::kFree);
    for (std::size_t i = 0; i < pivot; ++i) c[i] = Coord::kZero;
    c[pivot] = Coord::kOne;
    total += count_affine(eq, f, c, opts);
  }
  return total;
}

}  // namespace modhowe::varieties
