#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "modhowe/field/galois_field.hpp"

namespace modhowe::varieties {

enum class CountMethod { kAuto, kEnumerate, kConvolve };

struct CountOptions {
  static constexpr std::uint64_t kDefaultBudget = 4'000'000'000ULL;
  unsigned workers = 1;
  /// Upper bound on inner-loop element visits (enumeration) or histogram
  /// products (convolution).
  std::uint64_t budget = kDefaultBudget;
  CountMethod method = CountMethod::kAuto;
};

/// Addition of encoded elements of a field with at most 2^16 elements, via two
/// half-width digit tables.
class AdditiveCodec {
 public:
  explicit AdditiveCodec(const field::GaloisField& f);
  std::uint32_t size() const { return size_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return hi_[(a / lo_size_) * hi_size_ + b / lo_size_] * lo_size_ + lo_[(a % lo_size_) * lo_size_ + b % lo_size_];
  }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_[b]); }

 private:
  std::uint32_t size_;
  std::uint32_t lo_size_;
  std::uint32_t hi_size_;
  std::vector<std::uint32_t> lo_;
  std::vector<std::uint32_t> hi_;
  std::vector<std::uint32_t> neg_;
};

/// Constraint on one coordinate while enumerating a block.
enum class Coord : std::uint8_t { kZero, kOne, kFree };

/// One summand g(v) of a separable equation sum_b g_b(v_b) = target, where
/// v_b ranges over the coordinates listed in `coords`.
struct Block {
  std::vector<std::size_t> coords;
  std::function<field::GaloisField::Elem(const field::GaloisField&, const field::GaloisField::Elem*)> value;
};

/// A separable hypersurface sum_b g_b = target in an ambient space whose
/// coordinates are the union of the blocks' coordinates.
struct SeparableEquation {
  std::size_t num_coords = 0;
  std::vector<Block> blocks;
  field::GaloisField::Elem target{};
};

/// Number of affine points with the given per-coordinate constraints.
mpz_class count_affine(const SeparableEquation& eq, const field::GaloisField& f,
                       const std::vector<Coord>& constraints, const CountOptions& opts);
/// Number of projective points, summing affine counts over the position of the
/// first nonzero coordinate (normalized to 1).
mpz_class count_projective(const SeparableEquation& eq, const field::GaloisField& f, const CountOptions& opts);

/// |P^{d-1}(F)| = (N^d - 1)/(N - 1).
mpz_class projective_space_size(std::uint64_t field_size, std::size_t dim_plus_one);

/// Low-level: number of tuples (v_1, ..., v_B), v_b drawn from values[b] (with
/// repetition as listed), whose encoded sum equals target.
mpz_class count_sum_equals(const std::vector<std::vector<std::uint16_t>>& values, std::uint32_t target,
                           const AdditiveCodec& codec, const CountOptions& opts);

}  // namespace modhowe::varieties
