#include "modhowe/field/fp_linear.hpp"

#include <span>

#include "modhowe/errors.hpp"
#include "modhowe/simd/kernels.hpp"

namespace modhowe::field {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw InvalidArgument("inverse of zero mod " + std::to_string(p));
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  if (p < 2 || p >= 16) throw InvalidArgument("FpMatrix supports primes below 16");
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& other) const {
  if (cols_ != other.rows_ || p_ != other.p_) throw InvalidArgument("FpMatrix shape mismatch");
  FpMatrix out(rows_, other.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::span<std::uint8_t> dst(out.row(i), out.cols_);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint8_t a = at(i, k);
      if (a != 0) {
        simd::axpy_mod(dst, std::span<const std::uint8_t>(other.row(k), other.cols_), a,
                       static_cast<std::uint8_t>(p_));
      }
    }
  }
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidArgument("FpMatrix shape mismatch");
  FpMatrix out(rows_, cols_, p_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = static_cast<std::uint8_t>((data_[i] + p_ - other.data_[i]) % p_);
  }
  return out;
}

std::vector<std::uint8_t> FpMatrix::apply(const std::vector<std::uint8_t>& v) const {
  if (v.size() != cols_) throw InvalidArgument("FpMatrix::apply length mismatch");
  std::vector<std::uint8_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint32_t acc = 0;
    const std::uint8_t* r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<std::uint32_t>(r[j]) * v[j];
    out[i] = static_cast<std::uint8_t>(acc % p_);
  }
  return out;
}

std::vector<std::size_t> FpMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  const auto p8 = static_cast<std::uint8_t>(p_);
  for (std::size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows_ && at(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != pivot_row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(pivot_row, j));
    }
    const std::uint32_t scale = inv_mod(at(pivot_row, c), p_);
    for (std::size_t j = 0; j < cols_; ++j) {
      at(pivot_row, j) = static_cast<std::uint8_t>((at(pivot_row, j) * scale) % p_);
    }
    std::span<const std::uint8_t> src(row(pivot_row), cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pivot_row || at(r, c) == 0) continue;
      const auto factor = static_cast<std::uint8_t>(p_ - at(r, c));
      simd::axpy_mod(std::span<std::uint8_t>(row(r), cols_), src, factor, p8);
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return pivots;
}

std::size_t FpMatrix::rank() const {
  FpMatrix copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<std::uint8_t>> FpMatrix::kernel() const {
  FpMatrix red = *this;
  const std::vector<std::size_t> pivots = red.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint8_t>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint8_t> v(cols_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = static_cast<std::uint8_t>((p_ - red.at(i, free)) % p_);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace modhowe::field
