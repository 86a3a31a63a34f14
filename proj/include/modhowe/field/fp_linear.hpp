#pragma once

#include <cstdint>
#include <vector>

namespace modhowe::field {

/// Dense matrix over F_p, p < 16, row-major with one byte per entry.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  static FpMatrix identity(std::size_t n, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t p() const { return p_; }

  std::uint8_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint8_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint8_t* row(std::size_t r) { return data_.data() + r * cols_; }
  const std::uint8_t* row(std::size_t r) const { return data_.data() + r * cols_; }

  FpMatrix operator*(const FpMatrix& other) const;
  std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& v) const;
  FpMatrix operator-(const FpMatrix& other) const;
  bool operator==(const FpMatrix& other) const = default;

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of {v : M v = 0}, one vector per free column.
  std::vector<std::vector<std::uint8_t>> kernel() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint8_t> data_;
};

/// Modular inverse in F_p.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

}  // namespace modhowe::field
