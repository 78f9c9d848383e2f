#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fatpoint3 {

/// Arithmetic in F_p for a prime p < 2^31. Products are reduced with a
/// precomputed Barrett constant.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t prime);

  std::uint32_t prime() const { return p_; }

  std::uint32_t reduce(std::uint64_t x) const {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    return static_cast<std::uint32_t>(r >= p_ ? r - p_ : r);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t pow(std::uint32_t base, std::uint64_t exp) const;
  std::uint32_t inv(std::uint32_t a) const;
  /// Image of an integer (any sign) in F_p.
  std::uint32_t from_int(std::int64_t x) const;

 private:
  std::uint32_t p_;
  std::uint64_t barrett_;
};

bool is_prime(std::uint64_t n);

/// Dense row-major matrix over F_p.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

// Rank by Gaussian elimination, pivoting on the first nonzero entry of each
// column. Both kernels perform the same row operations in the same order;
// the parallel one splits the row updates of every pivot across threads.
std::size_t rank_serial(ModMatrix matrix, const PrimeField& field);
std::size_t rank_parallel(ModMatrix matrix, const PrimeField& field);

}  // namespace fatpoint3
