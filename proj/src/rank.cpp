#include "fatpoint3/rank.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace fatpoint3 {

PrimeField::PrimeField(std::uint32_t prime) : p_(prime) {
  if (prime < 2 || prime >= (1u << 31) || !is_prime(prime)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(prime));
  }
  barrett_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / prime);
}

std::uint32_t PrimeField::pow(std::uint32_t base, std::uint64_t exp) const {
  std::uint32_t out = 1 % p_;
  while (exp > 0) {
    if (exp & 1) {
      out = mul(out, base);
    }
    base = mul(base, base);
    exp >>= 1;
  }
  return out;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) {
    throw std::domain_error("inverse of zero");
  }
  return pow(a, p_ - 2);
}

std::uint32_t PrimeField::from_int(std::int64_t x) const {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

// Moves the first row at or below `start` with a nonzero entry in column `col`
// to position `start` and scales it so the entry becomes 1.
bool place_pivot(ModMatrix& m, const PrimeField& field, std::size_t start, std::size_t col) {
  std::size_t pivot = start;
  while (pivot < m.rows() && m.at(pivot, col) == 0) {
    ++pivot;
  }
  if (pivot == m.rows()) {
    return false;
  }
  if (pivot != start) {
    auto a = m.row(pivot);
    auto b = m.row(start);
    for (std::size_t c = col; c < m.cols(); ++c) std::swap(a[c], b[c]);
  }
  auto row = m.row(start);
  const std::uint32_t scale = field.inv(row[col]);
  for (std::size_t c = col; c < m.cols(); ++c) {
    row[c] = field.mul(row[c], scale);
  }
  return true;
}

constexpr std::uint64_t kMersenne31 = (1u << 31) - 1;

inline std::uint32_t reduce_mersenne31(std::uint64_t x) {
  x = (x & kMersenne31) + (x >> 31);
  x = (x & kMersenne31) + (x >> 31);
  return static_cast<std::uint32_t>(x >= kMersenne31 ? x - kMersenne31 : x);
}

inline void eliminate_row(std::span<std::uint32_t> target, std::span<const std::uint32_t> pivot,
                          std::size_t col, const PrimeField& field) {
  const std::uint32_t factor = target[col];
  if (factor == 0) {
    return;
  }
  const std::uint64_t f = field.neg(factor);
  // Shift-and-add reduction vectorizes; Barrett needs 128-bit products.
  if (field.prime() == kMersenne31) {
    for (std::size_t c = col; c < target.size(); ++c) {
      target[c] = reduce_mersenne31(target[c] + f * pivot[c]);
    }
    return;
  }
  for (std::size_t c = col; c < target.size(); ++c) {
    target[c] = field.reduce(target[c] + f * pivot[c]);
  }
}

}  // namespace

std::size_t rank_serial(ModMatrix matrix, const PrimeField& field) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < matrix.cols() && rank < matrix.rows(); ++col) {
    if (!place_pivot(matrix, field, rank, col)) {
      continue;
    }
    const auto pivot = matrix.row(rank);
    for (std::size_t r = rank + 1; r < matrix.rows(); ++r) {
      eliminate_row(matrix.row(r), pivot, col, field);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_parallel(ModMatrix matrix, const PrimeField& field) {
  std::size_t rank = 0;
  const auto rows = static_cast<std::ptrdiff_t>(matrix.rows());
  for (std::size_t col = 0; col < matrix.cols() && rank < matrix.rows(); ++col) {
    if (!place_pivot(matrix, field, rank, col)) {
      continue;
    }
    const std::span<const std::uint32_t> pivot = matrix.row(rank);
    const auto first = static_cast<std::ptrdiff_t>(rank + 1);
#pragma omp parallel for schedule(static) if (rows - first > 64)
    for (std::ptrdiff_t r = first; r < rows; ++r) {
      eliminate_row(matrix.row(static_cast<std::size_t>(r)), pivot, col, field);
    }
    ++rank;
  }
  return rank;
}

}  // namespace fatpoint3
