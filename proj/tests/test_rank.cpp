#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fatpoint3/rank.hpp"

using namespace fatpoint3;

namespace {

// Column-oriented elimination on the transpose with plain % arithmetic:
// shares nothing with the library kernels beyond the matrix type.
std::size_t reference_rank(const ModMatrix& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> t(m.cols(), std::vector<std::uint64_t>(m.rows()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t[c][r] = m.at(r, c);
  auto power = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t out = 1;
    b %= p;
    while (e) {
      if (e & 1) out = out * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return out;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.rows() && rank < t.size(); ++col) {
    std::size_t best = t.size();
    for (std::size_t r = rank; r < t.size(); ++r) {
      if (t[r][col] != 0) {
        best = r;
      }
    }
    if (best == t.size()) continue;
    std::swap(t[rank], t[best]);
    const auto inv = power(t[rank][col], p - 2);
    for (std::size_t r = 0; r < t.size(); ++r) {
      if (r == rank || t[r][col] == 0) continue;
      const auto f = t[r][col] * inv % p;
      for (std::size_t c = 0; c < m.rows(); ++c) {
        t[r][c] = (t[r][c] + (p - f) * t[rank][c]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

ModMatrix planted(std::size_t rows, std::size_t cols, std::size_t k, std::uint32_t p,
                  std::mt19937_64& rng) {
  ModMatrix b(rows, k), c(k, cols), out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < k; ++j) b.at(i, j) = static_cast<std::uint32_t>(rng() % p);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < cols; ++j) c.at(i, j) = static_cast<std::uint32_t>(rng() % p);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::uint64_t s = 0;
      for (std::size_t l = 0; l < k; ++l) s = (s + std::uint64_t{b.at(i, l)} * c.at(l, j)) % p;
      out.at(i, j) = static_cast<std::uint32_t>(s);
    }
  return out;
}

}  // namespace

TEST_CASE("field arithmetic matches plain modular arithmetic") {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {2u, 3u, 101u, 65537u, 1000003u, 2147483629u, 2147483647u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 2000; ++trial) {
      const std::uint64_t a = rng() % p, b = rng() % p, c = rng() % p;
      CHECK(f.reduce(a * b + c) == (a * b + c) % p);
      CHECK(f.mul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)) == a * b % p);
      if (a != 0) CHECK(f.mul(f.inv(static_cast<std::uint32_t>(a)), static_cast<std::uint32_t>(a)) == 1);
    }
    CHECK(f.from_int(-1) == p - 1);
  }
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(0), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(4294967291u), std::invalid_argument);
}

TEST_CASE("small ranks") {
  PrimeField f(101);
  ModMatrix zero(3, 4);
  CHECK(rank_serial(zero, f) == 0);
  ModMatrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = 1;
  CHECK(rank_serial(id, f) == 3);
  ModMatrix dup(2, 3);
  for (std::size_t c = 0; c < 3; ++c) {
    dup.at(0, c) = static_cast<std::uint32_t>(c + 1);
    dup.at(1, c) = static_cast<std::uint32_t>(2 * (c + 1));
  }
  CHECK(rank_serial(dup, f) == 1);
  CHECK(rank_parallel(ModMatrix(0, 5), f) == 0);
}

TEST_CASE("serial and parallel kernels agree with the reference") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {7u, 10007u, 2147483647u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t rows = 1 + rng() % 90, cols = 1 + rng() % 90;
      const std::size_t k = rng() % (std::min(rows, cols) + 1);
      const auto m = planted(rows, cols, k, p, rng);
      const auto expected = reference_rank(m, p);
      CHECK(rank_serial(m, f) == expected);
      CHECK(rank_parallel(m, f) == expected);
      if (p > 1000) CHECK(expected == k);
    }
  }
}
