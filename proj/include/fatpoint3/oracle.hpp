#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fatpoint3/rank.hpp"
#include "fatpoint3/system.hpp"

namespace fatpoint3 {

/// Exponent vector (a_0, a_1, a_2, a_3) of a monomial in x_0..x_3.
using Exponent = std::array<int, 4>;

/// Degree-d monomials in lexicographically decreasing order of exponents,
/// starting at x_0^d. C(d+3, 3) entries.
std::vector<Exponent> monomial_basis(int degree);

/// Derivative multi-indices over three variables with total order below
/// `mult`, sorted by total order and then lexicographically decreasing.
/// C(mult+2, 3) entries.
std::vector<std::array<int, 3>> derivative_indices(int mult);

enum class PointMode { all_random, fundamental_plus_random };

std::string to_string(PointMode mode);
PointMode parse_point_mode(const std::string& text);

inline constexpr std::uint32_t kDefaultPrime = 2147483647u;  // 2^31 - 1

struct OracleConfig {
  std::uint32_t prime = kDefaultPrime;
  std::vector<std::uint64_t> seeds{1, 2, 3};
  PointMode point_mode = PointMode::all_random;
  /// Use the OpenMP elimination kernel (otherwise the serial reference).
  bool parallel_rank = true;

  /// Default configuration with the prime taken from FATPOINT3_PRIME when set.
  static OracleConfig from_environment();
};

/// Homogeneous coordinates in F_p^4, scaled so the first nonzero one is 1.
using ProjectivePoint = std::array<std::uint32_t, 4>;

/// Points in the affine chart x_0 = 1 with uniform coordinates; in
/// fundamental mode the first four are the coordinate vertices.
std::vector<ProjectivePoint> sample_points(int count, std::uint64_t seed, PointMode mode,
                                           const PrimeField& field);

/// Exact fat-point conditions: one column per degree-d monomial, one row per
/// point and derivative multi-index (taken in the chart where the point's
/// first nonzero coordinate is 1). Rows are grouped per point.
struct ConditionsMatrix {
  ModMatrix entries;
  std::uint32_t prime = 0;
  int degree = 0;
};

/// Throws on coincident points, on negative degree or multiplicities, and
/// when the prime does not exceed the degree.
ConditionsMatrix conditions_matrix(const LinearSystem& system,
                                   std::span<const ProjectivePoint> points,
                                   const PrimeField& field);

struct OracleResult {
  std::int64_t dimension = -1;
  std::size_t rank = 0;             // maximal rank over seeds
  std::vector<std::size_t> ranks;   // one per seed
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool seeds_disagree = false;      // some sample was not in general position
};

/// Projective dimension C(d+3,3) - rank - 1 at general points, rank taken as
/// the maximum over the configured seeds.
OracleResult oracle_run(const LinearSystem& system, const OracleConfig& config);

std::int64_t oracle_dimension(const LinearSystem& system, const OracleConfig& config);

/// oracle dimension minus expected dimension (0 for empty systems).
std::int64_t oracle_h1(const LinearSystem& system, const OracleConfig& config);

/// Dimension of a class that may carry negative entries: a negative degree
/// means empty, a negative multiplicity is an exceptional fixed component and
/// imposes nothing.
std::int64_t oracle_effective_dimension(const LinearSystem& system, const OracleConfig& config);

/// Oracle dimension of L against that of its image under the Cremona
/// transformation on its first four points, computed with those four points
/// at the coordinate vertices.
bool cremona_equivariance_check(const LinearSystem& system, OracleConfig config);

struct GridBounds {
  int d_max = 10;
  int m_max = 4;
  int r_max = 10;
  int d_min = 0;
  int m_min = 1;
  int r_min = 1;
};

struct GridRow {
  int degree = 0;
  int mult = 0;
  int points = 0;
  std::int64_t conjectured = -1;
  std::int64_t oracle = -1;
  bool seeds_disagree = false;
  bool match() const { return conjectured == oracle; }
};

/// Conjectured against oracle dimension for every homogeneous L_3(d, m^r) in
/// the bounds. Rows come out in (d, m, r) order whatever the thread count.
std::vector<GridRow> verify_grid(const GridBounds& bounds, const OracleConfig& config);

}  // namespace fatpoint3
