#include "fatpoint3/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <random>
#include <stdexcept>

#include "fatpoint3/cremona.hpp"
#include "fatpoint3/speciality.hpp"

namespace fatpoint3 {

std::vector<Exponent> monomial_basis(int degree) {
  if (degree < 0) {
    throw std::invalid_argument("monomial basis needs a non-negative degree");
  }
  std::vector<Exponent> out;
  out.reserve(static_cast<std::size_t>(binomial(degree + 3, 3)));
  for (int a0 = degree; a0 >= 0; --a0) {
    for (int a1 = degree - a0; a1 >= 0; --a1) {
      for (int a2 = degree - a0 - a1; a2 >= 0; --a2) {
        out.push_back({a0, a1, a2, degree - a0 - a1 - a2});
      }
    }
  }
  return out;
}

std::vector<std::array<int, 3>> derivative_indices(int mult) {
  std::vector<std::array<int, 3>> out;
  for (int order = 0; order < mult; ++order) {
    for (int a = order; a >= 0; --a) {
      for (int b = order - a; b >= 0; --b) {
        out.push_back({a, b, order - a - b});
      }
    }
  }
  return out;
}

std::string to_string(PointMode mode) {
  return mode == PointMode::all_random ? "all_random" : "fundamental_plus_random";
}

PointMode parse_point_mode(const std::string& text) {
  if (text == "all_random") return PointMode::all_random;
  if (text == "fundamental_plus_random") return PointMode::fundamental_plus_random;
  throw std::invalid_argument("unknown point mode '" + text +
                              "' (expected all_random or fundamental_plus_random)");
}

OracleConfig OracleConfig::from_environment() {
  OracleConfig config;
  if (const char* env = std::getenv("FATPOINT3_PRIME"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value >= (1ull << 31) || !is_prime(value)) {
      throw std::invalid_argument(std::string("FATPOINT3_PRIME is not a prime below 2^31: ") + env);
    }
    config.prime = static_cast<std::uint32_t>(value);
  }
  return config;
}

namespace {

ProjectivePoint scale_to_chart(ProjectivePoint p, const PrimeField& field) {
  std::size_t lead = 0;
  while (lead < 4 && p[lead] == 0) ++lead;
  if (lead == 4) {
    throw std::invalid_argument("the zero vector is not a projective point");
  }
  const std::uint32_t s = field.inv(p[lead]);
  for (auto& x : p) x = field.mul(x, s);
  return p;
}

std::size_t chart_of(const ProjectivePoint& p) {
  std::size_t lead = 0;
  while (p[lead] == 0) ++lead;
  return lead;
}

}  // namespace

std::vector<ProjectivePoint> sample_points(int count, std::uint64_t seed, PointMode mode,
                                           const PrimeField& field) {
  std::mt19937_64 rng(seed);
  std::vector<ProjectivePoint> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  if (mode == PointMode::fundamental_plus_random) {
    for (int i = 0; i < std::min(count, 4); ++i) {
      ProjectivePoint e{0, 0, 0, 0};
      e[i] = 1;
      out.push_back(e);
    }
  }
  while (static_cast<int>(out.size()) < count) {
    ProjectivePoint p{1, 0, 0, 0};
    for (int i = 1; i < 4; ++i) {
      p[i] = static_cast<std::uint32_t>(rng() % field.prime());
    }
    if (std::find(out.begin(), out.end(), p) == out.end()) {
      out.push_back(p);
    }
  }
  return out;
}

ConditionsMatrix conditions_matrix(const LinearSystem& system,
                                   std::span<const ProjectivePoint> points,
                                   const PrimeField& field) {
  const int d = system.degree;
  if (d < 0) {
    throw std::invalid_argument("conditions matrix needs a non-negative degree");
  }
  if (field.prime() <= static_cast<std::uint32_t>(d)) {
    throw std::invalid_argument("prime must exceed the degree");
  }
  if (points.size() != system.mults.size()) {
    throw std::invalid_argument("need exactly one point per multiplicity");
  }
  std::vector<ProjectivePoint> scaled;
  scaled.reserve(points.size());
  for (const auto& p : points) {
    scaled.push_back(scale_to_chart(p, field));
  }
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    for (std::size_t j = i + 1; j < scaled.size(); ++j) {
      if (scaled[i] == scaled[j]) {
        throw std::invalid_argument("points " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) + " coincide");
      }
    }
  }

  const auto basis = monomial_basis(d);
  std::size_t rows = 0;
  for (int m : system.mults) {
    if (m < 0) {
      throw std::invalid_argument("conditions matrix needs non-negative multiplicities");
    }
    rows += static_cast<std::size_t>(point_conditions(m));
  }

  // falling[a][k] = a (a-1) ... (a-k+1) mod p
  std::vector<std::vector<std::uint32_t>> falling(static_cast<std::size_t>(d) + 1);
  for (int a = 0; a <= d; ++a) {
    falling[a].assign(static_cast<std::size_t>(a) + 1, 1);
    for (int k = 1; k <= a; ++k) {
      falling[a][k] = field.mul(falling[a][k - 1], static_cast<std::uint32_t>(a - k + 1));
    }
  }

  ConditionsMatrix out{ModMatrix(rows, basis.size()), field.prime(), d};
  std::size_t row = 0;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    const auto& p = scaled[i];
    const std::size_t chart = chart_of(p);
    std::array<std::size_t, 3> vars{};
    for (std::size_t v = 0, n = 0; v < 4; ++v) {
      if (v != chart) vars[n++] = v;
    }
    // powers[v][e] = p_v^e
    std::array<std::vector<std::uint32_t>, 4> powers;
    for (std::size_t v = 0; v < 4; ++v) {
      powers[v].assign(static_cast<std::size_t>(d) + 1, 1);
      for (int e = 1; e <= d; ++e) powers[v][e] = field.mul(powers[v][e - 1], p[v]);
    }
    for (const auto& alpha : derivative_indices(system.mults[i])) {
      auto target = out.entries.row(row++);
      for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto& a = basis[col];
        std::uint32_t value = 1;
        for (std::size_t k = 0; k < 3 && value != 0; ++k) {
          const int exponent = a[vars[k]];
          const int order = alpha[k];
          if (order > exponent) {
            value = 0;
          } else {
            value = field.mul(value, field.mul(falling[exponent][order],
                                               powers[vars[k]][exponent - order]));
          }
        }
        target[col] = value;
      }
    }
  }
  return out;
}

OracleResult oracle_run(const LinearSystem& system, const OracleConfig& config) {
  if (system.degree < 0) {
    throw std::invalid_argument("oracle needs a non-negative degree");
  }
  if (config.seeds.empty()) {
    throw std::invalid_argument("oracle needs at least one seed");
  }
  const PrimeField field(config.prime);
  OracleResult out;
  out.cols = static_cast<std::size_t>(binomial(system.degree + 3, 3));
  for (std::uint64_t seed : config.seeds) {
    const auto points = sample_points(system.points(), seed, config.point_mode, field);
    auto matrix = conditions_matrix(system, points, field);
    out.rows = matrix.entries.rows();
    const std::size_t rank = config.parallel_rank ? rank_parallel(std::move(matrix.entries), field)
                                                  : rank_serial(std::move(matrix.entries), field);
    out.ranks.push_back(rank);
  }
  out.rank = *std::max_element(out.ranks.begin(), out.ranks.end());
  out.seeds_disagree =
      std::any_of(out.ranks.begin(), out.ranks.end(), [&](std::size_t r) { return r != out.rank; });
  out.dimension = static_cast<std::int64_t>(out.cols) - static_cast<std::int64_t>(out.rank) - 1;
  return out;
}

std::int64_t oracle_dimension(const LinearSystem& system, const OracleConfig& config) {
  return oracle_run(system, config).dimension;
}

std::int64_t oracle_h1(const LinearSystem& system, const OracleConfig& config) {
  const auto dim = oracle_dimension(system, config);
  if (dim < 0) {
    return 0;
  }
  return dim - expected_dimension(system);
}

std::int64_t oracle_effective_dimension(const LinearSystem& system, const OracleConfig& config) {
  if (system.degree < 0) {
    return -1;
  }
  LinearSystem clamped = system;
  for (int& m : clamped.mults) m = std::max(m, 0);
  return oracle_dimension(clamped, config);
}

bool cremona_equivariance_check(const LinearSystem& system, OracleConfig config) {
  config.point_mode = PointMode::fundamental_plus_random;
  LinearSystem padded = system;
  if (padded.points() < 4) {
    padded.mults.resize(4, 0);
  }
  const auto image = cremona_system(padded, {0, 1, 2, 3});
  return oracle_effective_dimension(padded, config) == oracle_effective_dimension(image, config);
}

std::vector<GridRow> verify_grid(const GridBounds& bounds, const OracleConfig& config) {
  std::vector<GridRow> cells;
  for (int d = bounds.d_min; d <= bounds.d_max; ++d) {
    for (int m = bounds.m_min; m <= bounds.m_max; ++m) {
      for (int r = bounds.r_min; r <= bounds.r_max; ++r) {
        cells.push_back({d, m, r});
      }
    }
  }
  if (cells.empty()) {
    return cells;
  }
  if (config.seeds.empty()) {
    throw std::invalid_argument("oracle needs at least one seed");
  }
  if (static_cast<std::int64_t>(PrimeField(config.prime).prime()) <= bounds.d_max) {
    throw std::invalid_argument("prime must exceed the largest degree");
  }
  OracleConfig inner = config;
  inner.parallel_rank = false;
  // Exceptions may not cross the parallel region; keep the first one.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cells.size()); ++i) {
    try {
      auto& cell = cells[i];
      const LinearSystem system{cell.degree, std::vector<int>(cell.points, cell.mult)};
      cell.conjectured = conjectured_dimension(system).dimension;
      const auto result = oracle_run(system, inner);
      cell.oracle = result.dimension;
      cell.seeds_disagree = result.seeds_disagree;
    } catch (...) {
#pragma omp critical(fatpoint3_grid_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return cells;
}

}  // namespace fatpoint3
