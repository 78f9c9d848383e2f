// fatpoint3: dimensions of linear systems of surfaces in P^3 through fat points.
//
// Exit codes: 0 success, 1 usage or parse error, 2 verification mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fatpoint3/cremona.hpp"
#include "fatpoint3/literal.hpp"
#include "fatpoint3/oracle.hpp"
#include "fatpoint3/report.hpp"
#include "fatpoint3/speciality.hpp"

namespace {

using namespace fatpoint3;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct OracleFlags {
  std::uint32_t prime = 0;  // 0: default / environment
  std::string seeds;
  std::string point_mode = "all_random";
  std::size_t max_cols = 5000;

  void attach(CLI::App* app) {
    app->add_option("--prime", prime, "field characteristic (prime below 2^31)");
    app->add_option("--seeds", seeds, "comma separated point-sampling seeds");
    app->add_option("--point-mode", point_mode, "all_random or fundamental_plus_random");
    app->add_option("--max-cols", max_cols, "refuse systems with more monomial columns");
  }

  OracleConfig config() const {
    OracleConfig out = OracleConfig::from_environment();
    if (prime != 0) {
      PrimeField check(prime);
      out.prime = prime;
    }
    if (!seeds.empty()) {
      out.seeds.clear();
      std::stringstream in(seeds);
      std::string piece;
      while (std::getline(in, piece, ',')) {
        std::size_t used = 0;
        const auto value = std::stoull(piece, &used);
        if (used != piece.size()) {
          throw std::invalid_argument("bad seed '" + piece + "'");
        }
        out.seeds.push_back(value);
      }
      if (out.seeds.empty()) {
        throw std::invalid_argument("no seeds given");
      }
    }
    out.point_mode = parse_point_mode(point_mode);
    return out;
  }

  void check_size(int degree) const {
    const auto cols = binomial(static_cast<std::int64_t>(degree) + 3, 3);
    if (cols > static_cast<std::int64_t>(max_cols)) {
      throw std::invalid_argument("degree " + std::to_string(degree) + " needs " +
                                  std::to_string(cols) + " columns, above --max-cols " +
                                  std::to_string(max_cols));
    }
  }
};

int run_dim(const std::string& literal, bool trace, bool json) {
  const auto system = normalize(parse_system(literal));
  if (system.degree < 0) {
    throw std::invalid_argument("degree must be non-negative");
  }
  const auto conj = conjectured_dimension(system);
  const auto verdict = is_special(system);
  const auto v = virtual_dimension(system);
  const auto e = expected_dimension(system);
  if (json) {
    nlohmann::json out{{"system", format_system(system)},
                       {"virtual_dimension", v},
                       {"expected_dimension", e},
                       {"conjectured_dimension", conj.dimension},
                       {"raw_value", conj.raw},
                       {"clamped", conj.clamped},
                       {"empty", conj.empty},
                       {"special", verdict.special},
                       {"speciality", verdict.speciality},
                       {"final", system_to_json(conj.trace.final)},
                       {"trace", trace_to_json(conj.trace)}};
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "system: " << format_system(system) << '\n'
            << "virtual dimension: " << v << '\n'
            << "expected dimension: " << e << '\n'
            << "dimension: " << conj.dimension << '\n'
            << "special: " << (verdict.special ? "yes" : "no") << " (speciality "
            << verdict.speciality << ")\n";
  if (conj.clamped) {
    std::cout << "note: procedure value " << conj.raw << " clamped to -1\n";
  }
  if (trace) {
    std::cout << "trace:\n";
    if (conj.trace.steps.empty()) {
      std::cout << "  " << format_system(system) << " (standard form)\n";
    }
    for (const auto& line : render_trace(conj.trace)) {
      std::cout << "  " << line << '\n';
    }
    if (conj.empty) {
      std::cout << "  " << format_system(conj.trace.final) << " is empty\n";
    }
  }
  return kExitOk;
}

int run_oracle(const std::string& literal, const OracleFlags& flags, bool json) {
  const auto system = normalize(parse_system(literal));
  if (system.degree < 0) {
    throw std::invalid_argument("degree must be non-negative");
  }
  for (int m : system.mults) {
    if (m < 0) throw std::invalid_argument("oracle needs non-negative multiplicities");
  }
  flags.check_size(system.degree);
  const auto config = flags.config();
  const auto result = oracle_run(system, config);
  const auto e = expected_dimension(system);
  const auto h1 = result.dimension < 0 ? 0 : result.dimension - e;
  if (json) {
    nlohmann::json out{{"system", format_system(system)},
                       {"dimension", result.dimension},
                       {"h1", h1},
                       {"rank", result.rank},
                       {"ranks", result.ranks},
                       {"rows", result.rows},
                       {"cols", result.cols},
                       {"prime", config.prime},
                       {"seeds", config.seeds},
                       {"point_mode", to_string(config.point_mode)},
                       {"seeds_disagree", result.seeds_disagree}};
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "system: " << format_system(system) << '\n'
            << "dimension: " << result.dimension << '\n'
            << "h1: " << h1 << '\n'
            << "rank: " << result.rank << '\n'
            << "matrix: " << result.rows << " x " << result.cols << '\n'
            << "prime: " << config.prime << '\n';
  if (result.seeds_disagree) {
    std::cout << "warning: ranks differ across seeds:";
    for (auto r : result.ranks) std::cout << ' ' << r;
    std::cout << '\n';
  }
  return kExitOk;
}

struct VerifyFlags {
  int d_max = 10;
  int m_max = 4;
  int r_max = 10;
  int r_fixed = 0;
  bool homogeneous = false;
};

int run_verify(const VerifyFlags& vf, const OracleFlags& flags, bool json) {
  const auto config = flags.config();
  if (vf.homogeneous) {
    // Classification rows for L_3(d, m^r), d from 0 to max(dmax, 2m+2),
    // checked against the oracle.
    const int r_lo = vf.r_fixed > 0 ? vf.r_fixed : 1;
    const int r_hi = vf.r_fixed > 0 ? vf.r_fixed : vf.r_max;
    std::vector<std::pair<VerdictRow, std::int64_t>> rows;
    for (int m = 1; m <= vf.m_max; ++m) {
      const int d_hi = std::max(vf.d_max, 2 * m + 2);
      for (int d = 0; d <= d_hi; ++d) {
        flags.check_size(d);
        for (int r = r_lo; r <= r_hi; ++r) {
          auto row = verdict_row(d, m, r);
          const LinearSystem system{d, std::vector<int>(static_cast<std::size_t>(r), m)};
          rows.emplace_back(row, oracle_dimension(system, config));
        }
      }
    }
    std::size_t mismatches = 0;
    auto bad = nlohmann::json::array();
    std::ostringstream tsv;
    tsv << "d\tm\tr\tverdict\tconjectured_dim\texpected_dim\toracle\tmatch\n";
    for (const auto& [row, oracle] : rows) {
      const auto h1 = oracle < 0 ? 0 : oracle - row.expected;
      bool ok = row.conjectured == oracle;
      switch (row.verdict) {
        case HomogeneousVerdict::empty:
          ok = ok && oracle == -1;
          break;
        case HomogeneousVerdict::special:
          ok = ok && h1 > 0;
          break;
        case HomogeneousVerdict::non_special:
          ok = ok && h1 == 0;
          break;
        case HomogeneousVerdict::procedure_required:
          break;
      }
      if (!ok) {
        ++mismatches;
        bad.push_back({{"d", row.degree}, {"m", row.mult}, {"r", row.points},
                       {"verdict", to_string(row.verdict)}, {"conjectured", row.conjectured},
                       {"oracle", oracle}});
      }
      tsv << verdict_tsv(row) << '\t' << oracle << '\t' << (ok ? "yes" : "no") << '\n';
    }
    if (json) {
      nlohmann::json out{{"cells", rows.size()},
                         {"prime", config.prime},
                         {"seeds", config.seeds},
                         {"mismatches", bad}};
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << tsv.str();
    }
    return mismatches == 0 ? kExitOk : kExitMismatch;
  }

  GridBounds bounds{vf.d_max, vf.m_max, vf.r_max};
  if (vf.r_fixed > 0) {
    bounds.r_min = bounds.r_max = vf.r_fixed;
  }
  if (bounds.d_max >= 0) flags.check_size(bounds.d_max);
  const auto rows = verify_grid(bounds, config);
  const auto summary = grid_summary(bounds, config, rows);
  if (json) {
    std::cout << summary.dump(2) << '\n';
  } else {
    std::cout << grid_tsv(rows);
  }
  return summary.at("mismatches").empty() ? kExitOk : kExitMismatch;
}

int run_transform(const std::string& literal, const std::vector<int>& indices, bool curve) {
  if (curve) {
    auto c = parse_curve(literal);
    if (c.has_incidences()) {
      if (!indices.empty() && indices != std::vector<int>{1, 2, 3, 4}) {
        throw std::invalid_argument("curves with incidence data transform on points 1 2 3 4 only");
      }
      std::cout << format_curve(cremona_curve_full(c), LiteralStyle::expanded) << '\n';
      return kExitOk;
    }
    if (indices.size() != 4) {
      throw std::invalid_argument("transform needs exactly four point indices");
    }
    Quadruple q{};
    for (int k = 0; k < 4; ++k) {
      if (indices[k] < 1) throw std::invalid_argument("point indices start at 1");
      q[k] = indices[k] - 1;
    }
    std::cout << format_curve(canonical_curve(cremona_curve(c, q)), LiteralStyle::expanded) << '\n';
    return kExitOk;
  }
  if (indices.size() != 4) {
    throw std::invalid_argument("transform needs exactly four point indices");
  }
  Quadruple q{};
  for (int k = 0; k < 4; ++k) {
    if (indices[k] < 1) throw std::invalid_argument("point indices start at 1");
    q[k] = indices[k] - 1;
  }
  const auto system = parse_system(literal);
  std::cout << format_system(normalize(cremona_system(system, q)), LiteralStyle::expanded) << '\n';
  return kExitOk;
}

int run_orbit(int points, int max_degree, bool json) {
  const auto orbit = line_orbit(points, max_degree);
  if (json) {
    auto out = nlohmann::json::array();
    for (const auto& entry : orbit) {
      auto [lin, quad] = curve_invariants(entry.curve);
      out.push_back({{"curve", format_curve(entry.curve)},
                     {"degree", entry.curve.degree},
                     {"mults", entry.curve.mults},
                     {"invariants", {lin, quad}},
                     {"monotone", entry.monotone},
                     {"depth", entry.depth}});
    }
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "curve\tinvariants\tmonotone\tdepth\n";
  for (const auto& entry : orbit) {
    auto [lin, quad] = curve_invariants(entry.curve);
    std::cout << format_curve(entry.curve) << '\t' << lin << ',' << quad << '\t'
              << (entry.monotone ? "yes" : "no") << '\t' << entry.depth << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimensions of linear systems of surfaces in P^3 through fat points"};
  app.require_subcommand(1);

  std::string literal;
  bool trace = false;
  bool json = false;

  auto* dim = app.add_subcommand("dim", "dimension by Cremona reduction and speciality corrections");
  dim->add_option("system", literal, "system literal, e.g. \"12 7^6\"")->required();
  dim->add_flag("--trace", trace, "print the reduction steps");
  dim->add_flag("--json", json, "machine-readable output");

  OracleFlags oracle_flags;
  auto* oracle = app.add_subcommand("oracle", "dimension from the exact conditions matrix");
  oracle->add_option("system", literal, "system literal")->required();
  oracle->add_flag("--json", json, "machine-readable output");
  oracle_flags.attach(oracle);

  VerifyFlags verify_flags;
  OracleFlags verify_oracle;
  auto* verify = app.add_subcommand("verify", "compare procedure and oracle on homogeneous systems");
  verify->add_option("--dmax", verify_flags.d_max, "largest degree");
  verify->add_option("--mmax", verify_flags.m_max, "largest multiplicity");
  verify->add_option("--rmax", verify_flags.r_max, "largest number of points");
  verify->add_option("--r", verify_flags.r_fixed, "only this number of points");
  verify->add_flag("--homogeneous", verify_flags.homogeneous,
                   "emit classification verdict rows and check them");
  verify->add_flag("--json", json, "JSON summary instead of TSV");
  verify_oracle.attach(verify);

  bool curve = false;
  std::vector<int> indices;
  auto* transform = app.add_subcommand("transform", "apply one cubic Cremona transformation");
  transform->add_option("literal", literal, "system or curve literal")->required();
  transform->add_option("indices", indices, "four 1-based point indices");
  transform->add_flag("--curve", curve, "the literal is a curve class");

  int points = 0;
  int max_degree = 0;
  auto* orbit = app.add_subcommand("orbit", "Cremona orbit of the line through two points");
  orbit->add_option("--points", points, "number of points")->required();
  orbit->add_option("--max-degree", max_degree, "degree cap")->required();
  orbit->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (dim->parsed()) return run_dim(literal, trace, json);
    if (oracle->parsed()) return run_oracle(literal, oracle_flags, json);
    if (verify->parsed()) return run_verify(verify_flags, verify_oracle, json);
    if (transform->parsed()) return run_transform(literal, indices, curve);
    if (orbit->parsed()) return run_orbit(points, max_degree, json);
  } catch (const LiteralError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
