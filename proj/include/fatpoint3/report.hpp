#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fatpoint3/cremona.hpp"
#include "fatpoint3/oracle.hpp"
#include "fatpoint3/speciality.hpp"

namespace fatpoint3 {

/// Arrow rendering of a trace, one line per procedure step:
///   "12 7^6 ->(i) 8 7^2 3^4"
/// Consecutive component removals collapse into a single ->(ii) line;
/// quadric removals use ->(iii).
std::vector<std::string> render_trace(const ReductionTrace& trace);

/// [{kind, indices (1-based), alpha?, before, after}, ...] with systems as
/// {"degree": d, "mults": [...]}.
nlohmann::json trace_to_json(const ReductionTrace& trace);
nlohmann::json system_to_json(const LinearSystem& system);
LinearSystem system_from_json(const nlohmann::json& j);

/// Replays a JSON trace and returns the final system; throws if a recorded
/// step does not reproduce its "after" system.
LinearSystem replay_trace(const nlohmann::json& steps);

/// "d m r conjectured oracle match" rows, tab separated, with header.
std::string grid_tsv(const std::vector<GridRow>& rows);
nlohmann::json grid_summary(const GridBounds& bounds, const OracleConfig& config,
                            const std::vector<GridRow>& rows);

struct VerdictRow {
  int degree = 0;
  int mult = 0;
  int points = 0;
  HomogeneousVerdict verdict = HomogeneousVerdict::non_special;
  std::int64_t conjectured = -1;
  std::int64_t expected = -1;
};

VerdictRow verdict_row(int degree, int mult, int points);
/// "d m r verdict conjectured_dim expected_dim" line (no newline).
std::string verdict_tsv(const VerdictRow& row);

}  // namespace fatpoint3
