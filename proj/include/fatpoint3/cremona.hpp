#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fatpoint3/system.hpp"

namespace fatpoint3 {

/// Four distinct point indices (0-based) on which a cubic Cremona
/// transformation is based.
using Quadruple = std::array<int, 4>;

/// Image of L_3(d, m) under the cubic Cremona transformation based at the
/// four given points: d -> d + k, m_i -> m_i + k on those points, with
/// k = 2d - sum of the four multiplicities. Systems with too few points are
/// padded with zero multiplicities. The result is not normalized.
LinearSystem cremona_system(const LinearSystem& system, const Quadruple& idx);

/// Degree change k = 2d - sum m_i for the quadruple.
int cremona_shift(const LinearSystem& system, const Quadruple& idx);

/// Image of a curve class disjoint from the six base lines:
/// delta -> delta + 2h, mu_i -> mu_i + h, h = delta - sum of the four mu_i.
/// Throws if the curve carries incidence data.
CurveClass cremona_curve(const CurveClass& curve, const Quadruple& idx);

/// Full action on l_3(delta, mu_1..mu_4, beta_12..beta_34), based at the
/// first four points. Points past the fourth are unchanged.
CurveClass cremona_curve_full(const CurveClass& curve);

/// Transform of O(d) (x) I_Z (x) I_W with Z four fat points and W the six
/// lines through them with multiplicities n_ij. Line weights are formal
/// integers and may be negative.
struct LinedSystem {
  int degree = 0;
  std::array<int, 4> mults{};
  LineCycle lines;

  friend bool operator==(const LinedSystem&, const LinedSystem&) = default;
};

LinedSystem cremona_with_lines(const LinedSystem& sheaf);

/// True if the plane through points i, j, k is a fixed component
/// (2d - m_i - m_j - m_k < 0). Diagnostic only; the reduction never removes
/// planes directly.
bool has_fixed_plane(const LinearSystem& system, int i, int j, int k);

/// d >= 0, every m_i >= 0 and 2d >= m_1 + m_2 + m_3 + m_4 on the four
/// largest multiplicities. Expects a normalized system.
bool is_standard_form(const LinearSystem& system);

/// Empty because the degree is negative or a point has multiplicity above
/// the degree.
bool is_obviously_empty(const LinearSystem& system);

enum class StepKind { cremona, remove_component, remove_quadric };

std::string to_string(StepKind kind);

struct ReductionStep {
  StepKind kind = StepKind::cremona;
  std::vector<int> indices;  // 4 for cremona, 1 for remove_component, 9 for remove_quadric
  int alpha = 0;             // removed multiplicity, remove_component only
  LinearSystem before;
  LinearSystem after;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  LinearSystem final;
  bool empty = false;  // degree went negative or some m_i > d
};

/// Cremona reduction: apply the transformation on the four largest
/// multiplicities while it strictly lowers the degree, removing exceptional
/// components as soon as a multiplicity turns negative. Stops at a
/// standard-form system or as soon as the system is recognisably empty.
ReductionTrace reduce_to_standard(const LinearSystem& system);

/// The pair (2 delta - sum mu_i, delta^2 - 2 sum mu_i^2 + 3), both preserved
/// by `cremona_curve`.
std::pair<std::int64_t, std::int64_t> curve_invariants(const CurveClass& curve);

/// Sort mu non-increasing and drop trailing zeros.
CurveClass canonical_curve(CurveClass curve);

struct OrbitEntry {
  CurveClass curve;
  /// Reached from the line by a chain of steps each strictly raising the
  /// degree (without exceeding the cap).
  bool monotone = false;
  int depth = 0;  // BFS distance from the line
};

/// Effective curve classes reachable from the line l_3(1, 1^2) by cubic
/// Cremona transformations on r points, never passing degree `max_degree`.
/// Sorted by (degree, multiplicities).
std::vector<OrbitEntry> line_orbit(int points, int max_degree);

}  // namespace fatpoint3
