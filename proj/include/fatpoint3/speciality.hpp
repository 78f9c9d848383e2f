#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "fatpoint3/cremona.hpp"
#include "fatpoint3/system.hpp"

namespace fatpoint3 {

/// Lines l_ij with t_ij = m_i + m_j - d >= 1, weighted by t_ij. Every pair of
/// points is considered, not only the first four.
LineCycle gamma_cycle(const LinearSystem& system);

/// Sum over pairs with t_ij >= 2 of C(t_ij + 1, 3).
std::int64_t speciality_correction(const LinearSystem& system);

/// Q (L - Q) (L - K) with Q the quadric through the nine points of largest
/// multiplicity. Empty optional when the system has fewer than nine points.
std::optional<std::int64_t> quadric_triple(const LinearSystem& system);

struct QuadricRemoval {
  LinearSystem final;
  std::vector<ReductionStep> steps;
};

/// Subtract the quadric through the nine largest points while the quadric
/// test is negative and those nine multiplicities are all positive.
QuadricRemoval remove_quadrics(const LinearSystem& system);

struct ConjecturedDimension {
  std::int64_t dimension = -1;
  /// v + corrections before clamping at -1.
  std::int64_t raw = -1;
  /// The reduction hit an obviously empty system.
  bool empty = false;
  /// raw < -1 on a non-empty final system; reported, then clamped.
  bool clamped = false;
  ReductionTrace trace;
};

/// Dimension predicted by Cremona reduction, quadric removal and the line
/// correction on the resulting standard-form system.
ConjecturedDimension conjectured_dimension(const LinearSystem& system);

struct SpecialityVerdict {
  bool special = false;
  std::int64_t speciality = 0;  // conjectured - expected
};

SpecialityVerdict is_special(const LinearSystem& system);

/// C(t+1, 3) for the line through points i and j, t = m_i + m_j - d >= 2.
std::int64_t line_speciality_bound(const LinearSystem& system, int i, int j);

enum class HomogeneousVerdict { empty, special, non_special, procedure_required };

std::string to_string(HomogeneousVerdict verdict);

/// Classification of L_3(d, m^r).
HomogeneousVerdict classify_homogeneous(int degree, int mult, int points);

/// L_3(2r, r^8, r_1, ..., r_n) with r = sum r_i: the fixed system of
/// quadrics through eight common points, each Q_i counted r_i times.
LinearSystem quadric_pencil_system(std::span<const int> weights);

struct QuadricPencil {
  std::int64_t dimension = 0;
  std::int64_t virtual_dim = 0;  // sum (r_i - C(r_i + 2, 3))
  bool special = false;
};

QuadricPencil quadric_pencil_dimension(std::span<const int> weights);

}  // namespace fatpoint3
