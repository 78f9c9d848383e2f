#include "fatpoint3/speciality.hpp"

#include <algorithm>
#include <stdexcept>

namespace fatpoint3 {

LineCycle gamma_cycle(const LinearSystem& system) {
  LineCycle out;
  for (int i = 0; i < system.points(); ++i) {
    for (int j = i + 1; j < system.points(); ++j) {
      int t = system.mults[i] + system.mults[j] - system.degree;
      if (t >= 1) {
        out.set(i, j, t);
      }
    }
  }
  return out;
}

std::int64_t speciality_correction(const LinearSystem& system) {
  std::int64_t out = 0;
  const auto cycle = gamma_cycle(system);
  for (const auto& [pair, t] : cycle.entries()) {
    if (t >= 2) {
      out += binomial(static_cast<std::int64_t>(t) + 1, 3);
    }
  }
  return out;
}

namespace {

DivisorClass quadric_class(int points) {
  DivisorClass q{2, std::vector<std::int64_t>(static_cast<std::size_t>(points), 0)};
  for (int i = 0; i < 9; ++i) {
    q.e_coeffs[i] = 1;
  }
  return q;
}

}  // namespace

std::optional<std::int64_t> quadric_triple(const LinearSystem& system) {
  if (system.points() < 9) {
    return std::nullopt;
  }
  const auto l = DivisorClass::from(system);
  const auto q = quadric_class(system.points());
  return triple_product(q, l - q, l - canonical_class(system.points()));
}

QuadricRemoval remove_quadrics(const LinearSystem& system) {
  QuadricRemoval out;
  LinearSystem current = normalize(system);
  while (current.points() >= 9 && current.mults[8] >= 1) {
    auto triple = quadric_triple(current);
    if (!triple || *triple >= 0) {
      break;
    }
    ReductionStep step;
    step.kind = StepKind::remove_quadric;
    step.indices = {0, 1, 2, 3, 4, 5, 6, 7, 8};
    step.before = current;
    current.degree -= 2;
    for (int i = 0; i < 9; ++i) {
      current.mults[i] -= 1;
    }
    current = normalize(std::move(current));
    step.after = current;
    out.steps.push_back(std::move(step));
  }
  out.final = current;
  return out;
}

ConjecturedDimension conjectured_dimension(const LinearSystem& system) {
  ConjecturedDimension out;
  LinearSystem current = normalize(system);
  // Quadric removal keeps standard form for every non-empty system; when it
  // does not, the system goes back through Cremona reduction, which then
  // detects the emptiness.
  while (true) {
    auto reduced = reduce_to_standard(current);
    out.trace.steps.insert(out.trace.steps.end(), reduced.steps.begin(), reduced.steps.end());
    current = reduced.final;
    if (reduced.empty) {
      out.empty = true;
      break;
    }
    auto removed = remove_quadrics(current);
    out.trace.steps.insert(out.trace.steps.end(), removed.steps.begin(), removed.steps.end());
    current = removed.final;
    if (removed.steps.empty() || is_standard_form(current)) {
      break;
    }
  }
  out.trace.final = current;
  out.trace.empty = out.empty;
  if (out.empty) {
    out.raw = -1;
    out.dimension = -1;
    return out;
  }
  out.raw = virtual_dimension(current) + speciality_correction(current);
  out.clamped = out.raw < -1;
  out.dimension = std::max<std::int64_t>(out.raw, -1);
  return out;
}

SpecialityVerdict is_special(const LinearSystem& system) {
  const auto conj = conjectured_dimension(system);
  const auto expected = expected_dimension(normalize(system));
  SpecialityVerdict out;
  out.speciality = conj.dimension - expected;
  out.special = conj.dimension >= 0 && out.speciality > 0;
  return out;
}

std::int64_t line_speciality_bound(const LinearSystem& system, int i, int j) {
  if (i == j || i < 0 || j < 0) {
    throw std::invalid_argument("line needs two distinct point indices");
  }
  const int t = system.mult(i) + system.mult(j) - system.degree;
  if (t < 2) {
    throw std::invalid_argument("line through points " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " has t = " + std::to_string(t) +
                                " < 2, no speciality bound");
  }
  return binomial(static_cast<std::int64_t>(t) + 1, 3);
}

std::string to_string(HomogeneousVerdict verdict) {
  switch (verdict) {
    case HomogeneousVerdict::empty:
      return "empty";
    case HomogeneousVerdict::special:
      return "special";
    case HomogeneousVerdict::non_special:
      return "non_special";
    case HomogeneousVerdict::procedure_required:
      return "procedure_required";
  }
  return "unknown";
}

HomogeneousVerdict classify_homogeneous(int degree, int mult, int points) {
  if (degree < 0 || mult < 0 || points < 1) {
    throw std::invalid_argument("homogeneous classification needs d, m >= 0 and r >= 1");
  }
  if (degree <= 2 * mult - 1) {
    return points >= 8 ? HomogeneousVerdict::empty : HomogeneousVerdict::procedure_required;
  }
  if (points != 9) {
    return HomogeneousVerdict::non_special;
  }
  // Q (L - Q) (L - K) = 2(d+1)^2 - 9m(m+1) for L = L_3(d, m^9).
  const auto triple = *quadric_triple(LinearSystem{degree, std::vector<int>(9, mult)});
  return triple < 0 ? HomogeneousVerdict::special : HomogeneousVerdict::non_special;
}

LinearSystem quadric_pencil_system(std::span<const int> weights) {
  if (weights.empty()) {
    throw std::invalid_argument("quadric pencil needs at least one weight");
  }
  int total = 0;
  for (int w : weights) {
    if (w < 1) {
      throw std::invalid_argument("quadric weights must be positive");
    }
    total += w;
  }
  LinearSystem out{2 * total, std::vector<int>(8, total)};
  out.mults.insert(out.mults.end(), weights.begin(), weights.end());
  return out;
}

QuadricPencil quadric_pencil_dimension(std::span<const int> weights) {
  quadric_pencil_system(weights);  // validates
  QuadricPencil out;
  for (int w : weights) {
    out.virtual_dim += w - point_conditions(w);
  }
  out.special = out.virtual_dim < out.dimension;
  return out;
}

}  // namespace fatpoint3
