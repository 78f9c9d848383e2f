#include "fatpoint3/cremona.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace fatpoint3 {

namespace {

void check_quadruple(const Quadruple& idx) {
  for (int a = 0; a < 4; ++a) {
    if (idx[a] < 0) {
      throw std::invalid_argument("negative point index " + std::to_string(idx[a]));
    }
    for (int b = a + 1; b < 4; ++b) {
      if (idx[a] == idx[b]) {
        throw std::invalid_argument("Cremona quadruple repeats point index " +
                                    std::to_string(idx[a]));
      }
    }
  }
}

int max_index(const Quadruple& idx) { return *std::max_element(idx.begin(), idx.end()); }

constexpr Quadruple kFirstFour{0, 1, 2, 3};

// The pair of {0,1,2,3} complementary to {i, j}.
PointPair complement(int i, int j) {
  int other[2];
  int n = 0;
  for (int k = 0; k < 4; ++k) {
    if (k != i && k != j) {
      other[n++] = k;
    }
  }
  return {other[0], other[1]};
}

}  // namespace

int cremona_shift(const LinearSystem& system, const Quadruple& idx) {
  check_quadruple(idx);
  int k = 2 * system.degree;
  for (int i : idx) {
    k -= system.mult(i);
  }
  return k;
}

LinearSystem cremona_system(const LinearSystem& system, const Quadruple& idx) {
  const int k = cremona_shift(system, idx);
  LinearSystem out = system;
  if (out.points() <= max_index(idx)) {
    out.mults.resize(static_cast<std::size_t>(max_index(idx) + 1), 0);
  }
  out.degree += k;
  for (int i : idx) {
    out.mults[i] += k;
  }
  return out;
}

CurveClass cremona_curve(const CurveClass& curve, const Quadruple& idx) {
  check_quadruple(idx);
  if (curve.has_incidences()) {
    throw std::invalid_argument(
        "curve meets the base lines; use the full transformation on the first four points");
  }
  int h = curve.degree;
  for (int i : idx) {
    h -= curve.mult(i);
  }
  CurveClass out = curve;
  out.incidences.clear();
  if (out.points() <= max_index(idx)) {
    out.mults.resize(static_cast<std::size_t>(max_index(idx) + 1), 0);
  }
  out.degree += 2 * h;
  for (int i : idx) {
    out.mults[i] += h;
  }
  return out;
}

CurveClass cremona_curve_full(const CurveClass& curve) {
  for (const auto& [pair, value] : curve.incidences) {
    if (pair.first > 3 || pair.second > 3) {
      throw std::invalid_argument("incidence data only allowed on lines through the first four points");
    }
  }
  int beta_sum = 0;
  for (const auto& [pair, value] : curve.incidences) {
    beta_sum += value;
  }
  int mu_sum = 0;
  for (int i = 0; i < 4; ++i) {
    mu_sum += curve.mult(i);
  }

  CurveClass out;
  out.mults = curve.mults;
  if (out.points() < 4) {
    out.mults.resize(4, 0);
  }
  out.degree = 3 * curve.degree - 2 * mu_sum - beta_sum;
  for (int r = 0; r < 4; ++r) {
    int value = curve.degree - (mu_sum - curve.mult(r));
    for (const auto& [pair, beta] : curve.incidences) {
      if (pair.first != r && pair.second != r) {
        value -= beta;
      }
    }
    out.mults[r] = value;
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      auto [k, s] = complement(i, j);
      int beta = curve.incidence(k, s);
      if (beta != 0) {
        out.incidences[{i, j}] = beta;
      }
    }
  }
  return out;
}

LinedSystem cremona_with_lines(const LinedSystem& sheaf) {
  int s = 2 * sheaf.degree;
  for (int m : sheaf.mults) {
    s -= m;
  }
  LinedSystem out;
  out.degree = sheaf.degree + s;
  for (int i = 0; i < 4; ++i) {
    out.mults[i] = sheaf.mults[i] + s;
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      auto [h, k] = complement(i, j);
      out.lines.set(i, j, sheaf.degree - sheaf.mults[i] - sheaf.mults[j] + sheaf.lines.get(h, k));
    }
  }
  return out;
}

bool has_fixed_plane(const LinearSystem& system, int i, int j, int k) {
  if (i == j || j == k || i == k) {
    throw std::invalid_argument("plane needs three distinct points");
  }
  return 2 * system.degree - system.mult(i) - system.mult(j) - system.mult(k) < 0;
}

bool is_standard_form(const LinearSystem& system) {
  if (system.degree < 0) {
    return false;
  }
  if (std::any_of(system.mults.begin(), system.mults.end(), [](int m) { return m < 0; })) {
    return false;
  }
  return cremona_shift(system, kFirstFour) >= 0;
}

bool is_obviously_empty(const LinearSystem& system) {
  if (system.degree < 0) {
    return true;
  }
  return std::any_of(system.mults.begin(), system.mults.end(),
                     [&](int m) { return m > system.degree; });
}

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::cremona:
      return "cremona";
    case StepKind::remove_component:
      return "remove_component";
    case StepKind::remove_quadric:
      return "remove_quadric";
  }
  return "unknown";
}

ReductionTrace reduce_to_standard(const LinearSystem& system) {
  ReductionTrace trace;
  LinearSystem current = normalize(system);
  while (true) {
    if (is_obviously_empty(current)) {
      trace.empty = true;
      break;
    }
    // Negative multiplicities sort last; peel the most negative one first.
    if (!current.mults.empty() && current.mults.back() < 0) {
      ReductionStep step;
      step.kind = StepKind::remove_component;
      step.indices = {current.points() - 1};
      step.alpha = -current.mults.back();
      step.before = current;
      current.mults.pop_back();
      step.after = current;
      trace.steps.push_back(std::move(step));
      continue;
    }
    if (is_standard_form(current)) {
      break;
    }
    ReductionStep step;
    step.kind = StepKind::cremona;
    step.indices.assign(kFirstFour.begin(), kFirstFour.end());
    step.before = current;
    current = normalize(cremona_system(current, kFirstFour));
    step.after = current;
    trace.steps.push_back(std::move(step));
  }
  trace.final = current;
  return trace;
}

std::pair<std::int64_t, std::int64_t> curve_invariants(const CurveClass& curve) {
  if (curve.has_incidences()) {
    throw std::invalid_argument("curve invariants are defined for classes without incidences");
  }
  std::int64_t linear = 2 * static_cast<std::int64_t>(curve.degree);
  std::int64_t quadratic = static_cast<std::int64_t>(curve.degree) * curve.degree + 3;
  for (int mu : curve.mults) {
    linear -= mu;
    quadratic -= 2 * static_cast<std::int64_t>(mu) * mu;
  }
  return {linear, quadratic};
}

CurveClass canonical_curve(CurveClass curve) {
  std::sort(curve.mults.begin(), curve.mults.end(), std::greater<>{});
  while (!curve.mults.empty() && curve.mults.back() == 0) {
    curve.mults.pop_back();
  }
  return curve;
}

namespace {

struct CurveKey {
  int degree;
  std::vector<int> mults;
  auto operator<=>(const CurveKey&) const = default;
};

CurveKey key_of(const CurveClass& c) { return {c.degree, c.mults}; }

std::vector<Quadruple> all_quadruples(int points) {
  std::vector<Quadruple> out;
  for (int a = 0; a < points; ++a)
    for (int b = a + 1; b < points; ++b)
      for (int c = b + 1; c < points; ++c)
        for (int d = c + 1; d < points; ++d) out.push_back({a, b, c, d});
  return out;
}

struct Image {
  CurveClass curve;
  bool raises_degree;
};

// Images of one class under every quadruple, restricted to effective classes
// of degree in [1, max_degree].
std::vector<Image> images_of(const CurveClass& curve, int points, int max_degree,
                             const std::vector<Quadruple>& quads) {
  std::vector<Image> out;
  CurveClass padded = curve;
  padded.mults.resize(static_cast<std::size_t>(points), 0);
  for (const auto& q : quads) {
    CurveClass image = cremona_curve(padded, q);
    if (image.degree < 1 || image.degree > max_degree) {
      continue;
    }
    if (std::any_of(image.mults.begin(), image.mults.end(), [](int mu) { return mu < 0; })) {
      continue;
    }
    const bool raises = image.degree > curve.degree;
    out.push_back({canonical_curve(std::move(image)), raises});
  }
  return out;
}

}  // namespace

std::vector<OrbitEntry> line_orbit(int points, int max_degree) {
  if (points < 2 || points > 10) {
    throw std::invalid_argument("line orbit needs between 2 and 10 points");
  }
  if (max_degree < 1 || max_degree > 50) {
    throw std::invalid_argument("line orbit degree cap must be in [1, 50]");
  }
  const auto quads = all_quadruples(points);
  CurveClass line{1, {1, 1}, {}};

  std::map<CurveKey, OrbitEntry> seen;
  seen[key_of(line)] = {line, true, 0};

  // Two closures share one BFS: the full orbit, and the subset reached by
  // degree-raising steps only. Frontier images are computed in parallel and
  // merged in frontier order, so the result does not depend on scheduling.
  std::vector<CurveClass> frontier{line};
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<std::vector<Image>> images(frontier.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(frontier.size()); ++i) {
      images[i] = images_of(frontier[i], points, max_degree, quads);
    }
    std::vector<CurveClass> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (auto& img : images[i]) {
        auto key = key_of(img.curve);
        if (!seen.contains(key)) {
          seen[key] = {img.curve, false, depth};
          next.push_back(img.curve);
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<CurveClass> monotone_frontier{line};
  while (!monotone_frontier.empty()) {
    std::vector<CurveClass> next;
    for (const auto& c : monotone_frontier) {
      for (auto& img : images_of(c, points, max_degree, quads)) {
        if (!img.raises_degree) {
          continue;
        }
        auto& entry = seen.at(key_of(img.curve));
        if (!entry.monotone) {
          entry.monotone = true;
          next.push_back(img.curve);
        }
      }
    }
    monotone_frontier = std::move(next);
  }

  std::vector<OrbitEntry> out;
  out.reserve(seen.size());
  for (auto& [key, entry] : seen) {
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace fatpoint3
