#include "fatpoint3/system.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace fatpoint3 {

PointPair make_pair_key(int i, int j) {
  if (i == j) {
    throw std::invalid_argument("a line needs two distinct points, got " + std::to_string(i) +
                                " twice");
  }
  return i < j ? PointPair{i, j} : PointPair{j, i};
}

int CurveClass::incidence(int i, int j) const {
  auto it = incidences.find(make_pair_key(i, j));
  return it == incidences.end() ? 0 : it->second;
}

bool CurveClass::has_incidences() const {
  return std::any_of(incidences.begin(), incidences.end(),
                     [](const auto& kv) { return kv.second != 0; });
}

DivisorClass DivisorClass::from(const LinearSystem& system) {
  DivisorClass out;
  out.h_coeff = system.degree;
  out.e_coeffs.assign(system.mults.begin(), system.mults.end());
  return out;
}

namespace {

DivisorClass combine(const DivisorClass& a, const DivisorClass& b,
                     const std::function<std::int64_t(std::int64_t, std::int64_t)>& op) {
  if (a.e_coeffs.size() != b.e_coeffs.size()) {
    throw std::invalid_argument("divisor classes live on blow-ups at different point counts");
  }
  DivisorClass out;
  out.h_coeff = op(a.h_coeff, b.h_coeff);
  out.e_coeffs.resize(a.e_coeffs.size());
  for (std::size_t i = 0; i < a.e_coeffs.size(); ++i) {
    out.e_coeffs[i] = op(a.e_coeffs[i], b.e_coeffs[i]);
  }
  return out;
}

}  // namespace

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  return combine(a, b, std::plus<>{});
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  return combine(a, b, std::minus<>{});
}

int LineCycle::get(int i, int j) const {
  auto it = entries_.find(make_pair_key(i, j));
  return it == entries_.end() ? 0 : it->second;
}

void LineCycle::set(int i, int j, int weight) {
  auto key = make_pair_key(i, j);
  if (weight == 0) {
    entries_.erase(key);
  } else {
    entries_[key] = weight;
  }
}

std::int64_t binomial(std::int64_t n, int k) {
  if (k < 0 || n < k) {
    return 0;
  }
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

std::int64_t point_conditions(int m) {
  return m <= 0 ? 0 : binomial(static_cast<std::int64_t>(m) + 2, 3);
}

LinearSystem normalize(LinearSystem system) {
  std::erase(system.mults, 0);
  std::sort(system.mults.begin(), system.mults.end(), std::greater<>{});
  return system;
}

std::int64_t virtual_dimension(const LinearSystem& system) {
  if (system.degree < 0) {
    throw std::invalid_argument("virtual dimension needs a non-negative degree, got " +
                                std::to_string(system.degree));
  }
  std::int64_t v = binomial(static_cast<std::int64_t>(system.degree) + 3, 3) - 1;
  for (int m : system.mults) {
    v -= point_conditions(m);
  }
  return v;
}

std::int64_t expected_dimension(const LinearSystem& system) {
  return std::max<std::int64_t>(virtual_dimension(system), -1);
}

std::int64_t intersect_curve(const LinearSystem& system, const CurveClass& curve) {
  if (system.points() != curve.points()) {
    throw std::invalid_argument("system has " + std::to_string(system.points()) +
                                " points but curve has " + std::to_string(curve.points()));
  }
  if (curve.has_incidences()) {
    throw std::invalid_argument(
        "intersection with a curve meeting the base lines needs the resolution, not supported");
  }
  std::int64_t out = static_cast<std::int64_t>(system.degree) * curve.degree;
  for (int i = 0; i < system.points(); ++i) {
    out -= static_cast<std::int64_t>(system.mults[i]) * curve.mults[i];
  }
  return out;
}

std::int64_t triple_product(const DivisorClass& a, const DivisorClass& b,
                            const DivisorClass& c) {
  if (a.e_coeffs.size() != b.e_coeffs.size() || a.e_coeffs.size() != c.e_coeffs.size()) {
    throw std::invalid_argument("triple product of classes with different point counts");
  }
  std::int64_t out = a.h_coeff * b.h_coeff * c.h_coeff;
  for (std::size_t i = 0; i < a.e_coeffs.size(); ++i) {
    out -= a.e_coeffs[i] * b.e_coeffs[i] * c.e_coeffs[i];
  }
  return out;
}

DivisorClass canonical_class(int points) {
  if (points < 0) {
    throw std::invalid_argument("negative point count");
  }
  return DivisorClass{-4, std::vector<std::int64_t>(static_cast<std::size_t>(points), -2)};
}

}  // namespace fatpoint3
