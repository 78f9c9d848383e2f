#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace fatpoint3 {

/// Degree-d surfaces of P^3 through r general points with multiplicity at
/// least m_i at the i-th point, written L_3(d, m_1, ..., m_r).
///
/// The degree may go negative and multiplicities may go negative while a
/// Cremona reduction is in progress; `normalize` never touches signs.
struct LinearSystem {
  int degree = 0;
  std::vector<int> mults;

  int points() const { return static_cast<int>(mults.size()); }
  /// Multiplicity at index i, zero past the end (implicit padding).
  int mult(int i) const { return i < points() ? mults[i] : 0; }

  friend bool operator==(const LinearSystem&, const LinearSystem&) = default;
};

/// Unordered pair of point indices, stored with first < second.
using PointPair = std::pair<int, int>;

PointPair make_pair_key(int i, int j);

/// Curve class l_3(delta, mu_1, ..., mu_r) together with optional
/// incidence numbers beta_ij with the six lines through the first four
/// points.
struct CurveClass {
  int degree = 0;
  std::vector<int> mults;
  std::map<PointPair, int> incidences;

  int points() const { return static_cast<int>(mults.size()); }
  int mult(int i) const { return i < points() ? mults[i] : 0; }
  int incidence(int i, int j) const;
  bool has_incidences() const;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

/// Coordinates (a; b_1, ..., b_r) of the divisor a H - sum b_i E_i on the
/// blow-up of P^3 at r points. A LinearSystem embeds as (d; m_1, ..., m_r).
struct DivisorClass {
  std::int64_t h_coeff = 0;
  std::vector<std::int64_t> e_coeffs;

  static DivisorClass from(const LinearSystem& system);

  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Formal 1-cycle sum w_ij l_ij over lines through pairs of points.
/// Zero weights are never stored.
class LineCycle {
 public:
  int get(int i, int j) const;
  void set(int i, int j, int weight);
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::map<PointPair, int>& entries() const& { return entries_; }
  std::map<PointPair, int> entries() && { return std::move(entries_); }

  friend bool operator==(const LineCycle&, const LineCycle&) = default;

 private:
  std::map<PointPair, int> entries_;
};

/// Binomial coefficient C(n, k) for n >= 0; zero when n < k.
std::int64_t binomial(std::int64_t n, int k);

/// Number of conditions imposed by a point of multiplicity m, C(m+2, 3).
/// Multiplicities m <= 0 impose nothing.
std::int64_t point_conditions(int m);

/// Sort multiplicities non-increasing and drop zeros.
LinearSystem normalize(LinearSystem system);

/// C(d+3, 3) - sum C(m_i+2, 3) - 1. Throws std::invalid_argument if d < 0.
std::int64_t virtual_dimension(const LinearSystem& system);

/// max(v, -1).
std::int64_t expected_dimension(const LinearSystem& system);

/// d delta - sum mu_i m_i. The curve must not carry incidence data and must
/// be indexed over the same points as the system.
std::int64_t intersect_curve(const LinearSystem& system, const CurveClass& curve);

/// a1 a2 a3 - sum b1i b2i b3i (H^3 = E_i^3 = 1, mixed terms vanish).
std::int64_t triple_product(const DivisorClass& a, const DivisorClass& b,
                            const DivisorClass& c);

/// K = -4H + 2 sum E_i, i.e. coordinates (-4; -2, ..., -2).
DivisorClass canonical_class(int points);

}  // namespace fatpoint3
