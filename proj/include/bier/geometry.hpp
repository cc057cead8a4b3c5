#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bier/fan.hpp"
#include "bier/linalg.hpp"

namespace bier {

/// The unique λ with Σ λ_i = 0 and Σ λ_i u_i = x.
inline RationalVector circuit_coordinates(const Circuit& c, const RationalVector& x) {
  const int n = c.n();
  require(x.size() == static_cast<std::size_t>(n), ErrorCode::NotInSpan, "point has the wrong dimension");
  linalg::Matrix m = linalg::columns(c.vectors());
  m.emplace_back(static_cast<std::size_t>(n), Rational(1));
  RationalVector rhs = x;
  rhs.emplace_back(0);
  auto lambda = linalg::solve(m, rhs);
  require(lambda.has_value(), ErrorCode::NotInSpan, "point " + to_string(x) + " is not in the span of the circuit");
  return *lambda;
}

/// Exact value q·√r with r a positive integer (squarefree for the factorial-sized
/// inputs this library produces; trial division stops at 10^5).
class ExactVolume {
 public:
  static ExactVolume from_square(const Rational& square) {
    require(square >= 0, ErrorCode::Range, "squared volume must be non-negative");
    if (square == 0) return ExactVolume(Rational(0), Integer(1));
    const Integer den = denominator_of(square);
    Integer rest = numerator_of(square) * den;
    Integer outside = 1;
    for (Integer p = 2; p * p <= rest && p < 100000; ++p) {
      while (rest % (p * p) == 0) {
        rest /= p * p;
        outside *= p;
      }
    }
    const Integer root = boost::multiprecision::sqrt(rest);
    if (root * root == rest) {
      outside *= root;
      rest = 1;
    }
    return ExactVolume(Rational(outside, den), rest);
  }

  [[nodiscard]] const Rational& q() const { return q_; }
  [[nodiscard]] const Integer& r() const { return r_; }
  [[nodiscard]] Rational squared() const { return q_ * q_ * Rational(r_); }
  [[nodiscard]] double approx() const { return q_.convert_to<double>() * std::sqrt(r_.convert_to<double>()); }
  [[nodiscard]] std::string to_string() const {
    return r_ == 1 ? bier::to_string(q_) : bier::to_string(q_) + "*sqrt(" + r_.str() + ")";
  }

  friend bool operator==(const ExactVolume&, const ExactVolume&) = default;

 private:
  ExactVolume(Rational q, Integer r) : q_(std::move(q)), r_(std::move(r)) {}
  Rational q_;
  Integer r_;
};

/// Gram determinant of the ray vectors of a facet simplex.
inline Rational facet_gram_determinant(const BierFace& tau, const Circuit& c) {
  return linalg::determinant(linalg::gram(directions(facet_rays(tau, c))));
}

inline Integer factorial(int n) {
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

/// Euclidean (n-1)-volume of one facet simplex conv(0, ±δ_i ...) of Star(K),
/// √(Gram det) / (n-1)!, with the metric induced from R^n.
inline ExactVolume vol0(int n) {
  check_ground(n);
  const auto c = Circuit::delta(n);
  std::vector<RationalVector> vs(c.vectors().begin(), c.vectors().end() - 1);
  const Rational g = linalg::determinant(linalg::gram(vs));
  const Rational f = Rational(factorial(n - 1));
  return ExactVolume::from_square(g / (f * f));
}

/// Vol(Star(K)) / Vol_0 = Σ m_i = number of facets of Bier(K).
inline std::uint64_t normalized_volume(const SimplicialComplex& k) {
  const auto m = m_vector(k);
  return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

inline ExactVolume euclidean_volume(const SimplicialComplex& k) {
  const Rational f(normalized_volume(k));
  return ExactVolume::from_square(f * f * vol0(k.n()).squared());
}

/// Change of normalized volume when the minimal non-face B is added to K:
/// |[n]∖B| - |B|.
inline std::int64_t volume_delta(const SimplicialComplex& k, FaceSet b) {
  const int n = k.n();
  require(b.subset_of(k.ground()), ErrorCode::InvalidFace, "B must be a subset of [n]");
  require(!k.contains(b), ErrorCode::NotMinimalNonface, b.to_string() + " is already a face");
  for (int v : b.vertices())
    require(k.contains(b.without(v)), ErrorCode::NotMinimalNonface,
            b.to_string() + " is not minimal: dropping " + std::to_string(v + 1) + " leaves a non-face");
  require(b != k.ground(), ErrorCode::NotProper, "adding [n] destroys properness");
  return static_cast<std::int64_t>(n - b.size()) - b.size();
}

/// Ascending order of the coordinates, ties broken by index.
inline std::vector<int> ascending_order(const RationalVector& x) {
  std::vector<int> perm(x.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&x](int a, int b) { return x[static_cast<std::size_t>(a)] < x[static_cast<std::size_t>(b)]; });
  return perm;
}

/// Gauge of Star(K) at x: with τ the facet whose cone holds x and
/// x = Σ_{A1} a_i(-δ_i) + Σ_{A2} b_j δ_j, returns Σ a + Σ b.
inline Rational star_gauge(const SimplicialComplex& k, const RationalVector& x) {
  require_in_h0(x, k.n());
  const auto tau = facet_of_permutation(k, ascending_order(x));
  const auto pivot = x[static_cast<std::size_t>(tau.b().min_vertex())];
  Rational total = 0;
  for (int i : tau.a1().vertices()) total += pivot - x[static_cast<std::size_t>(i)];
  for (int j : tau.a2().vertices()) total += x[static_cast<std::size_t>(j)] - pivot;
  return total;
}

inline bool star_contains(const SimplicialComplex& k, const RationalVector& x) { return star_gauge(k, x) <= 1; }

/// Gauge of Ω_n = conv(±u_i): min over representations x = Σ γ_i u_i of Σ|γ_i|.
/// The γ are λ + t·1, minimized at t = -median(λ).
inline Rational vkf_gauge(const Circuit& c, const RationalVector& x) {
  auto lambda = circuit_coordinates(c, x);
  auto sorted = lambda;
  std::sort(sorted.begin(), sorted.end());
  const Rational median = sorted[(sorted.size() - 1) / 2];
  Rational total = 0;
  for (const auto& l : lambda) total += abs(l - median);
  return total;
}

inline bool vkf_contains(const Circuit& c, const RationalVector& x) { return vkf_gauge(c, x) <= 1; }

/// {u_1, ..., u_n, -u_1, ..., -u_n}.
inline std::vector<RationalVector> vkf_vertices(const Circuit& c) {
  std::vector<RationalVector> out = c.vectors();
  for (const auto& u : c.vectors()) out.push_back(scaled(u, Rational(-1)));
  return out;
}

/// {u_i}_{i∈I} ∪ {-u_j}_{j∈J} lies on a common proper face of Ω_n iff I ∩ J = ∅
/// and |I|, |J| <= n/2. The empty selection is rejected (returns false).
inline bool vkf_is_face(int n, FaceSet i, FaceSet j) {
  check_ground(n);
  require(i.subset_of(FaceSet::full(n)) && j.subset_of(FaceSet::full(n)), ErrorCode::Range,
          "vertex selections must be subsets of [n]");
  if (i.empty() && j.empty()) return false;
  return i.disjoint(j) && 2 * i.size() <= n && 2 * j.size() <= n;
}

struct MinkowskiValues {
  Rational simplex;   // μ_Δ = n max λ_i^-
  Rational opposite;  // μ_∇ = n max λ_i^+
  Rational polar;     // μ_{Ω°} = n max |λ_i|
};

inline MinkowskiValues minkowski(const Circuit& c, const RationalVector& x) {
  const auto lambda = circuit_coordinates(c, x);
  Rational neg = 0;
  Rational pos = 0;
  for (const auto& l : lambda) {
    neg = std::max(neg, Rational(-l));
    pos = std::max(pos, l);
  }
  const Rational n(c.n());
  return {n * neg, n * pos, n * std::max(neg, pos)};
}

/// 0/1 vectors of length n with exactly r ones, ascending by support bitmask.
inline std::vector<std::vector<int>> hypersimplex_vertices(int n, int r) {
  require(n >= 2 && n <= kMaxGround, ErrorCode::Range, "hypersimplex needs 2 <= n <= 20");
  require(r >= 1 && r <= n - 1, ErrorCode::Range, "hypersimplex needs 1 <= r <= n-1");
  std::vector<std::vector<int>> out;
  for (FaceSet::mask_type m = 0; m < (FaceSet::mask_type{1} << n); ++m) {
    const FaceSet s(m);
    if (s.size() != r) continue;
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    for (int i : s.vertices()) v[static_cast<std::size_t>(i)] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

/// Vertices of Ω_n° in λ-coordinates, {λ : Σ λ = 0, |λ_i| <= 1}, by solving
/// every choice of n-1 tight bound constraints together with Σ λ = 0.
inline std::vector<RationalVector> polar_vertices(int n, int max_n = 8) {
  check_ground(n);
  require(n <= max_n, ErrorCode::BudgetExceeded, "polar vertex enumeration limited to n <= " + std::to_string(max_n));
  std::set<RationalVector> found;
  for (int loose = 0; loose < n; ++loose) {
    for (FaceSet::mask_type signs = 0; signs < (FaceSet::mask_type{1} << (n - 1)); ++signs) {
      linalg::Matrix m;
      RationalVector rhs;
      m.emplace_back(static_cast<std::size_t>(n), Rational(1));
      rhs.emplace_back(0);
      int bit = 0;
      for (int i = 0; i < n; ++i) {
        if (i == loose) continue;
        RationalVector row(static_cast<std::size_t>(n), Rational(0));
        row[static_cast<std::size_t>(i)] = 1;
        m.push_back(std::move(row));
        rhs.emplace_back(((signs >> bit++) & 1U) ? 1 : -1);
      }
      const auto lambda = linalg::solve(m, rhs);
      if (!lambda) continue;
      const bool inside = std::all_of(lambda->begin(), lambda->end(), [](const Rational& l) { return abs(l) <= 1; });
      if (inside) found.insert(*lambda);
    }
  }
  return {found.begin(), found.end()};
}

struct PolarIsoReport {
  int n = 0;
  bool pass = false;
  std::string target;
  std::vector<RationalVector> vertices;  // images x = (λ + 1)/2, sorted
};

/// Checks that λ ↦ (λ + 1)/2 maps the vertices of Ω_n° bijectively onto the
/// hypersimplex Δ_{2k,k} (n = 2k) or the half-integral hull with k zeros,
/// k ones and a single 1/2 (n = 2k+1).
inline PolarIsoReport polar_iso_check(int n, int max_n = 8) {
  PolarIsoReport report;
  report.n = n;
  std::set<RationalVector> mapped;
  for (const auto& lambda : polar_vertices(n, max_n)) {
    RationalVector x;
    for (const auto& l : lambda) x.push_back((l + 1) / 2);
    mapped.insert(std::move(x));
  }
  const int k = n / 2;
  std::set<RationalVector> target;
  if (n % 2 == 0) {
    report.target = "Delta(" + std::to_string(n) + "," + std::to_string(k) + ")";
    for (const auto& v : hypersimplex_vertices(n, k)) target.insert(RationalVector(v.begin(), v.end()));
  } else {
    report.target = "HalfHull(" + std::to_string(n) + "," + std::to_string(k) + ")";
    for (int half = 0; half < n; ++half)
      for (const auto& v : hypersimplex_vertices(n - 1, k)) {
        RationalVector x;
        for (int i = 0, src = 0; i < n; ++i) x.push_back(i == half ? Rational(1, 2) : Rational(v[static_cast<std::size_t>(src++)]));
        target.insert(std::move(x));
      }
  }
  report.pass = mapped == target;
  report.vertices.assign(mapped.begin(), mapped.end());
  return report;
}

}  // namespace bier
