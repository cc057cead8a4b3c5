#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bier/fan.hpp"
#include "bier/lp.hpp"

namespace bier {

/// Heights on the 2n Bier vertices: f(i) at slot i (ray -δ_i), f(ī) at slot n+i (ray +δ_i).
class HeightVector {
 public:
  explicit HeightVector(int n) : n_(n), values_(static_cast<std::size_t>(2 * n), Rational(0)) {}
  HeightVector(int n, RationalVector values) : n_(n), values_(std::move(values)) {
    require(values_.size() == static_cast<std::size_t>(2 * n), ErrorCode::Range, "height vector needs 2n entries");
  }

  static HeightVector constant(int n, const Rational& value) {
    return HeightVector(n, RationalVector(static_cast<std::size_t>(2 * n), value));
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const RationalVector& values() const { return values_; }
  [[nodiscard]] const Rational& operator[](BierVertex v) const { return values_[v.slot(n_)]; }
  Rational& operator[](BierVertex v) { return values_[v.slot(n_)]; }

  friend bool operator==(const HeightVector&, const HeightVector&) = default;

 private:
  int n_;
  RationalVector values_;
};

/// Σ coefficients · f > 0 for one ridge of Bier(K).
struct WallInequality {
  RationalVector coefficients;  // 2n entries, same layout as HeightVector
  std::size_t ridge = 0;        // index into ridges(K)
  RidgeKind kind = RidgeKind::Lambda;

  [[nodiscard]] Rational evaluate(const HeightVector& f) const { return dot(coefficients, f.values()); }
};

inline bool same_up_to_positive_scaling(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) return false;
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] == 0) != (b[i] == 0)) return false;
    if (a[i] == 0) continue;
    const Rational r = b[i] / a[i];
    if (r <= 0 || (ratio && *ratio != r)) return false;
    ratio = r;
  }
  return ratio.has_value();
}

/// Wall-crossing inequality read off the unique linear dependence
/// α r + β s + Σ γ_t t = 0 (α, β > 0) among the rays of the two facets at a ridge.
inline WallInequality wall_inequality_from_rays(const Ridge& ridge, const Circuit& c) {
  const int n = c.n();
  const auto left = facet_rays(ridge.facets[0], c);
  const auto right = facet_rays(ridge.facets[1], c);
  std::vector<Ray> rays = left;
  std::optional<std::size_t> r_index;
  std::optional<std::size_t> s_index;
  for (std::size_t i = 0; i < left.size(); ++i) {
    const bool shared = std::any_of(right.begin(), right.end(), [&](const Ray& x) { return x.vertex == left[i].vertex; });
    if (!shared) r_index = i;
  }
  for (const auto& x : right) {
    const bool shared = std::any_of(left.begin(), left.end(), [&](const Ray& y) { return y.vertex == x.vertex; });
    if (!shared) {
      s_index = rays.size();
      rays.push_back(x);
    }
  }
  require(r_index && s_index && rays.size() == static_cast<std::size_t>(n), ErrorCode::Internal,
          "adjacent facets must differ in exactly one ray");
  const auto null = linalg::nullspace(linalg::columns(directions(rays)), rays.size());
  require(null.size() == 1, ErrorCode::Internal, "ray dependence is not unique");
  RationalVector dep = null.front();
  if (dep[*r_index] < 0) dep = scaled(dep, Rational(-1));
  require(dep[*r_index] > 0 && dep[*s_index] > 0, ErrorCode::Internal, "wall dependence has non-positive crossing coefficients");
  WallInequality w;
  w.coefficients.assign(static_cast<std::size_t>(2 * n), Rational(0));
  for (std::size_t i = 0; i < rays.size(); ++i) w.coefficients[rays[i].vertex.slot(n)] += dep[i];
  w.kind = ridge.kind;
  return w;
}

/// The K-submodularity inequality of a ridge, by its Λ / V / Cross shape.
inline WallInequality wall_inequality(const Ridge& ridge, int n) {
  WallInequality w;
  w.coefficients.assign(static_cast<std::size_t>(2 * n), Rational(0));
  w.kind = ridge.kind;
  auto at = [&](int v, bool bar) -> Rational& { return w.coefficients[BierVertex{v, bar}.slot(n)]; };
  const FaceSet outside = ridge.y.complement(n);
  switch (ridge.kind) {
    case RidgeKind::Lambda:
      at(ridge.c1, false) += 1;
      at(ridge.c2, false) += 1;
      for (int i : ridge.x.vertices()) at(i, false) += 1;
      for (int j : outside.vertices()) at(j, true) -= 1;
      break;
    case RidgeKind::V:
      at(ridge.c1, true) += 1;
      at(ridge.c2, true) += 1;
      for (int j : outside.vertices()) at(j, true) += 1;
      for (int i : ridge.x.vertices()) at(i, false) -= 1;
      break;
    case RidgeKind::Cross: {
      // d is the element with X ∪ {d} ∈ K; its two rays ±δ_d are opposite.
      const int d = ridge.facets[1].a1().contains(ridge.c1) ? ridge.c1 : ridge.c2;
      at(d, false) += 1;
      at(d, true) += 1;
      break;
    }
  }
  return w;
}

/// One inequality per ridge of Bier(K), in ridges(K) order. With
/// cross_validate, each is compared with the ray-dependence computation.
inline std::vector<WallInequality> ridge_system(const SimplicialComplex& k, bool cross_validate = true) {
  const int n = k.n();
  const auto rs = ridges(k);
  const auto delta = Circuit::delta(n);
  std::vector<WallInequality> system;
  system.reserve(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    auto w = wall_inequality(rs[i], n);
    w.ridge = i;
    if (cross_validate) {
      const auto generic = wall_inequality_from_rays(rs[i], delta);
      require(same_up_to_positive_scaling(w.coefficients, generic.coefficients), ErrorCode::Internal,
              "wall inequality disagrees with the ray dependence at ridge " + std::to_string(i));
    }
    system.push_back(std::move(w));
  }
  return system;
}

inline bool satisfies_strictly(const std::vector<WallInequality>& system, const HeightVector& f) {
  return std::all_of(system.begin(), system.end(), [&](const WallInequality& w) { return w.evaluate(f) > 0; });
}

/// f is K-submodular: every wall inequality holds strictly.
inline bool verify_witness(const SimplicialComplex& k, const HeightVector& f) {
  if (f.n() != k.n()) return false;
  return satisfies_strictly(ridge_system(k, false), f);
}

using Certificate = std::vector<std::pair<std::size_t, Rational>>;

/// Non-negative multipliers, not all zero, whose combination of the
/// left-hand sides vanishes identically: the strict system then reads 0 > 0.
inline bool verify_certificate(const std::vector<WallInequality>& system, const Certificate& cert, int n) {
  RationalVector combination(static_cast<std::size_t>(2 * n), Rational(0));
  Rational total = 0;
  for (const auto& [ridge, multiplier] : cert) {
    if (ridge >= system.size() || multiplier < 0) return false;
    add_scaled(combination, system[ridge].coefficients, multiplier);
    total += multiplier;
  }
  return total > 0 && std::all_of(combination.begin(), combination.end(), [](const Rational& x) { return x == 0; });
}

struct FeasibilityResult {
  bool feasible = false;
  std::optional<HeightVector> witness;
  Certificate certificate;
  std::size_t ridge_count = 0;
  std::size_t pivots = 0;
};

struct SolveOptions {
  std::size_t max_ridges = 200000;
  std::size_t max_pivots = 100000;
};

/// Decides whether K admits a K-submodular height function.
///
/// The strict homogeneous system a_r·f > 0 is equivalent to a_r·f >= 1. That
/// system is infeasible iff some y >= 0 has Σ y_r a_r = 0 and Σ y_r = 1, which
/// is a standard-form problem with only 2n+1 rows. A feasible y is the
/// infeasibility certificate; otherwise the phase-1 duals z satisfy
/// z_{0..2n}·a_r + z_{2n} <= 0 with z_{2n} > 0, so f = -z_{0..2n}/z_{2n}
/// has a_r·f >= 1 for every ridge.
inline FeasibilityResult solve(const SimplicialComplex& k, const SolveOptions& options = {}) {
  const int n = k.n();
  const auto system = ridge_system(k, true);
  FeasibilityResult result;
  result.ridge_count = system.size();
  require(system.size() <= options.max_ridges, ErrorCode::BudgetExceeded,
          "ridge system has " + std::to_string(system.size()) + " rows, limit " + std::to_string(options.max_ridges));

  const std::size_t vars = static_cast<std::size_t>(2 * n);
  linalg::Matrix a(vars + 1, RationalVector(system.size()));
  for (std::size_t r = 0; r < system.size(); ++r) {
    for (std::size_t v = 0; v < vars; ++v) a[v][r] = system[r].coefficients[v];
    a[vars][r] = 1;
  }
  RationalVector b(vars + 1, Rational(0));
  b[vars] = 1;
  const auto lp_result = lp::find_nonnegative_solution(a, b, options.max_pivots);
  result.pivots = lp_result.pivots;
  require(lp::certifies(a, b, lp_result), ErrorCode::Internal, "LP result failed its own re-check");

  if (lp_result.status == lp::Status::Feasible) {
    for (std::size_t r = 0; r < system.size(); ++r)
      if (lp_result.solution[r] != 0) result.certificate.emplace_back(r, lp_result.solution[r]);
    require(verify_certificate(system, result.certificate, n), ErrorCode::Internal, "infeasibility certificate rejected");
    return result;
  }
  const Rational scale = lp_result.farkas[vars];
  RationalVector heights(vars);
  for (std::size_t v = 0; v < vars; ++v) heights[v] = -lp_result.farkas[v] / scale;
  HeightVector f(n, std::move(heights));
  require(satisfies_strictly(system, f), ErrorCode::Internal, "witness fails re-verification");
  result.feasible = true;
  result.witness = std::move(f);
  return result;
}

/// f(i) = (1 - ν) l_i, f(ī) = ν l_i.
inline HeightVector threshold_witness(const WeightVector& w) {
  (void)threshold_complex(w);  // genericity and normalization checks
  const int n = w.n();
  HeightVector f(n);
  for (int i = 0; i < n; ++i) {
    const auto& l = w.weights()[static_cast<std::size_t>(i)];
    f[{i, false}] = (Rational(1) - w.nu()) * l;
    f[{i, true}] = w.nu() * l;
  }
  return f;
}

struct RealizedVertex {
  BierFace facet;
  RationalVector point;
};

struct RealizationRow {
  BierVertex vertex;
  std::vector<Integer> normal;  // primitive integer ray representative
  Rational height;
};

/// P_f = {x ∈ H_0 : G x <= f}, one row of G per vertex of Bier(K).
struct Realization {
  std::vector<RealizationRow> rows;
  std::vector<RealizedVertex> vertices;  // one per facet, in facets(K) order
};

inline Realization realize_polytope(const SimplicialComplex& k, const HeightVector& f, int max_n = 6) {
  const int n = k.n();
  require(n <= max_n, ErrorCode::BudgetExceeded, "realization limited to n <= " + std::to_string(max_n));
  require(verify_witness(k, f), ErrorCode::WitnessInvalid, "height vector is not K-submodular");
  const auto delta = Circuit::delta(n);

  Realization out;
  std::vector<RationalVector> g;
  std::vector<std::size_t> row_of_slot(static_cast<std::size_t>(2 * n), 0);
  for (const auto& v : bier_vertices(k)) {
    auto prim = primitive_ray(vertex_ray(delta, v));
    RationalVector row(prim.begin(), prim.end());
    row_of_slot[v.slot(n)] = g.size();
    g.push_back(std::move(row));
    out.rows.push_back({v, std::move(prim), f[v]});
  }

  std::set<RationalVector> seen;
  for (const auto& tau : facets(k)) {
    linalg::Matrix m;
    RationalVector rhs;
    std::vector<bool> incident(g.size(), false);
    for (const auto& ray : facet_rays(tau, delta)) {
      const auto r = row_of_slot[ray.vertex.slot(n)];
      incident[r] = true;
      m.push_back(g[r]);
      rhs.push_back(out.rows[r].height);
    }
    m.emplace_back(static_cast<std::size_t>(n), Rational(1));
    rhs.emplace_back(0);
    const auto x = linalg::solve(m, rhs);
    require(x.has_value(), ErrorCode::Internal, "tight system of " + tau.to_string() + " is inconsistent");
    for (std::size_t r = 0; r < g.size(); ++r) {
      const Rational slack = out.rows[r].height - dot(g[r], *x);
      // Incident rows are tight by construction; every other row must be strict,
      // which makes the normal cone at x exactly Cone(τ).
      require(incident[r] ? slack == 0 : slack > 0, ErrorCode::WitnessInvalid,
              "vertex of " + tau.to_string() + " violates the row of " + out.rows[r].vertex.label());
    }
    require(seen.insert(*x).second, ErrorCode::Degenerate, "two facet cones share the vertex " + to_string(*x));
    out.vertices.push_back({tau, *x});
  }
  return out;
}

}  // namespace bier
