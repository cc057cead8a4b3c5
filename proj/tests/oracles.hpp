#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the routine it is used to check; each oracle works from first definitions.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bier/bier.hpp"
#include "bier/sampling.hpp"

namespace oracle {

using bier::FaceSet;
using bier::Rational;
using bier::RationalVector;
using bier::SimplicialComplex;

/// 1-based literal: S({1, 3}) is the set {1, 3}.
inline FaceSet S(std::initializer_list<int> one_based) {
  FaceSet s;
  for (int v : one_based) s = s.with(v - 1);
  return s;
}

inline int popcount(unsigned m) { return __builtin_popcount(m); }

/// S ∈ K° straight from the definition.
inline bool in_dual(const SimplicialComplex& k, unsigned s) {
  const unsigned top = (1U << k.n()) - 1;
  return !k.membership()[top & ~s];
}

inline std::vector<unsigned> minimal_nonfaces(const SimplicialComplex& k) {
  std::vector<unsigned> out;
  for (unsigned m = 0; m < (1U << k.n()); ++m) {
    if (k.membership()[m]) continue;
    bool minimal = true;
    for (int v = 0; v < k.n(); ++v)
      if (((m >> v) & 1U) && !k.membership()[m & ~(1U << v)]) minimal = false;
    if (minimal) out.push_back(m);
  }
  return out;
}

inline std::vector<std::uint64_t> m_vector(const SimplicialComplex& k) {
  std::vector<std::uint64_t> m(static_cast<std::size_t>(k.n()), 0);
  for (int i = 0; i < k.n(); ++i)
    for (unsigned s = 0; s < (1U << k.n()); ++s)
      if (k.membership()[s] && !k.membership()[s | (1U << i)]) ++m[static_cast<std::size_t>(i)];
  return m;
}

/// Facets of Bier(K) as (a1, a2) masks, from all 3^n labelings with one blank.
inline std::set<std::pair<unsigned, unsigned>> facet_masks(const SimplicialComplex& k) {
  const int n = k.n();
  std::set<std::pair<unsigned, unsigned>> out;
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      unsigned a1 = 0, a2 = 0, b = 0;
      for (int i = 0; i < n; ++i) (label[static_cast<std::size_t>(i)] == 0 ? a1 : label[static_cast<std::size_t>(i)] == 1 ? a2 : b) |= 1U << i;
      if (popcount(b) == 1 && k.membership()[a1] && in_dual(k, a2)) out.insert({a1, a2});
      return;
    }
    for (int l = 0; l < 3; ++l) {
      label[static_cast<std::size_t>(pos)] = l;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

/// Every proper complex on [n] (with ∅), by filtering all families of proper non-empty sets.
inline std::vector<SimplicialComplex> all_complexes(int n) {
  std::vector<unsigned> candidates;
  for (unsigned m = 1; m + 1 < (1U << n); ++m) candidates.push_back(m);
  std::vector<SimplicialComplex> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << candidates.size()); ++pick) {
    std::vector<bool> member(std::size_t{1} << n, false);
    member[0] = true;
    for (std::size_t c = 0; c < candidates.size(); ++c)
      if ((pick >> c) & 1U) member[candidates[c]] = true;
    bool closed = true;
    for (unsigned m = 1; m < (1U << n) && closed; ++m)
      if (member[m])
        for (int v = 0; v < n; ++v)
          if (((m >> v) & 1U) && !member[m & ~(1U << v)]) closed = false;
    if (closed) out.push_back(SimplicialComplex::from_membership(n, std::move(member)));
  }
  return out;
}

/// All sets of size <= k, as a membership table.
inline SimplicialComplex sized_up_to(int n, int k) {
  std::vector<bool> member(std::size_t{1} << n, false);
  for (unsigned m = 0; m < (1U << n); ++m) member[m] = popcount(m) <= k && popcount(m) < n;
  return SimplicialComplex::from_membership(n, std::move(member));
}

/// Leibniz-formula determinant.
inline Rational leibniz_det(const std::vector<RationalVector>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Rational term = (inversions % 2 == 0) ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// The linear dependence among n vectors of H_0 by Cramer's rule in the chart
/// that drops the last coordinate: c_k = (-1)^k det(vectors without k).
inline RationalVector dependence(const std::vector<RationalVector>& vectors) {
  const std::size_t count = vectors.size();
  const std::size_t dim = vectors[0].size() - 1;
  RationalVector c(count);
  for (std::size_t skip = 0; skip < count; ++skip) {
    std::vector<RationalVector> rows(dim, RationalVector());
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t v = 0; v < count; ++v)
        if (v != skip) rows[r].push_back(vectors[v][r]);
    c[skip] = (skip % 2 == 0 ? 1 : -1) * leibniz_det(rows);
  }
  return c;
}

inline RationalVector delta(int n, int i) {
  RationalVector d(static_cast<std::size_t>(n), Rational(-1, n));
  d[static_cast<std::size_t>(i)] += 1;
  return d;
}

/// Wall inequality over slots (1..n, 1bar..nbar) from the Cramer-rule dependence
/// of the n rays around a ridge, oriented so the ray of facets[0] outside
/// facets[1] has a positive coefficient.
inline RationalVector wall(const bier::Ridge& ridge, int n) {
  using bier::BierVertex;
  std::vector<BierVertex> labels;
  std::vector<RationalVector> rays;
  auto add = [&](const bier::BierFace& tau) {
    for (int i : tau.a1().vertices())
      if (std::find(labels.begin(), labels.end(), BierVertex{i, false}) == labels.end()) {
        labels.push_back({i, false});
        rays.push_back(bier::scaled(delta(n, i), Rational(-1)));
      }
    for (int j : tau.a2().vertices())
      if (std::find(labels.begin(), labels.end(), BierVertex{j, true}) == labels.end()) {
        labels.push_back({j, true});
        rays.push_back(delta(n, j));
      }
  };
  add(ridge.facets[0]);
  add(ridge.facets[1]);
  if (rays.size() != static_cast<std::size_t>(n)) throw std::logic_error("ridge does not span n rays");
  auto dep = dependence(rays);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto l = labels[i];
    const bool in_second = l.bar ? ridge.facets[1].a2().contains(l.index) : ridge.facets[1].a1().contains(l.index);
    if (!in_second && dep[i] < 0) dep = bier::scaled(dep, Rational(-1));
  }
  RationalVector out(static_cast<std::size_t>(2 * n), Rational(0));
  for (std::size_t i = 0; i < labels.size(); ++i) out[labels[i].slot(n)] += dep[i];
  return out;
}

/// Solves square system m c = x by Gauss-Jordan; empty on singular.
inline std::optional<RationalVector> square_solve(std::vector<RationalVector> m, RationalVector x) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(x[piv], x[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      x[r] -= f * x[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) x[r] /= m[r][r];
  return x;
}

/// Coefficients of x in the basis of the given n-1 vectors of H_0 (chart drops last coordinate).
inline std::optional<RationalVector> coefficients_in_h0(const std::vector<RationalVector>& basis, const RationalVector& x) {
  const std::size_t dim = x.size() - 1;
  std::vector<RationalVector> m(dim, RationalVector(basis.size()));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) m[r][c] = basis[c][r];
  return square_solve(m, RationalVector(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(dim)));
}

/// Rays of a facet from the sign convention: -δ_i on A1, +δ_j on A2.
inline std::vector<RationalVector> facet_rays(int n, unsigned a1, unsigned a2) {
  std::vector<RationalVector> out;
  for (int i = 0; i < n; ++i)
    if ((a1 >> i) & 1U) out.push_back(bier::scaled(delta(n, i), Rational(-1)));
  for (int j = 0; j < n; ++j)
    if ((a2 >> j) & 1U) out.push_back(delta(n, j));
  return out;
}

/// Star(K) gauge as the minimum coefficient sum over all facet simplices whose
/// cone contains x (every facet is tried; no permutation lookup).
inline std::optional<Rational> star_gauge(const SimplicialComplex& k, const RationalVector& x) {
  std::optional<Rational> best;
  for (auto [a1, a2] : facet_masks(k)) {
    const auto c = coefficients_in_h0(facet_rays(k.n(), a1, a2), x);
    if (!c) continue;
    if (std::any_of(c->begin(), c->end(), [](const Rational& v) { return v < 0; })) continue;
    const Rational total = bier::sum(*c);
    if (!best || total < *best) best = total;
  }
  return best;
}

/// x ∈ conv(points) by LP feasibility: λ >= 0, Σλ = 1, Σλ p = x.
inline bool in_hull_lp(const std::vector<RationalVector>& points, const RationalVector& x) {
  const std::size_t dim = x.size();
  bier::linalg::Matrix a(dim + 1, RationalVector(points.size()));
  RationalVector b(dim + 1);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < points.size(); ++c) a[r][c] = points[c][r];
    b[r] = x[r];
  }
  for (std::size_t c = 0; c < points.size(); ++c) a[dim][c] = 1;
  b[dim] = 1;
  return bier::lp::find_nonnegative_solution(a, b).status == bier::lp::Status::Feasible;
}

/// x ∈ conv(n affinely independent points of H_0) via exact barycentric coordinates.
inline bool in_simplex_barycentric(const std::vector<RationalVector>& vertices, const RationalVector& x) {
  const std::size_t n = vertices.size();
  // Chart: first n-1 coordinates plus Σμ = 1.
  std::vector<RationalVector> m(n, RationalVector(n));
  RationalVector rhs(n);
  for (std::size_t r = 0; r + 1 < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = vertices[c][r];
    rhs[r] = x[r];
  }
  for (std::size_t c = 0; c < n; ++c) m[n - 1][c] = 1;
  rhs[n - 1] = 1;
  const auto mu = square_solve(m, rhs);
  return mu && std::all_of(mu->begin(), mu->end(), [](const Rational& v) { return v >= 0; });
}

/// Is there a linear functional a on H_0 (Σa = 0) with a(u_i) = 1 on I,
/// a(-u_j) = 1 on J and |a(u_k)| <= 1 elsewhere? Solved as an LP over
/// a = 2y - 1 with 0 <= y <= 1.
inline bool vkf_face_lp(int n, unsigned i_set, unsigned j_set) {
  // Unknowns y_k (n) and slacks s_k (n): y_k + s_k = 1, fixed y on I/J, Σ(2y-1) = 0.
  const std::size_t cols = static_cast<std::size_t>(2 * n);
  bier::linalg::Matrix a;
  RationalVector b;
  for (int k = 0; k < n; ++k) {
    RationalVector row(cols, Rational(0));
    row[static_cast<std::size_t>(k)] = 1;
    row[static_cast<std::size_t>(n + k)] = 1;
    a.push_back(row);
    b.emplace_back(1);
    if (((i_set >> k) & 1U) || ((j_set >> k) & 1U)) {
      RationalVector fix(cols, Rational(0));
      fix[static_cast<std::size_t>(k)] = 1;
      a.push_back(fix);
      b.emplace_back(((i_set >> k) & 1U) ? 1 : 0);
    }
  }
  RationalVector balance(cols, Rational(0));
  for (int k = 0; k < n; ++k) balance[static_cast<std::size_t>(k)] = 2;
  a.push_back(balance);
  b.emplace_back(n);
  if ((i_set & j_set) != 0) return false;
  // Must be a proper face: a is not constant 1 on all of Ω_n, which for
  // non-empty selections is automatic since Σa = 0 forbids a ≡ 1.
  return bier::lp::find_nonnegative_solution(a, b).status == bier::lp::Status::Feasible;
}

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Regular hexagon with circumradius R: area² = (27/4) R⁴.
inline Rational hexagon_area_squared(const Rational& circumradius_squared) {
  return Rational(27, 4) * circumradius_squared * circumradius_squared;
}

}  // namespace oracle
