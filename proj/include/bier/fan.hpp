#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bier/bier_sphere.hpp"
#include "bier/linalg.hpp"
#include "bier/sampling.hpp"

namespace bier {

/// Reflexive, transitive relation on [n]; row i holds every j with i ≼ j.
class Preposet {
 public:
  static Preposet closure_of(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<FaceSet::mask_type> above(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) above[static_cast<std::size_t>(i)] = FaceSet::singleton(i).bits();
    for (auto [i, j] : pairs) above[static_cast<std::size_t>(i)] |= FaceSet::singleton(j).bits();
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if ((above[static_cast<std::size_t>(i)] >> k) & 1U) above[static_cast<std::size_t>(i)] |= above[static_cast<std::size_t>(k)];
    return Preposet(n, std::move(above));
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] bool related(int i, int j) const { return (above_[static_cast<std::size_t>(i)] >> j) & 1U; }
  [[nodiscard]] bool equivalent(int i, int j) const { return related(i, j) && related(j, i); }
  [[nodiscard]] bool strictly_below(int i, int j) const { return related(i, j) && !related(j, i); }
  [[nodiscard]] FaceSet up_set(int i) const { return FaceSet(above_[static_cast<std::size_t>(i)]); }

  [[nodiscard]] bool is_poset() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (equivalent(i, j)) return false;
    return true;
  }

  [[nodiscard]] std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (related(i, j)) out.emplace_back(i, j);
    return out;
  }

  /// Cover relations i ⋖ j of the strict part.
  [[nodiscard]] std::vector<std::pair<int, int>> hasse_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (!strictly_below(i, j)) continue;
        bool cover = true;
        for (int k = 0; k < n_ && cover; ++k)
          if (strictly_below(i, k) && strictly_below(k, j)) cover = false;
        if (cover) out.emplace_back(i, j);
      }
    return out;
  }

  friend bool operator==(const Preposet&, const Preposet&) = default;

 private:
  Preposet(int n, std::vector<FaceSet::mask_type> above) : n_(n), above_(std::move(above)) {}

  int n_;
  std::vector<FaceSet::mask_type> above_;
};

/// Reflexive-transitive closure of (A1 × B) ∪ (B × B) ∪ (B × A2).
inline Preposet preposet_of_face(const BierFace& tau) {
  std::vector<std::pair<int, int>> rho;
  const auto b = tau.b().vertices();
  for (int s : b) {
    for (int i : tau.a1().vertices()) rho.emplace_back(i, s);
    for (int t : b) rho.emplace_back(s, t);
    for (int j : tau.a2().vertices()) rho.emplace_back(s, j);
  }
  return Preposet::closure_of(tau.n(), rho);
}

/// A tree-poset whose Hasse diagram is a star; returns its center. Needs n >= 3
/// (for n = 2 both ends of the single edge are leaves).
inline std::optional<int> star_center(const Preposet& p) {
  const int n = p.n();
  if (n < 3 || !p.is_poset()) return std::nullopt;
  const auto edges = p.hasse_edges();
  if (edges.size() != static_cast<std::size_t>(n - 1)) return std::nullopt;
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : edges) {
    ++degree[static_cast<std::size_t>(i)];
    ++degree[static_cast<std::size_t>(j)];
  }
  std::optional<int> center;
  for (int v = 0; v < n; ++v) {
    const int d = degree[static_cast<std::size_t>(v)];
    if (d == 0) return std::nullopt;
    if (d > 1) {
      if (center) return std::nullopt;
      center = v;
    }
  }
  if (!center || degree[static_cast<std::size_t>(*center)] != n - 1) return std::nullopt;
  return center;
}

/// Recovers K from the preposets of the maximal cones of Fan(K).
inline SimplicialComplex reconstruct_from_facet_preposets(int n, const std::vector<Preposet>& preposets) {
  require(n >= 3, ErrorCode::Range, "the fan does not determine K when n = 2");
  std::vector<FaceSet> lower_parts;
  for (const auto& p : preposets) {
    const auto center = star_center(p);
    require(center.has_value(), ErrorCode::InvalidFace, "preposet is not a star tree-poset");
    FaceSet below;
    for (int v = 0; v < n; ++v)
      if (p.strictly_below(v, *center)) below = below.with(v);
    lower_parts.push_back(below);
  }
  return SimplicialComplex::from_facets(n, lower_parts);
}

/// Braid cone in H_0: x_i <= x_j for each le pair, equal coordinates on each block.
struct BraidCone {
  int n = 0;
  std::vector<std::pair<int, int>> le;
  std::vector<FaceSet> eq_blocks;
};

inline BraidCone cone_of_face(const BierFace& tau) {
  BraidCone cone;
  cone.n = tau.n();
  const auto b = tau.b().vertices();
  for (int i : tau.a1().vertices())
    for (int s : b) cone.le.emplace_back(i, s);
  for (int s : b)
    for (int j : tau.a2().vertices()) cone.le.emplace_back(s, j);
  if (b.size() >= 2) cone.eq_blocks.push_back(tau.b());
  return cone;
}

inline void require_in_h0(const RationalVector& x, int n) {
  require(x.size() == static_cast<std::size_t>(n), ErrorCode::NotInH0,
          "point has " + std::to_string(x.size()) + " coordinates, expected " + std::to_string(n));
  require(sum(x) == 0, ErrorCode::NotInH0, "coordinate sum is " + to_string(sum(x)) + ", not 0");
}

inline bool cone_contains(const BraidCone& cone, const RationalVector& x) {
  require_in_h0(x, cone.n);
  for (auto [i, j] : cone.le)
    if (x[static_cast<std::size_t>(i)] > x[static_cast<std::size_t>(j)]) return false;
  for (FaceSet block : cone.eq_blocks) {
    const auto vs = block.vertices();
    for (int v : vs)
      if (x[static_cast<std::size_t>(v)] != x[static_cast<std::size_t>(vs.front())]) return false;
  }
  return true;
}

inline void require_permutation(std::span<const int> perm, int n) {
  require(perm.size() == static_cast<std::size_t>(n), ErrorCode::Range, "permutation has wrong length");
  FaceSet seen;
  for (int v : perm) {
    require(v >= 0 && v < n && !seen.contains(v), ErrorCode::Range, "not a permutation of [n]");
    seen = seen.with(v);
  }
}

/// The unique facet whose cone contains C_π = {x_π(1) <= ... <= x_π(n)}.
inline BierFace facet_of_permutation(const SimplicialComplex& k, std::span<const int> perm) {
  const int n = k.n();
  require_permutation(perm, n);
  FaceSet prefix;
  int p = 0;
  while (k.contains(prefix.with(perm[static_cast<std::size_t>(p)]))) prefix = prefix.with(perm[static_cast<std::size_t>(p++)]);
  const int nu = perm[static_cast<std::size_t>(p)];
  return BierFace::make(n, prefix, prefix.with(nu).complement(n));
}

/// Generators of C_π: the k-th has value -(n-k) on π(1..k) and k elsewhere.
inline std::vector<RationalVector> permutation_cone_generators(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<RationalVector> gens;
  for (int k = 1; k < n; ++k) {
    RationalVector g(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) g[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] = j < k ? Rational(-(n - k)) : Rational(k);
    gens.push_back(std::move(g));
  }
  return gens;
}

/// Cone(τ) ∩ Cone(τ') = Cone(τ''), with A1'' = A1 ∩ A1' and A2'' = A2 ∩ A2'.
inline BierFace cone_intersection(const BierFace& a, const BierFace& b) {
  require(a.n() == b.n(), ErrorCode::InvalidFace, "faces over different ground sets");
  return BierFace::make(a.n(), a.a1() & b.a1(), a.a2() & b.a2());
}

/// n vectors of R^n spanning H_0 with zero sum; any n-1 of them independent.
class Circuit {
 public:
  static Circuit make(std::vector<RationalVector> vectors) {
    const int n = static_cast<int>(vectors.size());
    check_ground(n);
    RationalVector total(static_cast<std::size_t>(n), Rational(0));
    for (const auto& v : vectors) {
      require(v.size() == static_cast<std::size_t>(n), ErrorCode::InvalidCircuit, "circuit vector has wrong length");
      require(sum(v) == 0, ErrorCode::InvalidCircuit, "circuit vectors must lie in H_0");
      add_scaled(total, v, Rational(1));
    }
    for (const auto& t : total) require(t == 0, ErrorCode::InvalidCircuit, "circuit vectors must sum to 0");
    require(linalg::rank(vectors) == static_cast<std::size_t>(n - 1), ErrorCode::InvalidCircuit,
            "circuit vectors must span H_0");
    return Circuit(std::move(vectors));
  }

  /// δ_i = e_i - (1/n)(e_1 + ... + e_n).
  static Circuit delta(int n) {
    check_ground(n);
    std::vector<RationalVector> vs(static_cast<std::size_t>(n), RationalVector(static_cast<std::size_t>(n), Rational(-1, n)));
    for (int i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += 1;
    return Circuit(std::move(vs));
  }

  [[nodiscard]] int n() const { return static_cast<int>(vectors_.size()); }
  [[nodiscard]] const RationalVector& operator[](int i) const { return vectors_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] const std::vector<RationalVector>& vectors() const { return vectors_; }

 private:
  explicit Circuit(std::vector<RationalVector> vectors) : vectors_(std::move(vectors)) {}
  std::vector<RationalVector> vectors_;
};

/// Vertex of Bier(K): i on the K side, ī (bar) on the K° side.
struct BierVertex {
  int index = 0;
  bool bar = false;

  /// Column in a 2n-long height vector: i, then n + i for ī.
  [[nodiscard]] std::size_t slot(int n) const { return static_cast<std::size_t>(bar ? n + index : index); }
  [[nodiscard]] std::string label() const { return std::to_string(index + 1) + (bar ? "bar" : ""); }

  friend bool operator==(const BierVertex&, const BierVertex&) = default;
  friend auto operator<=>(const BierVertex& a, const BierVertex& b) {
    if (auto c = a.bar <=> b.bar; c != 0) return c;
    return a.index <=> b.index;
  }
};

/// Vertices of Bier(K): i when {i} ∈ K, ī when {i} ∈ K°.
inline std::vector<BierVertex> bier_vertices(const SimplicialComplex& k) {
  std::vector<BierVertex> out;
  for (int i = 0; i < k.n(); ++i)
    if (k.contains(FaceSet::singleton(i))) out.push_back({i, false});
  for (int i = 0; i < k.n(); ++i)
    if (in_dual(k, FaceSet::singleton(i))) out.push_back({i, true});
  return out;
}

struct Ray {
  BierVertex vertex;
  RationalVector direction;
};

/// K-side vertex i sits on the ray through -u_i, K°-side ī on +u_i.
inline RationalVector vertex_ray(const Circuit& c, BierVertex v) {
  return v.bar ? c[v.index] : scaled(c[v.index], Rational(-1));
}

/// Rays of Cone(τ): A1 first, then A2, each ascending.
inline std::vector<Ray> face_rays(const BierFace& tau, const Circuit& c) {
  std::vector<Ray> rays;
  for (int i : tau.a1().vertices()) rays.push_back({{i, false}, vertex_ray(c, {i, false})});
  for (int j : tau.a2().vertices()) rays.push_back({{j, true}, vertex_ray(c, {j, true})});
  return rays;
}

inline std::vector<Ray> facet_rays(const BierFace& tau, const Circuit& c) {
  require(tau.is_facet(), ErrorCode::NotFacet, tau.to_string() + " is not a facet");
  return face_rays(tau, c);
}

inline std::vector<Ray> facet_rays(const BierFace& tau) { return facet_rays(tau, Circuit::delta(tau.n())); }

inline std::vector<RationalVector> directions(const std::vector<Ray>& rays) {
  std::vector<RationalVector> out;
  for (const auto& r : rays) out.push_back(r.direction);
  return out;
}

/// Primitive integer vector on the same ray (direction preserved, gcd 1).
inline std::vector<Integer> primitive_ray(const RationalVector& v) {
  Integer lcm = 1;
  for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, denominator_of(x));
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& x : v) {
    out.push_back(numerator_of(x) * (lcm / denominator_of(x)));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

struct FanReport {
  bool pass = true;
  std::size_t permutations = 0;
  std::size_t facets = 0;
  std::size_t facets_hit = 0;
  std::size_t intersection_checks = 0;
  std::vector<std::string> failures;

  void fail(std::string why) {
    pass = false;
    if (failures.size() < 20) failures.push_back(std::move(why));
  }
};

namespace detail {

/// Simplicial facet cone: rays independent, inside the cone, and each defining
/// inequality tight on all rays but one.
inline void check_facet_cone(const BierFace& tau, const Circuit& delta, FanReport& report) {
  const int n = tau.n();
  const auto rays = facet_rays(tau, delta);
  const auto cone = cone_of_face(tau);
  if (linalg::rank(directions(rays)) != static_cast<std::size_t>(n - 1))
    report.fail("facet " + tau.to_string() + " has dependent rays");
  for (const auto& r : rays)
    if (!cone_contains(cone, r.direction)) report.fail("ray " + r.vertex.label() + " outside cone of " + tau.to_string());
  for (auto [i, j] : cone.le) {
    int strict = 0;
    for (const auto& r : rays) {
      const auto& d = r.direction;
      if (d[static_cast<std::size_t>(i)] < d[static_cast<std::size_t>(j)]) ++strict;
    }
    if (strict != 1) report.fail("inequality of " + tau.to_string() + " is not simplicial");
  }
}

}  // namespace detail

/// Checks that Fan(K) is a complete simplicial fan refined by the braid fan.
inline FanReport verify_fan(const SimplicialComplex& k, std::uint64_t seed = 1, int pair_samples = 50,
                            int max_n = 8) {
  const int n = k.n();
  require(n <= max_n, ErrorCode::BudgetExceeded, "fan verification limited to n <= " + std::to_string(max_n));
  FanReport report;
  const auto all = facets(k);
  report.facets = all.size();
  std::vector<BraidCone> cones;
  for (const auto& tau : all) cones.push_back(cone_of_face(tau));

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> hit(all.size(), false);
  do {
    ++report.permutations;
    const auto tau = facet_of_permutation(k, perm);
    const auto it = std::lower_bound(all.begin(), all.end(), tau);
    if (it == all.end() || *it != tau) {
      report.fail("permutation maps to non-facet " + tau.to_string());
      continue;
    }
    const auto index = static_cast<std::size_t>(it - all.begin());
    hit[index] = true;
    const auto gens = permutation_cone_generators(perm);
    RationalVector interior(static_cast<std::size_t>(n), Rational(0));
    for (const auto& g : gens) {
      if (!cone_contains(cones[index], g)) report.fail("C_pi generator outside cone of " + tau.to_string());
      add_scaled(interior, g, Rational(1));
    }
    std::size_t containing = 0;
    for (const auto& cone : cones) containing += cone_contains(cone, interior) ? 1 : 0;
    if (containing != 1) report.fail("interior of C_pi meets " + std::to_string(containing) + " facet cones");
  } while (std::next_permutation(perm.begin(), perm.end()));
  report.facets_hit = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));
  if (report.facets_hit != all.size()) report.fail("some facet cone contains no braid chamber");

  const auto delta = Circuit::delta(n);
  for (const auto& tau : all) detail::check_facet_cone(tau, delta, report);

  sampling::Rng rng(seed);
  for (int s = 0; s < pair_samples; ++s) {
    const auto t1 = sampling::random_face(k, rng);
    const auto t2 = sampling::random_face(k, rng);
    const auto t3 = cone_intersection(t1, t2);
    const auto c1 = cone_of_face(t1);
    const auto c2 = cone_of_face(t2);
    const auto c3 = cone_of_face(t3);
    std::vector<RationalVector> points = {sampling::random_tied_point(n, rng),
                                          sampling::random_combination(directions(face_rays(t1, delta)), n, rng),
                                          sampling::random_combination(directions(face_rays(t2, delta)), n, rng),
                                          sampling::random_combination(directions(face_rays(t3, delta)), n, rng)};
    for (const auto& x : points) {
      ++report.intersection_checks;
      if ((cone_contains(c1, x) && cone_contains(c2, x)) != cone_contains(c3, x))
        report.fail("intersection law fails for " + t1.to_string() + " and " + t2.to_string());
    }
  }
  return report;
}

}  // namespace bier
