#pragma once

#include <bit>
#include <random>
#include <vector>

#include "bier/bier_sphere.hpp"

// Seeded generators for randomized property checks.
namespace bier::sampling {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random proper complex: sets are visited by increasing size and kept with
/// probability `keep` whenever all their codimension-one subsets are faces.
inline SimplicialComplex random_complex(int n, Rng& rng, double keep = -1.0) {
  if (keep < 0) keep = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
  std::bernoulli_distribution coin(keep);
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::vector<FaceSet::mask_type>> by_size(static_cast<std::size_t>(n) + 1);
  for (std::size_t m = 0; m < total; ++m) by_size[static_cast<std::size_t>(std::popcount(m))].push_back(static_cast<FaceSet::mask_type>(m));
  std::vector<bool> member(total, false);
  member[0] = true;
  for (int size = 1; size < n; ++size) {
    for (auto m : by_size[static_cast<std::size_t>(size)]) {
      bool allowed = true;
      for (auto b = m; b != 0 && allowed; b &= b - 1) allowed = member[m & ~(b & (~b + 1))];
      if (allowed && coin(rng)) member[m] = true;
    }
  }
  return SimplicialComplex::from_membership(n, std::move(member));
}

/// Random proper face of Bier(K): a random facet with random vertices released into B.
inline BierFace random_face(const SimplicialComplex& k, Rng& rng) {
  const auto all = facets(k);
  const auto& tau = all[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(all.size()) - 1))];
  FaceSet a1 = tau.a1();
  FaceSet a2 = tau.a2();
  std::bernoulli_distribution drop(0.3);
  for (int v : a1.vertices())
    if (drop(rng)) a1 = a1.without(v);
  for (int v : a2.vertices())
    if (drop(rng)) a2 = a2.without(v);
  return BierFace::make(k.n(), a1, a2);
}

/// Random point of H_0 with small integer coordinates shifted to zero sum,
/// so coordinate ties (points on lower-dimensional cones) are common.
inline RationalVector random_tied_point(int n, Rng& rng, int range = 2) {
  RationalVector x(static_cast<std::size_t>(n));
  Rational mean = 0;
  for (auto& xi : x) {
    xi = uniform_int(rng, -range, range);
    mean += xi;
  }
  mean /= n;
  for (auto& xi : x) xi -= mean;
  return x;
}

/// Random rational point of H_0 with coordinates p/den, p in [-range, range].
inline RationalVector random_point(int n, Rng& rng, int range, int den) {
  RationalVector x(static_cast<std::size_t>(n));
  Rational mean = 0;
  for (auto& xi : x) {
    xi = Rational(uniform_int(rng, -range, range), den);
    mean += xi;
  }
  mean /= n;
  for (auto& xi : x) xi -= mean;
  return x;
}

/// Random non-negative combination of the given generators.
inline RationalVector random_combination(const std::vector<RationalVector>& generators, int n, Rng& rng) {
  RationalVector x(static_cast<std::size_t>(n), Rational(0));
  for (const auto& g : generators) add_scaled(x, g, Rational(uniform_int(rng, 0, 4), uniform_int(rng, 1, 3)));
  return x;
}

}  // namespace bier::sampling
