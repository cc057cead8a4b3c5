#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bier/complex.hpp"

namespace bier {

/// Face (A1, A2; B) of Bier(K) = K *_Δ K°, with B = [n] ∖ (A1 ∪ A2).
/// B = [n] is the extended empty face; proper faces have B ≠ ∅, [n].
class BierFace {
 public:
  static BierFace make(int n, FaceSet a1, FaceSet a2) {
    check_ground(n);
    require(a1.subset_of(FaceSet::full(n)) && a2.subset_of(FaceSet::full(n)), ErrorCode::InvalidFace,
            "face parts must be subsets of [n]");
    require(a1.disjoint(a2), ErrorCode::InvalidFace,
            "A1 = " + a1.to_string() + " and A2 = " + a2.to_string() + " overlap");
    require(!(a1 | a2).complement(n).empty(), ErrorCode::InvalidFace, "B must be non-empty");
    return BierFace(n, a1, a2);
  }

  static BierFace empty_face(int n) { return make(n, FaceSet{}, FaceSet{}); }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] FaceSet a1() const { return a1_; }
  [[nodiscard]] FaceSet a2() const { return a2_; }
  [[nodiscard]] FaceSet b() const { return (a1_ | a2_).complement(n_); }
  [[nodiscard]] int dimension() const { return a1_.size() + a2_.size() - 1; }
  [[nodiscard]] bool is_facet() const { return b().size() == 1; }
  [[nodiscard]] bool is_empty_face() const { return a1_.empty() && a2_.empty(); }

  /// Interval notation (X, Y) = (A1, [n] ∖ A2).
  [[nodiscard]] std::pair<FaceSet, FaceSet> interval() const { return {a1_, a2_.complement(n_)}; }

  static BierFace from_interval(int n, FaceSet x, FaceSet y) {
    require(x.subset_of(y) && x != y, ErrorCode::InvalidFace, "interval needs X ⊊ Y");
    return make(n, x, y.complement(n));
  }

  /// The same triple read against K°: (A2, A1; B).
  [[nodiscard]] BierFace swapped() const { return BierFace(n_, a2_, a1_); }

  [[nodiscard]] std::string to_string() const {
    return "(" + a1_.to_string() + ", " + a2_.to_string() + "; " + b().to_string() + ")";
  }

  friend bool operator==(const BierFace&, const BierFace&) = default;
  friend auto operator<=>(const BierFace& x, const BierFace& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    if (auto c = x.a1_ <=> y.a1_; c != 0) return c;
    return x.a2_ <=> y.a2_;
  }

 private:
  BierFace(int n, FaceSet a1, FaceSet a2) : n_(n), a1_(a1), a2_(a2) {}

  int n_;
  FaceSet a1_;
  FaceSet a2_;
};

inline bool in_dual(const SimplicialComplex& k, FaceSet s) { return !k.contains(s.complement(k.n())); }

/// Proper face test: A1 ∈ K, A2 ∈ K°, disjoint, and B ≠ ∅, [n].
inline bool is_face(const SimplicialComplex& k, FaceSet a1, FaceSet a2) {
  const int n = k.n();
  if (!a1.disjoint(a2)) return false;
  if ((a1 | a2) == FaceSet::full(n)) return false;
  if (a1.empty() && a2.empty()) return false;
  return k.contains(a1) && a2.subset_of(FaceSet::full(n)) && in_dual(k, a2);
}

inline bool is_face(const SimplicialComplex& k, const BierFace& tau) {
  return tau.n() == k.n() && is_face(k, tau.a1(), tau.a2());
}

/// Facets (A, [n] ∖ (A ∪ {c}); {c}) for every boundary pair A ∈ K, A ∪ {c} ∉ K.
inline std::vector<BierFace> facets(const SimplicialComplex& k) {
  const int n = k.n();
  std::vector<BierFace> out;
  const auto& member = k.membership();
  for (std::size_t m = 0; m < member.size(); ++m) {
    if (!member[m]) continue;
    const FaceSet a(static_cast<FaceSet::mask_type>(m));
    for (int c = 0; c < n; ++c)
      if (!a.contains(c) && !k.contains(a.with(c))) out.push_back(BierFace::make(n, a, a.with(c).complement(n)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// f-vector (f_0, ..., f_{n-2}) by enumerating all disjoint pairs (3^n).
inline std::vector<std::uint64_t> f_vector(const SimplicialComplex& k, int max_n = 12) {
  const int n = k.n();
  require(n <= max_n, ErrorCode::BudgetExceeded,
          "f-vector enumeration limited to n <= " + std::to_string(max_n));
  std::vector<std::uint64_t> f(static_cast<std::size_t>(n - 1), 0);
  const FaceSet top = FaceSet::full(n);
  std::vector<bool> dual_member(std::size_t{1} << n);
  for (std::size_t m = 0; m < dual_member.size(); ++m)
    dual_member[m] = !k.membership()[top.bits() & ~m];
  for (std::size_t a1 = 0; a1 < dual_member.size(); ++a1) {
    if (!k.membership()[a1]) continue;
    const auto rest = top.bits() & ~static_cast<FaceSet::mask_type>(a1);
    // Every submask of the complement, including 0.
    for (FaceSet::mask_type a2 = rest;; a2 = (a2 - 1) & rest) {
      if (dual_member[a2] && (a1 | a2) != top.bits() && (a1 | a2) != 0) {
        const int dim = std::popcount(static_cast<FaceSet::mask_type>(a1)) + std::popcount(a2) - 1;
        ++f[static_cast<std::size_t>(dim)];
      }
      if (a2 == 0) break;
    }
  }
  return f;
}

enum class RidgeKind { Lambda, V, Cross };

constexpr const char* kind_name(RidgeKind kind) {
  switch (kind) {
    case RidgeKind::Lambda: return "Lambda";
    case RidgeKind::V: return "V";
    case RidgeKind::Cross: return "Cross";
  }
  return "?";
}

/// Ridge (X, Y) with Y = X ∪ {c1, c2}, c1 < c2, and its two facets.
struct Ridge {
  RidgeKind kind;
  FaceSet x;
  FaceSet y;
  int c1;
  int c2;
  std::array<BierFace, 2> facets;

  [[nodiscard]] BierFace face() const { return BierFace::from_interval(facets[0].n(), x, y); }
};

inline std::vector<Ridge> ridges(const SimplicialComplex& k) {
  const int n = k.n();
  const FaceSet top = FaceSet::full(n);
  std::vector<Ridge> out;
  const auto& member = k.membership();
  auto facet_of = [n](FaceSet a, int c) { return BierFace::make(n, a, a.with(c).complement(n)); };
  for (std::size_t m = 0; m < member.size(); ++m) {
    if (!member[m]) continue;
    const FaceSet x(static_cast<FaceSet::mask_type>(m));
    const auto free = x.complement(n).vertices();
    for (std::size_t i = 0; i < free.size(); ++i) {
      for (std::size_t j = i + 1; j < free.size(); ++j) {
        const int c1 = free[i];
        const int c2 = free[j];
        const FaceSet y = x.with(c1).with(c2);
        if (k.contains(y)) continue;
        if (x.empty() && y == top) continue;  // the extended empty face when n = 2
        const bool in1 = k.contains(x.with(c1));
        const bool in2 = k.contains(x.with(c2));
        if (in1 && in2) {
          out.push_back({RidgeKind::Lambda, x, y, c1, c2, {facet_of(x.with(c1), c2), facet_of(x.with(c2), c1)}});
        } else if (!in1 && !in2) {
          out.push_back({RidgeKind::V, x, y, c1, c2, {facet_of(x, c1), facet_of(x, c2)}});
        } else {
          const int d = in1 ? c1 : c2;
          const int e = in1 ? c2 : c1;
          out.push_back({RidgeKind::Cross, x, y, c1, c2, {facet_of(x, e), facet_of(x.with(d), e)}});
        }
      }
    }
  }
  return out;
}

/// (A1, A2; B) ↦ (A2, A1; B) from facets(K) onto facets(K°).
inline std::vector<std::pair<BierFace, BierFace>> dual_facet_map(const SimplicialComplex& k) {
  const auto dual = alexander_dual(k);
  std::vector<std::pair<BierFace, BierFace>> out;
  for (const auto& tau : facets(k)) {
    auto image = tau.swapped();
    require(is_face(dual, image) && image.is_facet(), ErrorCode::Internal,
            "swapped facet " + image.to_string() + " is not a facet of the dual sphere");
    out.emplace_back(tau, image);
  }
  return out;
}

}  // namespace bier
