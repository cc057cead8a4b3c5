#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bier/error.hpp"
#include "bier/face_set.hpp"
#include "bier/rational.hpp"

namespace bier {

inline void check_ground(int n) {
  require(n >= 2, ErrorCode::EmptyGround, "ground set needs n >= 2, got " + std::to_string(n));
  require(n <= kMaxGround, ErrorCode::GroundTooLarge,
          "ground set limited to n <= " + std::to_string(kMaxGround) + ", got " + std::to_string(n));
}

/// Proper simplicial complex K on [n]: downward closed, contains the empty
/// set, does not contain [n]. Membership is a full 2^n table.
class SimplicialComplex {
 public:
  /// Downward closure of the listed sets together with the empty set.
  static SimplicialComplex from_facets(int n, std::span<const FaceSet> facets) {
    check_ground(n);
    std::vector<bool> member(std::size_t{1} << n, false);
    const FaceSet top = FaceSet::full(n);
    member[0] = true;
    for (FaceSet f : facets) {
      require(f.subset_of(top), ErrorCode::InvalidFace,
              "face " + f.to_string() + " is not a subset of [" + std::to_string(n) + "]");
      require(f != top, ErrorCode::FullComplex, "listed face equals the full ground set");
      member[f.bits()] = true;
    }
    // Subsets have smaller masks, so a single descending sweep closes downward.
    for (std::size_t m = member.size(); m-- > 1;) {
      if (!member[m]) continue;
      for (auto b = static_cast<FaceSet::mask_type>(m); b != 0; b &= b - 1)
        member[m & ~(b & (~b + 1))] = true;
    }
    return SimplicialComplex(n, std::move(member));
  }

  static SimplicialComplex from_facets(int n, std::initializer_list<FaceSet> facets) {
    return from_facets(n, std::span<const FaceSet>(facets.begin(), facets.size()));
  }

  /// Validating constructor from an explicit membership table.
  static SimplicialComplex from_membership(int n, std::vector<bool> member) {
    check_ground(n);
    require(member.size() == (std::size_t{1} << n), ErrorCode::InvalidFace,
            "membership table must have 2^n entries");
    require(member[0], ErrorCode::InvalidFace, "the empty set must be a face");
    require(!member.back(), ErrorCode::FullComplex, "[n] must not be a face");
    for (std::size_t m = 1; m < member.size(); ++m) {
      if (!member[m]) continue;
      for (auto b = static_cast<FaceSet::mask_type>(m); b != 0; b &= b - 1) {
        const auto sub = m & ~(b & (~b + 1));
        require(member[sub], ErrorCode::NotDownwardClosed,
                FaceSet(static_cast<FaceSet::mask_type>(m)).to_string() + " is a face but " +
                    FaceSet(static_cast<FaceSet::mask_type>(sub)).to_string() + " is not");
      }
    }
    return SimplicialComplex(n, std::move(member));
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] FaceSet ground() const { return FaceSet::full(n_); }
  [[nodiscard]] bool contains(FaceSet s) const { return s.subset_of(ground()) && member_[s.bits()]; }
  [[nodiscard]] const std::vector<bool>& membership() const { return member_; }

  /// Maximal faces, ascending by bitmask.
  [[nodiscard]] const std::vector<FaceSet>& facets() const { return facets_; }

  [[nodiscard]] std::vector<FaceSet> faces() const {
    std::vector<FaceSet> out;
    for (std::size_t m = 0; m < member_.size(); ++m)
      if (member_[m]) out.emplace_back(static_cast<FaceSet::mask_type>(m));
    return out;
  }

  [[nodiscard]] std::size_t face_count() const {
    std::size_t count = 0;
    for (bool b : member_) count += b ? 1 : 0;
    return count;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.member_ == b.member_;
  }

 private:
  SimplicialComplex(int n, std::vector<bool> member) : n_(n), member_(std::move(member)) {
    for (std::size_t m = 0; m < member_.size(); ++m) {
      if (!member_[m]) continue;
      const FaceSet s(static_cast<FaceSet::mask_type>(m));
      bool maximal = true;
      for (int v = 0; v < n_ && maximal; ++v)
        if (!s.contains(v) && member_[s.with(v).bits()]) maximal = false;
      if (maximal) facets_.push_back(s);
    }
  }

  int n_;
  std::vector<bool> member_;
  std::vector<FaceSet> facets_;
};

/// All subsets of [n] of size at most k (k < n).
inline SimplicialComplex skeleton_complex(int n, int k) {
  check_ground(n);
  require(k >= 0 && k < n, ErrorCode::Range, "skeleton size must lie in [0, n-1]");
  std::vector<bool> member(std::size_t{1} << n);
  for (std::size_t m = 0; m < member.size(); ++m)
    member[m] = FaceSet(static_cast<FaceSet::mask_type>(m)).size() <= k;
  return SimplicialComplex::from_membership(n, std::move(member));
}

/// Boundary of the full simplex, 2^[n] minus [n].
inline SimplicialComplex simplex_boundary(int n) { return skeleton_complex(n, n - 1); }

/// The complex {∅}.
inline SimplicialComplex empty_face_complex(int n) { return skeleton_complex(n, 0); }

/// S ∈ K° iff [n]∖S ∉ K.
inline SimplicialComplex alexander_dual(const SimplicialComplex& k) {
  const int n = k.n();
  std::vector<bool> member(std::size_t{1} << n);
  const auto top = FaceSet::full(n).bits();
  for (std::size_t m = 0; m < member.size(); ++m) member[m] = !k.membership()[top & ~m];
  return SimplicialComplex::from_membership(n, std::move(member));
}

/// Non-faces all of whose proper subsets are faces, ascending by bitmask.
inline std::vector<FaceSet> minimal_nonfaces(const SimplicialComplex& k) {
  std::vector<FaceSet> out;
  const auto& member = k.membership();
  for (std::size_t m = 1; m < member.size(); ++m) {
    if (member[m]) continue;
    const FaceSet s(static_cast<FaceSet::mask_type>(m));
    bool minimal = true;
    for (int v : s.vertices())
      if (!member[s.without(v).bits()]) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  return out;
}

/// m_i = #{S ∈ K : S ∪ {i} ∉ K}.
inline std::vector<std::uint64_t> m_vector(const SimplicialComplex& k) {
  const int n = k.n();
  std::vector<std::uint64_t> m(static_cast<std::size_t>(n), 0);
  const auto& member = k.membership();
  for (std::size_t s = 0; s < member.size(); ++s) {
    if (!member[s]) continue;
    for (int i = 0; i < n; ++i)
      if (!member[s | (std::size_t{1} << i)]) ++m[static_cast<std::size_t>(i)];
  }
  return m;
}

/// Balanced in the Van Kampen-Flores sense: K = ([n] choose <= m) for
/// n = 2m+1, or ([n] choose <= m-1) ⊆ K ⊆ ([n] choose <= m) for n = 2m.
inline bool is_balanced(const SimplicialComplex& k) {
  const int n = k.n();
  const int m = n / 2;
  const int lower = (n % 2 == 1) ? m : m - 1;
  const auto& member = k.membership();
  for (std::size_t s = 0; s < member.size(); ++s) {
    const int size = FaceSet(static_cast<FaceSet::mask_type>(s)).size();
    if (size <= lower && !member[s]) return false;
    if (size > m && member[s]) return false;
  }
  return true;
}

/// K ∪ {B} for a minimal non-face B. The result must stay proper.
inline SimplicialComplex add_face(const SimplicialComplex& k, FaceSet b) {
  require(b != k.ground(), ErrorCode::NotProper, "adding [n] destroys properness");
  std::vector<bool> member = k.membership();
  member[b.bits()] = true;
  return SimplicialComplex::from_membership(k.n(), std::move(member));
}

/// Positive weights L with Σ l_i = 1 and a threshold 0 < ν < 1.
class WeightVector {
 public:
  static WeightVector make(RationalVector l, Rational nu) {
    check_ground(static_cast<int>(l.size()));
    for (const auto& x : l)
      require(x > 0, ErrorCode::InvalidWeights, "weights must be strictly positive");
    require(nu > 0 && nu < 1, ErrorCode::InvalidWeights, "threshold must lie strictly in (0, 1)");
    require(sum(l) == 1, ErrorCode::NotNormalized,
            "weights must sum to 1, got " + to_string(sum(l)));
    return WeightVector(std::move(l), std::move(nu));
  }

  [[nodiscard]] int n() const { return static_cast<int>(l_.size()); }
  [[nodiscard]] const RationalVector& weights() const { return l_; }
  [[nodiscard]] const Rational& nu() const { return nu_; }

  [[nodiscard]] Rational measure(FaceSet s) const {
    Rational total = 0;
    for (int v : s.vertices()) total += l_[static_cast<std::size_t>(v)];
    return total;
  }

  /// μ_L of every subset, indexed by bitmask.
  [[nodiscard]] std::vector<Rational> all_measures() const {
    std::vector<Rational> mu(std::size_t{1} << n());
    for (std::size_t m = 1; m < mu.size(); ++m) {
      const auto low = m & (~m + 1);
      mu[m] = mu[m & ~low] + l_[static_cast<std::size_t>(std::countr_zero(low))];
    }
    return mu;
  }

 private:
  WeightVector(RationalVector l, Rational nu) : l_(std::move(l)), nu_(std::move(nu)) {}

  RationalVector l_;
  Rational nu_;
};

namespace detail {
inline SimplicialComplex strict_sublevel(int n, const std::vector<Rational>& mu, const Rational& bound) {
  std::vector<bool> member(mu.size());
  for (std::size_t m = 0; m < mu.size(); ++m) member[m] = mu[m] < bound;
  return SimplicialComplex::from_membership(n, std::move(member));
}
}  // namespace detail

/// T_{μ_L < ν}. Rejects weight vectors where some subset weighs exactly ν.
inline SimplicialComplex threshold_complex(const WeightVector& w) {
  const int n = w.n();
  const auto mu = w.all_measures();
  for (std::size_t m = 0; m < mu.size(); ++m)
    require(mu[m] != w.nu(), ErrorCode::NotGeneric,
            "subset " + FaceSet(static_cast<FaceSet::mask_type>(m)).to_string() +
                " has weight exactly nu");
  auto k = detail::strict_sublevel(n, mu, w.nu());
  require(alexander_dual(k) == detail::strict_sublevel(n, mu, Rational(1) - w.nu()),
          ErrorCode::Internal, "threshold complex dual mismatch");
  return k;
}

}  // namespace bier
