#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bier {

inline constexpr int kMaxGround = 20;

/// Subset of the ground set [n] as a bitmask. Vertices are 0-based here;
/// every external format shifts to 1-based.
class FaceSet {
 public:
  using mask_type = std::uint32_t;

  constexpr FaceSet() = default;
  constexpr explicit FaceSet(mask_type bits) : bits_(bits) {}

  static constexpr FaceSet of(std::initializer_list<int> vertices) {
    mask_type bits = 0;
    for (int v : vertices) bits |= mask_type{1} << v;
    return FaceSet(bits);
  }
  static FaceSet of(const std::vector<int>& vertices) {
    mask_type bits = 0;
    for (int v : vertices) bits |= mask_type{1} << v;
    return FaceSet(bits);
  }
  static constexpr FaceSet full(int n) { return FaceSet((mask_type{1} << n) - 1); }
  static constexpr FaceSet singleton(int v) { return FaceSet(mask_type{1} << v); }

  [[nodiscard]] constexpr mask_type bits() const { return bits_; }
  [[nodiscard]] constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr bool subset_of(FaceSet other) const { return (bits_ & ~other.bits_) == 0; }
  [[nodiscard]] constexpr bool disjoint(FaceSet other) const { return (bits_ & other.bits_) == 0; }
  [[nodiscard]] constexpr FaceSet with(int v) const { return FaceSet(bits_ | (mask_type{1} << v)); }
  [[nodiscard]] constexpr FaceSet without(int v) const { return FaceSet(bits_ & ~(mask_type{1} << v)); }
  [[nodiscard]] constexpr FaceSet complement(int n) const { return FaceSet(~bits_ & full(n).bits_); }
  [[nodiscard]] constexpr int min_vertex() const { return std::countr_zero(bits_); }

  [[nodiscard]] std::vector<int> vertices() const {
    std::vector<int> out;
    for (mask_type b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// 1-based listing, the convention of every external format.
  [[nodiscard]] std::vector<int> one_based() const {
    auto out = vertices();
    for (auto& v : out) ++v;
    return out;
  }

  [[nodiscard]] std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : one_based()) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

  friend constexpr FaceSet operator|(FaceSet a, FaceSet b) { return FaceSet(a.bits_ | b.bits_); }
  friend constexpr FaceSet operator&(FaceSet a, FaceSet b) { return FaceSet(a.bits_ & b.bits_); }
  friend constexpr FaceSet operator-(FaceSet a, FaceSet b) { return FaceSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(FaceSet, FaceSet) = default;
  friend constexpr auto operator<=>(FaceSet a, FaceSet b) { return a.bits_ <=> b.bits_; }

 private:
  mask_type bits_ = 0;
};

}  // namespace bier
