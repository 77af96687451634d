#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace codegree {

inline constexpr int kMaxVertices = 64;

/// A subset of [n] for n <= 64. Vertex v (1-based) lives in bit v-1, so the
/// numeric order of the mask is colex order.
class VertexSet {
public:
  using Bits = std::uint64_t;

  constexpr VertexSet() = default;

  static constexpr VertexSet from_bits(Bits bits) { return VertexSet(bits); }

  /// Throws ParameterError for labels outside 1..64.
  static VertexSet of(std::initializer_list<int> vertices);
  static VertexSet of(const std::vector<int> &vertices);

  /// {lo, ..., hi}; empty when lo > hi.
  static constexpr VertexSet interval(int lo, int hi) {
    if (lo < 1)
      lo = 1;
    if (hi > kMaxVertices)
      hi = kMaxVertices;
    if (lo > hi)
      return {};
    return VertexSet(low_bits(hi) & ~low_bits(lo - 1));
  }

  /// [n] = {1, ..., n}.
  static constexpr VertexSet first(int n) { return interval(1, n); }

  constexpr Bits bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(int v) const {
    return v >= 1 && v <= kMaxVertices && ((bits_ >> (v - 1)) & 1u);
  }
  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool within(int n) const { return subset_of(first(n)); }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  /// Largest label, 0 for the empty set.
  constexpr int max_vertex() const { return 64 - std::countl_zero(bits_); }
  /// Smallest label, 0 for the empty set.
  constexpr int min_vertex() const {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }

  constexpr VertexSet with(int v) const {
    return VertexSet(bits_ | (Bits{1} << (v - 1)));
  }
  constexpr VertexSet without(int v) const {
    return VertexSet(bits_ & ~(Bits{1} << (v - 1)));
  }

  std::vector<int> vertices() const;

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) {
    return a.bits_ <=> b.bits_;
  }

private:
  constexpr explicit VertexSet(Bits bits) : bits_(bits) {}

  static constexpr Bits low_bits(int count) {
    return count <= 0 ? 0 : count >= 64 ? ~Bits{0} : (Bits{1} << count) - 1;
  }

  Bits bits_ = 0;
};

/// "{1,2,3}".
std::string to_string(VertexSet s);

/// Popcount of the intersection.
constexpr int overlap(VertexSet a, VertexSet b) { return (a & b).size(); }

} // namespace codegree
