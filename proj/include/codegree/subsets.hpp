#pragma once

#include <cstdint>

#include "codegree/vertex_set.hpp"

namespace codegree {

/// Colex rank among ell-subsets of [64]; rank({1..ell}) = 0. Independent of n
/// by construction, which keeps ranks stable as n grows.
/// Throws ParameterError if popcount(s) != ell.
std::uint64_t rank_subset(VertexSet s, int ell);

/// Inverse of rank_subset restricted to [n]. Throws ParameterError unless
/// 0 <= rank < C(n, ell).
VertexSet unrank_subset(std::uint64_t rank, int ell, int n);

/// Calls fn(VertexSet) for every ell-subset of [n] in colex order.
template <typename Fn> void for_each_subset(int n, int ell, Fn &&fn);

/// Calls fn(VertexSet) for every ell-subset of `base`, in colex order.
template <typename Fn> void for_each_subset_of(VertexSet base, int ell, Fn &&fn);

// ---------------------------------------------------------------------------

namespace detail {
std::uint64_t subset_count(int n, int ell);

// Gosper's hack. Only called when x is not the last subset, which is exactly
// the case where x + lowest bit cannot overflow.
inline std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

inline std::uint64_t scatter(std::uint64_t pattern, std::uint64_t base) {
  std::uint64_t out = 0;
  while (pattern != 0) {
    const int i = __builtin_ctzll(pattern);
    pattern &= pattern - 1;
    std::uint64_t b = base;
    for (int j = 0; j < i; ++j)
      b &= b - 1;
    out |= b & (~b + 1);
  }
  return out;
}
} // namespace detail

template <typename Fn> void for_each_subset(int n, int ell, Fn &&fn) {
  if (ell < 0 || ell > n)
    return;
  if (ell == 0) {
    fn(VertexSet{});
    return;
  }
  const std::uint64_t count = detail::subset_count(n, ell);
  std::uint64_t x = ell >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ell) - 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    fn(VertexSet::from_bits(x));
    if (i + 1 < count)
      x = detail::next_same_popcount(x);
  }
}

template <typename Fn>
void for_each_subset_of(VertexSet base, int ell, Fn &&fn) {
  const int size = base.size();
  if (ell < 0 || ell > size)
    return;
  if (ell == size) {
    fn(base);
    return;
  }
  for_each_subset(size, ell, [&](VertexSet pattern) {
    fn(VertexSet::from_bits(detail::scatter(pattern.bits(), base.bits())));
  });
}

} // namespace codegree
