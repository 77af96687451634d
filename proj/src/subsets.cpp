#include "codegree/subsets.hpp"

#include "codegree/errors.hpp"
#include "codegree/numeric.hpp"

namespace codegree {

namespace detail {
std::uint64_t subset_count(int n, int ell) { return binom64(n, ell); }
} // namespace detail

std::uint64_t rank_subset(VertexSet s, int ell) {
  if (s.size() != ell)
    throw ParameterError("rank_subset: " + to_string(s) + " is not a " +
                         std::to_string(ell) + "-set");
  std::uint64_t rank = 0;
  int i = 1;
  for (VertexSet::Bits b = s.bits(); b != 0; b &= b - 1, ++i)
    rank += binom64(std::countr_zero(b), i);
  return rank;
}

VertexSet unrank_subset(std::uint64_t rank, int ell, int n) {
  if (n < 0 || n > kMaxVertices || ell < 0 || ell > n)
    throw ParameterError("unrank_subset: bad dimensions");
  if (rank >= binom64(n, ell))
    throw ParameterError("unrank_subset: rank " + std::to_string(rank) +
                         " out of range for C(" + std::to_string(n) + "," +
                         std::to_string(ell) + ")");
  VertexSet out;
  int top = n - 1;
  for (int i = ell; i >= 1; --i) {
    // Largest position p with C(p, i) <= rank.
    while (binom64(top, i) > rank)
      --top;
    rank -= binom64(top, i);
    out = out.with(top + 1);
    --top;
  }
  return out;
}

} // namespace codegree
