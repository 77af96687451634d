#include "codegree/core.hpp"

#include <unordered_map>

#include "codegree/errors.hpp"
#include "codegree/subsets.hpp"

namespace codegree {

std::uint64_t codegree(const Hypergraph &h, VertexSet s) {
  if (!s.within(h.n()))
    throw ParameterError("codegree: " + to_string(s) + " is not inside [" +
                         std::to_string(h.n()) + "]");
  std::uint64_t count = 0;
  for (VertexSet e : h.edges())
    count += s.subset_of(e) ? 1 : 0;
  return count;
}

CodegreeVector::CodegreeVector(int n, int ell,
                               std::map<std::uint64_t, std::uint64_t> nonzero)
    : n_(n), ell_(ell), nonzero_(std::move(nonzero)) {}

std::uint64_t CodegreeVector::dimension() const { return binom64(n_, ell_); }

std::uint64_t CodegreeVector::at(std::uint64_t rank) const {
  if (rank >= dimension())
    throw ParameterError("codegree vector index out of range");
  const auto it = nonzero_.find(rank);
  return it == nonzero_.end() ? 0 : it->second;
}

std::uint64_t CodegreeVector::at(VertexSet s) const {
  if (!s.within(n_))
    throw ParameterError("codegree vector key outside [n]");
  return at(rank_subset(s, ell_));
}

Wide CodegreeVector::l1() const {
  Wide sum = 0;
  for (const auto &[rank, d] : nonzero_)
    sum += d;
  return sum;
}

Wide CodegreeVector::squared_l2() const {
  Wide sum = 0;
  for (const auto &[rank, d] : nonzero_)
    sum += static_cast<Wide>(d) * d;
  return sum;
}

namespace {

void check_ell(const Hypergraph &h, int ell) {
  if (ell < 0 || ell > h.k())
    throw ParameterError("ell must satisfy 0 <= ell <= k, got " + std::to_string(ell));
}

std::unordered_map<VertexSet::Bits, std::uint64_t> count_subsets(const Hypergraph &h,
                                                                 int ell) {
  std::unordered_map<VertexSet::Bits, std::uint64_t> counts;
  counts.reserve(h.size() * binom64(h.k(), ell));
  for (VertexSet e : h.edges())
    for_each_subset_of(e, ell, [&](VertexSet s) { ++counts[s.bits()]; });
  return counts;
}

} // namespace

CodegreeVector codegree_vector(const Hypergraph &h, int ell) {
  check_ell(h, ell);
  std::map<std::uint64_t, std::uint64_t> entries;
  for (const auto &[bits, d] : count_subsets(h, ell))
    entries.emplace(rank_subset(VertexSet::from_bits(bits), ell), d);
  return CodegreeVector(h.n(), ell, std::move(entries));
}

Wide codegree_square_sum(const Hypergraph &h, int ell) {
  check_ell(h, ell);
  Wide sum = 0;
  for (const auto &[bits, d] : count_subsets(h, ell))
    sum += static_cast<Wide>(d) * d;
  return sum;
}

Wide co2(const Hypergraph &h) { return codegree_square_sum(h, h.k() - 1); }

Wide co2_delta(const Hypergraph &h, VertexSet e) {
  if (e.size() != h.k() || !e.within(h.n()))
    throw ParameterError("co2_delta: " + to_string(e) + " is not a k-subset of [n]");
  if (h.contains(e))
    throw ParameterError("co2_delta: edge " + to_string(e) + " already present");
  Wide delta = 0;
  for (int v : e.vertices())
    delta += 2 * static_cast<Wide>(codegree(h, e.without(v))) + 1;
  return delta;
}

} // namespace codegree
