#pragma once

#include <cstdint>
#include <map>

#include "codegree/hypergraph.hpp"
#include "codegree/numeric.hpp"
#include "codegree/vertex_set.hpp"

namespace codegree {

/// Number of edges containing `s`. Throws ParameterError unless s is in [n].
std::uint64_t codegree(const Hypergraph &h, VertexSet s);

/// Codegrees of all ell-subsets of [n], indexed by colex rank. Stored sparsely;
/// entries not present are zero.
class CodegreeVector {
public:
  CodegreeVector(int n, int ell, std::map<std::uint64_t, std::uint64_t> nonzero);

  int n() const { return n_; }
  int ell() const { return ell_; }

  /// C(n, ell), the length of the full vector.
  std::uint64_t dimension() const;

  std::uint64_t at(std::uint64_t rank) const;
  std::uint64_t at(VertexSet s) const;

  const std::map<std::uint64_t, std::uint64_t> &nonzero() const { return nonzero_; }

  Wide l1() const;
  Wide squared_l2() const;

private:
  int n_;
  int ell_;
  std::map<std::uint64_t, std::uint64_t> nonzero_;
};

/// Throws ParameterError unless 0 <= ell <= k.
CodegreeVector codegree_vector(const Hypergraph &h, int ell);

/// Sum of d(S)^2 over all ell-subsets S of [n].
Wide codegree_square_sum(const Hypergraph &h, int ell);

/// Codegree squared sum: codegree_square_sum at ell = k - 1.
Wide co2(const Hypergraph &h);

/// co2(h + e) - co2(h), computed from the k codegrees under e.
/// Throws ParameterError if e is present or not a k-subset of [n].
Wide co2_delta(const Hypergraph &h, VertexSet e);

} // namespace codegree
