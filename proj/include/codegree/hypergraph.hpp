#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "codegree/vertex_set.hpp"

namespace codegree {

/// A k-uniform hypergraph on [n], 2 <= k < n <= 64. Edges are distinct and
/// kept in colex order; instances are immutable once built.
class Hypergraph {
public:
  /// The empty hypergraph. Throws ParameterError on bad (n, k).
  Hypergraph(int n, int k);

  /// Throws ParameterError on duplicate edges, wrong edge size, or labels
  /// outside [n]. Input order is irrelevant.
  Hypergraph(int n, int k, std::vector<VertexSet> edges);

  int n() const { return n_; }
  int k() const { return k_; }

  std::span<const VertexSet> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  const VertexSet &operator[](std::size_t i) const { return edges_[i]; }

  bool contains(VertexSet edge) const;

  /// Throws ParameterError if `edge` is present or malformed.
  Hypergraph with_edge(VertexSet edge) const;
  /// Throws ParameterError if `edge` is absent.
  Hypergraph without_edge(VertexSet edge) const;

  friend bool operator==(const Hypergraph &, const Hypergraph &) = default;

private:
  void check_edge(VertexSet edge) const;

  int n_;
  int k_;
  std::vector<VertexSet> edges_;
};

/// Validates 2 <= k < n <= 64.
void check_dimensions(int n, int k);

/// The colex-least relabeling of h among vertex orders that sort vertices
/// by degree, largest first. Equal for isomorphic inputs. Throws
/// ParameterError when the degree classes admit more than `limit` orders.
Hypergraph canonical_form(const Hypergraph &h, std::uint64_t limit = 10'000'000);

bool isomorphic(const Hypergraph &a, const Hypergraph &b);

} // namespace codegree
