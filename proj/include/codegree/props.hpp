#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codegree/hypergraph.hpp"
#include "codegree/vertex_set.hpp"

namespace codegree {

using EdgeSpan = std::span<const VertexSet>;

// ---- intersection properties ----------------------------------------------

/// Every two distinct edges share at least t vertices. Vacuous for <= 1 edge.
bool is_t_intersecting(EdgeSpan edges, int t);
bool is_t_intersecting(const Hypergraph &h, int t);

/// Every d edges (repetition allowed) share at least t vertices. With m
/// edges and 2 <= m < d this asks the common intersection of all m edges to
/// have size >= t. Vacuous for <= 1 edge, so d = 2 is is_t_intersecting.
/// Throws ParameterError unless d >= 2 and t >= 1.
bool is_d_wise_t_intersecting(EdgeSpan edges, int d, int t);
bool is_d_wise_t_intersecting(const Hypergraph &h, int d, int t);

/// Throws ParameterError on an empty family.
VertexSet common_intersection(EdgeSpan edges);
VertexSet common_intersection(const Hypergraph &h);

// ---- matchings and covers ---------------------------------------------------

struct Witness {
  enum class Role { Matching, Pattern };
  Role role = Role::Matching;
  /// Indices into the edge list.
  std::vector<std::size_t> edges;
};

/// A maximum set of pairwise disjoint edges, by exact branch and bound.
Witness maximum_matching(EdgeSpan edges);
int matching_number(EdgeSpan edges);
int matching_number(const Hypergraph &h);

/// True when `edges` contains more than `s` pairwise disjoint edges. Stops at
/// the first witness, which is much cheaper than the full maximum.
bool has_matching_larger_than(EdgeSpan edges, int s);

/// A minimum vertex set meeting every edge, by iterative deepening over the
/// cover size. Empty family: empty cover.
VertexSet minimum_cover(EdgeSpan edges);
int covering_number(EdgeSpan edges);
int covering_number(const Hypergraph &h);

// ---- paths and cycles -------------------------------------------------------

enum class PatternKind { BergePath, BergeCycle, MinimalPath, MinimalCycle, LinearPath, LinearCycle };

/// An s-edge path or cycle. Conditions on the ordered edges E_1..E_s, with
/// "adjacent" meaning consecutive (cyclically, for cycles):
///
///   Linear   adjacent pairs meet in exactly one vertex, others are disjoint
///   Minimal  adjacent pairs meet, others are disjoint
///   Berge    distinct connector vertices v_i in E_i & E_{i+1}
///
/// Linear and minimal cycles also need an empty common intersection, which
/// only bites at s = 3. Paths have s edges and s-1 connectors.
struct PatternSpec {
  PatternKind kind = PatternKind::LinearCycle;
  int length = 3;

  bool is_cycle() const;

  /// Necessary vertex count for a realization with k-edges.
  int min_vertices(int k) const;

  /// Throws ParameterError if the length is invalid or the pattern cannot fit
  /// in [n] with k-edges.
  void check_feasible(int n, int k) const;

  /// e.g. "minimal-cycle:3".
  std::string describe() const;
};

/// "linear-path", "minimal-cycle", "berge-cycle", ... Throws ParameterError.
PatternKind parse_pattern_kind(std::string_view name);
std::string_view pattern_kind_name(PatternKind kind);

/// Backtracking search for an ordered edge sequence realizing a pattern.
/// Stateless apart from the spec; safe to share across threads.
class PatternMatcher {
public:
  explicit PatternMatcher(PatternSpec spec);

  const PatternSpec &spec() const { return spec_; }

  /// Lexicographically smallest realizing tuple of edge indices, or nullopt.
  std::optional<std::vector<std::size_t>> find(EdgeSpan edges) const;

  /// True if some realization uses edges[anchor].
  bool occurs_through(EdgeSpan edges, std::size_t anchor) const;

  /// Checks one ordered sequence of distinct edges.
  bool realizes(EdgeSpan ordered) const;

private:
  bool adjacent(int i, int j) const;
  bool pair_ok(VertexSet a, VertexSet b, bool adjacent) const;
  bool complete_ok(EdgeSpan ordered) const;
  bool extend(EdgeSpan edges, const std::vector<int> &order, std::size_t depth,
              std::vector<std::size_t> &slots, std::vector<bool> &used) const;

  PatternSpec spec_;
};

/// Throws ParameterError when the pattern is infeasible for (n, k).
std::optional<Witness> find_pattern(const Hypergraph &h, const PatternSpec &p);
bool contains_pattern(const Hypergraph &h, const PatternSpec &p);
bool is_pattern_free(const Hypergraph &h, const PatternSpec &p);

/// True if the sets admit a system of distinct representatives.
bool has_distinct_representatives(std::span<const VertexSet> sets);

} // namespace codegree
