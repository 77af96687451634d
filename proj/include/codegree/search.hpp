#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codegree/hypergraph.hpp"
#include "codegree/numeric.hpp"
#include "codegree/props.hpp"

namespace codegree {

enum class ConstraintKind { TIntersecting, DWiseTIntersecting, MatchingAtMost, PatternFree, Conjunction };

/// A property of edge sets that survives edge deletion. Only such properties
/// are representable, which is what lets the search restrict itself to
/// inclusion-maximal families.
struct Constraint {
  ConstraintKind kind = ConstraintKind::Conjunction;
  int t = 1;
  int d = 2;
  int s = 1;
  PatternSpec pattern;
  std::vector<Constraint> parts;

  static Constraint t_intersecting(int t);
  static Constraint d_wise_t_intersecting(int d, int t);
  static Constraint matching_at_most(int s);
  static Constraint pattern_free(PatternSpec p);
  static Constraint all_of(std::vector<Constraint> parts);
  /// The empty conjunction: every family qualifies.
  static Constraint none() { return all_of({}); }

  /// Full check through the props predicates.
  bool satisfied_by(EdgeSpan edges) const;

  /// Throws ParameterError on bad parameters or infeasible patterns.
  void validate(int n, int k) const;

  /// Round-trips through parse_constraint for every non-conjunction kind.
  std::string describe() const;
};

/// "t-intersecting:T", "dwise:D:T", "matching:S", "free:<pattern-kind>:LEN".
/// Throws ParameterError.
Constraint parse_constraint(std::string_view text);

enum class SearchMode { BruteForce, BranchAndBound };

struct SearchLimits {
  std::uint64_t node_budget = 1'000'000'000;
  /// Zero means unlimited.
  std::chrono::milliseconds time_budget{0};
  int workers = 1;
  std::size_t max_optima = 64;
  /// Brute force refuses more than 30 candidate edges without this.
  bool allow_large_brute_force = false;
};

struct SearchProblem {
  int n = 0;
  int k = 0;
  Constraint constraint;
  SearchMode mode = SearchMode::BranchAndBound;
  SearchLimits limits;
  /// When set to t, only families whose common intersection has fewer than
  /// t vertices are admissible (nontrivial t-intersecting). Upward closed, so
  /// it is applied to maximal families only.
  std::optional<int> nontrivial_below;
  /// Cap the edge count by flagged-valid classical bounds when pruning.
  bool use_l1_caps = true;
  /// Disable every bound-based and maximality prune (oracle mode).
  bool prune = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t pruned = 0;
};

struct SearchResult {
  /// False when a budget ran out; the optimum is then only an incumbent.
  bool certified = false;
  /// Absent when no admissible family exists.
  std::optional<Wide> optimum;
  /// Optimal families, lexicographic by edge-rank sequence, at most max_optima.
  std::vector<Hypergraph> optima;
  /// Number of optimal families found (all of them when certified).
  std::uint64_t optimum_count = 0;
  bool optima_truncated = false;
  SearchStats stats;
  int workers = 1;
};

/// Maximum co2 over admissible subfamilies of C([n], k). Dispatches on mode.
/// Branch and bound extends edge sets in colex order and prunes with Bey's
/// bound and with co2 of the family plus all still-addable edges.
SearchResult max_co2(const SearchProblem &problem);

/// Plain include/exclude enumeration with full constraint checks at every
/// inclusion and co2 recomputed from scratch at every leaf. The oracle for
/// max_co2.
SearchResult brute_force_co2(const SearchProblem &problem);

} // namespace codegree
