#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codegree/numeric.hpp"
#include "codegree/search.hpp"

namespace codegree {

enum class Verdict { Pass, Fail, Report, Uncertified };

/// "PASS", "FAIL", "REPORT", "UNCERTIFIED".
std::string_view verdict_name(Verdict v);

struct ClaimParams {
  int n = 0;
  int k = 0;
  int s = 2;
  int t = 1;
  /// hm-l2-conjecture only: also search nontrivial intersecting families.
  bool run_search = true;
  SearchLimits limits;
};

struct ClaimReport {
  std::string claim;
  ClaimParams params;
  std::string constraint;
  Rational claimed;
  std::optional<Rational> computed;
  bool match = false;
  /// Every optimum is a full star (all optima isomorphic to it).
  std::optional<bool> unique;
  /// Some optimum is a full star.
  std::optional<bool> star_attains;
  /// Pairwise non-isomorphic optima among those kept.
  std::optional<std::size_t> optimum_classes;
  /// Absent when the claim's range of n is not quantified.
  std::optional<bool> hypotheses_hold;
  std::string hypothesis;
  Verdict verdict = Verdict::Report;
  /// Extra named values, already rendered.
  std::vector<std::pair<std::string, std::string>> facts;
  std::optional<SearchResult> search;
};

/// ekr-l2, min-3-cycle, min-3-path, lin-3-cycle, lin-3-path, emc-ratio,
/// hm-l2-conjecture (alias hm-l2-check), t-int-l2-conjecture.
std::vector<std::string_view> claim_names();

/// Runs one prepackaged check. Conjecture probes always yield REPORT.
/// Throws ParameterError on unknown claims or bad parameters.
ClaimReport verify_claim(std::string_view name, const ClaimParams &params);

/// h contains every k-set through a fixed t-set and nothing else.
bool is_full_star(const Hypergraph &h, int t);

} // namespace codegree
