#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "codegree/hypergraph.hpp"
#include "codegree/numeric.hpp"

namespace codegree {

/// Bey's bound on the sum of squared ell-set codegrees of a k-graph with m
/// edges on n vertices:
///
///   C(k,l) C(k-1,l) / C(n-1,l) * m^2  +  C(k-1,l-1) C(n-l-1,k-l) * m
///
/// Requires 0 <= ell <= k < n and m >= 0.
Rational bey_rhs(int n, int k, int ell, const BigInt &m);

struct NamedBound {
  std::string name;
  /// "co2" or "edges": what the bound caps.
  std::string quantity;
  Rational value;
  /// The instance satisfies the bound's hypotheses.
  bool valid = false;
  std::string hypothesis;
  /// value - achieved; never negative when valid.
  Rational slack;
};

struct BoundReport {
  int n = 0;
  int k = 0;
  int ell = 0;
  std::uint64_t edge_count = 0;
  /// Sum of d(S)^2 over ell-subsets; co2 when ell = k-1.
  BigInt lhs;
  Rational bey_rhs;
  Rational bey_slack;
  std::vector<NamedBound> bounds;
};

/// Evaluates Bey's inequality on h. Throws InvariantViolation if it fails,
/// which can only mean a bug here. Throws ParameterError unless 0 <= ell <= k.
BoundReport check_bey(const Hypergraph &h, int ell);

/// check_bey at ell = k-1 plus every named bound that applies to h, with
/// validity flags and slack.
BoundReport bound_report(const Hypergraph &h);

/// C(n-1,k-1) (1 + (n-k+1)(k-1)).
BigInt ekr_l2_bound(int n, int k);
/// C(n-t,k-t) (t + (n-k+1)(k-t)), the co2 of the t-star; equals
/// ekr_l2_bound at t = 1. Throws ParameterError unless 1 <= t <= k.
BigInt t_star_l2_bound(int n, int k, int t);

// ---- classical (edge count) bounds -----------------------------------------

enum class L1Bound {
  EKR,              // C(n-1,k-1), n >= 2k
  TIntersectingEKR, // C(n-t,k-t), n >= (t+1)(k-t+1)
  HiltonMilner,     // C(n-1,k-1) - C(n-k-1,k-1) + 1, n > 2k
  TIntersectingHM,  // max(|A(n,k,t)|, |H(n,k,t)|), n > (t+1)(k-t+1)
  EMC,              // C(n,k) - C(n-s,k), n >= (2s+1)k - s
  FranklKupavskii,  // C(n,k) - C(n-s,k) - (u-s-1)/u C(n-s-k,k-1), n = (u+s-1)(k-1)+s+k
};

struct L1Params {
  int n = 0;
  int k = 0;
  int t = 1;
  int s = 1;
  int u = 0;
};

struct L1Result {
  Rational value;
  bool valid = false;
  std::string hypothesis;
  /// The n the value was computed at (derived from u for Frankl-Kupavskii).
  int n = 0;
};

/// Out-of-hypothesis parameters yield valid = false with the value anyway.
/// Throws ParameterError only when the formula itself is undefined.
L1Result l1_bound(L1Bound which, const L1Params &params);

/// "ekr", "t-ekr", "hm", "t-hm", "emc", "fk". Throws ParameterError.
L1Bound parse_l1_bound(std::string_view name);
std::string_view l1_bound_name(L1Bound which);

/// Exact |A(n,k,t)| and |H(n,k,t)| by counting formula.
BigInt a_family_count(int n, int k, int t);
BigInt hm_family_count(int n, int k, int t);

// ---- densities -------------------------------------------------------------

/// pi (pi/k + 1 - 1/k). Requires 0 < pi <= 1 and k >= 2.
Rational sigma_upper(const Rational &pi, int k);

/// de Caen: 1 - 1/C(t-1,k-1). Requires t > k >= 2.
Rational de_caen_pi(int t, int k);

/// (1 - 1/C(t-1,k-1)) (1 - 1/(k C(t-1,k-1))). Requires t > k >= 2.
Rational sigma_Kt(int t, int k);

} // namespace codegree
