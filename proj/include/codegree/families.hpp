#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "codegree/hypergraph.hpp"
#include "codegree/numeric.hpp"

namespace codegree {

enum class FamilyKind { Empty, Complete, Star, B, HiltonMilner, A, Fano, FromFile };

/// Symbolic description of a named construction on [n].
///
///   Star(t)          all k-sets containing [t]
///   B(s)             all k-sets meeting [s]
///   HiltonMilner(t)  {F : [t] in F, F meets {t+1..k+1}} + {[k+1] - i : i in [t]}
///   A(t)             all k-sets with |F & [t+2]| >= t+1
///   Fano             the 7 lines of PG(2,2) on [7], k = 3
///
/// `param` carries t or s.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Empty;
  int n = 0;
  int k = 0;
  int param = 0;
  std::filesystem::path path;

  static FamilySpec empty(int n, int k) { return {FamilyKind::Empty, n, k, 0, {}}; }
  static FamilySpec complete(int n, int k) { return {FamilyKind::Complete, n, k, 0, {}}; }
  static FamilySpec star(int n, int k, int t) { return {FamilyKind::Star, n, k, t, {}}; }
  static FamilySpec b(int n, int k, int s) { return {FamilyKind::B, n, k, s, {}}; }
  static FamilySpec hilton_milner(int n, int k, int t) {
    return {FamilyKind::HiltonMilner, n, k, t, {}};
  }
  static FamilySpec a(int n, int k, int t) { return {FamilyKind::A, n, k, t, {}}; }
  static FamilySpec fano() { return {FamilyKind::Fano, 7, 3, 0, {}}; }
  static FamilySpec from_file(std::filesystem::path p) {
    return {FamilyKind::FromFile, 0, 0, 0, std::move(p)};
  }

  /// Throws ParameterError when the kind's parameter constraints fail.
  void validate() const;

  /// e.g. "star(n=7,k=3,t=1)".
  std::string describe() const;
};

/// Throws ParameterError on invalid specs or families too large to enumerate.
Hypergraph build(const FamilySpec &spec);

/// C(n-t, k-t) * (t + (n-k+1)(k-t)). Requires 1 <= t <= k < n.
BigInt co2_star_closed(int n, int k, int t);

/// s^2 C(n-s, k-1) + (n-k+1)^2 (C(n, k-1) - C(n-s, k-1)). Requires 1 <= s <= n, k < n.
BigInt co2_B_closed(int n, int k, int s);

struct FamilySize {
  std::uint64_t count = 0;
  /// For A and HiltonMilner: count over the large-n main term
  /// (t+2) C(n, k-t-1) resp. (k-t+1) C(n, k-t-1).
  std::optional<Rational> main_term_ratio;
};

/// Counts by construction.
FamilySize family_size(const FamilySpec &spec);

} // namespace codegree
