#include <doctest.h>

#include <functional>

#include "codegree/bounds.hpp"
#include "codegree/core.hpp"
#include "codegree/errors.hpp"
#include "codegree/families.hpp"
#include "codegree/props.hpp"
#include "support/oracles.hpp"

using namespace codegree;

namespace {

Hypergraph filtered(int n, int k, const std::function<bool(VertexSet)> &keep) {
  std::vector<VertexSet> edges;
  for (VertexSet e : oracle::all_subsets(n, k))
    if (keep(e))
      edges.push_back(e);
  return Hypergraph(n, k, edges);
}

std::string s(Wide w) { return to_string(w); }

} // namespace

TEST_CASE("named families match their defining predicates") {
  for (int n = 3; n <= 11; ++n)
    for (int k = 2; k < n; ++k) {
      for (int t = 1; t <= k; ++t)
        REQUIRE(build(FamilySpec::star(n, k, t)) ==
                filtered(n, k, [&](VertexSet e) { return VertexSet::first(t).subset_of(e); }));
      for (int sz = 1; sz <= n; ++sz)
        REQUIRE(build(FamilySpec::b(n, k, sz)) ==
                filtered(n, k, [&](VertexSet e) { return e.intersects(VertexSet::first(sz)); }));
      for (int t = 1; t < k; ++t) {
        if (n >= k + 1)
          REQUIRE(build(FamilySpec::hilton_milner(n, k, t)) ==
                  filtered(n, k, [&](VertexSet e) {
                    const VertexSet head = VertexSet::first(t);
                    const VertexSet rest = VertexSet::interval(t + 1, k + 1);
                    if (head.subset_of(e) && e.intersects(rest))
                      return true;
                    for (int i = 1; i <= t; ++i)
                      if (e == VertexSet::first(k + 1).without(i))
                        return true;
                    return false;
                  }));
        if (n >= t + 2)
          REQUIRE(build(FamilySpec::a(n, k, t)) == filtered(n, k, [&](VertexSet e) {
                    return overlap(e, VertexSet::first(t + 2)) >= t + 1;
                  }));
      }
      REQUIRE(build(FamilySpec::complete(n, k)).size() == binom64(n, k));
      REQUIRE(build(FamilySpec::empty(n, k)).empty());
    }
}

TEST_CASE("named family sizes and co2 examples") {
  CHECK(build(FamilySpec::star(7, 3, 1)).size() == 15);
  CHECK(s(co2(build(FamilySpec::star(7, 3, 1)))) == "165");
  CHECK(build(FamilySpec::b(7, 3, 2)).size() == 25);
  CHECK(s(co2(build(FamilySpec::b(7, 3, 2)))) == "315");
  CHECK(build(FamilySpec::hilton_milner(7, 3, 1)).size() == 13);
  CHECK(build(FamilySpec::a(7, 3, 1)).size() == 13);
  CHECK(co2_star_closed(7, 3, 1) == 165);
  CHECK(co2_B_closed(7, 3, 2) == 315);
}

TEST_CASE("family counts agree with counting formulas") {
  for (int n = 4; n <= 13; ++n)
    for (int k = 2; k < n; ++k)
      for (int t = 1; t < k; ++t) {
        if (n >= t + 2)
          REQUIRE(BigInt(build(FamilySpec::a(n, k, t)).size()) == a_family_count(n, k, t));
        // The counting formula for H assumes the two parts do not overlap,
        // which needs n > k + 1 when t = k - 1.
        if (n >= k + 2)
          REQUIRE(BigInt(build(FamilySpec::hilton_milner(n, k, t)).size()) ==
                  hm_family_count(n, k, t));
      }
}

TEST_CASE("Fano plane") {
  const Hypergraph f = build(FamilySpec::fano());
  CHECK(f.size() == 7);
  CHECK(s(co2(f)) == "21");
  CHECK(is_t_intersecting(f, 1));
  CHECK(common_intersection(f).empty());
  CHECK(covering_number(f) == 3);
  CHECK(matching_number(f) == 1);
  for (VertexSet pair : oracle::all_subsets(7, 2))
    REQUIRE(codegree::codegree(f, pair) == 1);
  CHECK(FamilySpec::fano().describe() == "fano(n=7,k=3)");
}

TEST_CASE("Hilton-Milner and A families are nontrivial t-intersecting") {
  for (int n = 6; n <= 12; ++n)
    for (int k = 3; k <= 5 && 2 * k < n; ++k)
      for (int t = 1; t < k; ++t) {
        const Hypergraph h = build(FamilySpec::hilton_milner(n, k, t));
        REQUIRE(is_t_intersecting(h, t));
        REQUIRE(common_intersection(h).size() < t);
        if (n >= t + 2) {
          const Hypergraph a = build(FamilySpec::a(n, k, t));
          REQUIRE(is_t_intersecting(a, t));
          REQUIRE(common_intersection(a).size() < t);
        }
      }
}

TEST_CASE("family size reports main-term ratios") {
  const FamilySize a = family_size(FamilySpec::a(7, 3, 1));
  CHECK(a.count == 13);
  REQUIRE(a.main_term_ratio);
  CHECK(to_string(*a.main_term_ratio) == "13/21");
  const FamilySize hm = family_size(FamilySpec::hilton_milner(7, 3, 1));
  CHECK(to_string(*hm.main_term_ratio) == "13/21");
  CHECK_FALSE(family_size(FamilySpec::star(7, 3, 1)).main_term_ratio);
}

TEST_CASE("family specs reject bad parameters") {
  CHECK_THROWS_AS(build(FamilySpec::star(7, 3, 0)), ParameterError);
  CHECK_THROWS_AS(build(FamilySpec::star(7, 3, 4)), ParameterError);
  CHECK_THROWS_AS(build(FamilySpec::b(7, 3, 8)), ParameterError);
  CHECK_THROWS_AS(build(FamilySpec::hilton_milner(7, 3, 3)), ParameterError);
  CHECK_THROWS_AS(build(FamilySpec::a(7, 3, 3)), ParameterError);
  CHECK_THROWS_AS(build(FamilySpec::complete(3, 3)), ParameterError);
  CHECK_THROWS_AS(build(FamilySpec::complete(64, 32)), ParameterError);
  CHECK_THROWS_AS(co2_star_closed(7, 3, 0), ParameterError);
  CHECK(FamilySpec::star(7, 3, 1).describe() == "star(n=7,k=3,t=1)");
  CHECK(FamilySpec::b(7, 3, 2).describe() == "b(n=7,k=3,s=2)");
}
