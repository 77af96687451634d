#include <doctest.h>

#include <random>

#include "codegree/bounds.hpp"
#include "codegree/core.hpp"
#include "codegree/errors.hpp"
#include "codegree/families.hpp"
#include "support/oracles.hpp"

using namespace codegree;

namespace {

// Bey's right-hand side evaluated with plain fractions over unsigned
// __int128, kept as numerator / denominator.
Rational bey_oracle(int n, int k, int ell, unsigned long long m) {
  const auto c = [](int a, int b) { return BigInt(to_big(oracle::choose(a, b))); };
  const BigInt lin = ell == 0 ? BigInt(0) : c(k - 1, ell - 1) * c(n - ell - 1, k - ell);
  return Rational(c(k, ell) * c(k - 1, ell) * m * m + c(n - 1, ell) * lin * m, c(n - 1, ell));
}

const NamedBound &find(const BoundReport &r, const std::string &name) {
  for (const auto &b : r.bounds)
    if (b.name == name)
      return b;
  FAIL("missing bound " << name);
  throw std::logic_error("unreachable");
}

bool has(const BoundReport &r, const std::string &name) {
  return std::any_of(r.bounds.begin(), r.bounds.end(),
                     [&](const NamedBound &b) { return b.name == name; });
}

} // namespace

TEST_CASE("bey_rhs examples") {
  CHECK(to_string(bey_rhs(3, 2, 1, 3)) == "12");
  CHECK(to_string(bey_rhs(7, 3, 2, 15)) == "165");
  CHECK(to_string(bey_rhs(5, 3, 2, 1)) == "9/2");
  CHECK(to_string(bey_rhs(7, 3, 2, 0)) == "0");
  CHECK_THROWS_AS(bey_rhs(5, 3, 4, 1), ParameterError);
  CHECK_THROWS_AS(bey_rhs(5, 3, 2, -1), ParameterError);
  for (int n = 3; n <= 12; ++n)
    for (int k = 2; k < n; ++k)
      for (int ell = 0; ell <= k; ++ell)
        for (unsigned long long m : {0ULL, 1ULL, 7ULL, 100ULL})
          REQUIRE(bey_rhs(n, k, ell, BigInt(m)) == bey_oracle(n, k, ell, m));
}

TEST_CASE("check_bey examples") {
  const Hypergraph k4(4, 2, oracle::all_subsets(4, 2));
  const BoundReport r = check_bey(k4, 1);
  CHECK(r.lhs == 36);
  CHECK(to_string(r.bey_rhs) == "36");
  CHECK(to_string(r.bey_slack) == "0");
  const BoundReport f = check_bey(build(FamilySpec::fano()), 2);
  CHECK(f.lhs == 21);
  CHECK(to_string(f.bey_rhs) == "329/5");
  CHECK(to_string(f.bey_slack) == "224/5");
  CHECK_THROWS_AS(check_bey(k4, 3), ParameterError);
}

TEST_CASE("Bey holds on random hypergraphs at every ell") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 1500; ++trial) {
    const int k = oracle::uniform(rng, 2, 5);
    const int n = oracle::uniform(rng, k + 1, 12);
    const Hypergraph h = oracle::random_dense(rng, n, k, oracle::uniform(rng, 1, 9), 10);
    for (int ell = 0; ell <= k; ++ell) {
      const BoundReport r = check_bey(h, ell);
      REQUIRE(r.bey_slack >= 0);
      REQUIRE(r.lhs == to_big(oracle::square_sum(h, ell)));
    }
  }
}

TEST_CASE("Bey is tight for complete hypergraphs and full stars") {
  for (int n = 3; n <= 10; ++n)
    for (int k = 2; k <= std::min(4, n - 1); ++k) {
      REQUIRE(check_bey(build(FamilySpec::complete(n, k)), k - 1).bey_slack == 0);
      REQUIRE(check_bey(build(FamilySpec::star(n, k, 1)), k - 1).bey_slack == 0);
    }
}

TEST_CASE("l2 star bounds") {
  CHECK(ekr_l2_bound(6, 3) == 90);
  CHECK(ekr_l2_bound(7, 3) == 165);
  CHECK(t_star_l2_bound(7, 3, 1) == 165);
  CHECK(t_star_l2_bound(9, 4, 4) == 4);
  for (int n = 4; n <= 14; ++n)
    for (int k = 2; k < n; ++k)
      for (int t = 1; t <= k; ++t)
        REQUIRE(t_star_l2_bound(n, k, t) == co2_star_closed(n, k, t));
  CHECK_THROWS_AS(t_star_l2_bound(7, 3, 0), ParameterError);
}

TEST_CASE("l1 registry") {
  CHECK(to_string(l1_bound(L1Bound::EKR, {7, 3}).value) == "15");
  CHECK(l1_bound(L1Bound::EKR, {7, 3}).valid);
  CHECK_FALSE(l1_bound(L1Bound::EKR, {5, 3}).valid);
  const auto hm = l1_bound(L1Bound::HiltonMilner, {7, 3});
  CHECK(to_string(hm.value) == "13");
  CHECK(hm.valid);
  CHECK_FALSE(l1_bound(L1Bound::HiltonMilner, {6, 3}).valid);
  const auto tekr = l1_bound(L1Bound::TIntersectingEKR, {12, 4, 2});
  CHECK(to_string(tekr.value) == "45");
  CHECK(tekr.valid);
  CHECK_FALSE(l1_bound(L1Bound::TIntersectingEKR, {8, 4, 2}).valid);
  const auto emc = l1_bound(L1Bound::EMC, {13, 3, 1, 2});
  CHECK(to_string(emc.value) == "121");
  CHECK(emc.valid);
  CHECK_FALSE(l1_bound(L1Bound::EMC, {12, 3, 1, 2}).valid);
  const auto thm = l1_bound(L1Bound::TIntersectingHM, {10, 4, 2});
  CHECK(BigInt(to_string(thm.value)) == std::max(a_family_count(10, 4, 2), hm_family_count(10, 4, 2)));
  CHECK(thm.valid);
  const auto fk = l1_bound(L1Bound::FranklKupavskii, {0, 3, 1, 2, 3});
  CHECK(fk.n == 13);
  CHECK(fk.valid);
  // C(13,3) - C(11,3) - (0/3) C(8,2)
  CHECK(to_string(fk.value) == "121");
  const auto fk4 = l1_bound(L1Bound::FranklKupavskii, {0, 3, 1, 2, 4});
  CHECK(fk4.n == 15);
  // C(15,3) - C(13,3) - (1/4) C(10,2) = 455 - 286 - 45/4
  CHECK(to_string(fk4.value) == "631/4");
  CHECK(parse_l1_bound("t-hm") == L1Bound::TIntersectingHM);
  CHECK(l1_bound_name(L1Bound::EMC) == "emc");
  CHECK_THROWS_AS(parse_l1_bound("lovasz"), ParameterError);
}

TEST_CASE("bound report on concrete families") {
  const BoundReport star = bound_report(build(FamilySpec::star(7, 3, 1)));
  CHECK(star.lhs == 165);
  CHECK(find(star, "ekr-l2").valid);
  CHECK(find(star, "ekr-l2").slack == 0);
  CHECK(find(star, "ekr").slack == 0);
  CHECK_FALSE(find(star, "hm").valid);
  CHECK_FALSE(has(star, "t-ekr"));

  const BoundReport hm = bound_report(build(FamilySpec::hilton_milner(7, 3, 1)));
  CHECK(find(hm, "hm").valid);
  CHECK(find(hm, "hm").slack == 0);
  CHECK(to_string(find(hm, "ekr-l2").slack) == "42");

  const BoundReport two = bound_report(build(FamilySpec::star(10, 4, 2)));
  CHECK(has(two, "t-star-l2"));
  CHECK(to_string(find(two, "t-star-l2").value) == "448");
  CHECK(find(two, "t-star-l2").slack == 0);
  CHECK(to_string(find(two, "t-ekr").value) == "28");

  const BoundReport b = bound_report(build(FamilySpec::b(13, 3, 2)));
  CHECK(find(b, "emc").valid);
  CHECK(find(b, "emc").slack == 0);
  CHECK_FALSE(find(b, "ekr-l2").valid);
}

TEST_CASE("density bounds") {
  CHECK(to_string(sigma_upper(Rational(3, 4), 3)) == "11/16");
  CHECK(to_string(sigma_upper(Rational(2, 3), 3)) == "16/27");
  CHECK(to_string(sigma_upper(1, 3)) == "1");
  CHECK(to_string(de_caen_pi(4, 3)) == "2/3");
  CHECK_THROWS_AS(sigma_upper(0, 3), ParameterError);
  CHECK_THROWS_AS(sigma_upper(Rational(3, 2), 3), ParameterError);
  CHECK_THROWS_AS(de_caen_pi(3, 3), ParameterError);
  for (int k = 2; k <= 11; ++k)
    for (int t = k + 1; t <= 12; ++t)
      REQUIRE(sigma_Kt(t, k) == sigma_upper(de_caen_pi(t, k), k));
}
