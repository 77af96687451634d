#include "codegree/bounds.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "codegree/core.hpp"
#include "codegree/errors.hpp"
#include "codegree/props.hpp"

namespace codegree {

namespace {

std::string dims(int n, int k) {
  return "n=" + std::to_string(n) + ", k=" + std::to_string(k);
}

void require_nk(int n, int k) {
  if (k < 1 || n <= k)
    throw ParameterError("need 1 <= k < n, got " + dims(n, k));
}

} // namespace

Rational bey_rhs(int n, int k, int ell, const BigInt &m) {
  if (ell < 0 || ell > k || k >= n)
    throw ParameterError("bey_rhs needs 0 <= ell <= k < n");
  if (m < 0)
    throw ParameterError("bey_rhs needs m >= 0");
  const Rational quadratic(binom(k, ell) * binom(k - 1, ell), binom(n - 1, ell));
  const BigInt linear = binom(k - 1, ell - 1) * binom(n - ell - 1, k - ell);
  return quadratic * m * m + Rational(linear * m);
}

BoundReport check_bey(const Hypergraph &h, int ell) {
  if (ell < 0 || ell > h.k())
    throw ParameterError("check_bey needs 0 <= ell <= k");
  BoundReport r;
  r.n = h.n();
  r.k = h.k();
  r.ell = ell;
  r.edge_count = h.size();
  r.lhs = to_big(codegree_square_sum(h, ell));
  r.bey_rhs = bey_rhs(h.n(), h.k(), ell, BigInt(r.edge_count));
  r.bey_slack = r.bey_rhs - Rational(r.lhs);
  if (r.bey_slack < 0)
    throw InvariantViolation("Bey inequality violated: lhs " + r.lhs.str() + " > rhs " +
                             to_string(r.bey_rhs));
  return r;
}

namespace {

NamedBound named(std::string name, std::string quantity, Rational value, bool valid,
                 std::string hypothesis, const BigInt &achieved) {
  NamedBound b{std::move(name), std::move(quantity), value, valid, std::move(hypothesis), {}};
  b.slack = value - Rational(achieved);
  return b;
}

} // namespace

BoundReport bound_report(const Hypergraph &h) {
  BoundReport r = check_bey(h, h.k() - 1);
  const int n = h.n();
  const int k = h.k();
  const BigInt m = r.edge_count;
  const BigInt &co2_value = r.lhs;

  const bool intersecting = is_t_intersecting(h, 1);
  r.bounds.push_back(named("ekr-l2", "co2", Rational(ekr_l2_bound(n, k)),
                           intersecting && n >= 2 * k, "intersecting, n >= 2k", co2_value));
  r.bounds.push_back(named("ekr", "edges", Rational(binom(n - 1, k - 1)),
                           intersecting && n >= 2 * k, "intersecting, n >= 2k", m));

  if (h.size() >= 2) {
    int t = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = i + 1; j < h.size(); ++j)
        t = std::min(t, overlap(h[i], h[j]));
    if (t >= 2 && t < k) {
      r.bounds.push_back(named("t-star-l2", "co2", Rational(t_star_l2_bound(n, k, t)), false,
                               "t-intersecting with t=" + std::to_string(t) +
                                   ", n >= n0(k,t) (unspecified)",
                               co2_value));
      const auto tekr = l1_bound(L1Bound::TIntersectingEKR, {n, k, t, 1, 0});
      r.bounds.push_back(named("t-ekr", "edges", tekr.value, tekr.valid,
                               "t-intersecting with t=" + std::to_string(t) + ", " +
                                   tekr.hypothesis,
                               m));
    }
    const bool nontrivial = intersecting && common_intersection(h).empty();
    const auto hm = l1_bound(L1Bound::HiltonMilner, {n, k, 1, 1, 0});
    r.bounds.push_back(named("hm", "edges", hm.value, nontrivial && hm.valid,
                             "nontrivial intersecting, " + hm.hypothesis, m));
  }

  if (!h.empty()) {
    const int s = matching_number(h);
    const auto emc = l1_bound(L1Bound::EMC, {n, k, 1, s, 0});
    r.bounds.push_back(named("emc", "edges", emc.value, emc.valid,
                             "matching number s=" + std::to_string(s) + ", " + emc.hypothesis, m));
  }
  return r;
}

BigInt ekr_l2_bound(int n, int k) {
  require_nk(n, k);
  return binom(n - 1, k - 1) * (1 + BigInt(n - k + 1) * (k - 1));
}

BigInt t_star_l2_bound(int n, int k, int t) {
  require_nk(n, k);
  if (t < 1 || t > k)
    throw ParameterError("t_star_l2_bound needs 1 <= t <= k");
  return binom(n - t, k - t) * (t + BigInt(n - k + 1) * (k - t));
}

BigInt a_family_count(int n, int k, int t) {
  return (t + 2) * binom(n - t - 2, k - t - 1) + binom(n - t - 2, k - t - 2);
}

BigInt hm_family_count(int n, int k, int t) {
  return binom(n - t, k - t) - binom(n - k - 1, k - t) + t;
}

L1Result l1_bound(L1Bound which, const L1Params &p) {
  L1Result r;
  r.n = p.n;
  switch (which) {
  case L1Bound::EKR:
    require_nk(p.n, p.k);
    r.value = Rational(binom(p.n - 1, p.k - 1));
    r.valid = p.n >= 2 * p.k;
    r.hypothesis = "n >= 2k";
    break;
  case L1Bound::TIntersectingEKR:
    require_nk(p.n, p.k);
    if (p.t < 1 || p.t > p.k)
      throw ParameterError("t-ekr needs 1 <= t <= k");
    r.value = Rational(binom(p.n - p.t, p.k - p.t));
    r.valid = p.t < p.k && p.n >= (p.t + 1) * (p.k - p.t + 1);
    r.hypothesis = "k > t, n >= (t+1)(k-t+1)";
    break;
  case L1Bound::HiltonMilner:
    require_nk(p.n, p.k);
    r.value = Rational(binom(p.n - 1, p.k - 1) - binom(p.n - p.k - 1, p.k - 1) + 1);
    r.valid = p.n > 2 * p.k;
    r.hypothesis = "n > 2k";
    break;
  case L1Bound::TIntersectingHM:
    require_nk(p.n, p.k);
    if (p.t < 1 || p.t >= p.k)
      throw ParameterError("t-hm needs 1 <= t < k");
    r.value = Rational(std::max(a_family_count(p.n, p.k, p.t), hm_family_count(p.n, p.k, p.t)));
    r.valid = p.n > (p.t + 1) * (p.k - p.t + 1);
    r.hypothesis = "n > (t+1)(k-t+1)";
    break;
  case L1Bound::EMC:
    require_nk(p.n, p.k);
    if (p.s < 0)
      throw ParameterError("emc needs s >= 0");
    r.value = Rational(binom(p.n, p.k) - binom(p.n - p.s, p.k));
    r.valid = p.n >= (2 * p.s + 1) * p.k - p.s;
    r.hypothesis = "n >= (2s+1)k - s";
    break;
  case L1Bound::FranklKupavskii: {
    if (p.u < 1 || p.k < 1 || p.s < 1)
      throw ParameterError("fk needs u, k, s >= 1");
    const int n = (p.u + p.s - 1) * (p.k - 1) + p.s + p.k;
    r.n = n;
    r.value = Rational(binom(n, p.k) - binom(n - p.s, p.k)) -
              Rational(BigInt(p.u - p.s - 1), BigInt(p.u)) * Rational(binom(n - p.s - p.k, p.k - 1));
    r.valid = p.s >= 2 && p.k >= 2 && p.u >= p.s + 1;
    r.hypothesis = "s, k >= 2, u >= s+1, n = (u+s-1)(k-1)+s+k, nu = s, tau >= s+1";
    break;
  }
  }
  return r;
}

namespace {
constexpr std::array<std::pair<L1Bound, std::string_view>, 6> kL1Names{{
    {L1Bound::EKR, "ekr"},
    {L1Bound::TIntersectingEKR, "t-ekr"},
    {L1Bound::HiltonMilner, "hm"},
    {L1Bound::TIntersectingHM, "t-hm"},
    {L1Bound::EMC, "emc"},
    {L1Bound::FranklKupavskii, "fk"},
}};
} // namespace

L1Bound parse_l1_bound(std::string_view name) {
  for (const auto &[b, n] : kL1Names)
    if (n == name)
      return b;
  throw ParameterError("unknown l1 bound '" + std::string(name) + "'");
}

std::string_view l1_bound_name(L1Bound which) {
  for (const auto &[b, n] : kL1Names)
    if (b == which)
      return n;
  return "?";
}

Rational sigma_upper(const Rational &pi, int k) {
  if (pi <= 0 || pi > 1)
    throw ParameterError("sigma_upper needs 0 < pi <= 1");
  if (k < 2)
    throw ParameterError("sigma_upper needs k >= 2");
  return pi * (pi / k + 1 - Rational(1, k));
}

Rational de_caen_pi(int t, int k) {
  if (!(t > k && k >= 2))
    throw ParameterError("de_caen_pi needs t > k >= 2");
  return 1 - Rational(BigInt(1), binom(t - 1, k - 1));
}

Rational sigma_Kt(int t, int k) {
  if (!(t > k && k >= 2))
    throw ParameterError("sigma_Kt needs t > k >= 2");
  const BigInt c = binom(t - 1, k - 1);
  return (1 - Rational(BigInt(1), c)) * (1 - Rational(BigInt(1), c * k));
}

} // namespace codegree
