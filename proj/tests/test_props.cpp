#include <doctest.h>

#include <random>

#include "codegree/errors.hpp"
#include "codegree/families.hpp"
#include "codegree/props.hpp"
#include "support/oracles.hpp"

using namespace codegree;

namespace {

constexpr PatternKind kKinds[] = {PatternKind::BergePath,   PatternKind::BergeCycle,
                                  PatternKind::MinimalPath, PatternKind::MinimalCycle,
                                  PatternKind::LinearPath,  PatternKind::LinearCycle};

bool is_cycle(PatternKind kind) {
  return kind == PatternKind::BergeCycle || kind == PatternKind::MinimalCycle ||
         kind == PatternKind::LinearCycle;
}

std::vector<VertexSet> edge_list(const Hypergraph &h) { return {h.edges().begin(), h.edges().end()}; }

Hypergraph hg(int n, int k, std::initializer_list<std::initializer_list<int>> edges) {
  std::vector<VertexSet> out;
  for (auto e : edges)
    out.push_back(VertexSet::of(e));
  return Hypergraph(n, k, out);
}

} // namespace

TEST_CASE("intersection predicates") {
  const Hypergraph star = build(FamilySpec::star(7, 3, 1));
  CHECK(is_t_intersecting(star, 1));
  CHECK_FALSE(is_t_intersecting(star, 2));
  CHECK(common_intersection(star) == VertexSet::of({1}));
  CHECK(is_d_wise_t_intersecting(star, 3, 1));
  CHECK_FALSE(is_d_wise_t_intersecting(build(FamilySpec::fano()), 3, 1));
  CHECK(is_t_intersecting(Hypergraph(5, 3), 4));
  CHECK_THROWS_AS(common_intersection(Hypergraph(5, 3)), ParameterError);
  CHECK_THROWS_AS(is_d_wise_t_intersecting(star, 1, 1), ParameterError);
  // Two edges, d = 3: the two must share t vertices.
  const Hypergraph two = hg(5, 3, {{1, 2, 3}, {1, 4, 5}});
  CHECK(is_d_wise_t_intersecting(two, 3, 1));
  CHECK_FALSE(is_d_wise_t_intersecting(two, 3, 2));
}

TEST_CASE("intersection predicates agree with oracles") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = oracle::uniform(rng, 3, 9);
    const int k = oracle::uniform(rng, 2, n - 1);
    // Sample small families near a star so the predicates are often true.
    std::vector<VertexSet> edges;
    for (VertexSet e : oracle::all_subsets(n, k))
      if (e.contains(1) ? rng() % 3 == 0 : rng() % 12 == 0)
        edges.push_back(e);
    if (edges.size() > 14)
      edges.resize(14);
    const Hypergraph h(n, k, edges);
    const auto list = edge_list(h);
    for (int t = 1; t <= k; ++t) {
      REQUIRE(is_t_intersecting(h, t) == oracle::t_intersecting(list, t));
      for (int d = 2; d <= 4; ++d)
        REQUIRE(is_d_wise_t_intersecting(h, d, t) == oracle::d_wise(list, d, t));
    }
  }
}

TEST_CASE("matching and covering numbers agree with oracles") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = oracle::uniform(rng, 4, 12);
    const int k = oracle::uniform(rng, 2, std::min(4, n - 1));
    const Hypergraph h = oracle::random_hypergraph(rng, n, k, 16);
    const auto list = edge_list(h);
    const int nu = matching_number(h);
    const int tau = covering_number(h);
    REQUIRE(nu == oracle::matching_number(list));
    REQUIRE(tau == oracle::covering_number(list, n));
    // nu <= tau <= k nu
    REQUIRE(nu <= tau);
    REQUIRE(tau <= k * nu);
    for (int s = -1; s <= nu + 1; ++s)
      REQUIRE(has_matching_larger_than(h.edges(), s) == (nu > s));

    const Witness w = maximum_matching(h.edges());
    REQUIRE(static_cast<int>(w.edges.size()) == nu);
    for (std::size_t i = 0; i < w.edges.size(); ++i)
      for (std::size_t j = i + 1; j < w.edges.size(); ++j)
        REQUIRE_FALSE(h[w.edges[i]].intersects(h[w.edges[j]]));
    const VertexSet cover = minimum_cover(h.edges());
    REQUIRE(cover.size() == tau);
    for (VertexSet e : h.edges())
      REQUIRE(e.intersects(cover));
  }
}

TEST_CASE("B(n,k,s) has matching and covering number s") {
  CHECK(matching_number(build(FamilySpec::b(12, 3, 2))) == 2);
  CHECK(covering_number(build(FamilySpec::b(12, 3, 2))) == 2);
  CHECK(matching_number(Hypergraph(5, 2)) == 0);
  CHECK(covering_number(Hypergraph(5, 2)) == 0);
}

TEST_CASE("pattern examples") {
  const Hypergraph tri = hg(6, 3, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}});
  CHECK(contains_pattern(tri, {PatternKind::LinearCycle, 3}));
  CHECK(contains_pattern(tri, {PatternKind::MinimalCycle, 3}));
  CHECK(contains_pattern(tri, {PatternKind::BergeCycle, 3}));
  // Three edges through one vertex: a Berge triangle needs distinct
  // connectors, and the minimal cycle forbids the common vertex.
  const Hypergraph fan = hg(7, 3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}});
  CHECK_FALSE(contains_pattern(fan, {PatternKind::MinimalCycle, 3}));
  CHECK_FALSE(contains_pattern(fan, {PatternKind::BergeCycle, 3}));
  CHECK(contains_pattern(fan, {PatternKind::BergePath, 3}) == false);
  const Hypergraph path = hg(7, 3, {{1, 2, 3}, {3, 4, 5}, {5, 6, 7}});
  CHECK(contains_pattern(path, {PatternKind::LinearPath, 3}));
  CHECK(is_pattern_free(path, {PatternKind::BergeCycle, 3}));
  const auto w = find_pattern(path, {PatternKind::LinearPath, 3});
  REQUIRE(w);
  CHECK(w->role == Witness::Role::Pattern);
  CHECK(w->edges == std::vector<std::size_t>{0, 1, 2});
  CHECK(is_pattern_free(build(FamilySpec::star(7, 3, 1)), {PatternKind::MinimalCycle, 3}));
}

TEST_CASE("pattern feasibility") {
  CHECK_THROWS_AS(contains_pattern(Hypergraph(6, 3), {PatternKind::LinearPath, 3}), ParameterError);
  CHECK_THROWS_AS(contains_pattern(Hypergraph(5, 3), {PatternKind::LinearCycle, 3}), ParameterError);
  CHECK_THROWS_AS(contains_pattern(Hypergraph(9, 3), {PatternKind::MinimalCycle, 2}), ParameterError);
  CHECK_THROWS_AS(contains_pattern(Hypergraph(9, 3), {PatternKind::MinimalPath, 1}), ParameterError);
  CHECK_NOTHROW(contains_pattern(Hypergraph(6, 3), {PatternKind::LinearCycle, 3}));
  CHECK_NOTHROW(contains_pattern(Hypergraph(5, 3), {PatternKind::MinimalCycle, 3}));
  CHECK(parse_pattern_kind("linear-cycle") == PatternKind::LinearCycle);
  CHECK_THROWS_AS(parse_pattern_kind("loose-cycle"), ParameterError);
  CHECK(PatternSpec{PatternKind::BergePath, 4}.describe() == "berge-path:4");
}

// Patterns on small random families against all s-subsets in all orders,
// plus the witness being the lexicographically first realizing tuple.
TEST_CASE("pattern detectors agree with the naive oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = oracle::uniform(rng, 5, 9);
    const int k = oracle::uniform(rng, 2, 3);
    const Hypergraph h = oracle::random_hypergraph(rng, n, k, 9);
    const auto list = edge_list(h);
    for (PatternKind kind : kKinds)
      for (int len = is_cycle(kind) ? 3 : 2; len <= 4; ++len) {
        const PatternSpec p{kind, len};
        if (p.min_vertices(k) > n)
          continue;
        const auto w = find_pattern(h, p);
        REQUIRE(w.has_value() == oracle::contains_pattern(list, kind, len));
        if (!w)
          continue;
        std::vector<VertexSet> seq;
        for (std::size_t i : w->edges)
          seq.push_back(h[i]);
        REQUIRE(oracle::detail::sequence_realizes(seq, kind));
        for (std::size_t anchor : w->edges)
          REQUIRE(PatternMatcher(p).occurs_through(h.edges(), anchor));
      }
  }
}

TEST_CASE("occurs_through matches removal") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = oracle::uniform(rng, 6, 8);
    const Hypergraph h = oracle::random_hypergraph(rng, n, 3, 10);
    for (PatternKind kind : kKinds) {
      const PatternSpec p{kind, 3};
      if (p.min_vertices(3) > n)
        continue;
      const PatternMatcher m(p);
      for (std::size_t a = 0; a < h.size(); ++a) {
        // Some realization uses edge a iff removing a kills a realization
        // or some realization still exists that uses a; check directly.
        bool uses = false;
        const auto list = edge_list(h);
        std::vector<VertexSet> others = list;
        others.erase(others.begin() + static_cast<std::ptrdiff_t>(a));
        // Oracle: a pattern through a exists iff some 2-subset of others
        // with a, in some order, realizes it.
        for (std::size_t i = 0; i < others.size() && !uses; ++i)
          for (std::size_t j = 0; j < others.size() && !uses; ++j) {
            if (i == j)
              continue;
            std::vector<VertexSet> trio{list[a], others[i], others[j]};
            std::sort(trio.begin(), trio.end());
            do {
              uses = oracle::detail::sequence_realizes(trio, kind);
            } while (!uses && std::next_permutation(trio.begin(), trio.end()));
          }
        REQUIRE(m.occurs_through(h.edges(), a) == uses);
      }
    }
  }
}

// Linear cycle => minimal cycle => Berge cycle, same for paths.
TEST_CASE("pattern implications") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = oracle::uniform(rng, 7, 10);
    const int k = oracle::uniform(rng, 2, 3);
    const Hypergraph h = oracle::random_hypergraph(rng, n, k, 12);
    for (int len = 3; len <= 4; ++len) {
      const auto has = [&](PatternKind kind) {
        const PatternSpec p{kind, len};
        return p.min_vertices(k) <= n && contains_pattern(h, p);
      };
      if (has(PatternKind::LinearCycle))
        REQUIRE(has(PatternKind::MinimalCycle));
      if (has(PatternKind::MinimalCycle))
        REQUIRE(has(PatternKind::BergeCycle));
      if (has(PatternKind::LinearPath))
        REQUIRE(has(PatternKind::MinimalPath));
      if (has(PatternKind::MinimalPath))
        REQUIRE(has(PatternKind::BergePath));
    }
  }
}

TEST_CASE("distinct representatives") {
  const std::vector<VertexSet> ok{VertexSet::of({1, 2}), VertexSet::of({2}), VertexSet::of({1, 3})};
  CHECK(has_distinct_representatives(ok));
  const std::vector<VertexSet> bad{VertexSet::of({1, 2}), VertexSet::of({1, 2}), VertexSet::of({1, 2})};
  CHECK_FALSE(has_distinct_representatives(bad));
}
