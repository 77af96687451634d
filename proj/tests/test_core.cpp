#include <doctest.h>

#include <random>

#include "codegree/core.hpp"
#include "codegree/errors.hpp"
#include "codegree/subsets.hpp"
#include "codegree/text_format.hpp"
#include "support/oracles.hpp"

using namespace codegree;

namespace {
std::string s(Wide w) { return to_string(w); }
} // namespace

TEST_CASE("vertex sets use 1-based labels") {
  const VertexSet a = VertexSet::of({1, 3, 5});
  CHECK(a.size() == 3);
  CHECK(a.contains(1));
  CHECK_FALSE(a.contains(2));
  CHECK(a.bits() == 0b10101u);
  CHECK(a.max_vertex() == 5);
  CHECK(a.min_vertex() == 1);
  CHECK(to_string(a) == "{1,3,5}");
  CHECK(overlap(a, VertexSet::of({3, 4, 5})) == 2);
  CHECK(VertexSet::of({64}).within(64));
  CHECK_FALSE(VertexSet::of({8}).within(7));
  CHECK_THROWS_AS(VertexSet::of({0}), ParameterError);
  CHECK_THROWS_AS(VertexSet::of({65}), ParameterError);
}

TEST_CASE("binomials agree with an independent Pascal triangle") {
  for (int n = 0; n <= 64; ++n)
    for (int r = 0; r <= n; ++r)
      REQUIRE(to_wide(binom(n, r)) == oracle::choose(n, r));
  CHECK(binom(100, 50).str() == "100891344545564193334812497256");
  CHECK(binom(5, 7) == 0);
  CHECK(binom(5, -1) == 0);
}

TEST_CASE("rationals print in lowest terms") {
  CHECK(to_string(Rational(6, 8)) == "3/4");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(parse_rational("-3")) == "-3");
  CHECK_THROWS_AS(parse_rational("1/0"), ParameterError);
  CHECK_THROWS_AS(parse_rational("x"), ParameterError);
  CHECK(floor_nonneg(Rational(9, 2)) == 4);
}

TEST_CASE("colex rank is the position in enumeration order") {
  CHECK(rank_subset(VertexSet::of({2, 3}), 2) == 2);
  for (int n = 1; n <= 10; ++n)
    for (int ell = 0; ell <= n; ++ell) {
      const auto subsets = oracle::all_subsets(n, ell);
      std::uint64_t i = 0;
      for_each_subset(n, ell, [&](VertexSet x) {
        REQUIRE(x == subsets[i]);
        REQUIRE(rank_subset(x, ell) == i);
        REQUIRE(unrank_subset(i, ell, n) == x);
        ++i;
      });
      REQUIRE(i == subsets.size());
    }
}

TEST_CASE("rank round trip at n = 64") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int ell = oracle::uniform(rng, 1, 63);
    const VertexSet x = oracle::random_kset(rng, 64, ell);
    REQUIRE(unrank_subset(rank_subset(x, ell), ell, 64) == x);
  }
}

TEST_CASE("subsets of a base set") {
  std::vector<VertexSet> got;
  for_each_subset_of(VertexSet::of({2, 5, 9}), 2, [&](VertexSet x) { got.push_back(x); });
  CHECK(got == std::vector{VertexSet::of({2, 5}), VertexSet::of({2, 9}), VertexSet::of({5, 9})});
}

TEST_CASE("hypergraph construction validates") {
  CHECK_THROWS_AS(Hypergraph(3, 3), ParameterError);
  CHECK_THROWS_AS(Hypergraph(65, 3), ParameterError);
  CHECK_THROWS_AS(Hypergraph(5, 3, {VertexSet::of({1, 2})}), ParameterError);
  CHECK_THROWS_AS(Hypergraph(5, 3, {VertexSet::of({1, 2, 6})}), ParameterError);
  CHECK_THROWS_AS(Hypergraph(5, 3, {VertexSet::of({1, 2, 3}), VertexSet::of({1, 2, 3})}),
                  ParameterError);
  const Hypergraph h(5, 3, {VertexSet::of({1, 4, 5}), VertexSet::of({1, 2, 3})});
  CHECK(h[0] == VertexSet::of({1, 2, 3}));
  CHECK(h.contains(VertexSet::of({1, 4, 5})));
  CHECK(h.with_edge(VertexSet::of({2, 3, 4})).size() == 3);
  CHECK_THROWS_AS(h.with_edge(VertexSet::of({1, 2, 3})), ParameterError);
  CHECK_THROWS_AS(h.without_edge(VertexSet::of({2, 3, 4})), ParameterError);
}

TEST_CASE("codegree examples") {
  const Hypergraph k4(4, 3, oracle::all_subsets(4, 3));
  CHECK(codegree::codegree(k4, VertexSet::of({1, 2})) == 2);
  CHECK(codegree::codegree(k4, VertexSet{}) == 4);
  CHECK_THROWS_AS(codegree::codegree(k4, VertexSet::of({5})), ParameterError);
  CHECK(s(co2(k4)) == "24");
  CHECK(s(co2(Hypergraph(6, 3))) == "0");
  const Hypergraph one(6, 3, {VertexSet::of({1, 2, 3})});
  CHECK(s(co2_delta(one, VertexSet::of({1, 2, 4}))) == "5");
  CHECK_THROWS_AS(co2_delta(one, VertexSet::of({1, 2, 3})), ParameterError);
  CHECK_THROWS_AS(codegree_vector(one, 4), ParameterError);
}

TEST_CASE("codegree vector entries and dimension") {
  const Hypergraph h(5, 3, {VertexSet::of({1, 2, 3}), VertexSet::of({1, 2, 4})});
  const CodegreeVector v = codegree_vector(h, 2);
  CHECK(v.dimension() == 10);
  CHECK(v.at(VertexSet::of({1, 2})) == 2);
  CHECK(v.at(VertexSet::of({3, 4})) == 0);
  CHECK(v.at(rank_subset(VertexSet::of({1, 3}), 2)) == 1);
  CHECK(s(v.l1()) == "6");
  CHECK(s(v.squared_l2()) == "8");
}

// Property: sum of codegrees over ell-sets is |E| C(k, ell), and the squared
// sum matches counting subset by subset.
TEST_CASE("random hypergraphs: l1 identity and square sums") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = oracle::uniform(rng, 3, 11);
    const int k = oracle::uniform(rng, 2, n - 1);
    const Hypergraph h = oracle::random_hypergraph(rng, n, k, 40);
    for (int ell = 0; ell <= k; ++ell) {
      const CodegreeVector v = codegree_vector(h, ell);
      REQUIRE(v.l1() == oracle::choose(k, ell) * h.size());
      REQUIRE(v.squared_l2() == oracle::square_sum(h, ell));
      REQUIRE(codegree_square_sum(h, ell) == v.squared_l2());
    }
    REQUIRE(co2(h) == oracle::square_sum(h, k - 1));
  }
}

// Property: co2 is built up exactly by its deltas and is strictly monotone.
TEST_CASE("random hypergraphs: delta accumulation") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = oracle::uniform(rng, 4, 12);
    const int k = oracle::uniform(rng, 2, std::min(n - 1, 5));
    const Hypergraph target = oracle::random_hypergraph(rng, n, k, 30);
    Hypergraph h(n, k);
    Wide running = 0;
    for (VertexSet e : target.edges()) {
      const Wide d = co2_delta(h, e);
      REQUIRE(d >= 1);
      h = h.with_edge(e);
      running += d;
      REQUIRE(running == co2(h));
    }
    REQUIRE(h == target);
  }
}

TEST_CASE("text format round trip") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = oracle::uniform(rng, 3, 20);
    const int k = oracle::uniform(rng, 2, n - 1);
    const Hypergraph h = oracle::random_hypergraph(rng, n, k, 25);
    REQUIRE(parse_hypergraph(format_hypergraph(h)) == h);
  }
  CHECK(format_hypergraph(Hypergraph(4, 2, {VertexSet::of({3, 4}), VertexSet::of({1, 2})})) ==
        "4 2\n1 2\n3 4\n");
  const Hypergraph parsed = parse_hypergraph("# comment\n\n5 3\n1 2 3\n# x\n\n2 4 5\n");
  CHECK(parsed.size() == 2);
  CHECK(parse_hypergraph("7 3\n").empty());
}

TEST_CASE("text format errors carry line numbers") {
  const auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_hypergraph(text);
    } catch (const ParseError &e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("5\n") == 1);
  CHECK(line_of("5 3\n1 2\n") == 2);
  CHECK(line_of("5 3\n1 2 3\n1 2 6\n") == 3);
  CHECK(line_of("5 3\n3 2 1\n") == 2);
  CHECK(line_of("5 3\n1 2 3\n\n1 2 3\n") == 4);
  CHECK(line_of("5 3\n1  2 3\n") == 2);
  CHECK(line_of("5 3\n1 2 x\n") == 2);
  CHECK(line_of("5 5\n") == 1);
}

TEST_CASE("canonical form ignores labels") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = oracle::uniform(rng, 4, 8);
    const int k = oracle::uniform(rng, 2, n - 1);
    const Hypergraph h = oracle::random_hypergraph(rng, n, k, 12);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<VertexSet> relabeled;
    for (VertexSet e : h.edges()) {
      VertexSet image;
      for (int v : e.vertices())
        image = image.with(perm[static_cast<std::size_t>(v - 1)]);
      relabeled.push_back(image);
    }
    const Hypergraph g(n, k, relabeled);
    REQUIRE(canonical_form(h) == canonical_form(g));
    REQUIRE(isomorphic(h, g));
  }
  const Hypergraph path(4, 2, {VertexSet::of({1, 2}), VertexSet::of({2, 3}), VertexSet::of({3, 4})});
  const Hypergraph star(4, 2, {VertexSet::of({1, 2}), VertexSet::of({1, 3}), VertexSet::of({1, 4})});
  CHECK_FALSE(isomorphic(path, star));
}
