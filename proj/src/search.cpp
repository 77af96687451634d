#include "codegree/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <memory>
#include <mutex>
#include <set>
#include <thread>

#include "codegree/bounds.hpp"
#include "codegree/core.hpp"
#include "codegree/errors.hpp"
#include "codegree/subsets.hpp"

namespace codegree {

// ---- constraints ---------------------------------------------------------------

Constraint Constraint::t_intersecting(int t) {
  Constraint c;
  c.kind = ConstraintKind::TIntersecting;
  c.t = t;
  return c;
}

Constraint Constraint::d_wise_t_intersecting(int d, int t) {
  Constraint c;
  c.kind = ConstraintKind::DWiseTIntersecting;
  c.d = d;
  c.t = t;
  return c;
}

Constraint Constraint::matching_at_most(int s) {
  Constraint c;
  c.kind = ConstraintKind::MatchingAtMost;
  c.s = s;
  return c;
}

Constraint Constraint::pattern_free(PatternSpec p) {
  Constraint c;
  c.kind = ConstraintKind::PatternFree;
  c.pattern = p;
  return c;
}

Constraint Constraint::all_of(std::vector<Constraint> parts) {
  Constraint c;
  c.kind = ConstraintKind::Conjunction;
  c.parts = std::move(parts);
  return c;
}

bool Constraint::satisfied_by(EdgeSpan edges) const {
  switch (kind) {
  case ConstraintKind::TIntersecting:
    return is_t_intersecting(edges, t);
  case ConstraintKind::DWiseTIntersecting:
    return is_d_wise_t_intersecting(edges, d, t);
  case ConstraintKind::MatchingAtMost:
    return !has_matching_larger_than(edges, s);
  case ConstraintKind::PatternFree:
    return !PatternMatcher(pattern).find(edges).has_value();
  case ConstraintKind::Conjunction:
    return std::all_of(parts.begin(), parts.end(),
                       [&](const Constraint &c) { return c.satisfied_by(edges); });
  }
  return false;
}

void Constraint::validate(int n, int k) const {
  switch (kind) {
  case ConstraintKind::TIntersecting:
    if (t < 1)
      throw ParameterError("t-intersecting needs t >= 1");
    break;
  case ConstraintKind::DWiseTIntersecting:
    if (d < 2 || t < 1)
      throw ParameterError("d-wise t-intersecting needs d >= 2, t >= 1");
    break;
  case ConstraintKind::MatchingAtMost:
    if (s < 0)
      throw ParameterError("matching bound needs s >= 0");
    break;
  case ConstraintKind::PatternFree:
    pattern.check_feasible(n, k);
    break;
  case ConstraintKind::Conjunction:
    for (const auto &c : parts)
      c.validate(n, k);
    break;
  }
}

std::string Constraint::describe() const {
  switch (kind) {
  case ConstraintKind::TIntersecting:
    return "t-intersecting:" + std::to_string(t);
  case ConstraintKind::DWiseTIntersecting:
    return "dwise:" + std::to_string(d) + ":" + std::to_string(t);
  case ConstraintKind::MatchingAtMost:
    return "matching:" + std::to_string(s);
  case ConstraintKind::PatternFree:
    return "free:" + pattern.describe();
  case ConstraintKind::Conjunction: {
    std::string out = "all(";
    for (std::size_t i = 0; i < parts.size(); ++i)
      out += (i ? "," : "") + parts[i].describe();
    return out + ")";
  }
  }
  return "?";
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto end = text.find(sep, pos);
    out.push_back(text.substr(pos, end == std::string_view::npos ? std::string_view::npos
                                                                  : end - pos));
    if (end == std::string_view::npos)
      return out;
    pos = end + 1;
  }
}

int parse_int(std::string_view text, std::string_view whole) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(std::string(text), &used);
    if (used == text.size())
      return v;
  } catch (const std::exception &) {
  }
  throw ParameterError("malformed constraint '" + std::string(whole) + "'");
}

} // namespace

Constraint parse_constraint(std::string_view text) {
  const auto f = split(text, ':');
  const auto bad = [&] { return ParameterError("malformed constraint '" + std::string(text) + "'"); };
  if (f[0] == "t-intersecting" || f[0] == "intersecting") {
    if (f.size() > 2)
      throw bad();
    return Constraint::t_intersecting(f.size() == 2 ? parse_int(f[1], text) : 1);
  }
  if (f[0] == "dwise" && f.size() == 3)
    return Constraint::d_wise_t_intersecting(parse_int(f[1], text), parse_int(f[2], text));
  if (f[0] == "matching" && f.size() == 2)
    return Constraint::matching_at_most(parse_int(f[1], text));
  if (f[0] == "free" && f.size() == 3)
    return Constraint::pattern_free({parse_pattern_kind(f[1]), parse_int(f[2], text)});
  throw bad();
}

// ---- search machinery ----------------------------------------------------------

namespace {

class EdgeBits {
public:
  EdgeBits() = default;
  explicit EdgeBits(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void and_with(const EdgeBits &o) {
    for (std::size_t w = 0; w < words_.size(); ++w)
      words_[w] &= o.words_[w];
  }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  std::size_t count_from(std::size_t start) const {
    std::size_t total = 0;
    for (std::size_t w = start >> 6; w < words_.size(); ++w)
      total += std::popcount(masked(w, start));
    return total;
  }

  /// (other & [start, end)) is a subset of *this.
  bool covers_from(const EdgeBits &other, std::size_t start) const {
    for (std::size_t w = start >> 6; w < words_.size(); ++w)
      if (other.masked(w, start) & ~words_[w])
        return false;
    return true;
  }

  template <typename Fn> void for_each_from(std::size_t start, Fn &&fn) const {
    for (std::size_t w = start >> 6; w < words_.size(); ++w)
      for (std::uint64_t bits = masked(w, start); bits != 0; bits &= bits - 1)
        fn((w << 6) + static_cast<std::size_t>(std::countr_zero(bits)));
  }

  template <typename Fn> void for_each_below(std::size_t end, Fn &&fn) const {
    for (std::size_t w = 0; w < words_.size() && (w << 6) < end; ++w) {
      std::uint64_t bits = words_[w];
      if (end < (w << 6) + 64)
        bits &= (std::uint64_t{1} << (end - (w << 6))) - 1;
      for (; bits != 0; bits &= bits - 1)
        fn((w << 6) + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }

private:
  std::uint64_t masked(std::size_t w, std::size_t start) const {
    const std::size_t base = w << 6;
    if (start <= base)
      return words_[w];
    if (start >= base + 64)
      return 0;
    return words_[w] & (~std::uint64_t{0} << (start - base));
  }

  std::vector<std::uint64_t> words_;
};

constexpr std::size_t kMaxUniverse = std::size_t{1} << 14;
constexpr std::size_t kBruteForceLimit = 30;
constexpr std::size_t kBruteForceHardLimit = 62;

struct Universe {
  int n;
  int k;
  std::vector<VertexSet> edges;
  /// Colex ranks of the k (k-1)-subsets of each edge, k entries per edge.
  std::vector<std::uint32_t> sub_ranks;
  std::size_t ridge_count;

  Universe(int n_, int k_) : n(n_), k(k_) {
    check_dimensions(n, k);
    if (binom64(n, k) > kMaxUniverse)
      throw ParameterError("search space too large: C(" + std::to_string(n) + "," +
                           std::to_string(k) + ") candidate edges");
    for_each_subset(n, k, [&](VertexSet e) { edges.push_back(e); });
    ridge_count = binom64(n, k - 1);
    sub_ranks.reserve(edges.size() * static_cast<std::size_t>(k));
    for (VertexSet e : edges)
      for (int v : e.vertices())
        sub_ranks.push_back(static_cast<std::uint32_t>(rank_subset(e.without(v), k - 1)));
  }

  std::size_t size() const { return edges.size(); }
  const std::uint32_t *ridges(std::size_t e) const {
    return sub_ranks.data() + e * static_cast<std::size_t>(k);
  }
};

// Incremental form of a Constraint. The search keeps, per node, the set of
// edges g outside the family F such that F + g is still admissible; refine()
// updates it after e joins F.
class Filter {
public:
  virtual ~Filter() = default;
  virtual void push(std::size_t e) = 0;
  virtual void pop() = 0;
  /// Precondition: every g in cand was compatible with F - e.
  virtual void refine(EdgeBits &cand, std::size_t e) = 0;
  /// Non-null when compatibility is a fixed pairwise relation.
  virtual const std::vector<EdgeBits> *pairwise() const { return nullptr; }
};

class PairwiseFilter final : public Filter {
public:
  template <typename Related>
  PairwiseFilter(const Universe &u, Related related) : compat_(u.size(), EdgeBits(u.size())) {
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < u.size(); ++j)
        if (i != j && related(u.edges[i], u.edges[j]))
          compat_[i].set(j);
  }
  explicit PairwiseFilter(std::vector<EdgeBits> compat) : compat_(std::move(compat)) {}

  void push(std::size_t) override {}
  void pop() override {}
  void refine(EdgeBits &cand, std::size_t e) override { cand.and_with(compat_[e]); }
  const std::vector<EdgeBits> *pairwise() const override { return &compat_; }

private:
  std::vector<EdgeBits> compat_;
};

class DWiseFilter final : public Filter {
public:
  DWiseFilter(const Universe &u, int d, int t) : u_(u), d_(d), t_(t) {}

  void push(std::size_t e) override {
    const VertexSet edge = u_.edges[e];
    const std::size_t existing = masks_.size();
    frames_.push_back(existing);
    masks_.push_back({edge, 1});
    for (std::size_t i = 0; i < existing; ++i)
      if (masks_[i].second <= d_ - 2)
        masks_.push_back({masks_[i].first & edge, masks_[i].second + 1});
  }

  void pop() override {
    masks_.resize(frames_.back());
    frames_.pop_back();
  }

  void refine(EdgeBits &cand, std::size_t e) override {
    const std::size_t first_new = frames_.back();
    cand.reset(e);
    cand.for_each_from(0, [&](std::size_t g) {
      for (std::size_t i = first_new; i < masks_.size(); ++i)
        if (overlap(masks_[i].first, u_.edges[g]) < t_) {
          cand.reset(g);
          return;
        }
    });
  }

private:
  const Universe &u_;
  int d_;
  int t_;
  /// Intersections of every subfamily of size <= d-1, with that size.
  std::vector<std::pair<VertexSet, int>> masks_;
  std::vector<std::size_t> frames_;
};

class MatchingFilter final : public Filter {
public:
  MatchingFilter(const Universe &u, int s) : u_(u), s_(s) {}

  void push(std::size_t e) override { family_.push_back(u_.edges[e]); }
  void pop() override { family_.pop_back(); }

  void refine(EdgeBits &cand, std::size_t e) override {
    const VertexSet edge = u_.edges[e];
    cand.reset(e);
    cand.for_each_from(0, [&](std::size_t g) {
      const VertexSet other = u_.edges[g];
      if (edge.intersects(other))
        return;
      // A matching of size s+1 through both e and g needs s-1 more edges
      // avoiding e | g.
      scratch_.clear();
      for (std::size_t i = 0; i + 1 < family_.size(); ++i)
        if (!family_[i].intersects(edge | other))
          scratch_.push_back(family_[i]);
      if (has_matching_larger_than(scratch_, s_ - 2))
        cand.reset(g);
    });
  }

private:
  const Universe &u_;
  int s_;
  std::vector<VertexSet> family_;
  std::vector<VertexSet> scratch_;
};

class PatternFilter final : public Filter {
public:
  PatternFilter(const Universe &u, PatternSpec p) : u_(u), matcher_(p) {}

  void push(std::size_t e) override { family_.push_back(u_.edges[e]); }
  void pop() override { family_.pop_back(); }

  void refine(EdgeBits &cand, std::size_t e) override {
    cand.reset(e);
    cand.for_each_from(0, [&](std::size_t g) {
      family_.push_back(u_.edges[g]);
      const bool hit = matcher_.occurs_through(family_, family_.size() - 1);
      family_.pop_back();
      if (hit)
        cand.reset(g);
    });
  }

private:
  const Universe &u_;
  PatternMatcher matcher_;
  std::vector<VertexSet> family_;
};

class ConjunctionFilter final : public Filter {
public:
  explicit ConjunctionFilter(std::vector<std::unique_ptr<Filter>> parts) : parts_(std::move(parts)) {}

  void push(std::size_t e) override {
    for (auto &p : parts_)
      p->push(e);
  }
  void pop() override {
    for (auto &p : parts_)
      p->pop();
  }
  void refine(EdgeBits &cand, std::size_t e) override {
    cand.reset(e);
    for (auto &p : parts_)
      p->refine(cand, e);
  }

private:
  std::vector<std::unique_ptr<Filter>> parts_;
};

std::unique_ptr<Filter> make_filter(const Universe &u, const Constraint &c) {
  switch (c.kind) {
  case ConstraintKind::TIntersecting:
    return std::make_unique<PairwiseFilter>(
        u, [t = c.t](VertexSet a, VertexSet b) { return overlap(a, b) >= t; });
  case ConstraintKind::DWiseTIntersecting:
    if (c.d == 2)
      return make_filter(u, Constraint::t_intersecting(c.t));
    return std::make_unique<DWiseFilter>(u, c.d, c.t);
  case ConstraintKind::MatchingAtMost:
    if (c.s == 1)
      return make_filter(u, Constraint::t_intersecting(1));
    return std::make_unique<MatchingFilter>(u, c.s);
  case ConstraintKind::PatternFree:
    return std::make_unique<PatternFilter>(u, c.pattern);
  case ConstraintKind::Conjunction: {
    std::vector<std::unique_ptr<Filter>> parts;
    for (const auto &p : c.parts)
      parts.push_back(make_filter(u, p));
    const bool all_pairwise = std::all_of(parts.begin(), parts.end(),
                                          [](const auto &p) { return p->pairwise() != nullptr; });
    if (all_pairwise) {
      std::vector<EdgeBits> compat(u.size(), EdgeBits(u.size()));
      for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < u.size(); ++j)
          if (i != j)
            compat[i].set(j);
        for (const auto &p : parts)
          compat[i].and_with((*p->pairwise())[i]);
      }
      return std::make_unique<PairwiseFilter>(std::move(compat));
    }
    return std::make_unique<ConjunctionFilter>(std::move(parts));
  }
  }
  throw ParameterError("unknown constraint kind");
}

/// Edges g with {g} admissible.
EdgeBits initial_candidates(const Universe &u, const Constraint &c) {
  EdgeBits cand(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (c.satisfied_by(EdgeSpan(&u.edges[i], 1)))
      cand.set(i);
  return cand;
}

std::optional<std::uint64_t> l1_cap_for(const Constraint &c, int n, int k) {
  std::optional<std::uint64_t> cap;
  const auto take = [&](const L1Result &r) {
    if (!r.valid)
      return;
    const BigInt v = floor_nonneg(r.value);
    const auto value = static_cast<std::uint64_t>(v);
    cap = cap ? std::min(*cap, value) : value;
  };
  switch (c.kind) {
  case ConstraintKind::TIntersecting:
  case ConstraintKind::DWiseTIntersecting:
    if (c.t < k)
      take(l1_bound(L1Bound::TIntersectingEKR, {n, k, c.t, 1, 0}));
    break;
  case ConstraintKind::MatchingAtMost:
    take(l1_bound(L1Bound::EMC, {n, k, 1, c.s, 0}));
    break;
  case ConstraintKind::PatternFree:
    break;
  case ConstraintKind::Conjunction:
    for (const auto &p : c.parts)
      if (auto sub = l1_cap_for(p, n, k))
        cap = cap ? std::min(*cap, *sub) : *sub;
    break;
  }
  return cap;
}

bool has_t_intersecting_part(const Constraint &c, int t) {
  if (c.kind == ConstraintKind::TIntersecting ||
      (c.kind == ConstraintKind::DWiseTIntersecting))
    return c.t == t;
  if (c.kind == ConstraintKind::MatchingAtMost)
    return c.s == 1 && t == 1;
  if (c.kind == ConstraintKind::Conjunction)
    return std::any_of(c.parts.begin(), c.parts.end(),
                       [&](const Constraint &p) { return has_t_intersecting_part(p, t); });
  return false;
}

bool passes_filter(const SearchProblem &p, EdgeSpan edges) {
  if (!p.nontrivial_below)
    return true;
  return !edges.empty() && common_intersection(edges).size() < *p.nontrivial_below;
}

using IndexFamily = std::vector<std::size_t>;

/// Keeps the value-maximal families, at most `cap` of them, lexicographically
/// smallest first.
class OptimaCollector {
public:
  explicit OptimaCollector(std::size_t cap) : cap_(cap) {}

  void offer(std::uint64_t value, const IndexFamily &family) {
    if (!best_ || value > *best_) {
      best_ = value;
      kept_.clear();
      count_ = 0;
    } else if (value < *best_) {
      return;
    }
    ++count_;
    kept_.insert(family);
    if (kept_.size() > cap_)
      kept_.erase(std::prev(kept_.end()));
  }

  void merge(const OptimaCollector &other) {
    if (!other.best_)
      return;
    if (!best_ || *other.best_ > *best_) {
      *this = other;
      return;
    }
    if (*other.best_ < *best_)
      return;
    count_ += other.count_;
    for (const auto &f : other.kept_) {
      kept_.insert(f);
      if (kept_.size() > cap_)
        kept_.erase(std::prev(kept_.end()));
    }
  }

  const std::optional<std::uint64_t> &best() const { return best_; }
  std::uint64_t count() const { return count_; }
  const std::set<IndexFamily> &kept() const { return kept_; }

private:
  std::size_t cap_;
  std::optional<std::uint64_t> best_;
  std::uint64_t count_ = 0;
  std::set<IndexFamily> kept_;
};

struct SharedState {
  std::atomic<std::uint64_t> incumbent{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> exhausted{false};
  std::atomic<std::size_t> next_root{0};
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  void raise_incumbent(std::uint64_t value) {
    std::uint64_t cur = incumbent.load(std::memory_order_relaxed);
    while (value > cur && !incumbent.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
  }
};

class Explorer {
public:
  Explorer(const Universe &u, const SearchProblem &p, SharedState &shared,
           const std::vector<std::uint64_t> &bey_floor, std::uint64_t edge_cap,
           const EdgeBits &root_cand)
      : u_(u), p_(p), shared_(shared), bey_floor_(bey_floor), edge_cap_(edge_cap),
        filter_(make_filter(u, p.constraint)), cand_(u.size() + 1, EdgeBits(u.size())),
        codeg_(u.ridge_count, 0), optima_(p.limits.max_optima) {
    cand_[0] = root_cand;
    pairwise_ = filter_->pairwise();
  }

  void run_root_children(const std::vector<std::size_t> &roots) {
    while (!shared_.stop.load(std::memory_order_relaxed)) {
      const std::size_t slot = shared_.next_root.fetch_add(1);
      if (slot >= roots.size())
        return;
      descend(0, roots[slot]);
    }
  }

  /// Greedy maximal family in the given edge order.
  std::pair<std::uint64_t, IndexFamily> greedy(const std::vector<std::size_t> &order) {
    EdgeBits cand = cand_[0];
    IndexFamily chosen;
    for (std::size_t g : order) {
      if (!cand.test(g))
        continue;
      chosen.push_back(g);
      add(g);
      filter_->refine(cand, g);
    }
    const std::uint64_t value = co2_;
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it)
      remove(*it);
    std::sort(chosen.begin(), chosen.end());
    return {value, chosen};
  }

  const OptimaCollector &optima() const { return optima_; }
  const SearchStats &stats() const { return stats_; }

private:
  void add(std::size_t e) {
    family_.push_back(e);
    edges_.push_back(u_.edges[e]);
    const std::uint32_t *r = u_.ridges(e);
    for (int i = 0; i < u_.k; ++i)
      co2_ += 2 * std::uint64_t{codeg_[r[i]]++} + 1;
    filter_->push(e);
  }

  void remove(std::size_t e) {
    filter_->pop();
    const std::uint32_t *r = u_.ridges(e);
    for (int i = 0; i < u_.k; ++i)
      co2_ -= 2 * std::uint64_t{--codeg_[r[i]]} + 1;
    edges_.pop_back();
    family_.pop_back();
  }

  void descend(std::size_t depth, std::size_t e) {
    add(e);
    cand_[depth + 1] = cand_[depth];
    filter_->refine(cand_[depth + 1], e);
    visit(depth + 1, e + 1);
    remove(e);
  }

  bool budget_exceeded() {
    const std::uint64_t count = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (count > p_.limits.node_budget) {
      shared_.exhausted = true;
      shared_.stop = true;
      return true;
    }
    if (p_.limits.time_budget.count() > 0 && (++stats_.nodes & 1023) == 0 &&
        std::chrono::steady_clock::now() - shared_.started > p_.limits.time_budget) {
      shared_.exhausted = true;
      shared_.stop = true;
      return true;
    }
    return shared_.stop.load(std::memory_order_relaxed);
  }

  // Upper bound on co2 of the family plus every addable edge.
  std::uint64_t saturated_co2(const EdgeBits &cand, std::size_t start) {
    std::uint64_t total = co2_;
    cand.for_each_from(start, [&](std::size_t g) {
      const std::uint32_t *r = u_.ridges(g);
      for (int i = 0; i < u_.k; ++i)
        total += 2 * std::uint64_t{codeg_[r[i]]++} + 1;
    });
    cand.for_each_from(start, [&](std::size_t g) {
      const std::uint32_t *r = u_.ridges(g);
      for (int i = 0; i < u_.k; ++i)
        --codeg_[r[i]];
    });
    return total;
  }

  void visit(std::size_t depth, std::size_t start) {
    if (budget_exceeded())
      return;
    ++visited_;
    const EdgeBits &cand = cand_[depth];
    const std::size_t addable = cand.count_from(start);

    if (addable == 0) {
      ++stats_.leaves;
      if (cand.none() && passes_filter(p_, edges_)) {
        optima_.offer(co2_, family_);
        shared_.raise_incumbent(co2_);
      }
      return;
    }

    if (p_.prune && prunable(cand, start, addable)) {
      ++stats_.pruned;
      return;
    }

    cand.for_each_from(start, [&](std::size_t e) {
      if (!shared_.stop.load(std::memory_order_relaxed))
        descend(depth, e);
    });
  }

  bool prunable(const EdgeBits &cand, std::size_t start, std::size_t addable) {
    const std::uint64_t incumbent = shared_.incumbent.load(std::memory_order_relaxed);
    const std::uint64_t reachable =
        std::min<std::uint64_t>(family_.size() + addable, edge_cap_);
    if (bey_floor_[reachable] < incumbent)
      return true;
    if (saturated_co2(cand, start) < incumbent)
      return true;
    if (pairwise_ != nullptr) {
      // A skipped edge that no addable edge conflicts with survives to every
      // leaf below, so none of them is maximal.
      bool doomed = false;
      cand.for_each_below(start, [&](std::size_t g) {
        if (!doomed && (*pairwise_)[g].covers_from(cand, start))
          doomed = true;
      });
      if (doomed)
        return true;
    }
    return false;
  }

public:
  std::uint64_t visited_ = 0;

private:
  const Universe &u_;
  const SearchProblem &p_;
  SharedState &shared_;
  const std::vector<std::uint64_t> &bey_floor_;
  std::uint64_t edge_cap_;
  std::unique_ptr<Filter> filter_;
  const std::vector<EdgeBits> *pairwise_ = nullptr;
  std::vector<EdgeBits> cand_;
  std::vector<std::uint32_t> codeg_;
  std::uint64_t co2_ = 0;
  IndexFamily family_;
  std::vector<VertexSet> edges_;
  OptimaCollector optima_;
  SearchStats stats_;
};

Hypergraph to_hypergraph(const Universe &u, const IndexFamily &family) {
  std::vector<VertexSet> edges;
  edges.reserve(family.size());
  for (std::size_t i : family)
    edges.push_back(u.edges[i]);
  return Hypergraph(u.n, u.k, std::move(edges));
}

void fill_optima(SearchResult &out, const Universe &u, const OptimaCollector &optima,
                 std::size_t cap) {
  if (optima.best())
    out.optimum = *optima.best();
  out.optimum_count = optima.count();
  for (const auto &f : optima.kept())
    out.optima.push_back(to_hypergraph(u, f));
  out.optima_truncated = optima.count() > cap;
}

// Re-checks every reported optimum from scratch.
void revalidate(const SearchProblem &p, const SearchResult &r) {
  for (const auto &h : r.optima) {
    if (!p.constraint.satisfied_by(h.edges()))
      throw InvariantViolation("search reported a family violating " + p.constraint.describe());
    if (!passes_filter(p, h.edges()))
      throw InvariantViolation("search reported a family failing the nontrivial filter");
    if (co2(h) != *r.optimum)
      throw InvariantViolation("search reported a family with a different co2");
  }
}

void check_problem(const SearchProblem &p) {
  check_dimensions(p.n, p.k);
  p.constraint.validate(p.n, p.k);
  if (p.limits.workers < 1)
    throw ParameterError("worker count must be >= 1");
  if (p.limits.max_optima < 1)
    throw ParameterError("max_optima must be >= 1");
  if (p.nontrivial_below && *p.nontrivial_below < 1)
    throw ParameterError("nontrivial threshold must be >= 1");
}

SearchResult branch_and_bound(const SearchProblem &p) {
  const Universe u(p.n, p.k);
  const std::size_t n_edges = u.size();

  std::uint64_t edge_cap = n_edges;
  if (p.use_l1_caps) {
    if (auto cap = l1_cap_for(p.constraint, p.n, p.k))
      edge_cap = std::min<std::uint64_t>(edge_cap, *cap);
    if (p.nontrivial_below && has_t_intersecting_part(p.constraint, *p.nontrivial_below)) {
      const int t = *p.nontrivial_below;
      const auto hm = t == 1 ? l1_bound(L1Bound::HiltonMilner, {p.n, p.k, 1, 1, 0})
                    : t < p.k ? l1_bound(L1Bound::TIntersectingHM, {p.n, p.k, t, 1, 0})
                              : L1Result{};
      if (hm.valid)
        edge_cap = std::min<std::uint64_t>(edge_cap,
                                           static_cast<std::uint64_t>(floor_nonneg(hm.value)));
    }
  }
  std::vector<std::uint64_t> bey_floor(n_edges + 1);
  for (std::size_t m = 0; m <= n_edges; ++m)
    bey_floor[m] = static_cast<std::uint64_t>(
        floor_nonneg(bey_rhs(p.n, p.k, p.k - 1, BigInt(static_cast<std::uint64_t>(m)))));

  const EdgeBits root_cand = initial_candidates(u, p.constraint);
  SharedState shared;

  // Seed the incumbent with greedy maximal families that favour one vertex.
  std::optional<std::pair<std::uint64_t, IndexFamily>> seed;
  if (p.prune) {
    Explorer seeder(u, p, shared, bey_floor, edge_cap, root_cand);
    for (int v = 0; v <= std::min(p.n, 3); ++v) {
      std::vector<std::size_t> order(n_edges);
      for (std::size_t i = 0; i < n_edges; ++i)
        order[i] = i;
      if (v > 0)
        std::stable_partition(order.begin(), order.end(),
                              [&](std::size_t i) { return u.edges[i].contains(v); });
      auto candidate = seeder.greedy(order);
      std::vector<VertexSet> edges;
      for (std::size_t i : candidate.second)
        edges.push_back(u.edges[i]);
      if (passes_filter(p, edges) && (!seed || candidate.first > seed->first))
        seed = std::move(candidate);
    }
    if (seed)
      shared.incumbent = seed->first;
  }

  std::vector<std::size_t> roots;
  root_cand.for_each_from(0, [&](std::size_t e) { roots.push_back(e); });

  const int workers = p.limits.workers;
  std::vector<std::unique_ptr<Explorer>> explorers;
  for (int w = 0; w < workers; ++w)
    explorers.push_back(std::make_unique<Explorer>(u, p, shared, bey_floor, edge_cap, root_cand));

  // The root itself: the empty family, admissible and maximal only when
  // nothing can be added.
  OptimaCollector merged(p.limits.max_optima);
  SearchStats stats;
  stats.nodes = 1;
  shared.nodes = 1;
  if (roots.empty()) {
    stats.leaves = 1;
    if (passes_filter(p, {}))
      merged.offer(0, {});
  } else if (workers == 1) {
    explorers[0]->run_root_children(roots);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w)
      threads.emplace_back([&, w] { explorers[static_cast<std::size_t>(w)]->run_root_children(roots); });
    for (auto &t : threads)
      t.join();
  }

  for (const auto &ex : explorers) {
    merged.merge(ex->optima());
    stats.leaves += ex->stats().leaves;
    stats.pruned += ex->stats().pruned;
    stats.nodes += ex->visited_;
  }

  SearchResult out;
  out.workers = workers;
  out.stats = stats;
  out.certified = !shared.exhausted.load();
  fill_optima(out, u, merged, p.limits.max_optima);
  if (!out.certified && seed && (!out.optimum || seed->first > *out.optimum)) {
    out.optimum = seed->first;
    out.optima = {to_hypergraph(u, seed->second)};
    out.optimum_count = 1;
    out.optima_truncated = false;
  }
  return out;
}

class BruteForce {
public:
  BruteForce(const Universe &u, const SearchProblem &p)
      : u_(u), p_(p), optima_(p.limits.max_optima), started_(std::chrono::steady_clock::now()) {}

  void run() { expand(0); }

  const OptimaCollector &optima() const { return optima_; }
  const SearchStats &stats() const { return stats_; }
  bool exhausted() const { return exhausted_; }

private:
  void expand(std::size_t next) {
    if (exhausted_)
      return;
    if (++stats_.nodes > p_.limits.node_budget ||
        (p_.limits.time_budget.count() > 0 && (stats_.nodes & 4095) == 0 &&
         std::chrono::steady_clock::now() - started_ > p_.limits.time_budget)) {
      exhausted_ = true;
      return;
    }
    if (next == u_.size()) {
      ++stats_.leaves;
      if (!passes_filter(p_, edges_))
        return;
      const Hypergraph h(u_.n, u_.k, edges_);
      optima_.offer(static_cast<std::uint64_t>(co2(h)), family_);
      return;
    }
    edges_.push_back(u_.edges[next]);
    family_.push_back(next);
    if (p_.constraint.satisfied_by(edges_))
      expand(next + 1);
    edges_.pop_back();
    family_.pop_back();
    expand(next + 1);
  }

  const Universe &u_;
  const SearchProblem &p_;
  std::vector<VertexSet> edges_;
  IndexFamily family_;
  OptimaCollector optima_;
  SearchStats stats_;
  bool exhausted_ = false;
  std::chrono::steady_clock::time_point started_;
};

} // namespace

SearchResult brute_force_co2(const SearchProblem &p) {
  check_problem(p);
  const std::uint64_t n_edges = binom64(p.n, p.k);
  if (n_edges > kBruteForceHardLimit ||
      (n_edges > kBruteForceLimit && !p.limits.allow_large_brute_force))
    throw ParameterError("brute force over C(" + std::to_string(p.n) + "," +
                         std::to_string(p.k) + ") = " + std::to_string(n_edges) +
                         " edges is too large");
  const Universe u(p.n, p.k);
  BruteForce search(u, p);
  search.run();
  SearchResult out;
  out.workers = 1;
  out.stats = search.stats();
  out.certified = !search.exhausted();
  fill_optima(out, u, search.optima(), p.limits.max_optima);
  if (out.certified)
    revalidate(p, out);
  return out;
}

SearchResult max_co2(const SearchProblem &p) {
  if (p.mode == SearchMode::BruteForce)
    return brute_force_co2(p);
  check_problem(p);
  SearchResult out = branch_and_bound(p);
  if (out.certified)
    revalidate(p, out);
  return out;
}

} // namespace codegree
