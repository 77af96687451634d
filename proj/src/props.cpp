#include "codegree/props.hpp"

#include <algorithm>
#include <array>

#include "codegree/errors.hpp"

namespace codegree {

// ---- intersection properties ----------------------------------------------

bool is_t_intersecting(EdgeSpan edges, int t) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (overlap(edges[i], edges[j]) < t)
        return false;
  return true;
}

bool is_t_intersecting(const Hypergraph &h, int t) { return is_t_intersecting(h.edges(), t); }

namespace {

// True if some `remaining`-subset of edges[start..] drives the running
// intersection below t.
bool has_thin_tuple(EdgeSpan edges, std::size_t start, int remaining, VertexSet running,
                    int t) {
  if (running.size() < t)
    return true;
  if (remaining == 0)
    return false;
  for (std::size_t i = start; i + remaining <= edges.size(); ++i)
    if (has_thin_tuple(edges, i + 1, remaining - 1, running & edges[i], t))
      return true;
  return false;
}

} // namespace

bool is_d_wise_t_intersecting(EdgeSpan edges, int d, int t) {
  if (d < 2 || t < 1)
    throw ParameterError("d-wise t-intersecting needs d >= 2 and t >= 1");
  if (edges.size() <= 1)
    return true;
  if (static_cast<int>(edges.size()) < d)
    return common_intersection(edges).size() >= t;
  return !has_thin_tuple(edges, 0, d, VertexSet::first(kMaxVertices), t);
}

bool is_d_wise_t_intersecting(const Hypergraph &h, int d, int t) {
  return is_d_wise_t_intersecting(h.edges(), d, t);
}

VertexSet common_intersection(EdgeSpan edges) {
  if (edges.empty())
    throw ParameterError("common_intersection of an empty family");
  VertexSet out = edges.front();
  for (VertexSet e : edges)
    out = out & e;
  return out;
}

VertexSet common_intersection(const Hypergraph &h) { return common_intersection(h.edges()); }

// ---- matchings ---------------------------------------------------------------

namespace {

class PackingSearch {
public:
  PackingSearch(EdgeSpan edges, std::size_t stop_at) : edges_(edges), stop_at_(stop_at) {}

  std::vector<std::size_t> run() {
    greedy();
    if (best_.size() < stop_at_)
      expand(0, VertexSet{});
    return best_;
  }

private:
  void greedy() {
    VertexSet used;
    for (std::size_t i = 0; i < edges_.size() && best_.size() < stop_at_; ++i)
      if (!edges_[i].intersects(used)) {
        best_.push_back(i);
        used = used | edges_[i];
      }
  }

  void expand(std::size_t start, VertexSet used) {
    if (current_.size() > best_.size())
      best_ = current_;
    if (best_.size() >= stop_at_)
      return;

    std::size_t open = 0;
    VertexSet reachable;
    int k = 0;
    for (std::size_t i = start; i < edges_.size(); ++i)
      if (!edges_[i].intersects(used)) {
        ++open;
        reachable = reachable | edges_[i];
        k = edges_[i].size();
      }
    if (open == 0)
      return;
    const std::size_t by_vertices = static_cast<std::size_t>(reachable.size() / k);
    if (current_.size() + std::min(open, by_vertices) <= best_.size())
      return;

    for (std::size_t i = start; i < edges_.size(); ++i) {
      if (edges_[i].intersects(used))
        continue;
      current_.push_back(i);
      expand(i + 1, used | edges_[i]);
      current_.pop_back();
      if (best_.size() >= stop_at_)
        return;
    }
  }

  EdgeSpan edges_;
  std::size_t stop_at_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

} // namespace

Witness maximum_matching(EdgeSpan edges) {
  return {Witness::Role::Matching, PackingSearch(edges, edges.size()).run()};
}

int matching_number(EdgeSpan edges) {
  return static_cast<int>(maximum_matching(edges).edges.size());
}

int matching_number(const Hypergraph &h) { return matching_number(h.edges()); }

bool has_matching_larger_than(EdgeSpan edges, int s) {
  if (s < 0)
    return true;
  const auto target = static_cast<std::size_t>(s) + 1;
  if (edges.size() < target)
    return false;
  return PackingSearch(edges, target).run().size() >= target;
}

// ---- covers ------------------------------------------------------------------

namespace {

bool cover_within(EdgeSpan edges, VertexSet chosen, VertexSet forbidden, int budget,
                  VertexSet &out) {
  const auto open = std::find_if(edges.begin(), edges.end(),
                                 [&](VertexSet e) { return !e.intersects(chosen); });
  if (open == edges.end()) {
    out = chosen;
    return true;
  }
  if (budget == 0)
    return false;
  for (int v : (*open - forbidden).vertices()) {
    if (cover_within(edges, chosen.with(v), forbidden, budget - 1, out))
      return true;
    forbidden = forbidden.with(v);
  }
  return false;
}

} // namespace

VertexSet minimum_cover(EdgeSpan edges) {
  VertexSet out;
  for (int size = 0;; ++size)
    if (cover_within(edges, VertexSet{}, VertexSet{}, size, out))
      return out;
}

int covering_number(EdgeSpan edges) { return minimum_cover(edges).size(); }

int covering_number(const Hypergraph &h) { return covering_number(h.edges()); }

// ---- patterns ----------------------------------------------------------------

namespace {

constexpr std::array<std::pair<PatternKind, std::string_view>, 6> kPatternNames{{
    {PatternKind::BergePath, "berge-path"},
    {PatternKind::BergeCycle, "berge-cycle"},
    {PatternKind::MinimalPath, "minimal-path"},
    {PatternKind::MinimalCycle, "minimal-cycle"},
    {PatternKind::LinearPath, "linear-path"},
    {PatternKind::LinearCycle, "linear-cycle"},
}};

bool is_linear(PatternKind k) {
  return k == PatternKind::LinearPath || k == PatternKind::LinearCycle;
}
bool is_minimal(PatternKind k) {
  return k == PatternKind::MinimalPath || k == PatternKind::MinimalCycle;
}
bool is_berge(PatternKind k) {
  return k == PatternKind::BergePath || k == PatternKind::BergeCycle;
}

bool augment(std::span<const VertexSet> sets, std::size_t i, VertexSet &seen,
             std::array<int, kMaxVertices + 1> &owner) {
  for (int v : (sets[i] - seen).vertices()) {
    seen = seen.with(v);
    if (owner[v] < 0 || augment(sets, static_cast<std::size_t>(owner[v]), seen, owner)) {
      owner[v] = static_cast<int>(i);
      return true;
    }
  }
  return false;
}

} // namespace

std::string_view pattern_kind_name(PatternKind kind) {
  for (const auto &[k, name] : kPatternNames)
    if (k == kind)
      return name;
  return "?";
}

PatternKind parse_pattern_kind(std::string_view name) {
  for (const auto &[k, n] : kPatternNames)
    if (n == name)
      return k;
  throw ParameterError("unknown pattern kind '" + std::string(name) + "'");
}

bool PatternSpec::is_cycle() const {
  return kind == PatternKind::BergeCycle || kind == PatternKind::MinimalCycle ||
         kind == PatternKind::LinearCycle;
}

int PatternSpec::min_vertices(int k) const {
  const int s = length;
  switch (kind) {
  case PatternKind::LinearCycle: return s * (k - 1);
  case PatternKind::LinearPath: return s * (k - 1) + 1;
  case PatternKind::MinimalCycle:
  case PatternKind::MinimalPath: return std::max((s * k + 1) / 2, k + 1);
  case PatternKind::BergeCycle: return std::max(s, k + 1);
  case PatternKind::BergePath: return std::max(s - 1, k + 1);
  }
  return 0;
}

void PatternSpec::check_feasible(int n, int k) const {
  const int shortest = is_cycle() ? 3 : 2;
  if (length < shortest)
    throw ParameterError(describe() + ": length must be at least " + std::to_string(shortest));
  if (min_vertices(k) > n)
    throw ParameterError(describe() + " with " + std::to_string(k) + "-edges needs at least " +
                         std::to_string(min_vertices(k)) + " vertices, n=" + std::to_string(n));
}

std::string PatternSpec::describe() const {
  return std::string(pattern_kind_name(kind)) + ":" + std::to_string(length);
}

bool has_distinct_representatives(std::span<const VertexSet> sets) {
  std::array<int, kMaxVertices + 1> owner;
  owner.fill(-1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    VertexSet seen;
    if (!augment(sets, i, seen, owner))
      return false;
  }
  return true;
}

PatternMatcher::PatternMatcher(PatternSpec spec) : spec_(spec) {
  const int shortest = spec_.is_cycle() ? 3 : 2;
  if (spec_.length < shortest)
    throw ParameterError(spec_.describe() + ": length must be at least " +
                         std::to_string(shortest));
}

bool PatternMatcher::adjacent(int i, int j) const {
  const int gap = i > j ? i - j : j - i;
  return gap == 1 || (spec_.is_cycle() && gap == spec_.length - 1);
}

bool PatternMatcher::pair_ok(VertexSet a, VertexSet b, bool adj) const {
  if (is_linear(spec_.kind))
    return overlap(a, b) == (adj ? 1 : 0);
  if (is_minimal(spec_.kind))
    return a.intersects(b) == adj;
  return !adj || a.intersects(b);
}

bool PatternMatcher::complete_ok(EdgeSpan ordered) const {
  if (is_berge(spec_.kind)) {
    std::vector<VertexSet> connectors;
    for (std::size_t i = 0; i + 1 < ordered.size(); ++i)
      connectors.push_back(ordered[i] & ordered[i + 1]);
    if (spec_.is_cycle())
      connectors.push_back(ordered.back() & ordered.front());
    return has_distinct_representatives(connectors);
  }
  if (spec_.is_cycle())
    return common_intersection(ordered).empty();
  return true;
}

bool PatternMatcher::realizes(EdgeSpan ordered) const {
  const auto s = static_cast<std::size_t>(spec_.length);
  if (ordered.size() != s)
    return false;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (ordered[i] == ordered[j] ||
          !pair_ok(ordered[i], ordered[j], adjacent(static_cast<int>(i), static_cast<int>(j))))
        return false;
  return complete_ok(ordered);
}

bool PatternMatcher::extend(EdgeSpan edges, const std::vector<int> &order, std::size_t depth,
                            std::vector<std::size_t> &slots, std::vector<bool> &used) const {
  if (depth == order.size()) {
    std::vector<VertexSet> ordered(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i)
      ordered[i] = edges[slots[i]];
    return complete_ok(ordered);
  }
  const int pos = order[depth];
  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    if (used[idx])
      continue;
    bool ok = true;
    for (std::size_t prev = 0; prev < depth && ok; ++prev) {
      const int other = order[prev];
      ok = pair_ok(edges[idx], edges[slots[other]], adjacent(pos, other));
    }
    if (!ok)
      continue;
    slots[pos] = idx;
    used[idx] = true;
    const bool found = extend(edges, order, depth + 1, slots, used);
    used[idx] = false;
    if (found)
      return true;
  }
  return false;
}

std::optional<std::vector<std::size_t>> PatternMatcher::find(EdgeSpan edges) const {
  const auto s = static_cast<std::size_t>(spec_.length);
  if (edges.size() < s)
    return std::nullopt;
  std::vector<int> order(s);
  for (std::size_t i = 0; i < s; ++i)
    order[i] = static_cast<int>(i);
  std::vector<std::size_t> slots(s);
  std::vector<bool> used(edges.size(), false);
  if (extend(edges, order, 0, slots, used))
    return slots;
  return std::nullopt;
}

bool PatternMatcher::occurs_through(EdgeSpan edges, std::size_t anchor) const {
  const int s = spec_.length;
  if (edges.size() < static_cast<std::size_t>(s))
    return false;
  // Cycles are rotation invariant, paths reversal invariant.
  const int last_anchor_pos = spec_.is_cycle() ? 0 : (s - 1) / 2;
  std::vector<std::size_t> slots(static_cast<std::size_t>(s));
  std::vector<bool> used(edges.size(), false);
  for (int a = 0; a <= last_anchor_pos; ++a) {
    std::vector<int> order;
    for (int i = a; i < s; ++i)
      order.push_back(i);
    for (int i = a - 1; i >= 0; --i)
      order.push_back(i);
    slots[static_cast<std::size_t>(a)] = anchor;
    used[anchor] = true;
    const bool found = extend(edges, order, 1, slots, used);
    used[anchor] = false;
    if (found)
      return true;
  }
  return false;
}

std::optional<Witness> find_pattern(const Hypergraph &h, const PatternSpec &p) {
  p.check_feasible(h.n(), h.k());
  auto hit = PatternMatcher(p).find(h.edges());
  if (!hit)
    return std::nullopt;
  return Witness{Witness::Role::Pattern, std::move(*hit)};
}

bool contains_pattern(const Hypergraph &h, const PatternSpec &p) {
  return find_pattern(h, p).has_value();
}

bool is_pattern_free(const Hypergraph &h, const PatternSpec &p) { return !contains_pattern(h, p); }

} // namespace codegree
