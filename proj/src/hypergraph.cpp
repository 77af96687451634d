#include "codegree/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "codegree/errors.hpp"

namespace codegree {

void check_dimensions(int n, int k) {
  if (n < 2 || n > kMaxVertices)
    throw ParameterError("n must lie in 2..64, got " + std::to_string(n));
  if (k < 2 || k >= n)
    throw ParameterError("k must satisfy 2 <= k < n, got k=" + std::to_string(k) +
                         " n=" + std::to_string(n));
}

Hypergraph::Hypergraph(int n, int k) : n_(n), k_(k) { check_dimensions(n, k); }

Hypergraph::Hypergraph(int n, int k, std::vector<VertexSet> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {
  check_dimensions(n, k);
  for (VertexSet e : edges_)
    check_edge(e);
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw ParameterError("duplicate edge " + to_string(*dup));
}

void Hypergraph::check_edge(VertexSet edge) const {
  if (edge.size() != k_)
    throw ParameterError("edge " + to_string(edge) + " does not have " +
                         std::to_string(k_) + " vertices");
  if (!edge.within(n_))
    throw ParameterError("edge " + to_string(edge) + " is not inside [" +
                         std::to_string(n_) + "]");
}

bool Hypergraph::contains(VertexSet edge) const {
  return std::binary_search(edges_.begin(), edges_.end(), edge);
}

Hypergraph Hypergraph::with_edge(VertexSet edge) const {
  check_edge(edge);
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), edge);
  if (pos != edges_.end() && *pos == edge)
    throw ParameterError("edge " + to_string(edge) + " already present");
  Hypergraph out = *this;
  out.edges_.insert(out.edges_.begin() + (pos - edges_.begin()), edge);
  return out;
}

Hypergraph Hypergraph::without_edge(VertexSet edge) const {
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), edge);
  if (pos == edges_.end() || *pos != edge)
    throw ParameterError("edge " + to_string(edge) + " not present");
  Hypergraph out = *this;
  out.edges_.erase(out.edges_.begin() + (pos - edges_.begin()));
  return out;
}

namespace {

class Canonicalizer {
public:
  explicit Canonicalizer(const Hypergraph &h) : h_(h), position_(static_cast<std::size_t>(h.n()) + 1) {
    std::vector<int> degree(static_cast<std::size_t>(h.n()) + 1, 0);
    for (VertexSet e : h.edges())
      for (int v : e.vertices())
        ++degree[static_cast<std::size_t>(v)];
    for (int v = 1; v <= h.n(); ++v)
      order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
    });
    // Positions [block_start, block_end) share one degree.
    for (std::size_t i = 0; i < order_.size();) {
      std::size_t j = i;
      while (j < order_.size() &&
             degree[static_cast<std::size_t>(order_[j])] == degree[static_cast<std::size_t>(order_[i])])
        ++j;
      blocks_.push_back({i, j});
      i = j;
    }
  }

  std::uint64_t orders() const {
    std::uint64_t total = 1;
    for (auto [lo, hi] : blocks_)
      for (std::size_t f = 2; f <= hi - lo; ++f) {
        if (total > std::numeric_limits<std::uint64_t>::max() / f)
          return std::numeric_limits<std::uint64_t>::max();
        total *= f;
      }
    return total;
  }

  std::vector<VertexSet> run() {
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      std::sort(order_.begin() + static_cast<std::ptrdiff_t>(blocks_[b].first),
                order_.begin() + static_cast<std::ptrdiff_t>(blocks_[b].second));
    permute(0);
    return best_;
  }

private:
  void permute(std::size_t block) {
    if (block == blocks_.size()) {
      evaluate();
      return;
    }
    auto lo = order_.begin() + static_cast<std::ptrdiff_t>(blocks_[block].first);
    auto hi = order_.begin() + static_cast<std::ptrdiff_t>(blocks_[block].second);
    do {
      permute(block + 1);
    } while (std::next_permutation(lo, hi));
  }

  void evaluate() {
    for (std::size_t i = 0; i < order_.size(); ++i)
      position_[static_cast<std::size_t>(order_[i])] = static_cast<int>(i) + 1;
    scratch_.clear();
    for (VertexSet e : h_.edges()) {
      VertexSet image;
      for (int v : e.vertices())
        image = image.with(position_[static_cast<std::size_t>(v)]);
      scratch_.push_back(image);
    }
    std::sort(scratch_.begin(), scratch_.end());
    if (best_.empty() || scratch_ < best_)
      best_ = scratch_;
  }

  const Hypergraph &h_;
  std::vector<int> order_;
  std::vector<std::pair<std::size_t, std::size_t>> blocks_;
  std::vector<int> position_;
  std::vector<VertexSet> scratch_;
  std::vector<VertexSet> best_;
};

} // namespace

Hypergraph canonical_form(const Hypergraph &h, std::uint64_t limit) {
  if (h.empty())
    return h;
  Canonicalizer c(h);
  if (c.orders() > limit)
    throw ParameterError("canonical form needs too many vertex orders");
  return Hypergraph(h.n(), h.k(), c.run());
}

bool isomorphic(const Hypergraph &a, const Hypergraph &b) {
  if (a.n() != b.n() || a.k() != b.k() || a.size() != b.size())
    return false;
  return canonical_form(a) == canonical_form(b);
}

} // namespace codegree
