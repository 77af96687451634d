#include "codegree/families.hpp"

#include <vector>

#include "codegree/errors.hpp"
#include "codegree/subsets.hpp"
#include "codegree/text_format.hpp"

namespace codegree {

namespace {

constexpr std::uint64_t kMaxEnumerated = std::uint64_t{1} << 25;

void require(bool ok, const FamilySpec &spec, const char *what) {
  if (!ok)
    throw ParameterError(spec.describe() + ": " + what);
}

void check_enumerable(int n, int ell) {
  if (binom64(n, ell) > kMaxEnumerated)
    throw ParameterError("family too large to enumerate: C(" + std::to_string(n) + "," +
                         std::to_string(ell) + ") sets");
}

template <typename Keep> std::vector<VertexSet> filter_all(int n, int k, Keep keep) {
  check_enumerable(n, k);
  std::vector<VertexSet> out;
  for_each_subset(n, k, [&](VertexSet f) {
    if (keep(f))
      out.push_back(f);
  });
  return out;
}

const char *kind_name(FamilyKind kind) {
  switch (kind) {
  case FamilyKind::Empty: return "empty";
  case FamilyKind::Complete: return "complete";
  case FamilyKind::Star: return "star";
  case FamilyKind::B: return "b";
  case FamilyKind::HiltonMilner: return "hm";
  case FamilyKind::A: return "a";
  case FamilyKind::Fano: return "fano";
  case FamilyKind::FromFile: return "file";
  }
  return "?";
}

} // namespace

void FamilySpec::validate() const {
  if (kind == FamilyKind::FromFile)
    return;
  if (kind == FamilyKind::Fano) {
    require(n == 7 && k == 3, *this, "the Fano plane needs n=7, k=3");
    return;
  }
  check_dimensions(n, k);
  switch (kind) {
  case FamilyKind::Star:
    require(1 <= param && param <= k, *this, "star needs 1 <= t <= k");
    break;
  case FamilyKind::B:
    require(1 <= param && param <= n, *this, "B needs 1 <= s <= n");
    break;
  case FamilyKind::HiltonMilner:
    require(1 <= param && param < k && n >= k + 1, *this,
            "Hilton-Milner family needs 1 <= t < k and n >= k+1");
    break;
  case FamilyKind::A:
    require(1 <= param && param <= k - 1 && n >= param + 2, *this,
            "A needs 1 <= t <= k-1 and n >= t+2");
    break;
  default:
    break;
  }
}

std::string FamilySpec::describe() const {
  if (kind == FamilyKind::FromFile)
    return std::string("file(") + path.string() + ")";
  std::string out = std::string(kind_name(kind)) + "(n=" + std::to_string(n) +
                    ",k=" + std::to_string(k);
  if (kind == FamilyKind::Star || kind == FamilyKind::HiltonMilner || kind == FamilyKind::A)
    out += ",t=" + std::to_string(param);
  else if (kind == FamilyKind::B)
    out += ",s=" + std::to_string(param);
  return out + ")";
}

Hypergraph build(const FamilySpec &spec) {
  spec.validate();
  const int n = spec.n;
  const int k = spec.k;
  const int p = spec.param;
  switch (spec.kind) {
  case FamilyKind::Empty:
    return Hypergraph(n, k);
  case FamilyKind::Complete:
    return Hypergraph(n, k, filter_all(n, k, [](VertexSet) { return true; }));
  case FamilyKind::Star: {
    const VertexSet core = VertexSet::first(p);
    const VertexSet rest = VertexSet::interval(p + 1, n);
    check_enumerable(n - p, k - p);
    std::vector<VertexSet> edges;
    for_each_subset_of(rest, k - p, [&](VertexSet tail) { edges.push_back(core | tail); });
    return Hypergraph(n, k, std::move(edges));
  }
  case FamilyKind::B: {
    const VertexSet core = VertexSet::first(p);
    return Hypergraph(n, k, filter_all(n, k, [&](VertexSet f) { return f.intersects(core); }));
  }
  case FamilyKind::HiltonMilner: {
    const VertexSet core = VertexSet::first(p);
    const VertexSet window = VertexSet::interval(p + 1, k + 1);
    auto edges = filter_all(n, k, [&](VertexSet f) {
      return core.subset_of(f) && f.intersects(window);
    });
    const VertexSet top = VertexSet::first(k + 1);
    for (int i = 1; i <= p; ++i)
      edges.push_back(top.without(i));
    return Hypergraph(n, k, std::move(edges));
  }
  case FamilyKind::A: {
    const VertexSet core = VertexSet::first(p + 2);
    return Hypergraph(n, k,
                      filter_all(n, k, [&](VertexSet f) { return overlap(f, core) >= p + 1; }));
  }
  case FamilyKind::Fano:
    return Hypergraph(7, 3,
                      {VertexSet::of({1, 2, 3}), VertexSet::of({1, 4, 5}), VertexSet::of({1, 6, 7}),
                       VertexSet::of({2, 4, 6}), VertexSet::of({2, 5, 7}), VertexSet::of({3, 4, 7}),
                       VertexSet::of({3, 5, 6})});
  case FamilyKind::FromFile:
    return read_hypergraph(spec.path);
  }
  throw ParameterError("unknown family kind");
}

BigInt co2_star_closed(int n, int k, int t) {
  if (!(1 <= t && t <= k && k < n))
    throw ParameterError("co2_star_closed needs 1 <= t <= k < n");
  return binom(n - t, k - t) * (t + BigInt(n - k + 1) * (k - t));
}

BigInt co2_B_closed(int n, int k, int s) {
  if (!(1 <= s && s <= n && 1 <= k && k < n))
    throw ParameterError("co2_B_closed needs 1 <= s <= n and k < n");
  const BigInt untouched = binom(n - s, k - 1);
  const BigInt width = n - k + 1;
  return BigInt(s) * s * untouched + width * width * (binom(n, k - 1) - untouched);
}

FamilySize family_size(const FamilySpec &spec) {
  FamilySize out;
  out.count = build(spec).size();
  const int n = spec.n;
  const int k = spec.k;
  const int t = spec.param;
  if (spec.kind == FamilyKind::A || spec.kind == FamilyKind::HiltonMilner) {
    const BigInt factor = spec.kind == FamilyKind::A ? t + 2 : k - t + 1;
    const BigInt main_term = factor * binom(n, k - t - 1);
    out.main_term_ratio = Rational(BigInt(out.count), main_term);
  }
  return out;
}

} // namespace codegree
