#include "codegree/vertex_set.hpp"

#include "codegree/errors.hpp"

namespace codegree {

namespace {
template <typename Range> VertexSet build(const Range &vertices) {
  VertexSet out;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices)
      throw ParameterError("vertex label out of range 1..64: " + std::to_string(v));
    out = out.with(v);
  }
  return out;
}
} // namespace

VertexSet VertexSet::of(std::initializer_list<int> vertices) { return build(vertices); }

VertexSet VertexSet::of(const std::vector<int> &vertices) { return build(vertices); }

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(size());
  for (Bits b = bits_; b != 0; b &= b - 1)
    out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.vertices()) {
    if (!first)
      out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

} // namespace codegree
