#include "codegree/text_format.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "codegree/errors.hpp"

namespace codegree {

namespace {

// Splits on single spaces; any empty token (leading, trailing, doubled space)
// is rejected.
std::vector<int> parse_labels(std::string_view line, std::size_t line_no) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = line.find(' ', pos);
    const std::string_view token =
        line.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    if (token.empty())
      throw ParseError(line_no, "labels must be separated by single spaces");
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError(line_no, "not an integer: '" + std::string(token) + "'");
    out.push_back(value);
    if (end == std::string_view::npos)
      break;
    pos = end + 1;
  }
  return out;
}

} // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  std::optional<std::pair<int, int>> header;
  std::vector<VertexSet> edges;
  std::set<VertexSet> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    if (line.empty() || line.front() == '#')
      continue;

    const auto labels = parse_labels(line, line_no);
    if (!header) {
      if (labels.size() != 2)
        throw ParseError(line_no, "header must be 'n k'");
      try {
        check_dimensions(labels[0], labels[1]);
      } catch (const ParameterError &e) {
        throw ParseError(line_no, e.what());
      }
      header.emplace(labels[0], labels[1]);
      continue;
    }
    const auto [n, k] = *header;
    if (static_cast<int>(labels.size()) != k)
      throw ParseError(line_no, "expected " + std::to_string(k) + " labels, got " +
                                    std::to_string(labels.size()));
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] < 1 || labels[i] > n)
        throw ParseError(line_no, "label " + std::to_string(labels[i]) + " outside [" +
                                      std::to_string(n) + "]");
      if (i > 0 && labels[i] <= labels[i - 1])
        throw ParseError(line_no, "labels must be strictly increasing");
    }
    const VertexSet edge = VertexSet::of(labels);
    if (!seen.insert(edge).second)
      throw ParseError(line_no, "duplicate edge " + to_string(edge));
    edges.push_back(edge);
  }
  if (!header)
    throw ParseError(line_no, "missing 'n k' header");
  return Hypergraph(header->first, header->second, std::move(edges));
}

std::string format_hypergraph(const Hypergraph &h) {
  std::string out = std::to_string(h.n()) + " " + std::to_string(h.k()) + "\n";
  for (VertexSet e : h.edges()) {
    bool first = true;
    for (int v : e.vertices()) {
      if (!first)
        out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

Hypergraph read_hypergraph(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParameterError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_hypergraph(buffer.str());
}

void write_hypergraph(const std::filesystem::path &path, const Hypergraph &h) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ParameterError("cannot write " + path.string());
  out << format_hypergraph(h);
}

} // namespace codegree
