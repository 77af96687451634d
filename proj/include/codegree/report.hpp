#pragma once

#include <string>

#include <json.hpp>

#include "codegree/bounds.hpp"
#include "codegree/hypergraph.hpp"
#include "codegree/search.hpp"
#include "codegree/verify.hpp"

namespace codegree {

using Json = nlohmann::ordered_json;

inline constexpr const char *kSchemaVersion = "1";

/// Every number is rendered as a string: integers in decimal, rationals as
/// "p/q" in lowest terms.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  Json timing = Json::object();
  Json certification = Json::object();
  int workers = 1;

  Json to_json() const;
  /// Two-space indented, trailing newline.
  std::string dump() const;
};

Json hypergraph_json(const Hypergraph &h);
Json bound_report_json(const BoundReport &r);
Json named_bound_json(const NamedBound &b);
/// Optimum and optima; node statistics go to search_stats_json.
Json search_outputs_json(const SearchResult &r);
Json search_stats_json(const SearchStats &s);
Json claim_outputs_json(const ClaimReport &r);
Json claim_inputs_json(const ClaimReport &r);

} // namespace codegree
