#include "codegree/report.hpp"

#include "codegree/text_format.hpp"

namespace codegree {

namespace {
template <typename Int> std::string str(Int v) { return std::to_string(v); }
} // namespace

Json Report::to_json() const {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  j["timing"] = timing;
  j["certification"] = certification;
  j["workers"] = str(workers);
  return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

Json hypergraph_json(const Hypergraph &h) {
  Json j;
  j["n"] = str(h.n());
  j["k"] = str(h.k());
  j["edge_count"] = str(h.size());
  j["text"] = format_hypergraph(h);
  return j;
}

Json named_bound_json(const NamedBound &b) {
  Json j;
  j["name"] = b.name;
  j["quantity"] = b.quantity;
  j["value"] = to_string(b.value);
  j["valid"] = b.valid;
  j["hypothesis"] = b.hypothesis;
  j["slack"] = to_string(b.slack);
  return j;
}

Json bound_report_json(const BoundReport &r) {
  Json j;
  j["n"] = str(r.n);
  j["k"] = str(r.k);
  j["ell"] = str(r.ell);
  j["edge_count"] = str(r.edge_count);
  j["lhs"] = r.lhs.str();
  j["bey_rhs"] = to_string(r.bey_rhs);
  j["bey_slack"] = to_string(r.bey_slack);
  j["bounds"] = Json::array();
  for (const auto &b : r.bounds)
    j["bounds"].push_back(named_bound_json(b));
  return j;
}

Json search_outputs_json(const SearchResult &r) {
  Json j;
  j["optimum"] = r.optimum ? Json(to_string(*r.optimum)) : Json(nullptr);
  j["optimum_count"] = str(r.optimum_count);
  j["optima_truncated"] = r.optima_truncated;
  j["optima"] = Json::array();
  for (const auto &h : r.optima)
    j["optima"].push_back(hypergraph_json(h));
  return j;
}

Json search_stats_json(const SearchStats &s) {
  Json j;
  j["nodes"] = str(s.nodes);
  j["leaves"] = str(s.leaves);
  j["pruned"] = str(s.pruned);
  return j;
}

Json claim_inputs_json(const ClaimReport &r) {
  Json j;
  j["claim"] = r.claim;
  j["n"] = str(r.params.n);
  j["k"] = str(r.params.k);
  if (r.claim == "emc-ratio")
    j["s"] = str(r.params.s);
  if (r.claim == "t-int-l2-conjecture")
    j["t"] = str(r.params.t);
  if (!r.constraint.empty())
    j["constraint"] = r.constraint;
  return j;
}

Json claim_outputs_json(const ClaimReport &r) {
  const auto opt_bool = [](const std::optional<bool> &b) { return b ? Json(*b) : Json(nullptr); };
  Json j;
  j["claimed"] = to_string(r.claimed);
  j["computed"] = r.computed ? Json(to_string(*r.computed)) : Json(nullptr);
  j["match"] = r.match;
  j["unique"] = opt_bool(r.unique);
  j["star_attains"] = opt_bool(r.star_attains);
  j["optimum_classes"] = r.optimum_classes ? Json(str(*r.optimum_classes)) : Json(nullptr);
  j["hypothesis"] = r.hypothesis;
  j["hypotheses_hold"] = opt_bool(r.hypotheses_hold);
  j["verdict"] = std::string(verdict_name(r.verdict));
  Json facts = Json::object();
  for (const auto &[key, value] : r.facts)
    facts[key] = value;
  j["facts"] = facts;
  if (r.search) {
    j["optimum_count"] = str(r.search->optimum_count);
    j["optima_truncated"] = r.search->optima_truncated;
    j["certificates"] = Json::array();
    for (const auto &h : r.search->optima)
      j["certificates"].push_back(hypergraph_json(h));
  }
  return j;
}

} // namespace codegree
