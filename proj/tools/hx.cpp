// hx: command-line front end for the codegree library.
//
// Exit codes: 0 success / PASS, 1 property false / FAIL, 2 usage or input
// error, 3 search budget exhausted, 4 internal error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "codegree/bounds.hpp"
#include "codegree/core.hpp"
#include "codegree/errors.hpp"
#include "codegree/families.hpp"
#include "codegree/props.hpp"
#include "codegree/report.hpp"
#include "codegree/search.hpp"
#include "codegree/subsets.hpp"
#include "codegree/text_format.hpp"
#include "codegree/verify.hpp"

using namespace codegree;

namespace {

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kUncertified = 3, kInternal = 4 };

struct Globals {
  bool json = false;
  bool timing = false;
  int workers = 1;
};

int workers_from_env() {
  const char *raw = std::getenv("HX_THREADS");
  if (raw == nullptr || *raw == '\0')
    return 1;
  try {
    std::size_t used = 0;
    const int w = std::stoi(raw, &used);
    if (used == std::string(raw).size() && w >= 1 && w <= 256)
      return w;
  } catch (const std::exception &) {
  }
  throw ParameterError("HX_THREADS must be an integer in 1..256");
}

std::string str(long long v) { return std::to_string(v); }

// ---- human output ----------------------------------------------------------

void print_value(std::ostream &out, const std::string &key, const Json &v, int indent);

void print_object(std::ostream &out, const Json &obj, int indent) {
  for (const auto &[key, value] : obj.items())
    print_value(out, key, value, indent);
}

void print_value(std::ostream &out, const std::string &key, const Json &v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object() && v.contains("text")) {
    out << pad << key << ":\n";
    std::istringstream lines(v["text"].get<std::string>());
    for (std::string line; std::getline(lines, line);)
      out << pad << "  " << line << "\n";
  } else if (v.is_object()) {
    out << pad << key << ":\n";
    print_object(out, v, indent + 2);
  } else if (v.is_array()) {
    out << pad << key << ": " << (v.empty() ? "(none)" : "") << "\n";
    for (std::size_t i = 0; i < v.size(); ++i)
      print_value(out, "[" + std::to_string(i + 1) + "]", v[i], indent + 2);
  } else if (v.is_string()) {
    out << pad << key << ": " << v.get<std::string>() << "\n";
  } else if (v.is_null()) {
    out << pad << key << ": -\n";
  } else {
    out << pad << key << ": " << v.dump() << "\n";
  }
}

void emit(const Globals &g, const Report &r) {
  if (g.json) {
    std::cout << r.dump();
    return;
  }
  print_object(std::cout, r.outputs, 0);
  if (r.certification.contains("certified") && !r.certification["certified"].get<bool>())
    std::cout << "certified: false (budget exhausted)\n";
}

using Clock = std::chrono::steady_clock;

void add_elapsed(const Globals &g, Report &r, Clock::time_point started) {
  if (!g.timing)
    return;
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
  r.timing["elapsed_ms"] = std::to_string(ms.count());
}

Report make_report(const Globals &g, std::string command) {
  Report r;
  r.command = std::move(command);
  r.workers = g.workers;
  r.certification["certified"] = true;
  return r;
}

// ---- family ----------------------------------------------------------------

struct FamilyArgs {
  std::string type;
  int n = 0;
  int k = 0;
  std::optional<int> t;
  std::optional<int> s;
  std::string output;
};

FamilySpec family_spec(const FamilyArgs &a) {
  const auto need = [&](const std::optional<int> &v, const char *flag) {
    if (!v)
      throw ParameterError("--type " + a.type + " needs " + flag);
    return *v;
  };
  if (a.type == "star")
    return FamilySpec::star(a.n, a.k, need(a.t, "--t"));
  if (a.type == "b")
    return FamilySpec::b(a.n, a.k, need(a.s, "--s"));
  if (a.type == "hm")
    return FamilySpec::hilton_milner(a.n, a.k, a.t.value_or(1));
  if (a.type == "a")
    return FamilySpec::a(a.n, a.k, a.t.value_or(1));
  if (a.type == "fano")
    return FamilySpec::fano();
  if (a.type == "complete")
    return FamilySpec::complete(a.n, a.k);
  if (a.type == "empty")
    return FamilySpec::empty(a.n, a.k);
  throw ParameterError("unknown family type '" + a.type + "'");
}

int cmd_family(const Globals &g, const FamilyArgs &a) {
  const FamilySpec spec = family_spec(a);
  spec.validate();
  const Hypergraph h = build(spec);
  Report r = make_report(g, "family");
  r.inputs["spec"] = spec.describe();
  if (!a.output.empty()) {
    write_hypergraph(a.output, h);
    r.inputs["output"] = a.output;
    r.outputs["edge_count"] = str(static_cast<long long>(h.size()));
    if (g.json)
      std::cout << r.dump();
    return kOk;
  }
  if (g.json) {
    r.outputs["family"] = hypergraph_json(h);
    std::cout << r.dump();
  } else {
    std::cout << format_hypergraph(h);
  }
  return kOk;
}

// ---- co2 -------------------------------------------------------------------

int cmd_co2(const Globals &g, const std::string &path, std::optional<int> ell_opt) {
  const Hypergraph h = read_hypergraph(path);
  const int ell = ell_opt.value_or(h.k() - 1);
  const CodegreeVector v = codegree_vector(h, ell);
  Report r = make_report(g, "co2");
  r.inputs["file"] = path;
  r.inputs["ell"] = str(ell);
  r.outputs["n"] = str(h.n());
  r.outputs["k"] = str(h.k());
  r.outputs["edge_count"] = str(static_cast<long long>(h.size()));
  r.outputs["sum_codegree"] = to_string(v.l1());
  r.outputs["co2"] = to_string(v.squared_l2());
  emit(g, r);
  return kOk;
}

// ---- check -----------------------------------------------------------------

struct CheckArgs {
  std::string path;
  std::string prop;
  int t = 1;
  int d = 3;
  std::optional<int> s;
  std::string pattern;
};

PatternSpec pattern_arg(const std::string &text) {
  const auto colon = text.find(':');
  if (text.empty() || colon == std::string::npos)
    throw ParameterError("--pattern expects KIND:LENGTH, e.g. minimal-cycle:3");
  PatternSpec p;
  p.kind = parse_pattern_kind(text.substr(0, colon));
  try {
    std::size_t used = 0;
    const std::string len = text.substr(colon + 1);
    p.length = std::stoi(len, &used);
    if (used != len.size())
      throw std::invalid_argument("trailing");
  } catch (const std::exception &) {
    throw ParameterError("bad pattern length in '" + text + "'");
  }
  return p;
}

Json witness_json(const Hypergraph &h, const Witness &w) {
  Json edges = Json::array();
  for (std::size_t i : w.edges)
    edges.push_back(to_string(h[i]));
  return edges;
}

int cmd_check(const Globals &g, const CheckArgs &a) {
  const Hypergraph h = read_hypergraph(a.path);
  Report r = make_report(g, "check");
  r.inputs["file"] = a.path;
  r.inputs["prop"] = a.prop;
  std::optional<bool> holds;
  if (a.prop == "intersecting") {
    r.inputs["t"] = str(a.t);
    holds = is_t_intersecting(h, a.t);
  } else if (a.prop == "dwise") {
    r.inputs["d"] = str(a.d);
    r.inputs["t"] = str(a.t);
    holds = is_d_wise_t_intersecting(h, a.d, a.t);
  } else if (a.prop == "nontrivial") {
    r.inputs["t"] = str(a.t);
    const bool t_int = is_t_intersecting(h, a.t);
    const VertexSet common = h.empty() ? VertexSet{} : common_intersection(h);
    r.outputs["common_intersection"] = to_string(common);
    holds = !h.empty() && t_int && common.size() < a.t;
  } else if (a.prop == "matching") {
    const Witness w = maximum_matching(h.edges());
    r.outputs["matching_number"] = str(static_cast<long long>(w.edges.size()));
    r.outputs["witness"] = witness_json(h, w);
    if (a.s) {
      r.inputs["s"] = str(*a.s);
      holds = static_cast<int>(w.edges.size()) <= *a.s;
    }
  } else if (a.prop == "covering") {
    const VertexSet cover = minimum_cover(h.edges());
    r.outputs["covering_number"] = str(cover.size());
    r.outputs["cover"] = to_string(cover);
    if (a.s) {
      r.inputs["s"] = str(*a.s);
      holds = cover.size() <= *a.s;
    }
  } else if (a.prop == "pattern-free" || a.prop == "contains") {
    const PatternSpec p = pattern_arg(a.pattern);
    r.inputs["pattern"] = p.describe();
    const auto w = find_pattern(h, p);
    r.outputs["witness"] = w ? witness_json(h, *w) : Json(nullptr);
    holds = (a.prop == "contains") == w.has_value();
  } else {
    throw ParameterError("unknown property '" + a.prop + "'");
  }
  if (holds)
    r.outputs["result"] = *holds ? "PASS" : "FAIL";
  emit(g, r);
  return holds && !*holds ? kFalse : kOk;
}

// ---- bound -----------------------------------------------------------------

struct BoundArgs {
  std::string kind;
  std::string path;
  int n = 0;
  int k = 0;
  int t = 1;
  int s = 1;
  int u = 0;
  std::optional<int> ell;
  std::string m;
  std::string pi;
};

int cmd_bound(const Globals &g, const BoundArgs &a) {
  Report r = make_report(g, "bound");
  r.inputs["kind"] = a.kind;
  const auto nk = [&] {
    r.inputs["n"] = str(a.n);
    r.inputs["k"] = str(a.k);
  };
  if (a.kind == "bey") {
    if (!a.path.empty()) {
      const Hypergraph h = read_hypergraph(a.path);
      r.inputs["file"] = a.path;
      const int ell = a.ell.value_or(h.k() - 1);
      r.inputs["ell"] = str(ell);
      r.outputs = bound_report_json(check_bey(h, ell));
    } else {
      nk();
      if (!a.ell || a.m.empty())
        throw ParameterError("bound bey needs --ell and --m (or a file)");
      const Rational m = parse_rational(a.m);
      if (boost::multiprecision::denominator(m) != 1)
        throw ParameterError("--m must be an integer");
      r.inputs["ell"] = str(*a.ell);
      r.inputs["m"] = a.m;
      r.outputs["value"] =
          to_string(bey_rhs(a.n, a.k, *a.ell, boost::multiprecision::numerator(m)));
    }
  } else if (a.kind == "report") {
    if (a.path.empty())
      throw ParameterError("bound report needs a file");
    r.inputs["file"] = a.path;
    r.outputs = bound_report_json(bound_report(read_hypergraph(a.path)));
  } else if (a.kind == "ekr-l2") {
    nk();
    r.outputs["value"] = ekr_l2_bound(a.n, a.k).str();
  } else if (a.kind == "t-star-l2") {
    nk();
    r.inputs["t"] = str(a.t);
    r.outputs["value"] = t_star_l2_bound(a.n, a.k, a.t).str();
  } else if (a.kind == "sigma-upper") {
    r.inputs["pi"] = a.pi;
    r.inputs["k"] = str(a.k);
    r.outputs["value"] = to_string(sigma_upper(parse_rational(a.pi), a.k));
  } else if (a.kind == "de-caen") {
    r.inputs["t"] = str(a.t);
    r.inputs["k"] = str(a.k);
    r.outputs["value"] = to_string(de_caen_pi(a.t, a.k));
  } else if (a.kind == "sigma-kt") {
    r.inputs["t"] = str(a.t);
    r.inputs["k"] = str(a.k);
    r.outputs["value"] = to_string(sigma_Kt(a.t, a.k));
  } else {
    const L1Bound which = parse_l1_bound(a.kind);
    const L1Result l1 = l1_bound(which, {a.n, a.k, a.t, a.s, a.u});
    r.inputs["n"] = str(which == L1Bound::FranklKupavskii ? l1.n : a.n);
    r.inputs["k"] = str(a.k);
    r.inputs["t"] = str(a.t);
    r.inputs["s"] = str(a.s);
    if (which == L1Bound::FranklKupavskii)
      r.inputs["u"] = str(a.u);
    r.outputs["value"] = to_string(l1.value);
    r.outputs["valid"] = l1.valid;
    r.outputs["hypothesis"] = l1.hypothesis;
  }
  emit(g, r);
  return kOk;
}

// ---- search / verify -------------------------------------------------------

struct LimitArgs {
  std::uint64_t node_budget = SearchLimits{}.node_budget;
  std::int64_t time_budget_ms = 0;
  std::size_t max_optima = 64;

  SearchLimits to_limits(int workers) const {
    SearchLimits l;
    l.node_budget = node_budget;
    l.time_budget = std::chrono::milliseconds(time_budget_ms);
    l.workers = workers;
    l.max_optima = max_optima;
    return l;
  }
};

struct SearchArgs {
  int n = 0;
  int k = 0;
  std::vector<std::string> constraints;
  std::string mode = "bnb";
  std::optional<int> nontrivial;
  bool no_l1_caps = false;
  bool no_prune = false;
  bool allow_large = false;
  LimitArgs limits;
};

int cmd_search(const Globals &g, const SearchArgs &a) {
  SearchProblem p;
  p.n = a.n;
  p.k = a.k;
  std::vector<Constraint> parts;
  for (const auto &c : a.constraints)
    parts.push_back(parse_constraint(c));
  p.constraint = parts.size() == 1 ? parts.front() : Constraint::all_of(parts);
  if (a.mode == "brute")
    p.mode = SearchMode::BruteForce;
  else if (a.mode != "bnb")
    throw ParameterError("--mode must be bnb or brute");
  p.limits = a.limits.to_limits(g.workers);
  p.limits.allow_large_brute_force = a.allow_large;
  p.nontrivial_below = a.nontrivial;
  p.use_l1_caps = !a.no_l1_caps;
  p.prune = !a.no_prune;

  const auto started = Clock::now();
  const SearchResult res = max_co2(p);
  Report r = make_report(g, "search");
  r.workers = res.workers;
  r.inputs["n"] = str(a.n);
  r.inputs["k"] = str(a.k);
  r.inputs["constraint"] = p.constraint.describe();
  r.inputs["mode"] = a.mode;
  r.inputs["nontrivial_below"] = a.nontrivial ? Json(str(*a.nontrivial)) : Json(nullptr);
  r.inputs["l1_caps"] = p.use_l1_caps;
  r.inputs["prune"] = p.prune;
  r.inputs["node_budget"] = std::to_string(p.limits.node_budget);
  r.inputs["max_optima"] = std::to_string(p.limits.max_optima);
  r.outputs = search_outputs_json(res);
  r.timing = search_stats_json(res.stats);
  add_elapsed(g, r, started);
  r.certification["certified"] = res.certified;
  emit(g, r);
  return res.certified ? kOk : kUncertified;
}

struct VerifyArgs {
  std::string claim;
  int n = 0;
  int k = 0;
  int s = 2;
  int t = 1;
  bool no_search = false;
  LimitArgs limits;
};

int cmd_verify(const Globals &g, const VerifyArgs &a) {
  ClaimParams p;
  p.n = a.n;
  p.k = a.k;
  p.s = a.s;
  p.t = a.t;
  p.run_search = !a.no_search;
  p.limits = a.limits.to_limits(g.workers);
  const auto started = Clock::now();
  const ClaimReport c = verify_claim(a.claim, p);
  Report r = make_report(g, "verify");
  r.workers = c.search ? c.search->workers : g.workers;
  r.inputs = claim_inputs_json(c);
  r.outputs = claim_outputs_json(c);
  if (c.search)
    r.timing = search_stats_json(c.search->stats);
  add_elapsed(g, r, started);
  r.certification["certified"] = !c.search || c.search->certified;
  emit(g, r);
  switch (c.verdict) {
  case Verdict::Pass:
  case Verdict::Report:
    return kOk;
  case Verdict::Fail:
    return kFalse;
  case Verdict::Uncertified:
    return kUncertified;
  }
  return kInternal;
}

// ---- random ----------------------------------------------------------------

struct RandomArgs {
  int n = 0;
  int k = 0;
  std::string p = "1/2";
  std::uint64_t seed = 1;
  std::string output;
};

// Test-corpus generator: each k-set is an edge independently with
// probability p. Uses raw mt19937_64 output so files are identical across
// standard libraries.
int cmd_random(const Globals &g, const RandomArgs &a) {
  check_dimensions(a.n, a.k);
  if (binom64(a.n, a.k) > (std::uint64_t{1} << 22))
    throw ParameterError("too many k-sets to sample");
  const Rational p = parse_rational(a.p);
  if (p < 0 || p > 1)
    throw ParameterError("--p must lie in [0, 1]");
  const BigInt num = boost::multiprecision::numerator(p);
  const BigInt den = boost::multiprecision::denominator(p);
  std::mt19937_64 rng(a.seed);
  std::vector<VertexSet> edges;
  for_each_subset(a.n, a.k, [&](VertexSet e) {
    if (BigInt(rng() % 1'000'000'007ULL) * den < num * 1'000'000'007ULL)
      edges.push_back(e);
  });
  const Hypergraph h(a.n, a.k, std::move(edges));
  Report r = make_report(g, "random");
  r.inputs["n"] = str(a.n);
  r.inputs["k"] = str(a.k);
  r.inputs["p"] = to_string(p);
  r.inputs["seed"] = std::to_string(a.seed);
  if (!a.output.empty()) {
    write_hypergraph(a.output, h);
    r.inputs["output"] = a.output;
    r.outputs["edge_count"] = str(static_cast<long long>(h.size()));
    if (g.json)
      std::cout << r.dump();
  } else if (g.json) {
    r.outputs["family"] = hypergraph_json(h);
    std::cout << r.dump();
  } else {
    std::cout << format_hypergraph(h);
  }
  return kOk;
}

void add_limit_flags(CLI::App *cmd, LimitArgs &l) {
  cmd->add_option("--node-budget", l.node_budget, "Node budget (default 1e9)");
  cmd->add_option("--time-budget-ms", l.time_budget_ms, "Wall-clock budget, 0 = none")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-optima", l.max_optima, "Optimal families to keep")
      ->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Codegree squared sums of k-uniform hypergraphs"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Print a JSON report");
  app.add_flag("--timing", g.timing, "Include wall-clock time in reports");

  FamilyArgs fam;
  auto *family = app.add_subcommand("family", "Build a named family");
  family->add_option("--type", fam.type, "star|b|hm|a|fano|complete|empty")->required();
  family->add_option("--n", fam.n);
  family->add_option("--k", fam.k);
  family->add_option("--t", fam.t);
  family->add_option("--s", fam.s);
  family->add_option("-o,--output", fam.output, "Output file (default stdout)");

  std::string co2_path;
  std::optional<int> co2_ell;
  auto *co2_cmd = app.add_subcommand("co2", "Codegree sums of a hypergraph file");
  co2_cmd->add_option("file", co2_path)->required();
  co2_cmd->add_option("--ell", co2_ell, "Subset size (default k-1)");

  CheckArgs chk;
  auto *check = app.add_subcommand("check", "Test a property of a hypergraph file");
  check->add_option("file", chk.path)->required();
  check->add_option("--prop", chk.prop,
                    "intersecting|dwise|nontrivial|matching|covering|pattern-free|contains")
      ->required();
  check->add_option("--t", chk.t);
  check->add_option("--d", chk.d);
  check->add_option("--s", chk.s, "Upper limit for matching/covering number");
  check->add_option("--pattern", chk.pattern, "KIND:LENGTH, e.g. linear-cycle:3");

  BoundArgs bnd;
  auto *bound = app.add_subcommand("bound", "Evaluate a bound");
  bound->add_option("kind", bnd.kind,
                    "bey|report|ekr-l2|t-star-l2|ekr|t-ekr|hm|t-hm|emc|fk|sigma-upper|de-caen|"
                    "sigma-kt")
      ->required();
  bound->add_option("file", bnd.path);
  bound->add_option("--n", bnd.n);
  bound->add_option("--k", bnd.k);
  bound->add_option("--t", bnd.t);
  bound->add_option("--s", bnd.s);
  bound->add_option("--u", bnd.u);
  bound->add_option("--ell", bnd.ell);
  bound->add_option("--m", bnd.m);
  bound->add_option("--pi", bnd.pi);

  SearchArgs srch;
  auto *search = app.add_subcommand("search", "Maximise co2 under constraints");
  search->add_option("--n", srch.n)->required();
  search->add_option("--k", srch.k)->required();
  search->add_option("--constraint", srch.constraints,
                     "t-intersecting:T | dwise:D:T | matching:S | free:KIND:LEN (repeatable)");
  search->add_option("--mode", srch.mode, "bnb|brute");
  search->add_option("--nontrivial", srch.nontrivial,
                     "Require common intersection smaller than this");
  search->add_flag("--no-l1-caps", srch.no_l1_caps);
  search->add_flag("--no-prune", srch.no_prune);
  search->add_flag("--override", srch.allow_large, "Allow brute force beyond 30 edges");
  add_limit_flags(search, srch.limits);

  VerifyArgs ver;
  auto *verify = app.add_subcommand("verify", "Run a prepackaged claim check");
  verify->add_option("claim", ver.claim)->required();
  verify->add_option("--n", ver.n);
  verify->add_option("--k", ver.k);
  verify->add_option("--s", ver.s);
  verify->add_option("--t", ver.t);
  verify->add_flag("--no-search", ver.no_search, "hm-l2-conjecture: closed forms only");
  add_limit_flags(verify, ver.limits);

  RandomArgs rnd;
  auto *random = app.add_subcommand("random", "Random hypergraph for test corpora");
  random->add_option("--n", rnd.n)->required();
  random->add_option("--k", rnd.k)->required();
  random->add_option("--p", rnd.p, "Edge probability, e.g. 1/3");
  random->add_option("--seed", rnd.seed);
  random->add_option("-o,--output", rnd.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    g.workers = workers_from_env();
    if (*family)
      return cmd_family(g, fam);
    if (*co2_cmd)
      return cmd_co2(g, co2_path, co2_ell);
    if (*check)
      return cmd_check(g, chk);
    if (*bound)
      return cmd_bound(g, bnd);
    if (*search)
      return cmd_search(g, srch);
    if (*verify)
      return cmd_verify(g, ver);
    if (*random)
      return cmd_random(g, rnd);
  } catch (const ParseError &e) {
    std::cerr << "hx: " << e.what() << "\n";
    return kUsage;
  } catch (const ParameterError &e) {
    std::cerr << "hx: " << e.what() << "\n";
    return kUsage;
  } catch (const std::ios_base::failure &e) {
    std::cerr << "hx: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "hx: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
