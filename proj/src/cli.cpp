#include "liedual/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "liedual/branching.hpp"
#include "liedual/errors.hpp"
#include "liedual/minrep.hpp"
#include "liedual/parallel.hpp"
#include "liedual/theta.hpp"

#ifndef LIEDUAL_FIXTURES_DIR
#define LIEDUAL_FIXTURES_DIR "fixtures"
#endif

namespace liedual {

namespace {

using json = nlohmann::json;

enum class Format { Json, Tsv, Pretty };

struct Options {
  Format format = Format::Pretty;
  unsigned jobs = 0;
  std::uint64_t budget = 0;
  std::string fixtures;
};

/// Everything a command produces. The JSON document is the primary form; the
/// pretty and TSV renderings are filled in alongside it.
struct Output {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  Report report;
  std::vector<std::string> pretty;
  std::vector<std::vector<std::string>> tsv;
};

json big_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json checks_json(const Report& r) {
  json out = json::array();
  for (const auto& c : r.checks)
    out.push_back({{"name", c.name}, {"status", c.pass ? "PASS" : "FAIL"}, {"expected", c.expected}, {"actual", c.actual}});
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

void emit(const Output& o, Format f, std::ostream& out) {
  switch (f) {
    case Format::Json: {
      const json doc = {{"command", o.command}, {"inputs", o.inputs}, {"result", o.result}, {"checks", checks_json(o.report)}};
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Tsv:
      for (const auto& row : o.tsv) out << join(row, "\t") << "\n";
      if (!o.report.checks.empty()) {
        out << "check\tstatus\texpected\tactual\n";
        for (const auto& c : o.report.checks)
          out << c.name << "\t" << (c.pass ? "PASS" : "FAIL") << "\t" << c.expected << "\t" << c.actual << "\n";
      }
      break;
    case Format::Pretty:
      for (const auto& line : o.pretty) out << line << "\n";
      for (const auto& c : o.report.checks)
        if (!c.pass) out << "FAIL " << c.name << ": expected " << c.expected << ", got " << c.actual << "\n";
      for (const auto& n : o.report.notes) out << "note: " << n << "\n";
      if (!o.report.checks.empty()) out << o.report.summary() << "\n";
      break;
  }
}

json terms_json(const FormalCharacter& c, const std::map<Weight, int>* signs = nullptr) {
  json out = json::array();
  for (const auto& [w, m] : c.terms) {
    json t = {{"weight", format_weight(c.group, w)}, {"multiplicity", m}};
    if (signs) {
      if (auto it = signs->find(w); it != signs->end()) t["sign"] = it->second;
    }
    out.push_back(std::move(t));
  }
  return out;
}

void tsv_terms(Output& o, const FormalCharacter& c, const std::map<Weight, int>* signs = nullptr) {
  o.tsv.push_back(signs ? std::vector<std::string>{"weight", "multiplicity", "sign"}
                        : std::vector<std::string>{"weight", "multiplicity"});
  for (const auto& [w, m] : c.terms) {
    std::vector<std::string> row{format_weight(c.group, w), std::to_string(m)};
    if (signs) {
      auto it = signs->find(w);
      row.push_back(it == signs->end() ? "" : std::to_string(it->second));
    }
    o.tsv.push_back(std::move(row));
  }
}

/// Drops the circle factors, for output restricted to a single charge.
FormalCharacter without_charges(const FormalCharacter& c) {
  GroupSpec g = c.group;
  g.circles = 0;
  FormalCharacter out(g);
  for (const auto& [w, m] : c.terms) out.add(Weight{w.parts, {}}, m);
  return out;
}

// dim ------------------------------------------------------------------------

Output cmd_dim(const std::string& group, const std::string& weight) {
  Output o;
  o.command = "dim";
  o.inputs = {{"group", group}, {"weight", weight}};
  const auto g = GroupSpec::parse(group);
  const auto w = make_weight(g, parse_weight(g, weight, true), true);
  const BigInt d = dimension(g, w);
  o.result = {{"weight", format_weight(g, w)}, {"dimension", big_to_json(d)}};
  o.pretty = {d.str()};
  o.tsv = {{"group", "weight", "dimension"}, {g.label(), format_weight(g, w), d.str()}};
  return o;
}

// branch ---------------------------------------------------------------------

Output cmd_branch(const std::string& name, const std::vector<std::string>& params, bool generic,
                  std::optional<std::int64_t> charge) {
  Output o;
  o.command = "branch";
  o.inputs = {{"name", name}, {"params", params}, {"generic", generic}};
  if (charge) o.inputs["charge"] = *charge;
  const auto& ids = rule_ids();
  if (std::find(ids.begin(), ids.end(), name) != ids.end()) {
    std::vector<Rational> args;
    for (const auto& p : params) args.push_back(parse_rational(p));
    const auto ev = evaluate_rule(name, args, charge, generic);
    const BigInt source_dim = dimension(ev.source_group, ev.source);
    const FormalCharacter closed = charge ? without_charges(ev.closed) : ev.closed;
    const auto* signs = ev.signs.empty() ? nullptr : &ev.signs;
    o.result = {{"rule", name},
                {"embedding", ev.embedding},
                {"source", format_weight(ev.source_group, ev.source)},
                {"source_dimension", big_to_json(source_dim)},
                {"terms", terms_json(closed, signs)},
                {"text", format_character(closed)}};
    o.pretty.push_back("source: " + format_weight(ev.source_group, ev.source) + " (dim " + source_dim.str() + ")");
    if (charge) o.pretty.push_back("charge: " + std::to_string(*charge));
    o.pretty.push_back(format_character(closed));
    tsv_terms(o, closed, signs);
    if (!charge) o.report.add("dimension", closed.dimension() == source_dim, source_dim.str(), closed.dimension().str());
    if (ev.generic) {
      const FormalCharacter g = charge ? without_charges(*ev.generic) : *ev.generic;
      const bool match = g == closed;
      o.result["generic"] = {{"terms", terms_json(g)}, {"text", format_character(g)}};
      o.result["match"] = match;
      o.pretty.push_back("generic: " + format_character(g));
      o.pretty.push_back(match ? "MATCH" : "MISMATCH");
      o.report.add("generic", match, format_character(closed), format_character(g));
    }
    return o;
  }
  const auto& e = embedding(name);
  if (params.size() != 1) throw InputError("embedding " + name + " takes one highest weight of " + e.big.label());
  const auto res = restrict_generic(e, parse_weight(e.big, params[0], true));
  const FormalCharacter dec = charge ? [&] {
    if (e.small.circles == 0) throw InputError("--charge needs an embedding with a circle factor");
    FormalCharacter block(e.small);
    for (const auto& [w, m] : res.decomposition.terms)
      if (w.charges[0] == Rational(*charge)) block.add(w, m);
    return without_charges(block);
  }()
                                     : res.decomposition;
  o.result = {{"embedding", e.name},
              {"source", format_weight(e.big, res.source)},
              {"source_dimension", big_to_json(res.source_dimension)},
              {"terms", terms_json(dec)},
              {"text", format_character(dec)}};
  o.pretty.push_back("source: " + format_weight(e.big, res.source) + " (dim " + res.source_dimension.str() + ")");
  o.pretty.push_back(format_character(dec));
  tsv_terms(o, dec);
  if (!charge)
    o.report.add("dimension", dec.dimension() == res.source_dimension, res.source_dimension.str(), dec.dimension().str());
  return o;
}

// verify ---------------------------------------------------------------------

const std::vector<std::string>& suites() {
  static const std::vector<std::string> s = {"tables", "rules", "split-mult", "infchar", "quasisplit-mult", "signs"};
  return s;
}

Report run_suite(const std::string& suite, std::optional<int> max_level, int max_n, const std::string& fixtures) {
  if (suite == "tables") {
    Report r;
    for (auto k : {TableKind::Split, TableKind::Quasisplit}) r.append(verify_table(load_table(fixture_path(fixtures, k), k)));
    return r;
  }
  if (suite == "rules") {
    Report r;
    for (const auto& id : rule_ids()) r.append(verify_rule(id, max_level.value_or(4)));
    return r;
  }
  if (suite == "split-mult") return verify_split_multiplicity(12, max_level.value_or(8));
  if (suite == "infchar") return verify_infchar(max_n);
  if (suite == "quasisplit-mult") return compare_ps_vs_stabilized(12, 4, max_level.value_or(12));
  if (suite == "signs") return verify_sign_rules(max_level.value_or(6));
  throw InputError("unknown suite '" + suite + "'");
}

Output cmd_verify(const std::string& suite, std::optional<int> max_level, int max_n, const std::string& fixtures) {
  Output o;
  o.command = "verify";
  o.inputs = {{"suite", suite}, {"max_n", max_n}};
  if (max_level) o.inputs["max_level"] = *max_level;
  if (max_level && *max_level < 0) throw InputError("--max-level must be non-negative");
  if (max_n < 0) throw InputError("--max-n must be non-negative");
  const std::vector<std::string> chosen = suite == "all" ? suites() : std::vector<std::string>{suite};
  json per_suite = json::object();
  for (const auto& s : chosen) {
    const Report r = run_suite(s, max_level, max_n, fixtures);
    per_suite[s] = r.summary();
    o.pretty.push_back(s + ": " + r.summary());
    o.report.append(r);
  }
  o.result = {{"suites", per_suite}, {"summary", o.report.summary()}, {"notes", o.report.notes}};
  return o;
}

// minrep ---------------------------------------------------------------------

std::optional<DualPairCase> try_dualpair(const std::string& name) {
  try {
    return parse_dualpair_case(name);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

std::int64_t count_type(const FormalCharacter& level, const Weight& type, const std::optional<Rational>& charge) {
  std::int64_t total = 0;
  for (const auto& [w, m] : level.terms)
    if (w.parts == type.parts && (!charge || (!w.charges.empty() && w.charges[0] == *charge))) total += m;
  return total;
}

void levels_output(Output& o, const GradedCharacter& g) {
  json levels = json::array();
  o.tsv.push_back({"n", "weight", "multiplicity", "sign"});
  for (std::size_t n = 0; n < g.levels.size(); ++n) {
    const auto& level = g.levels[n];
    const auto* signs = g.has_signs() ? &g.signs[n] : nullptr;
    levels.push_back({{"n", n},
                      {"dimension", big_to_json(level.dimension())},
                      {"terms", terms_json(level, signs)},
                      {"text", format_character(level)}});
    o.pretty.push_back("n=" + std::to_string(n) + ": " + format_character(level));
    for (const auto& [w, m] : level.terms) {
      std::string sign;
      if (signs)
        if (auto it = signs->find(w); it != signs->end()) sign = std::to_string(it->second);
      o.tsv.push_back({std::to_string(n), format_weight(level.group, w), std::to_string(m), sign});
    }
  }
  o.result["levels"] = std::move(levels);
}

void series_output(Output& o, const MultiplicitySeries& s) {
  o.result["target"] = s.target;
  o.result["kind"] = s.kind == SeriesKind::Cumulative ? "cumulative" : "graded";
  o.result["series"] = s.values;
  o.result["first_level"] = s.first_level ? json(*s.first_level) : json(nullptr);
  o.result["stabilized"] = s.stabilized;
  o.result["onset"] = s.onset;
  const auto verdict = verify_growth(s);
  o.result["growth"] = {{"accepted", verdict.accepted}, {"bound", verdict.bound}, {"reason", verdict.reason}};
  std::vector<std::string> vals;
  for (auto v : s.values) vals.push_back(std::to_string(v));
  o.pretty.push_back("type: " + s.target);
  o.pretty.push_back("series: " + join(vals, " "));
  o.pretty.push_back("first_level: " + (s.first_level ? std::to_string(*s.first_level) : std::string("none")));
  o.pretty.push_back("stabilized: " + std::to_string(s.stabilized) + " from n=" + std::to_string(s.onset));
  o.pretty.push_back("growth: " + std::string(verdict.accepted ? "accepted" : "rejected") + " (bound " +
                     std::to_string(verdict.bound) + ")");
  o.tsv.push_back({"n", "multiplicity"});
  for (std::size_t n = 0; n < s.values.size(); ++n) o.tsv.push_back({std::to_string(n), vals[n]});
  o.tsv.push_back({"# first_level", s.first_level ? std::to_string(*s.first_level) : "none"});
  o.tsv.push_back({"# stabilized", std::to_string(s.stabilized)});
  o.tsv.push_back({"# onset", std::to_string(s.onset)});
}

Output cmd_minrep(const std::string& name, int N, const std::optional<std::string>& type_text,
                  const std::optional<std::string>& charge_text) {
  Output o;
  o.command = "minrep";
  o.inputs = {{"case", name}, {"max_level", N}};
  if (type_text) o.inputs["type"] = *type_text;
  if (charge_text) o.inputs["charge"] = *charge_text;
  if (N < 0) throw InputError("--max-level must be non-negative");
  std::optional<Rational> charge;
  if (charge_text) charge = parse_rational(*charge_text);
  o.result["case"] = name;

  if (const auto dp = try_dualpair(name)) {
    GroupSpec bare = case_group(*dp);
    bare.circles = 0;
    if (!type_text) {
      if (charge) throw InputError("--charge needs --type");
      levels_output(o, dualpair_graded(*dp, N));
      return o;
    }
    const Weight type = parse_weight(bare, *type_text, true);
    const auto s = multiplicity_series(*dp, type, charge, N);
    series_output(o, s);
    try {
      if (charge && *charge != Rational(0)) throw NotCovered("sign rules apply at charge 0 only");
      const auto sign = sign_first_appearance(*dp, type, N);
      o.result["sign"] = {{"tag", to_string(sign.tag)}, {"first_level", sign.first_level}, {"value", sign.sign}};
      o.pretty.push_back("tag: " + to_string(sign.tag) + " (first level " + std::to_string(sign.first_level) + ")");
      o.tsv.push_back({"# tag", to_string(sign.tag)});
    } catch (const NotCovered& e) {
      o.result["sign"] = {{"tag", "not-covered"}, {"reason", e.what()}};
      o.pretty.push_back("tag: not-covered");
      o.tsv.push_back({"# tag", "not-covered"});
    }
    return o;
  }

  const auto mc = parse_minrep_case(name);
  const auto graded = minrep_levels(mc, N);
  if (!type_text) {
    if (charge) throw InputError("--charge needs --type");
    levels_output(o, graded);
    return o;
  }
  GroupSpec bare = case_group(mc);
  bare.circles = 0;
  const Weight type = make_weight(bare, parse_weight(bare, *type_text, true), true);
  MultiplicitySeries s;
  s.target = format_weight(bare, type) + (charge ? "[" + to_string(*charge) + "]" : "");
  for (const auto& level : graded.levels) s.values.push_back(count_type(level, type, charge));
  for (std::size_t n = 0; n < s.values.size(); ++n)
    if (s.values[n] > 0) {
      s.first_level = static_cast<int>(n);
      break;
    }
  if (!s.values.empty()) {
    s.stabilized = s.values.back();
    s.onset = static_cast<int>(s.values.size()) - 1;
    while (s.onset > 0 && s.values[s.onset - 1] == s.stabilized) --s.onset;
  }
  series_output(o, s);
  return o;
}

void emit_error(const std::string& command, const std::string& kind, const std::string& message, Format f,
                std::ostream& out, std::ostream& err) {
  if (f == Format::Json) {
    const json doc = {{"command", command},
                      {"inputs", json::object()},
                      {"result", nullptr},
                      {"checks", json::array()},
                      {"error", {{"kind", kind}, {"message", message}}}};
    out << doc.dump(2) << "\n";
  }
  err << "error (" << kind << "): " << message << "\n";
}

const char* kExitHelp =
    "Exit codes:\n"
    "  0  success, all checks passed\n"
    "  1  a check failed (the report is still printed)\n"
    "  2  invalid input: unknown group, rule, case or suite, malformed or non-dominant weight,\n"
    "     missing fixtures\n"
    "  3  a restriction produced a negative multiplicity\n"
    "  4  a restriction exceeded the dimension budget (--budget or LIEDUAL_BUDGET)\n";

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact weight, branching and K-type computations for compact Lie groups", "liedual"};
  app.footer(kExitHelp);
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("LIEDUAL_FIXTURES"); env && *env) opt.fixtures = env;
  else opt.fixtures = LIEDUAL_FIXTURES_DIR;
  std::string format = "pretty";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv", "pretty"}));
  app.add_option("--jobs", opt.jobs, "Worker threads for sweeps (0 = all cores)");
  app.add_option("--budget", opt.budget, "Largest source dimension restrict_generic will expand")
      ->check(CLI::PositiveNumber);
  app.add_option("--fixtures", opt.fixtures, "Directory holding the table fixtures");

  auto* dim = app.add_subcommand("dim", "Weyl dimension of an irreducible representation");
  std::string group, weight;
  dim->add_option("group", group, "Group label, e.g. C4 or C2xA1")->required();
  dim->add_option("weight", weight, "Highest weight, e.g. 1,1,1,1 or (1,0)x2")->required();

  auto* branch = app.add_subcommand("branch", "Restrict a representation along a rule or catalog embedding");
  std::string branch_name;
  std::vector<std::string> params;
  bool generic = false;
  std::optional<std::int64_t> branch_charge;
  branch->add_option("name", branch_name, "Rule id or embedding name")->required();
  branch->add_option("params", params, "Rule parameters, or one highest weight for an embedding");
  branch->add_flag("--generic", generic, "Also run the generic restriction and compare");
  branch->add_option("--charge", branch_charge, "Keep only one U(1) charge block");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  std::optional<int> max_level;
  int max_n = 10;
  verify->add_option("suite", suite, "tables | rules | split-mult | infchar | quasisplit-mult | signs | all");
  verify->add_option("--max-level", max_level, "Parameter range or truncation level of the sweeps");
  verify->add_option("--max-n", max_n, "Largest n for the infinitesimal character check");

  auto* minrep = app.add_subcommand("minrep", "K-type levels and multiplicity series of a model");
  std::string case_text;
  int N = 12;
  std::optional<std::string> type_text, charge_text;
  minrep->add_option("case", case_text,
                     "split-E6 | hermitian-E6 | e62-compact | splitJ-splitE | splitJ-mixedE | hermJ-mixedE | e62-spin8")
      ->required();
  minrep->add_option("--max-level", N, "Truncation level N");
  minrep->add_option("--type", type_text, "K-type without charges, e.g. 0,0,0,0 or (2,0)x0");
  minrep->add_option("--charge", charge_text, "U(1) charge of the type");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? kExitOk : kExitInputError;
  }
  opt.format = format == "json" ? Format::Json : format == "tsv" ? Format::Tsv : Format::Pretty;
  set_workers(opt.jobs);
  set_default_budget(opt.budget);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Output o;
    if (command == "dim") o = cmd_dim(group, weight);
    else if (command == "branch") o = cmd_branch(branch_name, params, generic, branch_charge);
    else if (command == "verify") o = cmd_verify(suite, max_level, max_n, opt.fixtures);
    else o = cmd_minrep(case_text, N, type_text, charge_text);
    emit(o, opt.format, out);
    return o.report.ok() ? kExitOk : kExitCheckFailed;
  } catch (const NegativeMultiplicity& e) {
    emit_error(command, "negative-multiplicity", e.what(), opt.format, out, err);
    return kExitNegativeMultiplicity;
  } catch (const BudgetExceeded& e) {
    emit_error(command, "budget-exceeded", e.what(), opt.format, out, err);
    return kExitBudgetExceeded;
  } catch (const InputError& e) {
    emit_error(command, "input", e.what(), opt.format, out, err);
    return kExitInputError;
  } catch (const NotCovered& e) {
    emit_error(command, "not-covered", e.what(), opt.format, out, err);
    return kExitInputError;
  } catch (const std::exception& e) {
    emit_error(command, "internal", e.what(), opt.format, out, err);
    return kExitCheckFailed;
  }
}

}  // namespace liedual
