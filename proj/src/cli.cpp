#include "cec/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cec/engine.hpp"
#include "cec/errors.hpp"
#include "cec/families.hpp"
#include "cec/formulas.hpp"
#include "cec/oracle.hpp"
#include "cec/verify.hpp"

namespace cec {
namespace {

using nlohmann::ordered_json;

enum class Method { automatic, oracle, engine, formula };
enum class OutputFormat { text, json, csv };

constexpr std::size_t kMaxTableRows = 10000;

struct Context {
  int workers = 1;
  int max_oracle_edges = 26;
  bool stats = false;
  std::ostream* err = nullptr;

  OracleConfig oracle() const {
    OracleConfig c;
    c.max_edges = max_oracle_edges;
    c.workers = workers;
    c.validate();
    return c;
  }
  EngineConfig engine() const {
    EngineConfig c;
    c.workers = workers;
    return c;
  }
};

// Families whose closed form has been checked against exhaustive enumeration.
bool formula_trusted(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::path:
    case Family::star:
    case Family::cycle:
    case Family::complete_bipartite:
    case Family::friendship:
    case Family::lollipop:
      return true;
    case Family::cocktail_party:
      return spec.params[0] == 2;
    default:
      return false;
  }
}

bool formula_refuted(const FamilySpec& spec) {
  return spec.family == Family::fan || spec.family == Family::wheel ||
         (spec.family == Family::cocktail_party && spec.params[0] >= 3);
}

Poly run_engine(const Graph& g, const Context& ctx) {
  EngineStats stats;
  Poly p = cec_poly_engine(g, ctx.engine(), &stats);
  if (ctx.stats) {
    *ctx.err << "engine: memo hits " << stats.hits << ", misses " << stats.misses << ", peak entries "
             << stats.peak_entries << ", steps " << stats.steps << '\n';
  }
  return p;
}

FormulaResult run_formula(const FamilySpec& spec, const Context& ctx) {
  std::optional<Poly> km;
  if (spec.family == Family::lollipop) km = run_engine(generate({Family::complete, {spec.params[0]}}), ctx);
  auto r = formula_for(spec, km);
  if (!r) throw InvalidParameter("no closed form available for " + to_string(spec));
  return *r;
}

Poly compute(const Graph& g, const std::optional<FamilySpec>& spec, Method method, const Context& ctx) {
  switch (method) {
    case Method::oracle:
      return cec_poly_oracle(g, ctx.oracle());
    case Method::engine:
      return run_engine(g, ctx);
    case Method::formula: {
      if (!spec) throw InvalidParameter("--method formula needs a named family");
      if (formula_refuted(*spec))
        *ctx.err << "note: the closed form for " << to_string(*spec) << " is known to be wrong\n";
      auto r = run_formula(*spec, ctx);
      if (!r.poly) throw InvalidParameter("no closed-form polynomial for " + to_string(*spec));
      return *r.poly;
    }
    case Method::automatic:
      break;
  }
  if (spec && formula_trusted(*spec)) {
    auto r = run_formula(*spec, ctx);
    if (r.poly) return *r.poly;
  }
  if (spec && formula_refuted(*spec))
    *ctx.err << "note: skipping the closed form for " << to_string(*spec) << " (refuted); using the engine\n";
  try {
    return run_engine(g, ctx);
  } catch (const ResourceLimit&) {
    if (static_cast<int>(g.edge_count()) > ctx.max_oracle_edges) throw;
    return cec_poly_oracle(g, ctx.oracle());
  } catch (const BudgetExceeded&) {
    if (static_cast<int>(g.edge_count()) > ctx.max_oracle_edges) throw;
    return cec_poly_oracle(g, ctx.oracle());
  }
}

BigInt compute_total(const Graph& g, const FamilySpec& spec, Method method, const Context& ctx) {
  if (method == Method::formula) {
    if (formula_refuted(spec))
      *ctx.err << "note: the closed form for " << to_string(spec) << " is known to be wrong\n";
    auto r = run_formula(spec, ctx);
    if (r.total) return *r.total;
    return eval_int(*r.poly, 1);
  }
  return eval_int(compute(g, spec, method, ctx), 1);
}

ordered_json poly_json(const std::string& label, const Graph& g, const Poly& p) {
  ordered_json j;
  j["graph"] = label;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["coefficients"] = coefficient_strings(p);
  auto lo = p.min_exponent();
  auto hi = p.degree();
  j["min_exp"] = lo ? ordered_json(*lo) : ordered_json(nullptr);
  j["degree"] = hi ? ordered_json(*hi) : ordered_json(nullptr);
  j["total"] = eval_int(p, 1).str();
  j["unimodal"] = is_unimodal(p);
  return j;
}

std::string opt_int(std::optional<int> v) { return v ? std::to_string(*v) : std::string("none"); }

void print_poly(std::ostream& out, OutputFormat format, const std::string& label, const Graph& g, const Poly& p) {
  switch (format) {
    case OutputFormat::text:
      out << to_string(p) << " ; total " << eval_int(p, 1) << '\n';
      out << "min_exp " << opt_int(p.min_exponent()) << " ; degree " << opt_int(p.degree()) << " ; unimodal "
          << (is_unimodal(p) ? "yes" : "no") << '\n';
      break;
    case OutputFormat::json:
      out << poly_json(label, g, p).dump(2) << '\n';
      break;
    case OutputFormat::csv: {
      out << "index,value\n";
      const auto coeffs = coefficient_strings(p);
      for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << ',' << coeffs[i] << '\n';
      break;
    }
  }
}

FamilySpec parse_family(const std::string& name, const std::vector<std::string>& params) {
  auto f = family_from_name(name);
  if (!f) throw InvalidParameter("unknown family '" + name + "'");
  FamilySpec spec{*f, {}};
  for (const auto& s : params) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw InvalidParameter("parameter '" + s + "' is not an integer");
    spec.params.push_back(v);
  }
  validate(spec);
  return spec;
}

std::vector<int> parse_tuple(const std::string& text) {
  static const std::regex tuple(R"(\s*\(?\s*(\d+(?:\s*,\s*\d+)*)\s*\)?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, tuple)) throw InvalidParameter("malformed range endpoint '" + text + "'");
  std::vector<int> out;
  std::string body = m[1];
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream is(body);
  for (long long v; is >> v;) {
    if (v > 1'000'000) throw InvalidParameter("range value " + std::to_string(v) + " too large");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

// "2..6", "(3,2)..(5,4)" or a single value; expands to the valid members of
// the component-wise box.
std::vector<FamilySpec> parse_range(Family family, const std::string& text) {
  const auto dots = text.find("..");
  const std::vector<int> lo = parse_tuple(text.substr(0, dots));
  const std::vector<int> hi = dots == std::string::npos ? lo : parse_tuple(text.substr(dots + 2));
  if (lo.size() != hi.size()) throw InvalidParameter("range endpoints differ in length");
  std::size_t count = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) throw InvalidParameter("empty range '" + text + "'");
    count *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
    if (count > kMaxTableRows) throw InvalidParameter("range '" + text + "' has too many members");
  }
  std::vector<FamilySpec> out;
  std::vector<int> cur = lo;
  while (true) {
    FamilySpec spec{family, cur};
    try {
      validate(spec);
      out.push_back(spec);
    } catch (const InvalidParameter&) {
    }
    std::size_t i = cur.size();
    while (i > 0 && cur[i - 1] == hi[i - 1]) {
      cur[i - 1] = lo[i - 1];
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  if (out.empty()) throw InvalidParameter("range '" + text + "' contains no valid " + std::string(family_name(family)));
  return out;
}

std::vector<FamilySpec> family_corpus(Family family, int max) {
  std::vector<FamilySpec> out;
  auto keep = [&](FamilySpec spec) {
    try {
      validate(spec);
      out.push_back(std::move(spec));
    } catch (const InvalidParameter&) {
    }
  };
  switch (family) {
    case Family::complete_bipartite:
      for (int a = 1; a <= max; ++a)
        for (int b = a; a + b <= max; ++b) keep({family, {a, b}});
      break;
    case Family::lollipop:
      for (int m = 2; m <= max; ++m)
        for (int n = 1; m + n <= max; ++n) keep({family, {m, n}});
      break;
    case Family::turan:
      for (int n = 3; n <= max; ++n)
        for (int k = 2; k < n; ++k) keep({family, {n, k}});
      break;
    case Family::complete_multipartite: {
      std::vector<int> parts;
      auto extend = [&](auto&& self, int cap, int left) -> void {
        if (parts.size() >= 2) keep({family, parts});
        for (int s = 1; s <= std::min(cap, left); ++s) {
          parts.push_back(s);
          self(self, s, left - s);
          parts.pop_back();
        }
      };
      extend(extend, max, max);
      break;
    }
    default:
      for (int v = 1; v <= max; ++v) keep({family, {v}});
  }
  return out;
}

Method parse_method(const std::string& s) {
  if (s == "oracle") return Method::oracle;
  if (s == "engine") return Method::engine;
  if (s == "formula") return Method::formula;
  return Method::automatic;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  return OutputFormat::text;
}

std::set<std::string> split_ids(const std::string& s) {
  std::set<std::string> out;
  std::istringstream is(s);
  for (std::string id; std::getline(is, id, ',');) {
    id.erase(0, id.find_first_not_of(" \t"));
    id.erase(id.find_last_not_of(" \t") + 1);
    if (!id.empty()) out.insert(id);
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact connected edge cover polynomials"};
  app.require_subcommand(1);

  Context ctx;
  ctx.err = &err;
  std::string method_name = "auto";
  std::string format_name = "text";

  std::vector<CLI::Option*> worker_flags;
  auto add_common = [&](CLI::App* sub) {
    worker_flags.push_back(
        sub->add_option("--workers", ctx.workers, "Worker threads (default $CEC_WORKERS, else 1)")->check(CLI::Range(1, 1024)));
    sub->add_option("--max-oracle-edges", ctx.max_oracle_edges, "Largest edge count enumerated exhaustively")
        ->check(CLI::Range(0, 63));
  };
  const std::vector<std::string> methods = {"auto", "oracle", "engine", "formula"};

  auto* poly = app.add_subcommand("poly", "Print E_c(G, x) for a family member or an edge-list file");
  std::vector<std::string> target;
  std::string file;
  poly->add_option("target", target, "Family name followed by its integer parameters");
  poly->add_option("--file", file, "Edge-list file");
  poly->add_option("--method", method_name)->check(CLI::IsMember(methods));
  poly->add_option("--format", format_name)->check(CLI::IsMember({"text", "json", "csv"}));
  poly->add_flag("--stats", ctx.stats, "Print engine memo statistics on stderr");
  add_common(poly);

  auto* verify = app.add_subcommand("verify", "Adjudicate the published claims");
  std::string claim_list;
  bool timing = false;
  verify->add_option("--claims", claim_list, "Comma-separated claim ids");
  verify->add_option("--format", format_name)->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timing", timing, "Record per-claim wall time");
  add_common(verify);

  auto* table = app.add_subcommand("table", "Tabulate a family over a parameter range");
  std::string table_family;
  std::string range;
  bool totals_only = false;
  table->add_option("family", table_family)->required();
  table->add_option("range", range, "a..b or (a,b)..(c,d)")->required();
  table->add_flag("--totals-only", totals_only);
  table->add_option("--method", method_name)->check(CLI::IsMember(methods));
  table->add_option("--format", format_name)->check(CLI::IsMember({"text", "json", "csv"}));
  add_common(table);

  auto* scan = app.add_subcommand("scan-unimodal", "Check unimodality over a corpus");
  std::string scan_family;
  int scan_max = 10;
  scan->add_option("--family", scan_family);
  scan->add_option("--max", scan_max)->check(CLI::Range(1, 64));
  scan->add_option("--format", format_name)->check(CLI::IsMember({"text", "json"}));
  add_common(scan);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const bool workers_given =
      std::any_of(worker_flags.begin(), worker_flags.end(), [](const CLI::Option* o) { return o->count() > 0; });
  if (const char* env = std::getenv("CEC_WORKERS"); env && *env && !workers_given) {
    const std::string value = env;
    std::size_t used = 0;
    int workers = 0;
    try {
      workers = std::stoi(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size() || workers < 1 || workers > 1024) {
      err << "error: CEC_WORKERS must be an integer in [1, 1024], got '" << value << "'\n";
      return 2;
    }
    ctx.workers = workers;
  }

  const Method method = parse_method(method_name);
  const OutputFormat format = parse_format(format_name);
  try {
    if (poly->parsed()) {
      if (file.empty() == target.empty()) throw InvalidParameter("give either a family or --file");
      if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw InvalidParameter("cannot open '" + file + "'");
        Graph g = parse_edge_list(in);
        print_poly(out, format, file, g, compute(g, std::nullopt, method, ctx));
      } else {
        FamilySpec spec = parse_family(target[0], {target.begin() + 1, target.end()});
        Graph g = generate(spec);
        print_poly(out, format, to_string(spec), g, compute(g, spec, method, ctx));
      }
      return 0;
    }

    if (verify->parsed()) {
      RunOptions options;
      options.oracle.max_edges = ctx.max_oracle_edges;
      options.workers = ctx.workers;
      options.timing = timing;
      auto reports = run_claims(split_ids(claim_list), options);
      out << emit_report(reports, format == OutputFormat::json ? ReportFormat::json : ReportFormat::text);
      const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.matches_expected(); });
      return ok ? 0 : 1;
    }

    if (table->parsed()) {
      auto family = family_from_name(table_family);
      if (!family) throw InvalidParameter("unknown family '" + table_family + "'");
      const auto specs = parse_range(*family, range);
      ordered_json rows = ordered_json::array();
      if (format == OutputFormat::csv) out << (totals_only ? "graph,total\n" : "graph,index,value\n");
      for (const auto& spec : specs) {
        const Graph g = generate(spec);
        const std::string label = to_string(spec);
        if (totals_only) {
          const BigInt total = compute_total(g, spec, method, ctx);
          if (format == OutputFormat::text) out << std::left << std::setw(20) << label << ' ' << total << '\n';
          if (format == OutputFormat::csv) out << '"' << label << "\"," << total << '\n';
          if (format == OutputFormat::json) rows.push_back({{"graph", label}, {"total", total.str()}});
          continue;
        }
        const Poly p = compute(g, spec, method, ctx);
        if (format == OutputFormat::text)
          out << std::left << std::setw(20) << label << ' ' << to_string(p) << " ; total " << eval_int(p, 1) << '\n';
        if (format == OutputFormat::csv) {
          const auto coeffs = coefficient_strings(p);
          for (std::size_t i = 0; i < coeffs.size(); ++i) out << '"' << label << "\"," << i << ',' << coeffs[i] << '\n';
        }
        if (format == OutputFormat::json) rows.push_back(poly_json(label, g, p));
      }
      if (format == OutputFormat::json) {
        ordered_json j;
        j["family"] = std::string(family_name(*family));
        j["rows"] = std::move(rows);
        out << j.dump(2) << '\n';
      }
      return 0;
    }

    if (scan->parsed()) {
      std::vector<FamilySpec> corpus;
      if (scan_family.empty()) {
        corpus = standard_corpus();
      } else {
        auto family = family_from_name(scan_family);
        if (!family) throw InvalidParameter("unknown family '" + scan_family + "'");
        corpus = family_corpus(*family, scan_max);
      }
      RunOptions options;
      options.oracle.max_edges = ctx.max_oracle_edges;
      options.workers = ctx.workers;
      out << emit_unimodality(scan_unimodality(corpus, options),
                              format == OutputFormat::json ? ReportFormat::json : ReportFormat::text);
      return 0;
    }
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 2;
}

}  // namespace cec
