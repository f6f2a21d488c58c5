#include "cec/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

#include "cec/errors.hpp"
#include "cec/formulas.hpp"

namespace cec {
namespace {

// Engine results are used only after the engine reproduces the oracle on
// these graphs in the current process.
bool engine_trusted(const RunOptions& options) {
  static std::once_flag once;
  static bool trusted = false;
  std::call_once(once, [&] {
    OracleConfig oracle = options.oracle;
    oracle.max_edges = 63;
    const std::vector<FamilySpec> probes = {
        {Family::complete, {5}}, {Family::wheel, {6}},        {Family::fan, {6}},
        {Family::turan, {6, 3}}, {Family::cocktail_party, {3}}, {Family::hypercube, {3}},
        {Family::lollipop, {4, 2}},
    };
    trusted = std::all_of(probes.begin(), probes.end(), [&](const FamilySpec& s) {
      const Graph g = generate(s);
      return cec_poly_engine(g, options.engine) == cec_poly_oracle(g, oracle);
    });
  });
  return trusted;
}

struct Truth {
  std::optional<Poly> poly;
  std::optional<BigInt> total;
  std::string method;
  std::string failure;
};

Truth cec_truth(const Graph& g, const RunOptions& options) {
  Truth t;
  std::string method;
  try {
    t.poly = ground_truth_cec(g, options, &method);
    t.method = method;
  } catch (const Error& e) {
    t.failure = e.what();
  }
  if (!t.poly && t.failure.empty()) t.failure = "graph exceeds oracle budget and engine unavailable";
  return t;
}

Truth ec_truth(const Graph& g, const RunOptions& options) {
  Truth t;
  try {
    if (static_cast<int>(g.edge_count()) <= options.oracle.max_edges) {
      t.poly = ec_poly_oracle(g, options.oracle);
      t.method = "oracle";
    } else {
      t.poly = ec_poly_coverage_dp(g);
      t.method = "coverage-dp";
    }
  } catch (const Error& e) {
    t.failure = e.what();
  }
  return t;
}

bool same(const Asserted& asserted, const Truth& truth) {
  if (asserted.poly && *asserted.poly != *truth.poly) return false;
  if (asserted.total && *asserted.total != eval_int(*truth.poly, 1)) return false;
  return true;
}

Asserted as_values(const Truth& t) {
  Asserted a;
  a.poly = t.poly;
  a.total = t.total;
  if (t.poly && !t.total) a.total = eval_int(*t.poly, 1);
  return a;
}

void add_method(std::vector<std::string>& methods, const std::string& m) {
  if (std::find(methods.begin(), methods.end(), m) == methods.end()) methods.push_back(m);
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::confirmed:
      return "CONFIRMED";
    case Verdict::refuted:
      return "REFUTED";
    case Verdict::untested:
      return "UNTESTED";
  }
  return "UNTESTED";
}

std::optional<Poly> ground_truth_cec(const Graph& g, const RunOptions& options, std::string* method) {
  if (static_cast<int>(g.edge_count()) <= options.oracle.max_edges && g.vertex_count() <= 64) {
    if (method) *method = "oracle";
    return cec_poly_oracle(g, options.oracle);
  }
  if (!engine_trusted(options)) return std::nullopt;
  if (method) *method = "engine";
  return cec_poly_engine(g, options.engine);
}

std::vector<std::string> counting_bound_violations(const Poly& p, std::size_t edge_count) {
  std::vector<std::string> out;
  const auto& c = p.coeffs();
  for (std::size_t s = 0; s < c.size(); ++s) {
    BigInt limit = s <= edge_count ? binomial(static_cast<unsigned>(edge_count), static_cast<unsigned>(s)) : BigInt(0);
    if (c[s] > limit) {
      out.push_back("asserted coefficient " + c[s].str() + " at x^" + std::to_string(s) + " exceeds C(" +
                    std::to_string(edge_count) + "," + std::to_string(s) + ") = " + limit.str());
    }
  }
  return out;
}

ClaimReport adjudicate(const Claim& claim, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ClaimReport r;
  r.id = claim.id;
  r.statement = claim.statement;
  r.expected = claim.expected;
  std::vector<std::string> methods;
  bool refuted = false;

  for (const FamilySpec& spec : claim.targets) {
    const Graph g = generate(spec);
    const Asserted asserted = claim.asserted(spec);
    const std::string label = to_string(spec);

    if (claim.quantity == Quantity::internal_total) {
      const BigInt sum = eval_int(*asserted.poly, 1);
      add_method(methods, "internal");
      r.tested.push_back(label);
      r.asserted = Asserted{std::nullopt, asserted.total, std::nullopt};
      r.ground_truth = Asserted{std::nullopt, sum, std::nullopt};
      r.notes.push_back("sum of asserted coefficients is " + sum.str() + ", asserted total is " +
                        asserted.total->str());
      if (sum != *asserted.total) {
        r.witness = spec;
        refuted = true;
        break;
      }
      continue;
    }

    // pure counting argument, independent of any enumeration
    if (asserted.poly) {
      auto violations = counting_bound_violations(*asserted.poly, g.edge_count());
      if (!violations.empty()) {
        for (auto& v : violations) r.notes.push_back(label + ": " + v);
        add_method(methods, "counting-bound");
      }
    }

    Truth truth;
    bool agree = false;
    switch (claim.quantity) {
      case Quantity::cec:
      case Quantity::bounds:
      case Quantity::unimodal:
        truth = cec_truth(g, options);
        break;
      case Quantity::ec:
        truth = ec_truth(g, options);
        break;
      case Quantity::spanning_trees:
        truth.total = spanning_tree_count(g);
        truth.method = "kirchhoff";
        break;
      case Quantity::internal_total:
        break;
    }
    if (!truth.poly && !truth.total) {
      r.untested.push_back(label);
      r.notes.push_back(label + ": untested (" + truth.failure + ")");
      continue;
    }
    add_method(methods, truth.method);
    r.tested.push_back(label);

    switch (claim.quantity) {
      case Quantity::cec:
      case Quantity::ec:
        agree = same(asserted, truth);
        r.asserted = asserted;
        r.ground_truth = as_values(truth);
        break;
      case Quantity::spanning_trees:
        agree = *asserted.total == *truth.total;
        r.asserted = asserted;
        r.ground_truth = Asserted{std::nullopt, truth.total, std::nullopt};
        break;
      case Quantity::bounds: {
        agree = bounds_check(g, *truth.poly);
        const int n = g.vertex_count();
        auto lo = truth.poly->min_exponent();
        r.asserted = asserted;
        r.ground_truth = Asserted{truth.poly, std::nullopt,
                                  "rho_c = " + (lo ? std::to_string(*lo) : std::string("none")) + ", range [" +
                                      std::to_string((n + 1) / 2) + "," + std::to_string(n - 1) + "]"};
        break;
      }
      case Quantity::unimodal:
        agree = is_unimodal(*truth.poly);
        r.asserted = asserted;
        r.ground_truth = Asserted{truth.poly, std::nullopt, agree ? "unimodal" : "not unimodal"};
        break;
      case Quantity::internal_total:
        break;
    }
    if (!agree || (asserted.poly && !counting_bound_violations(*asserted.poly, g.edge_count()).empty())) {
      r.witness = spec;
      refuted = true;
      break;
    }
  }

  if (refuted)
    r.verdict = Verdict::refuted;
  else if (!r.tested.empty())
    r.verdict = Verdict::confirmed;
  else
    r.verdict = Verdict::untested;

  for (std::size_t i = 0; i < methods.size(); ++i) r.method += (i ? "+" : "") + methods[i];
  if (r.method.empty()) r.method = "none";
  if (options.timing) {
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

std::vector<ClaimReport> run_claims(const std::set<std::string>& filter, const RunOptions& options) {
  options.oracle.validate();
  const auto& registry = claim_registry();
  for (const std::string& id : filter) {
    bool known = std::any_of(registry.begin(), registry.end(), [&](const Claim& c) { return c.id == id; });
    if (!known) throw InvalidParameter("unknown claim id '" + id + "'");
  }
  std::vector<const Claim*> selected;
  for (const Claim& c : registry)
    if (filter.empty() || filter.count(c.id)) selected.push_back(&c);

  std::vector<ClaimReport> reports(selected.size());
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < selected.size();) {
      try {
        reports[i] = adjudicate(*selected[i], options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int workers = std::max(1, std::min<int>(options.workers, static_cast<int>(selected.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

std::size_t UnimodalityReport::classified() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.poly.has_value(); }));
}

std::vector<const UnimodalityEntry*> UnimodalityReport::counterexamples() const {
  std::vector<const UnimodalityEntry*> out;
  for (const auto& e : entries)
    if (e.poly && !e.unimodal) out.push_back(&e);
  return out;
}

std::vector<const UnimodalityEntry*> UnimodalityReport::unclassified() const {
  std::vector<const UnimodalityEntry*> out;
  for (const auto& e : entries)
    if (!e.poly) out.push_back(&e);
  return out;
}

UnimodalityReport scan_unimodality(const std::vector<FamilySpec>& corpus, const RunOptions& options) {
  UnimodalityReport report;
  report.entries.resize(corpus.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) {
      UnimodalityEntry& e = report.entries[i];
      e.spec = corpus[i];
      try {
        e.poly = ground_truth_cec(generate(corpus[i]), options, &e.method);
      } catch (const Error& err) {
        e.method = std::string("failed: ") + err.what();
      }
      if (!e.poly && e.method.empty()) e.method = "unavailable";
      e.unimodal = e.poly && is_unimodal(*e.poly);
    }
  };
  const int workers = std::max(1, std::min<int>(options.workers, static_cast<int>(corpus.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return report;
}

}  // namespace cec
