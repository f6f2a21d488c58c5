#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cec/engine.hpp"
#include "cec/families.hpp"
#include "cec/oracle.hpp"
#include "cec/poly.hpp"

namespace cec {

enum class Verdict { confirmed, refuted, untested };

std::string_view verdict_name(Verdict v);

/// What a claim compares against ground truth.
enum class Quantity {
  cec,            // E_c(G, x) and/or E_c(G, 1)
  ec,             // edge cover polynomial and/or total
  spanning_trees, // lowest coefficient of E_c, by the matrix-tree theorem
  bounds,         // lowest exponent of E_c within [ceil(n/2), n-1]
  unimodal,       // E_c has a unimodal coefficient sequence
  internal_total, // asserted total equals the sum of asserted coefficients
};

struct Asserted {
  std::optional<Poly> poly;
  std::optional<BigInt> total;
  std::optional<std::string> property;
};

struct Claim {
  std::string id;
  std::string statement;
  std::string source;
  Quantity quantity = Quantity::cec;
  std::vector<FamilySpec> targets;
  std::function<Asserted(const FamilySpec&)> asserted;
  /// nullopt for report-only claims.
  std::optional<Verdict> expected = Verdict::confirmed;
};

struct ClaimReport {
  std::string id;
  std::string statement;
  Verdict verdict = Verdict::untested;
  std::optional<Verdict> expected;
  std::optional<FamilySpec> witness;
  /// Values at the witness, or at the last adjudicated target.
  Asserted asserted;
  Asserted ground_truth;
  std::string method;
  std::vector<std::string> tested;
  std::vector<std::string> untested;
  std::vector<std::string> notes;
  std::optional<double> runtime_ms;

  bool matches_expected() const { return !expected || *expected == verdict; }
};

struct RunOptions {
  OracleConfig oracle{};
  EngineConfig engine{};
  /// Claims adjudicated concurrently.
  int workers = 1;
  /// Record wall-clock time per claim (makes reports nondeterministic).
  bool timing = false;
};

/// Every registered claim, sorted by id.
const std::vector<Claim>& claim_registry();
std::vector<std::string> claim_ids();

/// Graphs used for the cross-checks and the unimodality scan.
std::vector<FamilySpec> standard_corpus();

/// Adjudicates the selected claims (all when the filter is empty). Ground
/// truth comes from the oracle within its edge budget, then from the engine
/// once it has passed its self-check against the oracle, else the target is
/// untested. Throws InvalidParameter for an unknown claim id.
std::vector<ClaimReport> run_claims(const std::set<std::string>& filter, const RunOptions& options);

/// Adjudicates one claim definition; exposed for tests.
ClaimReport adjudicate(const Claim& claim, const RunOptions& options);

/// Counting sanity bound: coefficient s of an E_c or edge cover polynomial
/// of a graph with m edges is at most C(m, s). Returns one message per
/// violation.
std::vector<std::string> counting_bound_violations(const Poly& p, std::size_t edge_count);

struct UnimodalityEntry {
  FamilySpec spec;
  std::optional<Poly> poly;
  std::string method;
  bool unimodal = false;
};

struct UnimodalityReport {
  std::vector<UnimodalityEntry> entries;
  std::size_t classified() const;
  std::vector<const UnimodalityEntry*> counterexamples() const;
  std::vector<const UnimodalityEntry*> unclassified() const;
};

UnimodalityReport scan_unimodality(const std::vector<FamilySpec>& corpus, const RunOptions& options);

enum class ReportFormat { text, json };

std::string emit_report(const std::vector<ClaimReport>& reports, ReportFormat format);
std::string emit_unimodality(const UnimodalityReport& report, ReportFormat format);

/// Ground truth E_c with the oracle-then-engine precedence; `method` receives
/// "oracle" or "engine". nullopt when neither could finish.
std::optional<Poly> ground_truth_cec(const Graph& g, const RunOptions& options, std::string* method = nullptr);

}  // namespace cec
