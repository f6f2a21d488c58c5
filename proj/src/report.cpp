#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "cec/verify.hpp"

namespace cec {
namespace {

using nlohmann::ordered_json;

ordered_json poly_json(const Poly& p) {
  ordered_json j;
  j["coefficients"] = coefficient_strings(p);
  auto lo = p.min_exponent();
  auto hi = p.degree();
  j["min_exp"] = lo ? ordered_json(*lo) : ordered_json(nullptr);
  j["degree"] = hi ? ordered_json(*hi) : ordered_json(nullptr);
  return j;
}

ordered_json values_json(const Asserted& a) {
  ordered_json j = ordered_json::object();
  if (a.poly) j["poly"] = poly_json(*a.poly);
  if (a.total) j["total"] = a.total->str();
  if (a.property) j["property"] = *a.property;
  return j;
}

std::string values_text(const Asserted& a) {
  std::string out;
  if (a.poly) out += to_string(*a.poly);
  if (a.total) out += (out.empty() ? "total " : " ; total ") + a.total->str();
  if (a.property) out += (out.empty() ? "" : " ; ") + *a.property;
  return out.empty() ? "-" : out;
}

struct Counts {
  std::size_t confirmed = 0, refuted = 0, untested = 0;
  bool all_match = true;
};

Counts count(const std::vector<ClaimReport>& reports) {
  Counts c;
  for (const auto& r : reports) {
    (r.verdict == Verdict::confirmed ? c.confirmed : r.verdict == Verdict::refuted ? c.refuted : c.untested)++;
    c.all_match = c.all_match && r.matches_expected();
  }
  return c;
}

std::string status(const std::vector<ClaimReport>& reports, const Counts& c) {
  if (reports.empty()) return "empty";
  if (c.refuted == 0 && c.untested == 0) return "all-confirmed";
  return c.all_match ? "as-expected" : "mismatch";
}

}  // namespace

std::string emit_report(const std::vector<ClaimReport>& reports, ReportFormat format) {
  const Counts c = count(reports);
  if (format == ReportFormat::json) {
    ordered_json claims = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json j;
      j["id"] = r.id;
      j["statement"] = r.statement;
      j["verdict"] = std::string(verdict_name(r.verdict));
      j["expected"] = r.expected ? ordered_json(std::string(verdict_name(*r.expected))) : ordered_json(nullptr);
      j["matches_expected"] = r.matches_expected();
      j["witness_params"] = r.witness ? ordered_json(to_string(*r.witness)) : ordered_json(nullptr);
      j["asserted"] = values_json(r.asserted);
      j["ground_truth"] = values_json(r.ground_truth);
      j["method"] = r.method;
      j["tested"] = r.tested;
      j["untested"] = r.untested;
      j["notes"] = r.notes;
      j["runtime_ms"] = r.runtime_ms ? ordered_json(*r.runtime_ms) : ordered_json(nullptr);
      claims.push_back(std::move(j));
    }
    ordered_json out;
    out["claims"] = std::move(claims);
    out["summary"] = {{"confirmed", c.confirmed},
                      {"refuted", c.refuted},
                      {"untested", c.untested},
                      {"status", status(reports, c)}};
    return out.dump(2) + "\n";
  }

  std::ostringstream os;
  for (const auto& r : reports) {
    os << std::left << std::setw(36) << r.id << ' ' << std::setw(9) << verdict_name(r.verdict);
    if (r.expected && *r.expected != r.verdict) os << " (expected " << verdict_name(*r.expected) << ")";
    if (!r.expected) os << " (report only)";
    os << "  [" << r.method << "]";
    if (r.runtime_ms) os << "  " << std::fixed << std::setprecision(1) << *r.runtime_ms << " ms";
    os << '\n';
    if (r.witness) {
      os << "    witness:      " << to_string(*r.witness) << '\n';
      os << "    asserted:     " << values_text(r.asserted) << '\n';
      os << "    ground truth: " << values_text(r.ground_truth) << '\n';
    }
    for (const auto& u : r.untested) os << "    untested: " << u << '\n';
    if (r.witness || r.verdict != Verdict::confirmed)
      for (const auto& n : r.notes) os << "    note: " << n << '\n';
  }
  os << "summary: " << c.confirmed << " confirmed, " << c.refuted << " refuted, " << c.untested << " untested ("
     << status(reports, c) << ")\n";
  return os.str();
}

std::string emit_unimodality(const UnimodalityReport& report, ReportFormat format) {
  const auto counter = report.counterexamples();
  const auto unclassified = report.unclassified();
  if (format == ReportFormat::json) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : report.entries) {
      ordered_json j;
      j["graph"] = to_string(e.spec);
      j["poly"] = e.poly ? poly_json(*e.poly) : ordered_json(nullptr);
      j["unimodal"] = e.poly ? ordered_json(e.unimodal) : ordered_json(nullptr);
      j["method"] = e.method;
      entries.push_back(std::move(j));
    }
    ordered_json out;
    out["entries"] = std::move(entries);
    out["summary"] = {{"graphs", report.entries.size()},
                      {"classified", report.classified()},
                      {"counterexamples", counter.size()},
                      {"unclassified", unclassified.size()}};
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& e : report.entries) {
    os << std::left << std::setw(28) << to_string(e.spec) << ' ';
    if (e.poly)
      os << (e.unimodal ? "unimodal    " : "NOT unimodal") << "  " << to_string(*e.poly) << '\n';
    else
      os << "unclassified  (" << e.method << ")\n";
  }
  os << "summary: " << report.entries.size() << " graphs, " << report.classified() << " classified, "
     << counter.size() << " counterexamples, " << unclassified.size() << " unclassified\n";
  return os.str();
}

}  // namespace cec
