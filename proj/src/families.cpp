#include "cec/families.hpp"

#include <array>
#include <string>

#include "cec/errors.hpp"

namespace cec {
namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
};

constexpr std::array<FamilyInfo, 13> kFamilies{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::star, "star"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::complete_multipartite, "complete_multipartite"},
    {Family::friendship, "friendship"},
    {Family::lollipop, "lollipop"},
    {Family::fan, "fan"},
    {Family::wheel, "wheel"},
    {Family::cocktail_party, "cocktail_party"},
    {Family::hypercube, "hypercube"},
    {Family::turan, "turan"},
}};

// Generated graphs are meant for exact enumeration; anything larger than this
// is certainly a typo.
constexpr long long kMaxVertices = 4096;

[[noreturn]] void fail(const FamilySpec& spec, const std::string& why) {
  throw InvalidParameter(std::string(family_name(spec.family)) + ": " + why);
}

void require_arity(const FamilySpec& spec, std::size_t arity) {
  if (spec.params.size() != arity) {
    fail(spec, "expected " + std::to_string(arity) + " parameter(s), got " + std::to_string(spec.params.size()));
  }
}

void require_min(const FamilySpec& spec, std::size_t index, int lo, const char* what) {
  if (spec.params[index] < lo) fail(spec, std::string(what) + " must be >= " + std::to_string(lo));
}

long long vertex_total(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::path:
    case Family::cycle:
    case Family::complete:
    case Family::fan:
    case Family::wheel:
    case Family::turan:
      return p[0];
    case Family::star:
      return static_cast<long long>(p[0]) + 1;
    case Family::complete_bipartite:
    case Family::complete_multipartite: {
      long long total = 0;
      for (int a : p) total += a;
      return total;
    }
    case Family::friendship:
      return 2LL * p[0] + 1;
    case Family::lollipop:
      return static_cast<long long>(p[0]) + p[1];
    case Family::cocktail_party:
      return 2LL * p[0];
    case Family::hypercube:
      return 1LL << p[0];
  }
  return 0;
}

Graph multipartite(const std::vector<int>& parts) {
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& info : kFamilies)
    if (info.family == f) return info.name;
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& info : kFamilies)
    if (info.name == name) return info.family;
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> out;
    for (const auto& info : kFamilies) out.push_back(info.family);
    return out;
  }();
  return families;
}

void validate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::path:
      require_arity(spec, 1);
      require_min(spec, 0, 1, "vertex count");
      break;
    case Family::cycle:
      require_arity(spec, 1);
      require_min(spec, 0, 3, "vertex count");
      break;
    case Family::star:
      require_arity(spec, 1);
      require_min(spec, 0, 1, "leaf count");
      break;
    case Family::complete:
      require_arity(spec, 1);
      require_min(spec, 0, 1, "vertex count");
      break;
    case Family::complete_bipartite:
      require_arity(spec, 2);
      require_min(spec, 0, 1, "part size");
      require_min(spec, 1, 1, "part size");
      break;
    case Family::complete_multipartite:
      if (spec.params.size() < 2) fail(spec, "expected at least 2 parts");
      for (std::size_t i = 0; i < spec.params.size(); ++i) require_min(spec, i, 1, "part size");
      break;
    case Family::friendship:
      require_arity(spec, 1);
      require_min(spec, 0, 1, "triangle count");
      break;
    case Family::lollipop:
      require_arity(spec, 2);
      require_min(spec, 0, 2, "clique size");
      require_min(spec, 1, 1, "path length");
      break;
    case Family::fan:
      require_arity(spec, 1);
      require_min(spec, 0, 3, "vertex count");
      break;
    case Family::wheel:
      require_arity(spec, 1);
      require_min(spec, 0, 4, "vertex count");
      break;
    case Family::cocktail_party:
      require_arity(spec, 1);
      require_min(spec, 0, 2, "pair count");
      break;
    case Family::hypercube:
      require_arity(spec, 1);
      require_min(spec, 0, 1, "dimension");
      if (spec.params[0] > 12) fail(spec, "dimension must be <= 12");
      break;
    case Family::turan:
      require_arity(spec, 2);
      require_min(spec, 1, 2, "part count");
      if (spec.params[1] >= spec.params[0]) fail(spec, "part count must be smaller than vertex count");
      break;
  }
  if (vertex_total(spec) > kMaxVertices) fail(spec, "more than " + std::to_string(kMaxVertices) + " vertices");
}

std::vector<int> turan_parts(int n, int k) {
  if (k < 2 || k >= n) throw InvalidParameter("turan: need 2 <= k < n");
  std::vector<int> parts(k, n / k);
  for (int i = 0; i < n % k; ++i) ++parts[i];
  return parts;
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::path: {
      for (int i = 0; i + 1 < p[0]; ++i) edges.push_back({i, i + 1});
      return Graph(p[0], std::move(edges));
    }
    case Family::cycle: {
      for (int i = 0; i + 1 < p[0]; ++i) edges.push_back({i, i + 1});
      edges.push_back({0, p[0] - 1});
      return Graph(p[0], std::move(edges));
    }
    case Family::star: {
      for (int i = 1; i <= p[0]; ++i) edges.push_back({0, i});
      return Graph(p[0] + 1, std::move(edges));
    }
    case Family::complete:
      return multipartite(std::vector<int>(p[0], 1));
    case Family::complete_bipartite:
    case Family::complete_multipartite:
      return multipartite(p);
    case Family::friendship: {
      for (int i = 1; i <= p[0]; ++i) {
        edges.push_back({0, 2 * i - 1});
        edges.push_back({0, 2 * i});
        edges.push_back({2 * i - 1, 2 * i});
      }
      return Graph(2 * p[0] + 1, std::move(edges));
    }
    case Family::lollipop: {
      const int m = p[0], len = p[1];
      for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) edges.push_back({u, v});
      for (int i = 0; i < len; ++i) edges.push_back({m - 1 + i, m + i});
      return Graph(m + len, std::move(edges));
    }
    case Family::fan: {
      for (int i = 1; i < p[0]; ++i) edges.push_back({0, i});
      for (int i = 1; i + 1 < p[0]; ++i) edges.push_back({i, i + 1});
      return Graph(p[0], std::move(edges));
    }
    case Family::wheel: {
      const int n = p[0];
      for (int i = 1; i < n; ++i) edges.push_back({0, i});
      for (int i = 1; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({1, n - 1});
      return Graph(n, std::move(edges));
    }
    case Family::cocktail_party:
      return multipartite(std::vector<int>(p[0], 2));
    case Family::hypercube: {
      const int n = 1 << p[0];
      for (int v = 0; v < n; ++v)
        for (int bit = 0; bit < p[0]; ++bit) {
          int w = v ^ (1 << bit);
          if (v < w) edges.push_back({v, w});
        }
      return Graph(n, std::move(edges));
    }
    case Family::turan:
      return multipartite(turan_parts(p[0], p[1]));
  }
  throw InvalidParameter("unknown family");
}

std::string to_string(const FamilySpec& spec) {
  std::string out(family_name(spec.family));
  out += '(';
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.params[i]);
  }
  out += ')';
  return out;
}

}  // namespace cec
