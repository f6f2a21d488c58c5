#include "cec/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "cec/errors.hpp"

namespace cec {
namespace {

enum class Mode { covers, connected_covers };

struct EdgeTable {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::uint64_t> cover_mask;  // both endpoints of each edge
  std::uint64_t all = 0;
};

EdgeTable make_table(const Graph& g) {
  EdgeTable t;
  t.n = g.vertex_count();
  t.edges.assign(g.edges().begin(), g.edges().end());
  for (const Edge& e : t.edges) t.cover_mask.push_back((std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v));
  t.all = t.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t.n) - 1;
  return t;
}

// Union-find rebuilt from scratch for every subset.
bool spans_connected(const EdgeTable& t, std::uint64_t subset, std::vector<int>& parent) {
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = t.n;
  for (std::uint64_t bits = subset; bits; bits &= bits - 1) {
    const Edge& e = t.edges[std::countr_zero(bits)];
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      if (--components == 1) return true;
    }
  }
  return components == 1;
}

void scan_unit(const EdgeTable& t, Mode mode, int free_bits, std::uint64_t high, std::vector<std::uint64_t>& counts) {
  std::vector<int> parent(t.n);
  const std::uint64_t span = std::uint64_t{1} << free_bits;
  for (std::uint64_t low = 0; low < span; ++low) {
    const std::uint64_t subset = high | low;
    std::uint64_t covered = 0;
    for (std::uint64_t bits = subset; bits; bits &= bits - 1) covered |= t.cover_mask[std::countr_zero(bits)];
    if (covered != t.all) continue;
    if (mode == Mode::connected_covers && !spans_connected(t, subset, parent)) continue;
    ++counts[std::popcount(subset)];
  }
}

Poly enumerate(const Graph& g, const OracleConfig& cfg, Mode mode) {
  cfg.validate();
  const int m = static_cast<int>(g.edge_count());
  if (m > cfg.max_edges) {
    throw BudgetExceeded("graph has " + std::to_string(m) + " edges; oracle budget is " +
                         std::to_string(cfg.max_edges));
  }
  if (g.vertex_count() > 64) throw BudgetExceeded("oracle handles at most 64 vertices");

  const EdgeTable table = make_table(g);
  const int fixed = std::min(cfg.chunking, m);
  const int free_bits = m - fixed;
  const std::uint64_t units = std::uint64_t{1} << fixed;
  const int workers = static_cast<int>(std::min<std::uint64_t>(cfg.workers, units));

  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(m + 1, 0));
  std::atomic<std::uint64_t> next{0};
  auto run = [&](int w) {
    for (std::uint64_t unit; (unit = next.fetch_add(1)) < units;) {
      scan_unit(table, mode, free_bits, unit << free_bits, partial[w]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  std::vector<BigInt> coeffs(m + 1);
  for (const auto& counts : partial)
    for (int i = 0; i <= m; ++i) coeffs[i] += counts[i];
  return Poly(std::move(coeffs));
}

}  // namespace

void OracleConfig::validate() const {
  if (max_edges < 0 || max_edges > 63) throw InvalidParameter("max_edges must lie in [0, 63]");
  if (workers < 1) throw InvalidParameter("workers must be >= 1");
  if (chunking < 0 || chunking > 30) throw InvalidParameter("chunking must lie in [0, 30]");
}

Poly cec_poly_oracle(const Graph& g, const OracleConfig& cfg) {
  if (g.vertex_count() == 1) {
    cfg.validate();
    if (static_cast<int>(g.edge_count()) > cfg.max_edges) throw BudgetExceeded("over budget");
    return Poly::constant(1);
  }
  return enumerate(g, cfg, Mode::connected_covers);
}

Poly ec_poly_oracle(const Graph& g, const OracleConfig& cfg) { return enumerate(g, cfg, Mode::covers); }

std::optional<int> min_cec_size(const Graph& g, const OracleConfig& cfg) {
  auto lo = cec_poly_oracle(g, cfg).min_exponent();
  if (!lo) return std::nullopt;
  return static_cast<int>(*lo);
}

Poly ec_poly_coverage_dp(const Graph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (max_vertices > 24) throw InvalidParameter("coverage DP supports at most 24 vertices");
  if (n > max_vertices) {
    throw BudgetExceeded("coverage DP limited to " + std::to_string(max_vertices) + " vertices");
  }
  const std::size_t states = std::size_t{1} << n;
  const std::size_t m = g.edge_count();
  // table[mask][k]: number of k-edge subsets of the edges seen so far whose
  // covered vertex set is exactly mask
  std::vector<std::vector<BigInt>> table(states);
  table[0] = {1};
  for (const Edge& e : g.edges()) {
    const std::size_t bits = (std::size_t{1} << e.u) | (std::size_t{1} << e.v);
    std::vector<std::vector<BigInt>> next = table;
    for (std::size_t mask = 0; mask < states; ++mask) {
      const auto& row = table[mask];
      if (row.empty()) continue;
      auto& dst = next[mask | bits];
      if (dst.size() < row.size() + 1) dst.resize(row.size() + 1);
      for (std::size_t k = 0; k < row.size(); ++k) dst[k + 1] += row[k];
    }
    table = std::move(next);
  }
  std::vector<BigInt> coeffs = table[states - 1];
  coeffs.resize(std::max(coeffs.size(), m + 1));
  return Poly(std::move(coeffs));
}

}  // namespace cec
