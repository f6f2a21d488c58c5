#pragma once

// Slow, independent enumerators used only by the tests. They share no code
// with the library beyond the Graph container.

#include <cstdint>
#include <queue>
#include <random>
#include <vector>

#include "cec/graph.hpp"
#include "cec/poly.hpp"

namespace cec::reference {

inline bool spans_connected(int n, const std::vector<Edge>& chosen) {
  if (n == 1) return chosen.empty();
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : chosen) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        q.push(w);
      }
  }
  return reached == n;
}

inline bool covers(int n, const std::vector<Edge>& chosen) {
  std::vector<bool> hit(n, false);
  for (const auto& e : chosen) hit[e.u] = hit[e.v] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

template <class Keep>
std::vector<std::uint64_t> count_subsets(const Graph& g, Keep keep) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<std::uint64_t> counts(m + 1, 0);
  std::vector<Edge> chosen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    chosen.clear();
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) chosen.push_back(edges[i]);
    if (keep(chosen)) ++counts[chosen.size()];
  }
  return counts;
}

inline Poly to_poly(const std::vector<std::uint64_t>& counts) {
  std::vector<BigInt> c(counts.begin(), counts.end());
  return Poly(std::move(c));
}

/// E_c by definition: edge subsets that touch every vertex and are connected.
inline Poly connected_edge_covers(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 1) return Poly::constant(1);
  return to_poly(count_subsets(g, [n](const auto& s) { return covers(n, s) && spans_connected(n, s); }));
}

inline Poly edge_covers(const Graph& g) {
  const int n = g.vertex_count();
  return to_poly(count_subsets(g, [n](const auto& s) { return covers(n, s); }));
}

inline std::uint64_t spanning_trees(const Graph& g) {
  const int n = g.vertex_count();
  auto counts = count_subsets(g, [n](const auto& s) {
    return static_cast<int>(s.size()) == n - 1 && spans_connected(n, s);
  });
  return n - 1 < static_cast<int>(counts.size()) ? counts[n - 1] : 0;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace cec::reference
