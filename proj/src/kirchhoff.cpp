#include <vector>

#include "cec/engine.hpp"

namespace cec {
namespace {

// Bareiss elimination; every intermediate division is exact.
BigInt determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a[swap_with][k] == 0) ++swap_with;
      if (swap_with == n) return 0;
      std::swap(a[k], a[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

BigInt spanning_tree_count(const MultiGraph& g) {
  const int n = g.vertex_count();
  // Laplacian with row and column 0 removed; loops never matter
  std::vector<std::vector<BigInt>> minor(n - 1, std::vector<BigInt>(n - 1));
  for (int u = 1; u < n; ++u) {
    BigInt degree = 0;
    for (int w = 0; w < n; ++w) {
      if (w == u) continue;
      degree += g.multiplicity(u, w);
      if (w > 0) minor[u - 1][w - 1] = -BigInt(g.multiplicity(u, w));
    }
    minor[u - 1][u - 1] = degree;
  }
  return determinant(std::move(minor));
}

BigInt spanning_tree_count(const Graph& g) { return spanning_tree_count(MultiGraph::from_graph(g)); }

}  // namespace cec
