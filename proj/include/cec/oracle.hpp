#pragma once

#include <optional>

#include "cec/graph.hpp"
#include "cec/poly.hpp"

namespace cec {

/// Brute-force enumeration settings.
///
/// The 2^m edge subsets are split into 2^chunking work units by fixing the
/// highest `chunking` edge bits; `workers` threads pull units and the partial
/// counts are summed at the end, so the result never depends on either knob.
struct OracleConfig {
  int max_edges = 26;
  int workers = 1;
  int chunking = 8;

  /// Throws InvalidParameter unless max_edges <= 63, workers >= 1, chunking >= 0.
  void validate() const;
};

/// E_c(G, x) by exhaustive search: coefficient i counts the i-edge subsets
/// that touch every vertex and leave (V, S) connected. Disconnected graphs
/// give the zero polynomial, K_1 gives 1. Throws BudgetExceeded when the
/// graph has more than cfg.max_edges edges.
Poly cec_poly_oracle(const Graph& g, const OracleConfig& cfg = {});

/// Edge cover polynomial (connectivity not required), same search.
Poly ec_poly_oracle(const Graph& g, const OracleConfig& cfg = {});

/// Smallest size of a connected edge cover; nullopt when none exists.
std::optional<int> min_cec_size(const Graph& g, const OracleConfig& cfg = {});

/// Edge cover polynomial by dynamic programming over covered-vertex sets.
/// Exact and independent of the subset scan; usable while the vertex count
/// is at most `max_vertices` (at most 24) no matter how many edges there are.
Poly ec_poly_coverage_dp(const Graph& g, int max_vertices = 20);

}  // namespace cec
