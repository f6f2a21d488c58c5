#pragma once

#include <cstddef>
#include <cstdint>

#include "cec/graph.hpp"
#include "cec/multigraph.hpp"
#include "cec/poly.hpp"

namespace cec {

enum class EdgeSelection {
  densest,  // highest multiplicity, then lowest endpoint degree
  first,    // lexicographically smallest vertex pair
  random,   // uniformly random pair, seeded
};

struct EngineConfig {
  int workers = 1;
  std::size_t max_memo_entries = 2'000'000;
  std::uint64_t max_steps = 500'000'000;
  EdgeSelection selection = EdgeSelection::densest;
  std::uint64_t seed = 1;
  CanonicalConfig canonical{};
};

struct EngineStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::size_t peak_entries = 0;
  std::uint64_t steps = 0;
};

/// E_c(G, x) as the spanning connected subgraph polynomial, computed by
/// deletion-contraction on edge bundles:
///
///   R(G) = R(G - bundle uv) + ((1+x)^mu - 1) R(G / uv)
///
/// Graphs are split into blocks first (R is multiplicative over blocks, and
/// a bridge bundle contributes (1+x)^mu - 1), every loop contributes a
/// factor (1+x), and 2-connected blocks are memoized on canonical keys.
/// Disconnected input gives zero; a single vertex gives 1. Throws
/// ResourceLimit when a budget in cfg runs out.
Poly cec_poly_engine(const Graph& g, const EngineConfig& cfg = {}, EngineStats* stats = nullptr);
Poly cec_poly_engine(const MultiGraph& g, const EngineConfig& cfg = {}, EngineStats* stats = nullptr);

/// Number of spanning trees (matrix-tree theorem, fraction-free determinant
/// of a reduced Laplacian). Zero for disconnected graphs.
BigInt spanning_tree_count(const Graph& g);
BigInt spanning_tree_count(const MultiGraph& g);

}  // namespace cec
