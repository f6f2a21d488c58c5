#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cec/graph.hpp"

namespace cec {

/// Undirected multigraph with loops, stored as a dense symmetric
/// multiplicity matrix. Loops live on the diagonal.
class MultiGraph {
 public:
  explicit MultiGraph(int vertex_count = 1);
  static MultiGraph from_graph(const Graph& g);

  int vertex_count() const noexcept { return n_; }
  int multiplicity(int u, int v) const { return mult_[index(u, v)]; }
  int loops(int v) const { return mult_[index(v, v)]; }

  /// Adds `count` parallel copies of u -- v (a loop when u == v).
  void add_edge(int u, int v, int count = 1);
  /// Removes every copy of u -- v.
  void remove_bundle(int u, int v);
  void clear_loops();

  /// Total number of edges, loops included.
  std::size_t edge_count() const;
  /// Number of distinct neighbours of v, ignoring loops.
  int simple_degree(int v) const;

  /// Merges v into u. Edges v -- w become u -- w; the u -- v bundle becomes
  /// loops at the merged vertex. The last vertex is renumbered to v.
  MultiGraph contracted(int u, int v) const;

  /// Sub-multigraph on the listed vertices, relabeled by list position.
  MultiGraph induced(const std::vector<int>& vertices) const;

  bool is_connected() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  std::size_t index(int u, int v) const;

  int n_;
  std::vector<int> mult_;
};

/// Isomorphism-invariant memo key for a multigraph.
struct MemoKey {
  std::string bytes;
  /// True when produced by an exhaustive canonical labeling search.
  bool exact = false;

  friend bool operator==(const MemoKey& a, const MemoKey& b) { return a.bytes == b.bytes; }
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const noexcept { return std::hash<std::string>{}(k.bytes); }
};

struct CanonicalConfig {
  /// Exhaustive canonical labeling is attempted up to this many vertices.
  int exact_max_vertices = 10;
  /// Search-tree leaves explored before giving up on the exhaustive search.
  std::size_t max_leaves = 200000;
};

/// Canonical encoding of g. Up to `exact_max_vertices` vertices the key is
/// the minimum adjacency encoding over all labelings reachable by
/// individualization-refinement, so isomorphic graphs share a key. Beyond
/// that (or when the leaf cap trips) the key is the exact encoding under a
/// colour-refinement ordering: never shared by non-isomorphic graphs, but
/// isomorphic graphs may get different keys.
MemoKey canonical_key(const MultiGraph& g, const CanonicalConfig& cfg = {});

}  // namespace cec
