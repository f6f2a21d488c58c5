#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cec {

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored with u < v, sorted lexicographically and free of
/// duplicates and loops; the constructor normalizes orientation and sorts,
/// and throws InvalidParameter for anything it cannot normalize.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 1;
  std::vector<Edge> edges_;
};

/// True iff the graph has exactly one connected component. A single vertex
/// is connected.
bool is_connected(const Graph& g);

// Edge-list text format: '#' comment lines, a header "n m", then m lines
// "u v". Blank lines are ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

}  // namespace cec
