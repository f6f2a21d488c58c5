#include <algorithm>
#include <string>
#include <vector>

#include "cec/errors.hpp"
#include "cec/multigraph.hpp"

namespace cec {

MultiGraph::MultiGraph(int vertex_count) : n_(vertex_count) {
  if (n_ < 1) throw InvalidParameter("multigraph must have at least one vertex");
  mult_.assign(static_cast<std::size_t>(n_) * n_, 0);
}

MultiGraph MultiGraph::from_graph(const Graph& g) {
  MultiGraph mg(g.vertex_count());
  for (const Edge& e : g.edges()) mg.add_edge(e.u, e.v);
  return mg;
}

std::size_t MultiGraph::index(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw InvalidParameter("vertex index out of range: " + std::to_string(u) + "," + std::to_string(v));
  }
  return static_cast<std::size_t>(u) * n_ + v;
}

void MultiGraph::add_edge(int u, int v, int count) {
  if (count < 0) throw InvalidParameter("edge multiplicity must be nonnegative");
  mult_[index(u, v)] += count;
  if (u != v) mult_[index(v, u)] += count;
}

void MultiGraph::remove_bundle(int u, int v) {
  mult_[index(u, v)] = 0;
  mult_[index(v, u)] = 0;
}

void MultiGraph::clear_loops() {
  for (int v = 0; v < n_; ++v) mult_[index(v, v)] = 0;
}

std::size_t MultiGraph::edge_count() const {
  std::size_t total = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u; v < n_; ++v) total += mult_[static_cast<std::size_t>(u) * n_ + v];
  return total;
}

int MultiGraph::simple_degree(int v) const {
  int d = 0;
  for (int w = 0; w < n_; ++w)
    if (w != v && mult_[index(v, w)] > 0) ++d;
  return d;
}

MultiGraph MultiGraph::contracted(int u, int v) const {
  if (u == v) throw InvalidParameter("cannot contract a vertex into itself");
  MultiGraph merged = *this;
  const int between = multiplicity(u, v);
  for (int w = 0; w < n_; ++w) {
    if (w == u || w == v) continue;
    merged.mult_[index(u, w)] += mult_[index(v, w)];
    merged.mult_[index(w, u)] = merged.mult_[index(u, w)];
  }
  merged.mult_[index(u, u)] += loops(v) + between;
  merged.mult_[index(u, v)] = merged.mult_[index(v, u)] = 0;

  // drop v: move the last vertex into its slot
  std::vector<int> keep;
  keep.reserve(n_ - 1);
  for (int w = 0; w < n_; ++w)
    if (w != v) keep.push_back(w);
  if (v != n_ - 1) {
    std::rotate(keep.begin() + v, keep.end() - 1, keep.end());
  }
  return merged.induced(keep);
}

MultiGraph MultiGraph::induced(const std::vector<int>& vertices) const {
  MultiGraph sub(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j)
      sub.mult_[i * vertices.size() + j] = mult_[index(vertices[i], vertices[j])];
  return sub;
}

bool MultiGraph::is_connected() const {
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w = 0; w < n_; ++w) {
      if (!seen[w] && mult_[static_cast<std::size_t>(u) * n_ + w] > 0) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

}  // namespace cec
