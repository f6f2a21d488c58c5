#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "cec/errors.hpp"
#include "cec/multigraph.hpp"

namespace cec {
namespace {

using Colors = std::vector<int>;
using Encoding = std::vector<std::uint16_t>;

struct Matrix {
  int n;
  std::vector<int> m;
  int at(int u, int v) const { return m[static_cast<std::size_t>(u) * n + v]; }
};

int count_colors(const Colors& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

// Colour refinement. New colours are ranks of (old colour, sorted multiset of
// (neighbour colour, multiplicity)), so cell order never depends on labels.
Colors refine(const Matrix& g, Colors colors) {
  auto distinct_input = colors;
  std::sort(distinct_input.begin(), distinct_input.end());
  int classes = static_cast<int>(std::unique(distinct_input.begin(), distinct_input.end()) - distinct_input.begin());
  for (;;) {
    std::vector<std::vector<int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<std::pair<int, int>> around;
      for (int w = 0; w < g.n; ++w)
        if (w != v && g.at(v, w) > 0) around.emplace_back(colors[w], g.at(v, w));
      std::sort(around.begin(), around.end());
      sig[v].reserve(1 + 2 * around.size());
      sig[v].push_back(colors[v]);
      for (auto [c, k] : around) {
        sig[v].push_back(c);
        sig[v].push_back(k);
      }
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Colors next(g.n);
    for (int v = 0; v < g.n; ++v)
      next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    const int now = static_cast<int>(distinct.size());
    colors = std::move(next);
    if (now == classes) return colors;
    classes = now;
  }
}

Colors initial_colors(const Matrix& g) {
  std::vector<std::vector<int>> keys(g.n);
  for (int v = 0; v < g.n; ++v) {
    int degree = 0, distinct = 0;
    for (int w = 0; w < g.n; ++w) {
      if (w == v || g.at(v, w) == 0) continue;
      degree += g.at(v, w);
      ++distinct;
    }
    keys[v] = {g.at(v, v), degree, distinct};
  }
  auto sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Colors c(g.n);
  for (int v = 0; v < g.n; ++v)
    c[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  return c;
}

// Upper triangle (diagonal included) of the matrix relabeled so that vertex
// v moves to position order[v]; ties in colour are broken by vertex index.
Encoding encode(const Matrix& g, const Colors& colors) {
  std::vector<int> by_position(g.n);
  for (int v = 0; v < g.n; ++v) by_position[v] = v;
  std::stable_sort(by_position.begin(), by_position.end(),
                   [&](int a, int b) { return colors[a] < colors[b]; });
  Encoding out;
  out.reserve(1 + static_cast<std::size_t>(g.n) * (g.n + 1) / 2);
  out.push_back(static_cast<std::uint16_t>(g.n));
  for (int i = 0; i < g.n; ++i)
    for (int j = i; j < g.n; ++j) {
      int k = g.at(by_position[i], by_position[j]);
      if (k > std::numeric_limits<std::uint16_t>::max()) throw ResourceLimit("edge multiplicity too large to encode");
      out.push_back(static_cast<std::uint16_t>(k));
    }
  return out;
}

bool twins(const Matrix& g, int a, int b) {
  if (g.at(a, a) != g.at(b, b)) return false;
  for (int x = 0; x < g.n; ++x) {
    if (x == a || x == b) continue;
    if (g.at(a, x) != g.at(b, x)) return false;
  }
  return true;
}

struct Search {
  const Matrix& g;
  std::size_t max_leaves;
  std::size_t leaves = 0;
  bool aborted = false;
  Encoding best;

  void run(const Colors& colors) {
    if (aborted) return;
    const int classes = count_colors(colors);
    if (classes == g.n) {
      if (++leaves > max_leaves) {
        aborted = true;
        return;
      }
      Encoding e = encode(g, colors);
      if (best.empty() || e < best) best = std::move(e);
      return;
    }
    // first non-singleton cell
    std::vector<int> size(classes, 0);
    for (int c : colors) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;

    std::vector<int> reps;
    for (int v = 0; v < g.n; ++v) {
      if (colors[v] != target) continue;
      bool covered = std::any_of(reps.begin(), reps.end(), [&](int r) { return twins(g, r, v); });
      if (!covered) reps.push_back(v);
    }
    for (int rep : reps) {
      Colors split(g.n);
      for (int v = 0; v < g.n; ++v) split[v] = 2 * colors[v] + (colors[v] == target && v != rep ? 1 : 0);
      run(refine(g, split));
      if (aborted) return;
    }
  }
};

MemoKey to_key(const Encoding& e, bool exact) {
  MemoKey key;
  key.exact = exact;
  key.bytes.reserve(e.size() * 2);
  for (std::uint16_t x : e) {
    key.bytes.push_back(static_cast<char>(x >> 8));
    key.bytes.push_back(static_cast<char>(x & 0xff));
  }
  return key;
}

}  // namespace

MemoKey canonical_key(const MultiGraph& mg, const CanonicalConfig& cfg) {
  Matrix g{mg.vertex_count(), {}};
  g.m.resize(static_cast<std::size_t>(g.n) * g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v) g.m[static_cast<std::size_t>(u) * g.n + v] = mg.multiplicity(u, v);

  const Colors refined = refine(g, initial_colors(g));
  if (g.n <= cfg.exact_max_vertices) {
    Search search{g, cfg.max_leaves, 0, false, {}};
    search.run(refined);
    if (!search.aborted) return to_key(search.best, true);
  }
  return to_key(encode(g, refined), false);
}

}  // namespace cec
