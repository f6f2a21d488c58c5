#include "cec/engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <future>
#include <mutex>
#include <tuple>
#include <string>
#include <unordered_map>
#include <vector>

#include "cec/errors.hpp"

namespace cec {
namespace {

struct Bundle {
  int u;
  int v;
  int mult;
};

// Biconnected components of the underlying simple graph (Tarjan, edge
// stack). Each block is returned as its bundles in original labels.
class BlockSplitter {
 public:
  explicit BlockSplitter(const MultiGraph& g) : g_(g), n_(g.vertex_count()), disc_(n_, -1), low_(n_, 0) {
    adj_.resize(n_);
    for (int u = 0; u < n_; ++u)
      for (int w = 0; w < n_; ++w)
        if (w != u && g.multiplicity(u, w) > 0) adj_[u].push_back(w);
  }

  // Empty result with connected() == false when g is disconnected.
  std::vector<std::vector<Bundle>> run() {
    dfs(0, -1);
    connected_ = std::none_of(disc_.begin(), disc_.end(), [](int d) { return d < 0; });
    return std::move(blocks_);
  }

  bool connected() const { return connected_; }

 private:
  void dfs(int u, int parent) {
    disc_[u] = low_[u] = timer_++;
    for (int w : adj_[u]) {
      if (disc_[w] < 0) {
        stack_.push_back({u, w, g_.multiplicity(u, w)});
        dfs(w, u);
        low_[u] = std::min(low_[u], low_[w]);
        if (low_[w] >= disc_[u]) {
          std::vector<Bundle> block;
          for (;;) {
            Bundle b = stack_.back();
            stack_.pop_back();
            block.push_back(b);
            if (b.u == u && b.v == w) break;
          }
          blocks_.push_back(std::move(block));
        }
      } else if (w != parent && disc_[w] < disc_[u]) {
        stack_.push_back({u, w, g_.multiplicity(u, w)});
        low_[u] = std::min(low_[u], disc_[w]);
      }
    }
  }

  const MultiGraph& g_;
  int n_;
  int timer_ = 0;
  bool connected_ = false;
  std::vector<std::vector<int>> adj_;
  std::vector<int> disc_, low_;
  std::vector<Bundle> stack_;
  std::vector<std::vector<Bundle>> blocks_;
};

MultiGraph block_graph(const std::vector<Bundle>& bundles) {
  std::vector<int> vertices;
  for (const Bundle& b : bundles) {
    vertices.push_back(b.u);
    vertices.push_back(b.v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  auto id = [&](int v) { return static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin()); };
  MultiGraph out(static_cast<int>(vertices.size()));
  for (const Bundle& b : bundles) out.add_edge(id(b.u), id(b.v), b.mult);
  return out;
}

// (1+x)^mu - 1: at least one edge of a mu-fold bundle kept.
Poly nonempty_bundle(int mu) {
  std::vector<BigInt> c = binom_power(1, static_cast<unsigned>(mu)).coeffs();
  c[0] = 0;
  return Poly(std::move(c));
}

class MemoTable {
 public:
  bool find(const std::string& key, Poly& out) {
    Shard& s = shard(key);
    std::lock_guard lock(s.mutex);
    auto it = s.map.find(key);
    if (it == s.map.end()) return false;
    out = it->second;
    return true;
  }

  // Keeps the first value stored for a key; concurrent duplicates are equal.
  std::size_t insert(const std::string& key, const Poly& value) {
    Shard& s = shard(key);
    std::lock_guard lock(s.mutex);
    if (s.map.emplace(key, value).second) return ++size_;
    return size_.load();
  }

  std::size_t size() const { return size_.load(); }

 private:
  struct Shard {
    std::mutex mutex;
    std::unordered_map<std::string, Poly> map;
  };

  Shard& shard(const std::string& key) { return shards_[std::hash<std::string>{}(key) % shards_.size()]; }

  std::array<Shard, 64> shards_;
  std::atomic<std::size_t> size_{0};
};

class Engine {
 public:
  explicit Engine(const EngineConfig& cfg) : cfg_(cfg) {
    if (cfg.workers < 1) throw InvalidParameter("engine workers must be >= 1");
    int depth = 0;
    while ((1 << depth) < cfg.workers) ++depth;
    spawn_depth_ = cfg.workers > 1 ? depth + 2 : 0;
  }

  Poly solve(MultiGraph g, int depth) {
    int loops = 0;
    for (int v = 0; v < g.vertex_count(); ++v) loops += g.loops(v);
    g.clear_loops();
    Poly factor = binom_power(1, static_cast<unsigned>(loops));
    if (g.vertex_count() == 1) return factor;

    BlockSplitter splitter(g);
    auto blocks = splitter.run();
    if (!splitter.connected()) return {};
    Poly result = factor;
    for (const auto& bundles : blocks) {
      Poly part = bundles.size() == 1 ? nonempty_bundle(bundles.front().mult)
                                      : solve_block(block_graph(bundles), depth);
      result = result * part;
    }
    return result;
  }

  EngineStats stats() const {
    return {hits_.load(), misses_.load(), memo_.size(), steps_.load()};
  }

 private:
  // b is loopless and 2-connected with at least three vertices.
  Poly solve_block(const MultiGraph& b, int depth) {
    if (++steps_ > cfg_.max_steps) {
      throw ResourceLimit("engine step budget of " + std::to_string(cfg_.max_steps) + " exhausted");
    }
    const MemoKey key = canonical_key(b, cfg_.canonical);
    Poly cached;
    if (memo_.find(key.bytes, cached)) {
      ++hits_;
      return cached;
    }
    ++misses_;

    const auto [u, v] = choose_pair(b, key);
    const int mu = b.multiplicity(u, v);
    MultiGraph deleted = b;
    deleted.remove_bundle(u, v);
    MultiGraph merged = b.contracted(u, v);
    merged.clear_loops();

    Poly without, with;
    if (depth < spawn_depth_) {
      auto pending = std::async(std::launch::async, [&] { return solve(deleted, depth + 1); });
      with = solve(merged, depth + 1);
      without = pending.get();
    } else {
      without = solve(deleted, depth + 1);
      with = solve(merged, depth + 1);
    }
    Poly result = without + nonempty_bundle(mu) * with;

    if (memo_.insert(key.bytes, result) > cfg_.max_memo_entries) {
      throw ResourceLimit("engine memo table exceeded " + std::to_string(cfg_.max_memo_entries) + " entries");
    }
    return result;
  }

  std::pair<int, int> choose_pair(const MultiGraph& b, const MemoKey& key) const {
    const int n = b.vertex_count();
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (b.multiplicity(u, v) > 0) pairs.emplace_back(u, v);

    switch (cfg_.selection) {
      case EdgeSelection::first:
        return pairs.front();
      case EdgeSelection::random: {
        std::size_t h = std::hash<std::string>{}(key.bytes) ^ (cfg_.seed * 0x9e3779b97f4a7c15ULL);
        return pairs[h % pairs.size()];
      }
      case EdgeSelection::densest:
        break;
    }
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = b.simple_degree(v);
    auto rank = [&](const std::pair<int, int>& p) {
      return std::make_tuple(-b.multiplicity(p.first, p.second), std::min(degree[p.first], degree[p.second]),
                             degree[p.first] + degree[p.second]);
    };
    return *std::min_element(pairs.begin(), pairs.end(),
                             [&](const auto& a, const auto& c) { return rank(a) < rank(c); });
  }

  EngineConfig cfg_;
  int spawn_depth_ = 0;
  MemoTable memo_;
  std::atomic<std::uint64_t> hits_{0}, misses_{0}, steps_{0};
};

}  // namespace

Poly cec_poly_engine(const MultiGraph& g, const EngineConfig& cfg, EngineStats* stats) {
  Engine engine(cfg);
  Poly result;
  try {
    result = engine.solve(g, 0);
  } catch (...) {
    if (stats) *stats = engine.stats();
    throw;
  }
  if (stats) *stats = engine.stats();
  return result;
}

Poly cec_poly_engine(const Graph& g, const EngineConfig& cfg, EngineStats* stats) {
  return cec_poly_engine(MultiGraph::from_graph(g), cfg, stats);
}

}  // namespace cec
