#pragma once

// Structural invariants over edges (semi-edges never lie on cycles or paths,
// and never form cuts).

#include <algorithm>
#include <atomic>
#include <compare>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include "snarklab/core.hpp"

namespace snarklab {

/// A non-negative length or Infinite (acyclic inputs).
class Length {
 public:
  static Length infinite() { return Length(); }
  static Length of(int v) { return Length(v); }

  bool is_infinite() const { return !value_.has_value(); }
  int value() const {
    if (!value_) throw std::logic_error("infinite length has no value");
    return *value_;
  }

  friend bool operator==(const Length&, const Length&) = default;
  friend std::strong_ordering operator<=>(const Length& a, const Length& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
    return *a.value_ <=> *b.value_;
  }

 private:
  Length() = default;
  explicit Length(int v) : value_(v) {}
  std::optional<int> value_;
};

inline std::string to_string(const Length& l) { return l.is_infinite() ? "inf" : std::to_string(l.value()); }

namespace detail {

inline std::vector<int> bfs_distances(const SemiGraph& g, Vertex s) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbours(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace detail

inline Length girth(const SemiGraph& g) {
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(g.order()), parent(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<Vertex> q;
    dist[s] = 0;
    parent[s] = kNoVertex;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbours(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? Length::infinite() : Length::of(best);
}

/// Minimum over the girth and the shortest 2-semi-path, whose length counts
/// its two terminal semi-edges.
inline Length semi_girth(const SemiGraph& g) {
  Length best = girth(g);
  auto semis = g.semi_vertices();
  for (std::size_t i = 0; i < semis.size(); ++i) {
    auto dist = detail::bfs_distances(g, semis[i]);
    for (std::size_t j = i + 1; j < semis.size(); ++j)
      if (dist[semis[j]] >= 0) best = std::min(best, Length::of(dist[semis[j]] + 2));
  }
  return best;
}

/// Component index per vertex, over edges only.
inline std::vector<int> components(const SemiGraph& g, int* count = nullptr) {
  std::vector<int> comp(g.order(), -1);
  int c = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbours(u))
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

inline bool is_connected(const SemiGraph& g) {
  int c = 0;
  components(g, &c);
  return c <= 1;
}

inline bool is_bipartite(const SemiGraph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbours(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Cut edges (element ids, ascending).
inline std::vector<int> bridges(const SemiGraph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0), out;
  int timer = 0;
  // Iterative DFS; frames hold (vertex, entering edge id, next incidence index).
  struct Frame {
    Vertex v;
    int via;
    std::size_t next;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    std::vector<Frame> stack{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        int id = inc[f.next++];
        const Element& e = g.element(id);
        if (e.is_semi() || id == f.via) continue;
        Vertex w = e.other(f.v);
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, id, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex p = stack.back().v;
          low[p] = std::min(low[p], low[done.v]);
          if (low[done.v] > disc[p]) out.push_back(done.via);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_bridgeless(const SemiGraph& g) { return bridges(g).empty(); }

struct CutReport {
  int size = 0;
  std::vector<int> edges;  // element ids
  std::pair<bool, bool> side_has_cycle{false, false};
};

namespace detail {

// Removes `cut` (edge ids) and reports whether at least two remaining
// components contain a cycle.
inline std::optional<CutReport> check_cyclic_cut(const SemiGraph& g, const std::vector<int>& cut) {
  UnionFind uf(g.order());
  std::vector<int> vcount(g.order(), 0), ecount(g.order(), 0);
  std::vector<char> removed(g.num_edges(), 0);
  for (int id : cut) removed[id] = 1;
  for (int id = 0; id < g.num_edges(); ++id)
    if (!removed[id]) uf.unite(g.element(id).u, g.element(id).v);
  for (Vertex v = 0; v < g.order(); ++v) ++vcount[uf.find(v)];
  for (int id = 0; id < g.num_edges(); ++id)
    if (!removed[id]) ++ecount[uf.find(g.element(id).u)];
  int roots = 0, cyclic = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (uf.find(v) == v) {
      ++roots;
      if (ecount[v] >= vcount[v]) ++cyclic;
    }
  if (roots < 2 || cyclic < 2) return std::nullopt;
  CutReport r;
  r.size = static_cast<int>(cut.size());
  r.edges = cut;
  const Element& e = g.element(cut.front());
  int a = uf.find(e.u), b = uf.find(e.v);
  r.side_has_cycle = {ecount[a] >= vcount[a], ecount[b] >= vcount[b]};
  return r;
}

}  // namespace detail

/// Smallest-then-lexicographically-least cyclic edge cut of size < k, found by
/// exhaustive enumeration of edge subsets. `jobs` splits the enumeration over
/// threads without affecting the returned witness.
inline std::optional<CutReport> has_cyclic_cut_below(const SemiGraph& g, int k, int jobs = 1) {
  if (k > 5) throw PreconditionError("cyclic cut enumeration is limited to k <= 5");
  if (!is_connected(g)) throw PreconditionError("cyclic cut check needs a connected graph");
  const int m = g.num_edges();
  for (int size = 1; size < k; ++size) {
    if (size > m) break;
    // Partition by first edge index; each worker records its least witness.
    jobs = std::max(1, std::min(jobs, m));
    std::vector<std::optional<CutReport>> best(m);
    std::atomic<int> next_first{0};
    auto worker = [&]() {
      for (;;) {
        int first = next_first.fetch_add(1);
        if (first > m - size) return;
        // Lexicographic enumeration of the remaining size-1 indices.
        std::vector<int> idx(size);
        idx[0] = first;
        for (int i = 1; i < size; ++i) idx[i] = first + i;
        for (;;) {
          if (auto r = detail::check_cyclic_cut(g, idx)) {
            best[first] = std::move(r);
            break;
          }
          int pos = size - 1;
          while (pos >= 1 && idx[pos] == m - size + pos) --pos;
          if (pos < 1) break;
          ++idx[pos];
          for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (auto& r : best)
      if (r) return r;
  }
  return std::nullopt;
}

/// Unordered endpoint pairs (a < b) of all Hamiltonian paths.
inline std::set<std::pair<Vertex, Vertex>> hamiltonian_path_endpoint_pairs(const SemiGraph& g) {
  std::set<std::pair<Vertex, Vertex>> out;
  const int n = g.order();
  if (n == 0) return out;
  if (n == 1) {
    out.insert({0, 0});
    return out;
  }
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbours(v);
  int depth = 0;
  auto dfs = [&](auto&& self, Vertex start, Vertex u) -> void {
    if (depth == n) {
      out.insert({std::min(start, u), std::max(start, u)});
      return;
    }
    for (Vertex w : adj[u]) {
      if (seen[w]) continue;
      seen[w] = 1;
      ++depth;
      self(self, start, w);
      --depth;
      seen[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    seen[s] = 1;
    depth = 1;
    dfs(dfs, s, s);
    seen[s] = 0;
  }
  return out;
}

/// Vertex order of a Hamiltonian cycle starting at 0, if any.
inline std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const SemiGraph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbours(v);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> path{0};
  seen[0] = 1;
  // Every unvisited vertex needs two usable neighbours (unvisited or a path end).
  auto feasible = [&]() {
    Vertex tail = path.back();
    for (Vertex v = 0; v < n; ++v) {
      if (seen[v]) continue;
      int usable = 0;
      for (Vertex w : adj[v])
        if (!seen[w] || w == tail || w == 0) ++usable;
      if (usable < 2) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self) -> bool {
    Vertex u = path.back();
    if (static_cast<int>(path.size()) == n) return g.has_edge(u, 0);
    if (!feasible()) return false;
    for (Vertex w : adj[u]) {
      if (seen[w]) continue;
      seen[w] = 1;
      path.push_back(w);
      if (self(self)) return true;
      path.pop_back();
      seen[w] = 0;
    }
    return false;
  };
  if (dfs(dfs)) return path;
  return std::nullopt;
}

inline bool hamiltonian_cycle_exists(const SemiGraph& g) { return find_hamiltonian_cycle(g).has_value(); }

}  // namespace snarklab
