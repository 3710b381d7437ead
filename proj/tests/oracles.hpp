#pragma once

// Brute-force reference implementations. They share only the SemiGraph
// container with the library and are meant for graphs of a dozen vertices
// or about fifteen elements.

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "snarklab/core.hpp"

namespace oracle {

using snarklab::SemiGraph;
using snarklab::Vertex;

inline constexpr int kInf = INT_MAX / 4;

inline std::vector<std::vector<int>> all_pairs_distances(const SemiGraph& g, int skip_edge = -1) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (int id = 0; id < g.num_edges(); ++id) {
    if (id == skip_edge) continue;
    auto e = g.element(id);
    d[e.u][e.v] = d[e.v][e.u] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Shortest cycle through each edge: 1 + distance between its ends without it.
inline int girth(const SemiGraph& g) {
  int best = kInf;
  for (int id = 0; id < g.num_edges(); ++id) {
    auto d = all_pairs_distances(g, id);
    auto e = g.element(id);
    if (d[e.u][e.v] < kInf) best = std::min(best, d[e.u][e.v] + 1);
  }
  return best;
}

inline int semi_girth(const SemiGraph& g) {
  int best = girth(g);
  auto d = all_pairs_distances(g);
  auto sv = g.semi_vertices();
  for (std::size_t i = 0; i < sv.size(); ++i)
    for (std::size_t j = i + 1; j < sv.size(); ++j)
      if (d[sv[i]][sv[j]] < kInf) best = std::min(best, d[sv[i]][sv[j]] + 2);
  return best;
}

inline int conflicts(const SemiGraph& g, const std::vector<int>& colour) {
  int k = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<int> seen;
    for (int id : g.incident(v)) seen.push_back(colour[id]);
    std::sort(seen.begin(), seen.end());
    k += std::adjacent_find(seen.begin(), seen.end()) != seen.end();
  }
  return k;
}

/// Visits every colouring in {1,2,3}^m with element 0 pinned to colour 1.
inline void each_colouring(const SemiGraph& g, const std::function<bool(const std::vector<int>&)>& visit) {
  const int m = g.num_elements();
  std::vector<int> c(m, 1);
  if (m == 0) {
    visit(c);
    return;
  }
  for (;;) {
    if (!visit(c)) return;
    int i = m - 1;
    while (i >= 1 && c[i] == 3) c[i--] = 1;
    if (i < 1) return;
    ++c[i];
  }
}

inline int vertex_resistance(const SemiGraph& g) {
  int best = kInf;
  each_colouring(g, [&](const std::vector<int>& c) {
    best = std::min(best, conflicts(g, c));
    return best > 0;
  });
  return best;
}

/// Plain backtracking in element-id order, no symmetry breaking.
inline bool colourable(const SemiGraph& g) {
  std::vector<int> c(g.num_elements(), 0);
  std::function<bool(int)> rec = [&](int id) {
    if (id == g.num_elements()) return true;
    auto e = g.element(id);
    for (int col = 1; col <= 3; ++col) {
      bool clash = false;
      for (Vertex v : {e.u, e.v}) {
        if (v == snarklab::kNoVertex) continue;
        for (int other : g.incident(v)) clash = clash || (other < id && c[other] == col);
      }
      if (clash) continue;
      c[id] = col;
      if (rec(id + 1)) return true;
    }
    c[id] = 0;
    return false;
  };
  return rec(0);
}

/// Smallest element set whose removal leaves a colourable semi-graph.
inline int edge_resistance(const SemiGraph& g) {
  const int m = g.num_elements();
  for (int k = 0; k <= m; ++k) {
    std::vector<int> pick(m, 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
      snarklab::SemiGraphBuilder b(g.order());
      for (int id = 0; id < m; ++id) {
        if (pick[id]) continue;
        auto e = g.element(id);
        if (e.is_semi())
          b.add_semi_edge(e.u);
        else
          b.add_edge(e.u, e.v);
      }
      if (colourable(b.build())) return k;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return m;
}

/// Perfect matchings as 0/1 vectors over element ids, by include/exclude
/// recursion over elements.
inline std::vector<std::vector<int>> one_factors(const SemiGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(g.num_elements(), 0), cover(g.order(), 0);
  std::function<void(int)> rec = [&](int id) {
    if (id == g.num_elements()) {
      if (std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; })) out.push_back(pick);
      return;
    }
    rec(id + 1);
    auto e = g.element(id);
    if (cover[e.u] || (!e.is_semi() && cover[e.v])) return;
    pick[id] = 1;
    ++cover[e.u];
    if (!e.is_semi()) ++cover[e.v];
    rec(id + 1);
    pick[id] = 0;
    --cover[e.u];
    if (!e.is_semi()) --cover[e.v];
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Odd components of the spanning subgraph on the edges not in `matching`.
inline int odd_components_of_complement(const SemiGraph& g, const std::vector<int>& matching) {
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int id = 0; id < g.num_edges(); ++id)
    if (!matching[id]) parent[find(g.element(id).u)] = find(g.element(id).v);
  std::vector<int> size(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) ++size[find(v)];
  int odd = 0;
  for (Vertex v = 0; v < g.order(); ++v) odd += find(v) == v && size[v] % 2 == 1;
  return odd;
}

inline int oddness(const SemiGraph& g) {
  int best = kInf;
  for (const auto& m : one_factors(g)) best = std::min(best, odd_components_of_complement(g, m));
  return best;
}

inline int defect(const SemiGraph& g) {
  auto fs = one_factors(g);
  int best = kInf;
  for (const auto& a : fs)
    for (const auto& b : fs)
      for (const auto& c : fs) {
        int u = 0;
        for (int id = 0; id < g.num_elements(); ++id) u += !(a[id] || b[id] || c[id]);
        best = std::min(best, u);
      }
  return best;
}

/// Endpoint pairs of Hamiltonian paths, by permutations of the vertex set.
inline std::set<std::pair<Vertex, Vertex>> hamiltonian_endpoint_pairs(const SemiGraph& g) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::pair<Vertex, Vertex>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i) ok = g.has_edge(perm[i], perm[i + 1]);
    if (ok) out.insert({std::min(perm.front(), perm.back()), std::max(perm.front(), perm.back())});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Size of the smallest edge set whose removal leaves two components with
/// cycles, searching sizes below `limit`; returns `limit` when none exists.
inline int min_cyclic_cut(const SemiGraph& g, int limit) {
  const int m = g.num_edges();
  for (int k = 1; k < limit; ++k) {
    std::vector<int> pick(m, 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
      // Component labels by repeated relaxation.
      std::vector<int> label(g.order());
      std::iota(label.begin(), label.end(), 0);
      for (bool changed = true; changed;) {
        changed = false;
        for (int id = 0; id < m; ++id) {
          if (pick[id]) continue;
          auto e = g.element(id);
          int lo = std::min(label[e.u], label[e.v]);
          if (label[e.u] != lo || label[e.v] != lo) {
            label[e.u] = label[e.v] = lo;
            changed = true;
          }
        }
      }
      std::vector<int> verts(g.order(), 0), edges(g.order(), 0);
      for (Vertex v = 0; v < g.order(); ++v) ++verts[label[v]];
      for (int id = 0; id < m; ++id)
        if (!pick[id]) ++edges[label[g.element(id).u]];
      int cyclic = 0;
      for (Vertex v = 0; v < g.order(); ++v) cyclic += verts[v] > 0 && edges[v] >= verts[v];
      if (cyclic >= 2) return k;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return limit;
}

/// Random subcubic semi-graph on n vertices: edges are offered in a shuffled
/// order and kept while both ends have room; then each vertex with room gets
/// a semi-edge with probability one half.
inline SemiGraph random_subcubic(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<int> deg(n, 0);
  snarklab::SemiGraphBuilder b(n);
  for (auto [u, v] : pairs) {
    if (deg[u] == 3 || deg[v] == 3 || rng() % 3 == 0) continue;
    b.add_edge(u, v);
    ++deg[u];
    ++deg[v];
  }
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] < 3 && rng() % 2) b.add_semi_edge(v);
  return b.build();
}

}  // namespace oracle
