#pragma once

// Triples of 1-factors, their cores, and the colouring defect mu_3.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snarklab/budget.hpp"
#include "snarklab/colouring.hpp"
#include "snarklab/core.hpp"
#include "snarklab/factors.hpp"
#include "snarklab/invariants.hpp"

namespace snarklab {

/// Multiset of three 1-factors of one semi-graph.
struct FactorTriple {
  OneFactor m1, m2, m3;
};

enum class ComponentKind { even_cycle, two_semi_path, cubic_subdivision, other };

inline const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::even_cycle: return "even_cycle";
    case ComponentKind::two_semi_path: return "two_semi_path";
    case ComponentKind::cubic_subdivision: return "cubic_subdivision";
    default: return "other";
  }
}

struct CoreComponent {
  ComponentKind kind = ComponentKind::other;
  int length = 0;  // element count
  std::vector<Vertex> vertices;
  std::vector<int> elements;
  // Cycles and paths only: consecutive elements alternate between
  // uncovered (E0) and multiply covered (E2, E3).
  bool alternating = false;
};

struct CoreDecomposition {
  std::array<ElementSet, 4> e;  // e[i]: elements in exactly i factors
  ElementSet core;              // e[0] | e[2] | e[3]
  std::vector<CoreComponent> components;

  int uncovered() const { return e[0].count(); }
};

namespace detail {

// Orders a cycle or 2-semi-path component's elements along its walk.
inline std::vector<int> walk_component(const SemiGraph& g, const CoreComponent& c, const ElementSet& core) {
  std::vector<int> walk;
  Vertex start = c.vertices.front();
  int first = -1;
  for (int id : c.elements)
    if (g.element(id).is_semi()) {
      first = id;
      start = g.element(id).u;
      break;
    }
  std::vector<char> used(g.num_elements(), 0);
  Vertex cur = start;
  if (first >= 0) {
    walk.push_back(first);
    used[first] = 1;
  }
  for (;;) {
    int next = -1;
    for (int id : g.incident(cur))
      if (core.test(id) && !used[id]) {
        next = id;
        break;
      }
    if (next < 0) break;
    used[next] = 1;
    walk.push_back(next);
    const Element& e = g.element(next);
    if (e.is_semi()) break;
    cur = e.other(cur);
  }
  return walk;
}

}  // namespace detail

/// Partitions elements by cover multiplicity and classifies the core's
/// components (every component is a subdivision of a cubic semi-graph, an
/// even cycle, or a 2-semi-path).
inline CoreDecomposition classify_triple(const SemiGraph& g, const FactorTriple& t) {
  for (const OneFactor* f : {&t.m1, &t.m2, &t.m3})
    if (f->elements.size() != g.num_elements() || !is_one_factor(g, f->elements))
      throw GraphError("triple member is not a 1-factor of the semi-graph");
  const int m = g.num_elements();
  CoreDecomposition cd;
  for (auto& s : cd.e) s = ElementSet(m);
  cd.core = ElementSet(m);
  for (int id = 0; id < m; ++id) {
    int mult = t.m1.contains(id) + t.m2.contains(id) + t.m3.contains(id);
    cd.e[mult].set(id);
    if (mult != 1) cd.core.set(id);
  }
  std::vector<int> core_degree(g.order(), 0);
  detail::UnionFind uf(g.order());
  cd.core.for_each([&](int id) {
    const Element& e = g.element(id);
    ++core_degree[e.u];
    if (!e.is_semi()) {
      ++core_degree[e.v];
      uf.unite(e.u, e.v);
    }
  });
  std::vector<int> slot(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (core_degree[v] == 0) continue;
    int r = uf.find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(cd.components.size());
      cd.components.emplace_back();
    }
    cd.components[slot[r]].vertices.push_back(v);
  }
  cd.core.for_each([&](int id) { cd.components[slot[uf.find(g.element(id).u)]].elements.push_back(id); });
  for (auto& c : cd.components) {
    c.length = static_cast<int>(c.elements.size());
    bool trivalent = false;
    int semis = 0;
    for (Vertex v : c.vertices) trivalent = trivalent || core_degree[v] >= 3;
    for (int id : c.elements) semis += g.element(id).is_semi();
    if (trivalent) {
      c.kind = ComponentKind::cubic_subdivision;
      continue;
    }
    auto walk = detail::walk_component(g, c, cd.core);
    bool alt = static_cast<int>(walk.size()) == c.length;
    for (std::size_t i = 0; alt && i + 1 < walk.size(); ++i)
      alt = cd.e[0].test(walk[i]) != cd.e[0].test(walk[i + 1]);
    if (semis == 0) {
      alt = alt && (walk.size() < 2 || cd.e[0].test(walk.front()) != cd.e[0].test(walk.back()));
      c.alternating = alt;
      c.kind = c.length % 2 == 0 ? ComponentKind::even_cycle : ComponentKind::other;
    } else {
      c.alternating = alt;
      c.kind = semis == 2 ? ComponentKind::two_semi_path : ComponentKind::other;
    }
  }
  return cd;
}

/// Empty cores count as proper.
inline bool is_proper_core(const SemiGraph& g, const CoreDecomposition& cd) {
  return cd.core.count() < g.num_elements();
}

/// First triple, in canonical order over the 1-factor stream, whose core is
/// proper.
inline std::pair<FactorTriple, CoreDecomposition> find_proper_core(const SemiGraph& g, const Budget& budget = {}) {
  if (!g.is_cubic()) throw PreconditionError("input is not cubic");
  bool truncated = false;
  auto fs = all_one_factors(g, budget, &truncated);
  if (fs.empty()) {
    if (truncated) throw PreconditionError("budget exhausted before a 1-factor was found");
    throw TheoremViolation("cubic semi-graph without a 1-factor");
  }
  const std::size_t n = fs.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        FactorTriple t{fs[i], fs[j], fs[k]};
        auto cd = classify_triple(g, t);
        if (is_proper_core(g, cd)) return {t, cd};
      }
  throw TheoremViolation("no triple of 1-factors has a proper core");
}

inline int ceil_half(int x) { return (x + 1) / 2; }

/// ceil(girth/2) for non-colourable graphs, 0 for colourable ones. Semi-graphs
/// are rejected: the analogous semi-girth bound fails for them.
inline int mu3_lower_bound_semigirth(const SemiGraph& g) {
  if (!g.is_graph()) throw PreconditionError("semi-girth bound on mu3 needs a graph; it fails for semi-graphs");
  if (is_colourable(g)) return 0;
  Length sg = semi_girth(g);
  return sg.is_infinite() ? 0 : ceil_half(sg.value());
}

/// Lower bound on mu_3(g) from a conflicting cubic semi-subgraph h embedded
/// in g: ceil(semi_girth(h)/2).
inline int mu3_lower_bound_conflicting(const SemiGraph& g, const SemiGraph& h, const std::vector<Vertex>& embedding) {
  if (!g.is_graph()) throw PreconditionError("host must be a graph without semi-edges");
  if (!h.is_cubic()) throw PreconditionError("conflicting semi-subgraph must be cubic");
  if (!is_semi_subgraph(h, g, embedding)) throw PreconditionError("embedding is not a semi-subgraph embedding");
  if (is_colourable(h)) throw PreconditionError("semi-subgraph is 3-edge-colourable, not conflicting");
  Length sg = semi_girth(h);
  return sg.is_infinite() ? 0 : ceil_half(sg.value());
}

struct DefectCertificate {
  FactorTriple triple;
  int uncovered = 0;
};

using DefectResult = MeasureResult<DefectCertificate>;

/// Exact mu_3: minimum number of elements left uncovered by a multiset of
/// three 1-factors, by branch and bound over pairs (i <= j) of the canonical
/// factor list with incumbent pruning; stops once the structural lower bound
/// is met. The witness is the lexicographically least optimal (i, j, k).
inline DefectResult mu3(const SemiGraph& g, const Budget& budget = {}) {
  if (!g.is_cubic()) throw PreconditionError("input is not cubic");
  BudgetMeter meter(budget);
  DefectResult result;
  const int m = g.num_elements();

  std::optional<EdgeColouring> colouring;
  auto outcome = detail::ProperSearch(g, meter).run([&](const EdgeColouring& c) {
    colouring = c;
    return false;
  });
  if (colouring) {
    std::array<ElementSet, 3> cls{ElementSet(m), ElementSet(m), ElementSet(m)};
    for (int id = 0; id < m; ++id) cls[(*colouring)[id] - 1].set(id);
    result.status = Status::exact;
    result.certificate = DefectCertificate{{{cls[0]}, {cls[1]}, {cls[2]}}, 0};
    result.nodes = meter.nodes();
    return result;
  }
  const bool known_uncolourable = outcome == detail::SearchOutcome::completed;
  int lower = 0;
  if (known_uncolourable) {
    // Girth-based floors hold for graphs only: Petersen minus a vertex has
    // semi-girth 5 yet defect 2.
    Length gi = girth(g);
    lower = g.is_graph() ? std::max(3, gi.is_infinite() ? 0 : ceil_half(gi.value())) : 1;
  }

  std::vector<OneFactor> fs;
  auto listing = detail::enumerate_one_factors(
      g,
      [&](const OneFactor& f) {
        fs.push_back(f);
        return true;
      },
      meter);
  if (fs.empty()) {
    if (!listing.truncated) throw PreconditionError("semi-graph has no 1-factor");
    result.lower = lower;
    result.upper = m;
    result.nodes = meter.nodes();
    return result;
  }

  int max_factor = 0;
  for (const auto& f : fs) max_factor = std::max(max_factor, f.elements.count());
  int best = m - fs[0].elements.count();
  std::array<std::size_t, 3> arg{0, 0, 0};
  bool truncated = listing.truncated;
  const std::size_t n = fs.size();
  for (std::size_t i = 0; i < n && !truncated && best > lower; ++i) {
    for (std::size_t j = i; j < n && best > lower; ++j) {
      if (!meter.tick()) {
        truncated = true;
        break;
      }
      ElementSet rest = (fs[i].elements | fs[j].elements).complement();
      int left = rest.count();
      if (left - max_factor >= best) continue;
      for (std::size_t k = j; k < n; ++k) {
        int u = rest.count_minus(fs[k].elements);
        if (u < best) {
          best = u;
          arg = {i, j, k};
          if (best <= lower) break;
        }
      }
    }
  }
  result.certificate = DefectCertificate{{fs[arg[0]], fs[arg[1]], fs[arg[2]]}, best};
  result.upper = best;
  result.nodes = meter.nodes();
  if (!truncated) {
    result.status = Status::exact;
    result.lower = best;
  } else {
    result.lower = std::min(lower, best);
  }
  return result;
}

}  // namespace snarklab
