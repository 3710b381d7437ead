#pragma once

// Exact 3-edge-colouring: decision, enumeration, min-conflict search and the
// two resistance measures.
//
// Colours are 1..3; 0 marks an unassigned element. Colour-permutation
// symmetry is broken by only ever trying the smallest colour not yet used
// anywhere, so enumerations visit one colouring per permutation class.

#include <array>
#include <cstdint>
#include <numeric>
#include <queue>
#include <span>
#include <variant>
#include <vector>

#include "snarklab/budget.hpp"
#include "snarklab/core.hpp"
#include "snarklab/element_set.hpp"

namespace snarklab {

using Colour = std::uint8_t;

class EdgeColouring {
 public:
  EdgeColouring() = default;
  explicit EdgeColouring(int num_elements) : colours_(num_elements, 0) {}

  int size() const { return static_cast<int>(colours_.size()); }
  Colour operator[](int id) const { return colours_[id]; }
  void set(int id, Colour c) { colours_[id] = c; }
  std::span<const Colour> values() const { return colours_; }

  bool is_total() const {
    for (Colour c : colours_)
      if (c == 0) return false;
    return true;
  }

  friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

 private:
  std::vector<Colour> colours_;
};

/// Vertices at which two assigned incident elements share a colour.
inline std::vector<Vertex> conflicting_vertices(const SemiGraph& g, const EdgeColouring& c) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    int seen = 0;
    for (int id : g.incident(v)) {
      if (c[id] == 0) continue;
      int bit = 1 << c[id];
      if (seen & bit) {
        out.push_back(v);
        break;
      }
      seen |= bit;
    }
  }
  return out;
}

inline bool is_proper(const SemiGraph& g, const EdgeColouring& c) {
  return c.size() == g.num_elements() && c.is_total() && conflicting_vertices(g, c).empty();
}

/// Applies perm[c] to every assigned colour (perm[0] is ignored).
inline EdgeColouring permute_colours(const EdgeColouring& c, const std::array<Colour, 4>& perm) {
  EdgeColouring out(c.size());
  for (int id = 0; id < c.size(); ++id) out.set(id, c[id] ? perm[c[id]] : 0);
  return out;
}

/// The six permutations of {1,2,3}, identity first.
inline std::array<std::array<Colour, 4>, 6> colour_permutations() {
  return {{{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1}}};
}

/// Conflicting colouring witnessing r_v.
struct ConflictColouring {
  EdgeColouring colouring;
  std::vector<Vertex> conflicts;
};

/// Removed elements plus a proper colouring of everything else (removed
/// elements carry colour 0).
struct RemovedElements {
  std::vector<int> removed;
  EdgeColouring colouring;
};

using ResistanceCertificate = std::variant<RemovedElements, ConflictColouring>;

namespace detail {

enum class SearchOutcome { completed, stopped, exhausted };

/// Proper colouring search with most-constrained-element selection.
/// Elements in `excluded` are treated as absent.
class ProperSearch {
 public:
  ProperSearch(const SemiGraph& g, BudgetMeter& meter, const ElementSet* excluded = nullptr)
      : g_(g), meter_(meter), colouring_(g.num_elements()), mask_(g.order(), 0), rank_(g.num_elements()) {
    for (int id = 0; id < g.num_elements(); ++id)
      if (!excluded || !excluded->test(id)) active_.push_back(id);
    // Elements of the first maximum-degree vertex are preferred on ties, so
    // the root branching fixes that vertex's colours.
    Vertex pivot = 0;
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) > g.degree(pivot)) pivot = v;
    std::iota(rank_.begin(), rank_.end(), g.num_elements());
    int r = 0;
    if (g.order() > 0)
      for (int id : g.incident(pivot)) rank_[id] = r++;
  }

  template <class Visit>
  SearchOutcome run(Visit&& visit) {
    outcome_ = SearchOutcome::completed;
    dfs(visit);
    return outcome_;
  }

 private:
  int available(int id) const {
    const Element& e = g_.element(id);
    int used = mask_[e.u] | (e.is_semi() ? 0 : mask_[e.v]);
    return ~used & 0b1110;
  }

  void assign(int id, Colour c, bool on) {
    const Element& e = g_.element(id);
    int bit = 1 << c;
    if (on) {
      mask_[e.u] |= bit;
      if (!e.is_semi()) mask_[e.v] |= bit;
      colouring_.set(id, c);
      ++used_[c];
    } else {
      mask_[e.u] &= ~bit;
      if (!e.is_semi()) mask_[e.v] &= ~bit;
      colouring_.set(id, 0);
      --used_[c];
    }
  }

  template <class Visit>
  bool dfs(Visit& visit) {
    if (!meter_.tick()) {
      outcome_ = SearchOutcome::exhausted;
      return false;
    }
    int best = -1, best_count = 4;
    for (int id : active_) {
      if (colouring_[id]) continue;
      int avail = available(id);
      int cnt = std::popcount(static_cast<unsigned>(avail));
      if (cnt == 0) return true;
      if (cnt < best_count || (cnt == best_count && rank_[id] < rank_[best])) {
        best = id;
        best_count = cnt;
      }
    }
    if (best < 0) {
      if (!visit(static_cast<const EdgeColouring&>(colouring_))) {
        outcome_ = SearchOutcome::stopped;
        return false;
      }
      return true;
    }
    int avail = available(best);
    bool tried_unused = false;
    for (Colour c = 1; c <= 3; ++c) {
      if (!(avail & (1 << c))) continue;
      if (used_[c] == 0) {
        if (tried_unused) continue;
        tried_unused = true;
      }
      assign(best, c, true);
      bool go_on = dfs(visit);
      assign(best, c, false);
      if (!go_on) return false;
    }
    return true;
  }

  const SemiGraph& g_;
  BudgetMeter& meter_;
  EdgeColouring colouring_;
  std::vector<int> mask_;
  std::vector<int> rank_;
  std::vector<int> active_;
  std::array<int, 4> used_{};
  SearchOutcome outcome_ = SearchOutcome::completed;
};

/// Elements in breadth-first order from the first maximum-degree vertex.
inline std::vector<int> bfs_element_order(const SemiGraph& g) {
  std::vector<int> order;
  std::vector<char> seen_v(g.order(), 0), seen_e(g.num_elements(), 0);
  Vertex pivot = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > g.degree(pivot)) pivot = v;
  auto sweep = [&](Vertex s) {
    std::queue<Vertex> q;
    q.push(s);
    seen_v[s] = 1;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (int id : g.incident(u)) {
        if (!seen_e[id]) {
          seen_e[id] = 1;
          order.push_back(id);
        }
        const Element& e = g.element(id);
        if (!e.is_semi() && !seen_v[e.other(u)]) {
          seen_v[e.other(u)] = 1;
          q.push(e.other(u));
        }
      }
    }
  };
  if (g.order() > 0) sweep(pivot);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!seen_v[v]) sweep(v);
  return order;
}

/// Enumerates total colourings with at most `limit` conflicting vertices.
/// Lower bound: vertices already conflicting plus vertices that will be
/// (more unassigned elements than free colours).
class ConflictSearch {
 public:
  ConflictSearch(const SemiGraph& g, int limit, BudgetMeter& meter)
      : g_(g),
        limit_(limit),
        meter_(meter),
        order_(bfs_element_order(g)),
        colouring_(g.num_elements()),
        count_(g.order(), std::array<int, 4>{}),
        unassigned_(g.order()),
        cost_(g.order(), 0) {
    for (Vertex v = 0; v < g.order(); ++v) {
      unassigned_[v] = g.degree(v);
      cost_[v] = vertex_cost(v);
      bound_ += cost_[v];
    }
  }

  template <class Visit>
  SearchOutcome run(Visit&& visit) {
    outcome_ = SearchOutcome::completed;
    if (bound_ <= limit_) dfs(visit, 0, 0);
    return outcome_;
  }

 private:
  int vertex_cost(Vertex v) const {
    int distinct = 0;
    for (int c = 1; c <= 3; ++c) {
      if (count_[v][c] >= 2) return 1;
      if (count_[v][c]) ++distinct;
    }
    return unassigned_[v] > 3 - distinct ? 1 : 0;
  }

  void touch(Vertex v, Colour c, int delta) {
    count_[v][c] += delta;
    unassigned_[v] -= delta;
    int nc = vertex_cost(v);
    bound_ += nc - cost_[v];
    cost_[v] = nc;
  }

  void assign(int id, Colour c, int delta) {
    const Element& e = g_.element(id);
    touch(e.u, c, delta);
    if (!e.is_semi()) touch(e.v, c, delta);
    colouring_.set(id, delta > 0 ? c : 0);
  }

  template <class Visit>
  bool dfs(Visit& visit, std::size_t pos, int max_used) {
    if (!meter_.tick()) {
      outcome_ = SearchOutcome::exhausted;
      return false;
    }
    if (pos == order_.size()) {
      if (!visit(static_cast<const EdgeColouring&>(colouring_), bound_)) {
        outcome_ = SearchOutcome::stopped;
        return false;
      }
      return true;
    }
    int id = order_[pos];
    for (Colour c = 1; c <= 3 && c <= max_used + 1; ++c) {
      assign(id, c, 1);
      bool go_on = true;
      if (bound_ <= limit_) go_on = dfs(visit, pos + 1, std::max<int>(max_used, c));
      assign(id, c, -1);
      if (!go_on) return false;
    }
    return true;
  }

  const SemiGraph& g_;
  int limit_;
  BudgetMeter& meter_;
  std::vector<int> order_;
  EdgeColouring colouring_;
  std::vector<std::array<int, 4>> count_;
  std::vector<int> unassigned_;
  std::vector<int> cost_;
  int bound_ = 0;
  SearchOutcome outcome_ = SearchOutcome::completed;
};

inline void require_subcubic(const SemiGraph& g) {
  if (g.max_degree() > 3) throw PreconditionError("colouring requires maximum degree <= 3");
}

/// First-fit colouring choosing the locally least conflicting colour.
inline EdgeColouring greedy_colouring(const SemiGraph& g) {
  EdgeColouring c(g.num_elements());
  std::vector<std::array<int, 4>> count(g.order(), std::array<int, 4>{});
  for (int id : bfs_element_order(g)) {
    const Element& e = g.element(id);
    Colour best = 1;
    int best_cost = 1 << 20;
    for (Colour col = 1; col <= 3; ++col) {
      int cost = count[e.u][col] + (e.is_semi() ? 0 : count[e.v][col]);
      if (cost < best_cost) {
        best_cost = cost;
        best = col;
      }
    }
    c.set(id, best);
    ++count[e.u][best];
    if (!e.is_semi()) ++count[e.v][best];
  }
  return c;
}

}  // namespace detail

/// First proper colouring in canonical search order, if one exists. Returns
/// nullopt also when the budget runs out; pass `exhausted` to tell the two apart.
inline std::optional<EdgeColouring> find_proper_colouring(const SemiGraph& g, const Budget& budget = {},
                                                          bool* exhausted = nullptr) {
  detail::require_subcubic(g);
  BudgetMeter meter(budget);
  std::optional<EdgeColouring> found;
  auto outcome = detail::ProperSearch(g, meter).run([&](const EdgeColouring& c) {
    found = c;
    return false;
  });
  if (exhausted) *exhausted = outcome == detail::SearchOutcome::exhausted;
  return found;
}

inline bool is_colourable(const SemiGraph& g) { return find_proper_colouring(g).has_value(); }

/// Visits every proper colouring once per colour-permutation class.
/// The visitor returns false to stop.
template <class Visitor>
Enumeration for_all_proper_colourings(const SemiGraph& g, Visitor&& visit, const Budget& budget = {}) {
  detail::require_subcubic(g);
  BudgetMeter meter(budget);
  Enumeration result;
  auto outcome = detail::ProperSearch(g, meter).run([&](const EdgeColouring& c) {
    ++result.count;
    return visit(c);
  });
  result.truncated = outcome == detail::SearchOutcome::exhausted;
  result.stopped = outcome == detail::SearchOutcome::stopped;
  return result;
}

/// Visits every total colouring with at most `limit` conflicting vertices,
/// once per colour-permutation class. Visitor: (colouring, conflict count).
template <class Visitor>
Enumeration for_all_colourings_with_conflicts(const SemiGraph& g, int limit, Visitor&& visit,
                                              const Budget& budget = {}) {
  detail::require_subcubic(g);
  BudgetMeter meter(budget);
  Enumeration result;
  auto outcome = detail::ConflictSearch(g, limit, meter).run([&](const EdgeColouring& c, int conflicts) {
    ++result.count;
    return visit(c, conflicts);
  });
  result.truncated = outcome == detail::SearchOutcome::exhausted;
  result.stopped = outcome == detail::SearchOutcome::stopped;
  return result;
}

/// Semi-edge count per colour of a proper colouring.
inline std::array<int, 3> parity_profile(const EdgeColouring& c, const SemiGraph& g) {
  if (!is_proper(g, c)) throw PreconditionError("parity profile needs a proper total colouring");
  std::array<int, 3> k{};
  for (int id = g.num_edges(); id < g.num_elements(); ++id) ++k[c[id] - 1];
  return k;
}

/// Minimum number of conflicting vertices over all total 3-edge-colourings,
/// by iterative deepening on the conflict limit. `lower_hint` must be a
/// proven lower bound (e.g. from disjoint conflicting semi-subgraphs).
inline MeasureResult<ConflictColouring> vertex_resistance(const SemiGraph& g, const Budget& budget = {},
                                                          int lower_hint = 0) {
  detail::require_subcubic(g);
  BudgetMeter meter(budget);
  MeasureResult<ConflictColouring> result;
  EdgeColouring greedy = detail::greedy_colouring(g);
  auto greedy_conflicts = conflicting_vertices(g, greedy);
  int upper = static_cast<int>(greedy_conflicts.size());
  result.certificate = ConflictColouring{greedy, greedy_conflicts};
  result.upper = upper;
  result.lower = std::min(lower_hint, upper);

  for (int k = result.lower; k < upper; ++k) {
    std::optional<EdgeColouring> found;
    detail::SearchOutcome outcome;
    if (k == 0) {
      outcome = detail::ProperSearch(g, meter).run([&](const EdgeColouring& c) {
        found = c;
        return false;
      });
    } else {
      outcome = detail::ConflictSearch(g, k, meter).run([&](const EdgeColouring& c, int) {
        found = c;
        return false;
      });
    }
    if (found) {
      auto conflicts = conflicting_vertices(g, *found);
      result.status = Status::exact;
      result.lower = result.upper = static_cast<int>(conflicts.size());
      result.certificate = ConflictColouring{*found, conflicts};
      result.nodes = meter.nodes();
      return result;
    }
    if (outcome == detail::SearchOutcome::exhausted) {
      result.lower = k;
      result.nodes = meter.nodes();
      return result;
    }
    result.lower = k + 1;
  }
  result.status = Status::exact;
  result.lower = upper;
  result.nodes = meter.nodes();
  return result;
}

namespace detail {

/// Turns a conflicting colouring into a removal set: at each conflicting
/// vertex, drop incident elements that repeat a colour.
inline RemovedElements removal_from_colouring(const SemiGraph& g, const EdgeColouring& c) {
  RemovedElements r{{}, c};
  std::vector<char> removed(g.num_elements(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    int seen = 0;
    for (int id : g.incident(v)) {
      if (removed[id]) continue;
      int bit = 1 << c[id];
      if (seen & bit) {
        removed[id] = 1;
        r.colouring.set(id, 0);
      } else {
        seen |= bit;
      }
    }
  }
  for (int id = 0; id < g.num_elements(); ++id)
    if (removed[id]) r.removed.push_back(id);
  return r;
}

}  // namespace detail

/// Minimum number of elements whose removal leaves a 3-edge-colourable
/// residual (degree-2 vertices allowed), by iterative deepening over removal
/// sets in lexicographic order.
inline MeasureResult<RemovedElements> edge_resistance(const SemiGraph& g, const Budget& budget = {},
                                                      int lower_hint = 0) {
  detail::require_subcubic(g);
  BudgetMeter meter(budget);
  MeasureResult<RemovedElements> result;
  auto fallback = detail::removal_from_colouring(g, detail::greedy_colouring(g));
  const int m = g.num_elements();
  int upper = static_cast<int>(fallback.removed.size());
  result.certificate = fallback;
  result.upper = upper;
  result.lower = std::min(lower_hint, upper);

  for (int k = result.lower; k < upper; ++k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    bool exhausted = false;
    for (;;) {
      ElementSet excluded = ElementSet::from(m, idx);
      std::optional<EdgeColouring> found;
      auto outcome = detail::ProperSearch(g, meter, &excluded).run([&](const EdgeColouring& c) {
        found = c;
        return false;
      });
      if (found) {
        result.status = Status::exact;
        result.lower = result.upper = k;
        result.certificate = RemovedElements{idx, *found};
        result.nodes = meter.nodes();
        return result;
      }
      if (outcome == detail::SearchOutcome::exhausted) {
        exhausted = true;
        break;
      }
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == m - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (exhausted) {
      result.lower = k;
      result.nodes = meter.nodes();
      return result;
    }
    result.lower = k + 1;
  }
  result.status = Status::exact;
  result.lower = upper;
  result.nodes = meter.nodes();
  return result;
}

}  // namespace snarklab
