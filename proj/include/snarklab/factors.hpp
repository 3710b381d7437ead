#pragma once

// 1-factors of semi-graphs, 2-factors of cubic graphs, and oddness.

#include <optional>
#include <vector>

#include "snarklab/budget.hpp"
#include "snarklab/colouring.hpp"
#include "snarklab/core.hpp"
#include "snarklab/element_set.hpp"
#include "snarklab/invariants.hpp"

namespace snarklab {

/// Spanning 1-regular element set; a semi-edge covers only its carrier.
struct OneFactor {
  ElementSet elements;

  bool contains(int id) const { return elements.test(id); }
  friend bool operator==(const OneFactor&, const OneFactor&) = default;
  friend auto operator<=>(const OneFactor& a, const OneFactor& b) { return a.elements <=> b.elements; }
};

/// 2-regular spanning edge set of a graph with its cycle decomposition.
struct TwoFactor {
  ElementSet edges;
  std::vector<std::vector<Vertex>> cycles;  // each starts at its least vertex

  std::vector<int> cycle_lengths() const {
    std::vector<int> out;
    for (const auto& c : cycles) out.push_back(static_cast<int>(c.size()));
    return out;
  }
  int odd_count() const {
    int k = 0;
    for (const auto& c : cycles) k += static_cast<int>(c.size() % 2);
    return k;
  }
};

/// Elements a factor must contain or avoid.
struct FactorConstraints {
  std::vector<int> required;
  std::vector<int> forbidden;
};

inline bool is_one_factor(const SemiGraph& g, const ElementSet& s) {
  std::vector<int> cover(g.order(), 0);
  bool ok = true;
  s.for_each([&](int id) {
    const Element& e = g.element(id);
    ++cover[e.u];
    if (!e.is_semi()) ++cover[e.v];
  });
  for (int c : cover) ok = ok && c == 1;
  return ok;
}

/// Decomposes a 2-regular spanning edge set into cycles; nullopt if `edges`
/// is not one (or contains a semi-edge).
inline std::optional<TwoFactor> two_factor_from_edges(const SemiGraph& g, const ElementSet& edges) {
  std::vector<std::vector<Vertex>> adj(g.order());
  bool ok = true;
  edges.for_each([&](int id) {
    const Element& e = g.element(id);
    if (e.is_semi()) {
      ok = false;
      return;
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  });
  if (!ok) return std::nullopt;
  for (const auto& a : adj)
    if (a.size() != 2) return std::nullopt;
  TwoFactor f{edges, {}};
  std::vector<char> seen(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> cyc;
    Vertex prev = kNoVertex, cur = s;
    while (!seen[cur]) {
      seen[cur] = 1;
      cyc.push_back(cur);
      Vertex nxt = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
      prev = cur;
      cur = nxt;
    }
    f.cycles.push_back(std::move(cyc));
  }
  return f;
}

namespace detail {

class FactorSearch {
 public:
  FactorSearch(const SemiGraph& g, BudgetMeter& meter, const FactorConstraints& cons)
      : g_(g), meter_(meter), chosen_(g.num_elements()), covered_(g.order(), 0), forbidden_(g.num_elements(), 0) {
    for (int id : cons.forbidden) forbidden_[id] = 1;
    for (int id : cons.required) {
      const Element& e = g.element(id);
      if (forbidden_[id] || covered_[e.u] || (!e.is_semi() && covered_[e.v])) {
        infeasible_ = true;
        return;
      }
      take(id, true);
    }
  }

  template <class Visit>
  SearchOutcome run(Visit&& visit) {
    outcome_ = SearchOutcome::completed;
    if (!infeasible_) dfs(visit, 0);
    return outcome_;
  }

 private:
  void take(int id, bool on) {
    const Element& e = g_.element(id);
    covered_[e.u] = on;
    if (!e.is_semi()) covered_[e.v] = on;
    if (on)
      chosen_.set(id);
    else
      chosen_.reset(id);
  }

  bool usable(int id) const {
    if (forbidden_[id]) return false;
    const Element& e = g_.element(id);
    return !covered_[e.u] && (e.is_semi() || !covered_[e.v]);
  }

  bool has_option(Vertex v) const {
    for (int id : g_.incident(v))
      if (usable(id)) return true;
    return false;
  }

  template <class Visit>
  bool dfs(Visit& visit, Vertex from) {
    if (!meter_.tick()) {
      outcome_ = SearchOutcome::exhausted;
      return false;
    }
    Vertex v = from;
    while (v < g_.order() && covered_[v]) ++v;
    if (v == g_.order()) {
      if (!visit(OneFactor{chosen_})) {
        outcome_ = SearchOutcome::stopped;
        return false;
      }
      return true;
    }
    for (int id : g_.incident(v)) {
      if (!usable(id)) continue;
      take(id, true);
      const Element& e = g_.element(id);
      bool dead = false;
      for (Vertex end : {e.u, e.v}) {
        if (end == kNoVertex) continue;
        for (Vertex w : g_.neighbours(end))
          if (!covered_[w] && !has_option(w)) dead = true;
      }
      bool go_on = dead ? true : dfs(visit, v + 1);
      take(id, false);
      if (!go_on) return false;
    }
    return true;
  }

  const SemiGraph& g_;
  BudgetMeter& meter_;
  ElementSet chosen_;
  std::vector<char> covered_;
  std::vector<char> forbidden_;
  bool infeasible_ = false;
  SearchOutcome outcome_ = SearchOutcome::completed;
};

template <class Visitor>
Enumeration enumerate_one_factors(const SemiGraph& g, Visitor&& visit, BudgetMeter& meter,
                                  const FactorConstraints& cons = {}) {
  Enumeration result;
  auto outcome = FactorSearch(g, meter, cons).run([&](const OneFactor& f) {
    ++result.count;
    return visit(f);
  });
  result.truncated = outcome == SearchOutcome::exhausted;
  result.stopped = outcome == SearchOutcome::stopped;
  return result;
}

}  // namespace detail

/// Visits every 1-factor once, in canonical order (lowest uncovered vertex
/// first, its incident elements ascending). The visitor returns false to stop.
template <class Visitor>
Enumeration enumerate_one_factors(const SemiGraph& g, Visitor&& visit, const Budget& budget = {},
                                  const FactorConstraints& cons = {}) {
  BudgetMeter meter(budget);
  return detail::enumerate_one_factors(g, visit, meter, cons);
}

/// All 1-factors (stops early and sets `truncated` on budget exhaustion).
inline std::vector<OneFactor> all_one_factors(const SemiGraph& g, const Budget& budget = {},
                                              bool* truncated = nullptr) {
  std::vector<OneFactor> out;
  auto e = enumerate_one_factors(
      g,
      [&](const OneFactor& f) {
        out.push_back(f);
        return true;
      },
      budget);
  if (truncated) *truncated = e.truncated;
  return out;
}

inline void require_bridgeless_cubic(const SemiGraph& g) {
  if (!g.is_cubic()) throw PreconditionError("input is not cubic");
  if (!is_bridgeless(g)) throw PreconditionError("input has a bridge");
}

/// A 1-factor containing element `id`; existence is guaranteed for bridgeless
/// cubic semi-graphs.
inline OneFactor one_factor_containing(const SemiGraph& g, int id) {
  require_bridgeless_cubic(g);
  if (id < 0 || id >= g.num_elements()) throw GraphError("element id out of range");
  std::optional<OneFactor> found;
  enumerate_one_factors(
      g,
      [&](const OneFactor& f) {
        found = f;
        return false;
      },
      Budget{}, FactorConstraints{{id}, {}});
  if (!found) throw TheoremViolation("no 1-factor contains element " + to_string(g.element(id)));
  return *found;
}

inline void require_cubic_graph(const SemiGraph& g) {
  if (!g.is_graph()) throw PreconditionError("2-factors and oddness are defined on graphs without semi-edges");
  if (!g.is_cubic()) throw PreconditionError("input is not cubic");
}

/// Visits the 2-factors of a cubic graph as complements of its 1-factors.
template <class Visitor>
Enumeration for_each_two_factor(const SemiGraph& g, Visitor&& visit, const Budget& budget = {}) {
  require_cubic_graph(g);
  BudgetMeter meter(budget);
  return detail::enumerate_one_factors(
      g,
      [&](const OneFactor& m) {
        auto f = two_factor_from_edges(g, m.elements.complement());
        if (!f) throw TheoremViolation("complement of a perfect matching is not 2-regular");
        return visit(*f);
      },
      meter);
}

inline std::vector<TwoFactor> two_factors(const SemiGraph& g, const Budget& budget = {}) {
  std::vector<TwoFactor> out;
  for_each_two_factor(
      g,
      [&](const TwoFactor& f) {
        out.push_back(f);
        return true;
      },
      budget);
  return out;
}

/// 2-factor formed by colours 1 and 2 of a proper colouring.
inline TwoFactor two_factor_from_colouring(const SemiGraph& g, const EdgeColouring& c) {
  ElementSet s(g.num_elements());
  for (int id = 0; id < g.num_edges(); ++id)
    if (c[id] != 3) s.set(id);
  auto f = two_factor_from_edges(g, s);
  if (!f) throw TheoremViolation("colour classes 1 and 2 do not form a 2-factor");
  return *f;
}

/// Minimum number of odd cycles over all 2-factors of a bridgeless cubic
/// graph. `hint` may seed the upper bound with a known witness.
inline MeasureResult<TwoFactor> oddness(const SemiGraph& g, const Budget& budget = {},
                                        const std::optional<TwoFactor>& hint = std::nullopt) {
  require_cubic_graph(g);
  require_bridgeless_cubic(g);
  BudgetMeter meter(budget);
  MeasureResult<TwoFactor> result;
  if (hint) {
    result.certificate = hint;
    result.upper = hint->odd_count();
  } else {
    result.upper = g.order();
  }

  std::optional<EdgeColouring> colouring;
  auto outcome = detail::ProperSearch(g, meter).run([&](const EdgeColouring& c) {
    colouring = c;
    return false;
  });
  if (colouring) {
    result.status = Status::exact;
    result.lower = result.upper = 0;
    result.certificate = two_factor_from_colouring(g, *colouring);
    result.nodes = meter.nodes();
    return result;
  }
  result.lower = outcome == detail::SearchOutcome::exhausted ? 0 : 2;
  if (outcome == detail::SearchOutcome::exhausted) {
    result.nodes = meter.nodes();
    return result;
  }

  auto e = detail::enumerate_one_factors(
      g,
      [&](const OneFactor& m) {
        auto f = two_factor_from_edges(g, m.elements.complement());
        if (!f) throw TheoremViolation("complement of a perfect matching is not 2-regular");
        int odd = f->odd_count();
        if (!result.certificate || odd < result.upper) {
          result.upper = odd;
          result.certificate = *f;
        }
        return result.upper > result.lower;
      },
      meter);
  result.nodes = meter.nodes();
  if (!e.truncated) {
    if (!result.certificate) throw TheoremViolation("bridgeless cubic graph without a 1-factor");
    result.status = Status::exact;
    result.lower = result.upper;
    if (result.upper % 2) throw TheoremViolation("odd oddness on a bridgeless cubic graph");
  }
  return result;
}

}  // namespace snarklab
