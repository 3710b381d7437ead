#pragma once

// Mechanical checks of the gadget lemmas, independent certificate checking,
// lower-bound engines and the composed-graph theorem report.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "snarklab/budget.hpp"
#include "snarklab/colouring.hpp"
#include "snarklab/core.hpp"
#include "snarklab/defect.hpp"
#include "snarklab/factors.hpp"
#include "snarklab/gadgets.hpp"
#include "snarklab/invariants.hpp"
#include "snarklab/stitch.hpp"

namespace snarklab {

using Json = nlohmann::ordered_json;

enum class ClaimStatus { pass, fail, bounded };

inline const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    default: return "bounded";
  }
}

struct Clause {
  std::string id;
  ClaimStatus status = ClaimStatus::pass;
  std::string detail;
  Json witness;
};

struct ClaimReport {
  std::string claim;
  std::vector<Clause> clauses;
  double seconds = 0.0;

  ClaimStatus status() const {
    bool bounded = false;
    for (const auto& c : clauses) {
      if (c.status == ClaimStatus::fail) return ClaimStatus::fail;
      bounded = bounded || c.status == ClaimStatus::bounded;
    }
    return bounded ? ClaimStatus::bounded : ClaimStatus::pass;
  }
  const Clause* find(std::string_view id) const {
    for (const auto& c : clauses)
      if (c.id == id) return &c;
    return nullptr;
  }
  bool passed(std::string_view id) const {
    const Clause* c = find(id);
    return c && c->status == ClaimStatus::pass;
  }
  Clause& add(std::string id, bool ok, std::string detail, Json witness = nullptr) {
    clauses.push_back({std::move(id), ok ? ClaimStatus::pass : ClaimStatus::fail, std::move(detail), std::move(witness)});
    return clauses.back();
  }

  Json to_json(bool timing = false) const {
    Json j;
    j["claim"] = claim;
    j["status"] = to_string(status());
    Json cs = Json::array();
    for (const auto& c : clauses) {
      Json cj;
      cj["id"] = c.id;
      cj["status"] = to_string(c.status);
      cj["detail"] = c.detail;
      if (!c.witness.is_null()) cj["witness"] = c.witness;
      cs.push_back(std::move(cj));
    }
    j["clauses"] = std::move(cs);
    if (timing) j["seconds"] = seconds;
    return j;
  }
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline Json colour_values(const EdgeColouring& c) {
  Json a = Json::array();
  for (Colour x : c.values()) a.push_back(int(x));
  return a;
}

inline Json element_list(const SemiGraph& g, const ElementSet& s) {
  Json a = Json::array();
  s.for_each([&](int id) { a.push_back(to_string(g.element(id))); });
  return a;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lemma on X.

/// (i) Hamiltonian paths end exactly at {u0,v0} or {u1,v1}; (ii) Hamiltonian;
/// (iii) girth 5; (iv) every proper colouring gives u0,v0 one colour and
/// u1,v1 one colour.
inline ClaimReport verify_lemma_x(const SemiGraph& x = gadget_x()) {
  detail::Stopwatch sw;
  ClaimReport rep{"lemma-x", {}, 0.0};
  auto port = [&](const char* name) { return x.find_port(name); };
  auto u0 = port("u0"), v0 = port("v0"), u1 = port("u1"), v1 = port("v1");
  if (!u0 || !v0 || !u1 || !v1) {
    rep.add("ports", false, "gadget lacks one of the ports u0, v0, u1, v1");
    rep.seconds = sw.seconds();
    return rep;
  }
  auto ordered = [](Vertex a, Vertex b) { return std::pair{std::min(a, b), std::max(a, b)}; };
  std::set<std::pair<Vertex, Vertex>> expected{ordered(*u0, *v0), ordered(*u1, *v1)};
  // Only port-to-port paths matter: every edge of a Hamiltonian cycle yields
  // some endpoint pair.
  const std::set<Vertex> ports{*u0, *v0, *u1, *v1};
  auto all = hamiltonian_path_endpoint_pairs(x);
  std::set<std::pair<Vertex, Vertex>> got;
  for (auto pr : all)
    if (ports.count(pr.first) && ports.count(pr.second)) got.insert(pr);
  Json pairs = Json::array();
  for (auto [a, b] : got) pairs.push_back({a, b});
  rep.add("i_path_endpoints", got == expected,
          std::to_string(got.size()) + " port-to-port endpoint pairs (of " + std::to_string(all.size()) +
              " overall), expected exactly {u0,v0} and {u1,v1}",
          pairs);

  auto cyc = find_hamiltonian_cycle(x);
  rep.add("ii_hamiltonian", cyc.has_value(), cyc ? "Hamiltonian cycle found" : "no Hamiltonian cycle",
          cyc ? Json(*cyc) : Json());

  Length gi = girth(x);
  rep.add("iii_girth", !gi.is_infinite() && gi.value() == 5, "girth " + to_string(gi));

  auto se = [&](Vertex v) { return x.semi_edge_at(v); };
  bool semis = se(*u0) && se(*v0) && se(*u1) && se(*v1);
  std::uint64_t count = 0;
  std::optional<EdgeColouring> bad;
  if (semis && x.max_degree() <= 3) {
    for_all_proper_colourings(x, [&](const EdgeColouring& c) {
      ++count;
      if (c[*se(*u0)] != c[*se(*v0)] || c[*se(*u1)] != c[*se(*v1)]) {
        bad = c;
        return false;
      }
      return true;
    });
  }
  rep.add("iv_port_colours", semis && count > 0 && !bad,
          !semis ? "ports lack semi-edges"
          : bad  ? "proper colouring separates a port pair"
                 : std::to_string(count) + " colouring classes, all pair-constant",
          bad ? detail::colour_values(*bad) : Json());
  rep.seconds = sw.seconds();
  return rep;
}

/// X with its ports u0/u1 relabelled (a negative control for clause (i)).
inline SemiGraph x_with_permuted_ports() {
  SemiGraph x = gadget_x();
  SemiGraphBuilder b(x);
  b.clear_ports();
  b.set_port("u0", x.port("u1"));
  b.set_port("v0", x.port("v0"));
  b.set_port("u1", x.port("u0"));
  b.set_port("v1", x.port("v1"));
  return b.build();
}

/// X minus its first internal edge (a negative control).
inline SemiGraph x_with_edge_removed(int edge = 0) {
  SemiGraph x = gadget_x();
  SemiGraphBuilder b(x);
  b.remove_edge(x.element(edge).u, x.element(edge).v);
  return b.build();
}

// ---------------------------------------------------------------------------
// Remark on X.

/// A cubic graph containing one copy of a 4-port gadget at `embedding`.
struct RemarkHost {
  std::string name;
  SemiGraph graph;
  SemiGraph gadget;
  std::vector<Vertex> embedding;
};

namespace detail {

// Closes the gadget's ports through `extra` new vertices; `joins` pairs a
// port name with an extra-vertex index and `edges` joins extra vertices.
inline RemarkHost close_gadget(std::string name, const SemiGraph& gadget, int extra,
                               const std::vector<std::pair<std::string, int>>& joins,
                               const std::vector<std::pair<int, int>>& edges) {
  SemiGraphBuilder b;
  Vertex off = b.append(gadget);
  Vertex first = b.add_vertices(extra);
  for (const auto& [port, k] : joins) b.join_to_vertex(off + gadget.port(port), first + k);
  for (auto [i, j] : edges) b.add_edge(first + i, first + j);
  b.clear_ports();
  RemarkHost h{std::move(name), b.build(), gadget, {}};
  for (Vertex v = 0; v < gadget.order(); ++v) h.embedding.push_back(off + v);
  return h;
}

}  // namespace detail

/// 2x4 ladder with its corners as ports: bipartite and colourable.
inline SemiGraph ladder_gadget() {
  SemiGraphBuilder b(8);
  for (int i = 0; i < 3; ++i) {
    b.add_edge(i, i + 1);
    b.add_edge(i + 4, i + 5);
  }
  for (int i = 0; i < 4; ++i) b.add_edge(i, i + 4);
  for (Vertex v : {0, 3, 4, 7}) b.add_semi_edge(v);
  b.set_port("u0", 0);
  b.set_port("v0", 4);
  b.set_port("u1", 3);
  b.set_port("v1", 7);
  return b.build();
}

/// Shipped closures of X, all at most 16 vertices.
inline std::vector<RemarkHost> remark_x_hosts() {
  const SemiGraph x = gadget_x();
  std::vector<RemarkHost> hosts;
  hosts.push_back(detail::close_gadget("petersen", x, 2, {{"u0", 0}, {"v0", 0}, {"u1", 1}, {"v1", 1}}, {{0, 1}}));
  hosts.push_back(detail::close_gadget("crossed", x, 2, {{"u0", 0}, {"u1", 0}, {"v0", 1}, {"v1", 1}}, {{0, 1}}));
  hosts.push_back(detail::close_gadget("square", x, 4, {{"u0", 0}, {"v0", 1}, {"u1", 2}, {"v1", 3}},
                                       {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  {
    SemiGraphBuilder b;
    Vertex a = b.append(x), c = b.append(x);
    b.join(a + x.port("u1"), c + x.port("u0"));
    b.join(a + x.port("v1"), c + x.port("v0"));
    b.join(c + x.port("u1"), a + x.port("u0"));
    b.join(c + x.port("v1"), a + x.port("v0"));
    b.clear_ports();
    RemarkHost h{"ring", b.build(), x, {}};
    for (Vertex v = 0; v < x.order(); ++v) h.embedding.push_back(a + v);
    hosts.push_back(std::move(h));
  }
  return hosts;
}

/// The Petersen-shaped closure around the ladder; the remark must fail here.
inline RemarkHost ladder_host() {
  return detail::close_gadget("ladder", ladder_gadget(), 2, {{"u0", 0}, {"v0", 0}, {"u1", 1}, {"v1", 1}}, {{0, 1}});
}

/// For every 2-factor with a path component inside the gadget running from a
/// left port (u0, v0) to a right port (u1, v1), some odd cycle of the
/// 2-factor lies entirely inside the gadget. Hosts with no such 2-factor
/// fail as vacuous.
inline ClaimReport verify_remark_x(const std::vector<RemarkHost>& hosts) {
  if (hosts.empty()) throw PreconditionError("no host closures given");
  detail::Stopwatch sw;
  ClaimReport rep{"remark-x", {}, 0.0};
  for (const auto& host : hosts) {
    const SemiGraph& g = host.graph;
    std::vector<char> inside(g.order(), 0);
    for (Vertex v : host.embedding) inside[v] = 1;
    auto at = [&](const char* p) { return host.embedding[host.gadget.port(p)]; };
    const Vertex left[2] = {at("u0"), at("v0")}, right[2] = {at("u1"), at("v1")};
    std::uint64_t total = 0, traversing = 0;
    std::optional<TwoFactor> counterexample;
    for_each_two_factor(g, [&](const TwoFactor& f) {
      ++total;
      // Path components of the 2-factor restricted to the gadget end at
      // vertices with exactly one inside 2-factor edge.
      std::vector<std::vector<Vertex>> adj(g.order());
      f.edges.for_each([&](int id) {
        const Element& e = g.element(id);
        if (inside[e.u] && inside[e.v]) {
          adj[e.u].push_back(e.v);
          adj[e.v].push_back(e.u);
        }
      });
      bool traverses = false;
      for (Vertex l : left) {
        if (adj[l].size() != 1) continue;
        Vertex prev = l, cur = adj[l][0];
        while (adj[cur].size() == 2) {
          Vertex nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
          prev = cur;
          cur = nxt;
        }
        traverses = traverses || cur == right[0] || cur == right[1];
      }
      if (!traverses) return true;
      ++traversing;
      bool odd_inside = false;
      for (const auto& c : f.cycles) {
        bool all = true;
        for (Vertex v : c) all = all && inside[v];
        odd_inside = odd_inside || (all && c.size() % 2 == 1);
      }
      if (!odd_inside) {
        counterexample = f;
        return false;
      }
      return true;
    });
    Json w;
    w["vertices"] = g.order();
    w["two_factors"] = total;
    w["traversing"] = traversing;
    if (counterexample) w["counterexample_cycles"] = counterexample->cycles;
    bool ok = !counterexample && traversing > 0;
    std::string detail = counterexample ? "traversing 2-factor with no odd cycle inside the gadget"
                         : traversing == 0 ? "no traversing 2-factor (vacuous)"
                                           : std::to_string(traversing) + " of " + std::to_string(total) +
                                                 " 2-factors traverse, each with an odd cycle inside";
    rep.add("host_" + host.name, ok, detail, w);
  }
  rep.seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Remark on Y.

/// Non-colourability, r = r_v = 1, x as a possible sole conflict, the
/// stronger "every optimal colouring conflicts only at x" form, and
/// Hamiltonicity.
inline ClaimReport verify_remark_y(const SemiGraph& y = gadget_y()) {
  detail::Stopwatch sw;
  ClaimReport rep{"remark-y", {}, 0.0};
  rep.add("non_colourable", !is_colourable(y), "exhaustive proper-colouring search");
  auto r = edge_resistance(y);
  auto rv = vertex_resistance(y);
  rep.add("resistance_one", r.is_exact() && r.value() == 1, "r = " + std::to_string(r.upper));
  rep.add("vertex_resistance_one", rv.is_exact() && rv.value() == 1, "r_v = " + std::to_string(rv.upper));

  const Vertex x = y.port("x");
  std::optional<EdgeColouring> at_x, elsewhere;
  std::set<Vertex> sites;
  std::uint64_t optimal = 0;
  for_all_colourings_with_conflicts(y, 1, [&](const EdgeColouring& c, int k) {
    if (k != 1) return true;
    ++optimal;
    Vertex v = conflicting_vertices(y, c).front();
    sites.insert(v);
    if (v == x && !at_x) at_x = c;
    if (v != x && !elsewhere) elsewhere = c;
    return true;
  });
  rep.add("x_can_be_sole_conflict", at_x.has_value(),
          at_x ? "1-conflict colouring with its conflict at x" : "x is never the sole conflict",
          at_x ? detail::colour_values(*at_x) : Json());
  Json w;
  w["optimal_colourings"] = optimal;
  w["conflict_sites"] = Json(std::vector<Vertex>(sites.begin(), sites.end()));
  if (elsewhere) w["counterexample"] = detail::colour_values(*elsewhere);
  rep.add("conflict_only_at_x", !elsewhere && at_x,
          elsewhere ? "refuted: " + std::to_string(sites.size()) + " distinct sole-conflict sites"
                    : "every optimal colouring conflicts at x",
          w);

  auto cyc = find_hamiltonian_cycle(y);
  rep.add("hamiltonian", cyc.has_value(), cyc ? "Hamiltonian cycle found" : "no Hamiltonian cycle",
          cyc ? Json(*cyc) : Json());
  rep.seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Cores.

inline bool permitted_kind(ComponentKind k) { return k != ComponentKind::other; }

/// Petersen triples, find_proper_core on the gadget set, and component
/// classification of random triples.
inline ClaimReport verify_cores(std::uint64_t seed = 1, int samples = 1000) {
  detail::Stopwatch sw;
  ClaimReport rep{"cores", {}, 0.0};

  const SemiGraph p = petersen();
  auto fs = all_one_factors(p);
  int triples = 0, good = 0;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      for (std::size_t k = j + 1; k < fs.size(); ++k) {
        ++triples;
        auto cd = classify_triple(p, {fs[i], fs[j], fs[k]});
        bool ok = cd.uncovered() == 3 && cd.components.size() == 1 &&
                  cd.components[0].kind == ComponentKind::even_cycle && cd.components[0].length == 6 &&
                  cd.components[0].alternating;
        good += ok;
      }
  rep.add("petersen_triples", triples == 20 && good == 20,
          std::to_string(good) + " of " + std::to_string(triples) + " distinct triples leave 3 uncovered on an alternating 6-cycle core");

  std::vector<std::pair<std::string, SemiGraph>> gadgets{
      {"petersen", p}, {"X", gadget_x()}, {"Y", gadget_y()}, {"M(heawood)", m_gadget(catalog_bipartite_cubic(6), {0, 1, 2})}};
  for (std::size_t gi = 0; gi < 3; ++gi) {
    const auto& [name, g] = gadgets[gi];
    bool ok = true;
    std::string detail;
    try {
      auto [t, cd] = find_proper_core(g);
      detail = "core of " + std::to_string(cd.core.count()) + " elements, " + std::to_string(cd.uncovered()) + " uncovered";
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    rep.add("proper_core_" + name, ok, detail);
  }

  std::mt19937_64 rng(seed);
  std::vector<std::vector<OneFactor>> factor_lists;
  for (const auto& entry : gadgets) factor_lists.push_back(all_one_factors(entry.second));
  int violations = 0;
  Json first_bad;
  std::map<std::string, int> kinds;
  for (int s = 0; s < samples; ++s) {
    std::size_t gi = rng() % gadgets.size();
    const auto& list = factor_lists[gi];
    FactorTriple t{list[rng() % list.size()], list[rng() % list.size()], list[rng() % list.size()]};
    const SemiGraph& g = gadgets[gi].second;
    auto cd = classify_triple(g, t);
    int weighted = cd.e[1].count() + 2 * cd.e[2].count() + 3 * cd.e[3].count();
    bool ok = weighted == t.m1.elements.count() + t.m2.elements.count() + t.m3.elements.count();
    for (const auto& c : cd.components) {
      ++kinds[to_string(c.kind)];
      ok = ok && permitted_kind(c.kind) && (c.kind == ComponentKind::cubic_subdivision || c.alternating);
    }
    if (!ok && ++violations == 1) {
      first_bad["gadget"] = gadgets[gi].first;
      first_bad["sample"] = s;
    }
  }
  Json w;
  w["seed"] = seed;
  w["samples"] = samples;
  w["kinds"] = kinds;
  if (violations) w["first_violation"] = first_bad;
  rep.add("random_classification", violations == 0, std::to_string(violations) + " violations", w);
  rep.seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Lower bounds and certificates.

/// An embedded copy of a gadget inside a larger semi-graph.
struct EmbeddedGadget {
  SemiGraph gadget;
  std::vector<Vertex> embedding;
};

/// Number of pairwise vertex-disjoint non-colourable semi-subgraphs; each
/// forces a conflict, so this bounds r_v (and r) from below.
inline int disjoint_conflict_lower_bound(const SemiGraph& g, const std::vector<EmbeddedGadget>& instances) {
  std::vector<char> used(g.order(), 0);
  for (const auto& inst : instances) {
    if (!is_semi_subgraph(inst.gadget, g, inst.embedding)) throw PreconditionError("instance is not a semi-subgraph");
    for (Vertex v : inst.embedding) {
      if (used[v]) throw PreconditionError("instances overlap at vertex " + std::to_string(v));
      used[v] = 1;
    }
    if (is_colourable(inst.gadget)) throw PreconditionError("instance is 3-edge-colourable");
  }
  return static_cast<int>(instances.size());
}

/// Measures to re-check; each present certificate witnesses its `upper`.
struct MeasureBundle {
  std::optional<MeasureResult<RemovedElements>> r;
  std::optional<MeasureResult<ConflictColouring>> rv;
  std::optional<MeasureResult<TwoFactor>> omega;
  std::optional<DefectResult> mu3;
};

namespace detail {

// Deliberately plain re-implementations; nothing here calls a solver.
inline int count_conflicts(const SemiGraph& g, const std::vector<Colour>& c) {
  int k = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    int seen = 0;
    bool clash = false;
    for (int id : g.incident(v)) {
      if (c[id] < 1 || c[id] > 3) return -1;
      clash = clash || (seen & (1 << c[id]));
      seen |= 1 << c[id];
    }
    k += clash;
  }
  return k;
}

inline bool covers_once(const SemiGraph& g, const ElementSet& s) {
  std::vector<int> deg(g.order(), 0);
  s.for_each([&](int id) {
    ++deg[g.element(id).u];
    if (!g.element(id).is_semi()) ++deg[g.element(id).v];
  });
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
}

}  // namespace detail

inline ClaimReport check_certificates(const SemiGraph& g, const MeasureBundle& m) {
  detail::Stopwatch sw;
  ClaimReport rep{"certificates", {}, 0.0};
  const int n = g.num_elements();
  if (m.r && m.r->certificate) {
    const auto& cert = *m.r->certificate;
    std::vector<char> removed(n, 0);
    bool ok = cert.colouring.size() == n && static_cast<int>(cert.removed.size()) == m.r->upper;
    for (int id : cert.removed) {
      ok = ok && id >= 0 && id < n && !removed[id];
      if (ok) removed[id] = 1;
    }
    for (Vertex v = 0; ok && v < g.order(); ++v) {
      int seen = 0;
      for (int id : g.incident(v)) {
        if (removed[id]) continue;
        Colour c = cert.colouring[id];
        ok = ok && c >= 1 && c <= 3 && !(seen & (1 << c));
        seen |= 1 << c;
      }
    }
    rep.add("r", ok, "removal of " + std::to_string(cert.removed.size()) + " elements leaves a proper colouring");
  }
  if (m.rv && m.rv->certificate) {
    const auto& cert = *m.rv->certificate;
    std::vector<Colour> c(cert.colouring.values().begin(), cert.colouring.values().end());
    int k = static_cast<int>(c.size()) == n ? detail::count_conflicts(g, c) : -1;
    rep.add("r_v", k == m.rv->upper && static_cast<int>(cert.conflicts.size()) == k,
            "colouring has " + std::to_string(k) + " conflicts, claimed " + std::to_string(m.rv->upper));
  }
  if (m.omega && m.omega->certificate) {
    const auto& f = *m.omega->certificate;
    bool ok = f.edges.size() == n;
    std::vector<int> deg(g.order(), 0);
    if (ok) f.edges.for_each([&](int id) {
        ok = ok && !g.element(id).is_semi();
        ++deg[g.element(id).u];
        if (!g.element(id).is_semi()) ++deg[g.element(id).v];
      });
    ok = ok && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
    // Recount odd components from the edge set alone.
    int odd = 0;
    if (ok) {
      detail::UnionFind uf(g.order());
      f.edges.for_each([&](int id) { uf.unite(g.element(id).u, g.element(id).v); });
      std::vector<int> size(g.order(), 0);
      for (Vertex v = 0; v < g.order(); ++v) ++size[uf.find(v)];
      for (Vertex v = 0; v < g.order(); ++v) odd += uf.find(v) == v && size[v] % 2;
    }
    rep.add("omega", ok && odd == m.omega->upper,
            "2-regular spanning subgraph with " + std::to_string(odd) + " odd cycles, claimed " + std::to_string(m.omega->upper));
  }
  if (m.mu3 && m.mu3->certificate) {
    const auto& t = m.mu3->certificate->triple;
    bool ok = true;
    for (const OneFactor* f : {&t.m1, &t.m2, &t.m3}) ok = ok && f->elements.size() == n && detail::covers_once(g, f->elements);
    int uncovered = 0;
    for (int id = 0; ok && id < n; ++id) uncovered += !(t.m1.contains(id) || t.m2.contains(id) || t.m3.contains(id));
    rep.add("mu3", ok && uncovered == m.mu3->upper,
            "triple of 1-factors leaves " + std::to_string(uncovered) + " uncovered, claimed " + std::to_string(m.mu3->upper));
  }
  rep.seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Inequality battery.

/// Exact values gathered for one graph; absent entries are skipped.
struct MeasuredGraph {
  std::string name;
  SemiGraph graph;
  std::optional<bool> colourable;
  std::optional<int> r, rv, omega, mu3;
};

inline MeasuredGraph measure_exact(std::string name, const SemiGraph& g, const Budget& budget = {}) {
  MeasuredGraph m{std::move(name), g, {}, {}, {}, {}, {}};
  bool exhausted = false;
  bool col = find_proper_colouring(g, budget, &exhausted).has_value();
  if (col || !exhausted) m.colourable = col;
  auto take = [](const auto& res) { return res.is_exact() ? std::optional<int>(res.value()) : std::nullopt; };
  m.r = take(edge_resistance(g, budget));
  m.rv = take(vertex_resistance(g, budget));
  if (g.is_graph() && g.is_cubic() && is_bridgeless(g)) m.omega = take(oddness(g, budget));
  if (g.is_cubic()) m.mu3 = take(mu3(g, budget));
  return m;
}

inline ClaimReport verify_bounds(const std::vector<MeasuredGraph>& graphs) {
  detail::Stopwatch sw;
  ClaimReport rep{"bounds", {}, 0.0};
  for (const auto& m : graphs) {
    std::vector<std::string> broken;
    auto need = [&](bool ok, const char* what) {
      if (!ok) broken.emplace_back(what);
    };
    if (m.omega && m.r) need(*m.omega >= *m.r, "omega >= r");
    if (m.omega) need(*m.omega % 2 == 0, "omega even");
    if (m.mu3 && m.omega) need(2 * *m.mu3 >= 3 * *m.omega, "mu3 >= 3/2 omega");
    // Girth floors on mu3 hold for graphs; semi-graphs only need mu3 >= 1.
    if (m.mu3 && m.colourable && !*m.colourable) {
      if (m.graph.is_graph()) {
        Length sg = semi_girth(m.graph);
        need(sg.is_infinite() || *m.mu3 >= ceil_half(sg.value()), "mu3 >= ceil(semi_girth/2)");
        need(*m.mu3 >= 3, "mu3 >= 3");
      } else {
        need(*m.mu3 >= 1, "mu3 >= 1");
      }
    }
    if (m.r && m.rv) need(*m.r == *m.rv, "r = r_v");
    if (m.colourable) {
      for (auto v : {m.r, m.rv, m.omega, m.mu3})
        if (v) need(*m.colourable == (*v == 0), "colourable <=> measure = 0");
    }
    Json w;
    auto put = [&](const char* key, const std::optional<int>& v) { w[key] = v ? Json(*v) : Json(); };
    w["colourable"] = m.colourable ? Json(*m.colourable) : Json();
    put("r", m.r);
    put("r_v", m.rv);
    put("omega", m.omega);
    put("mu3", m.mu3);
    std::string detail = "all inequalities hold";
    if (!broken.empty()) {
      detail = "violated:";
      for (const auto& b : broken) detail += " " + b + ";";
    }
    rep.add(m.name, broken.empty(), detail, w);
  }
  rep.seconds = sw.seconds();
  return rep;
}

/// Small graphs with known structure for the battery.
inline std::vector<std::pair<std::string, SemiGraph>> battery_catalog() {
  std::vector<std::pair<std::string, SemiGraph>> out{
      {"K4", complete_graph(4)},
      {"K3,3", k33()},
      {"petersen", petersen()},
      {"heawood", catalog_bipartite_cubic(6)},
      {"X", gadget_x()},
      {"Y", gadget_y()},
      {"M(heawood)", m_gadget(catalog_bipartite_cubic(6), {0, 1, 2})},
      {"M(petersen)", m_gadget(petersen(), {0, 1, 2})},
      {"petersen-v", delete_vertices(petersen(), {0}).first},
  };
  for (auto& h : remark_x_hosts()) out.emplace_back("host_" + h.name, h.graph);
  out.emplace_back("host_ladder", ladder_host().graph);
  return out;
}

// ---------------------------------------------------------------------------
// Theorem report.

struct TheoremTargets {
  int r = 0;
  int omega = 0;
  int girth = 5;
};

/// Structural checks, the resistance sandwich, the certified oddness bound
/// and the defect lower bound on a composed graph.
inline ClaimReport theorem_report(const CompositionPlan& plan, const TheoremTargets& want, const Budget& budget = {},
                                  int jobs = 1) {
  detail::Stopwatch sw;
  ClaimReport rep{"theorem", {}, 0.0};
  Composition comp = compose(plan);
  const SemiGraph& g = comp.graph;
  const int a = plan.a;

  Json shape;
  shape["a"] = plan.a;
  shape["b"] = plan.b;
  shape["chains"] = plan.chains;
  shape["vertices"] = g.order();
  shape["edges"] = g.num_edges();
  bool cubic = g.is_cubic() && g.is_graph();
  bool structural = cubic && is_bridgeless(g) && is_connected(g) && g.order() == expected_order(plan);
  rep.add("structure", structural, "cubic, connected, bridgeless, |V| = " + std::to_string(g.order()), shape);

  Length gi = girth(g);
  rep.add("girth", !gi.is_infinite() && gi.value() >= want.girth, "girth " + to_string(gi));
  auto cut = has_cyclic_cut_below(g, 4, jobs);
  Json cw = cut ? Json(cut->edges) : Json();
  rep.add("cyclic_connectivity", !cut, cut ? "cyclic cut of size " + std::to_string(cut->size) : "no cyclic cut below 4", cw);

  // Resistance sandwich.
  std::vector<EmbeddedGadget> conflicting;
  for (const auto& inst : comp.instances)
    if (inst.kind != "X") conflicting.push_back({inst.local, inst.embedding});
  int lower = disjoint_conflict_lower_bound(g, conflicting);
  auto colouring = stitched_conflict_colouring(comp, budget);
  int upper = -1;
  Json rw;
  rw["lower"] = lower;
  if (colouring) {
    std::vector<Colour> c(colouring->colouring.values().begin(), colouring->colouring.values().end());
    upper = detail::count_conflicts(g, c);
    rw["upper"] = upper;
    rw["conflicts"] = colouring->conflicts;
    rw["colouring"] = detail::colour_values(colouring->colouring);
  }
  rep.add("resistance", lower == a + 2 && upper == lower && upper == want.r,
          colouring ? "disjoint-conflict bound " + std::to_string(lower) + ", stitched colouring with " +
                          std::to_string(upper) + " conflicts"
                    : "no stitched colouring found",
          rw);

  // Oddness: certified upper bound, exact value when the budget allows.
  auto witness = stitched_two_factor(comp);
  Json ow;
  int certified = -1;
  if (witness) {
    MeasureBundle mb;
    mb.omega = MeasureResult<TwoFactor>{Status::bounded, 0, witness->factor.odd_count(), witness->factor, 0};
    bool valid = check_certificates(g, mb).status() == ClaimStatus::pass;
    certified = valid ? witness->factor.odd_count() : -1;
    ow["odd_cycles"] = witness->factor.odd_count();
    ow["cycle_lengths"] = witness->factor.cycle_lengths();
  }
  rep.add("oddness_upper", certified == want.omega && certified == 2 + a + plan.b,
          certified >= 0 ? "validated 2-factor with " + std::to_string(certified) + " odd cycles" : "no valid witness", ow);

  auto om = oddness(g, budget, witness ? std::optional<TwoFactor>(witness->factor) : std::nullopt);
  Json ew;
  ew["status"] = to_string(om.status);
  ew["lower"] = om.lower;
  ew["upper"] = om.upper;
  ew["nodes"] = om.nodes;
  if (om.is_exact()) {
    bool ok = om.value() == certified && om.value() % 2 == 0 && om.value() >= lower;
    rep.add("oddness_exact", ok, "exact oddness " + std::to_string(om.value()), ew);
  } else {
    rep.clauses.push_back({"oddness_exact", ClaimStatus::bounded,
                           "budget exhausted: oddness in [" + std::to_string(om.lower) + ", " + std::to_string(om.upper) + "]", ew});
  }

  // Defect lower bound from an embedded Z.
  const GadgetInstance& zl = comp.instance("ZL");
  int mu_lower = mu3_lower_bound_conflicting(g, zl.local, zl.embedding);
  Length zsg = semi_girth(zl.local);
  Json dw;
  dw["z_semi_girth"] = to_string(zsg);
  dw["lower"] = mu_lower;
  int expected = zsg.is_infinite() ? 0 : ceil_half(zsg.value());
  if (om.is_exact()) {
    int from_omega = (3 * om.value() + 1) / 2;
    dw["lower_from_omega"] = from_omega;
  }
  // Any snark has defect at least 3, independently of the embedded gadget.
  dw["snark_floor"] = 3;
  rep.add("defect_lower", mu_lower == expected && mu_lower >= ceil_half(want.girth),
          "mu3 >= " + std::to_string(mu_lower) + " from the embedded Z", dw);
  rep.seconds = sw.seconds();
  return rep;
}

inline ClaimReport theorem_report(int r, int omega, int g, const Budget& budget = {},
                                  const std::optional<ZContract>& z = std::nullopt, int jobs = 1) {
  return theorem_report(theorem_plan(r, omega, g, z), {r, omega, g}, budget, jobs);
}

}  // namespace snarklab
