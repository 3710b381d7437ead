#pragma once

// Building blocks (Petersen graph, X, Y, bipartite cubic catalog, M-gadgets,
// Z-gadgets) and the composed family G^a_g(B).

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "snarklab/colouring.hpp"
#include "snarklab/core.hpp"
#include "snarklab/invariants.hpp"

namespace snarklab {

/// Outer 5-cycle 0..4, inner pentagram 5..9 (i+5 ~ (i+2)%5+5), spokes i ~ i+5.
inline SemiGraph petersen() {
  SemiGraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i + 5, (i + 2) % 5 + 5);
    b.add_edge(i, i + 5);
  }
  return b.build();
}

/// Cubic graph from LCF notation [shifts]^repeat on a Hamiltonian cycle.
inline SemiGraph lcf_graph(const std::vector<int>& shifts, int repeat) {
  const int n = static_cast<int>(shifts.size()) * repeat;
  SemiGraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) {
    int j = ((i + shifts[i % shifts.size()]) % n + n) % n;
    if (!b.has_edge(i, j)) b.add_edge(i, j);
  }
  return b.build();
}

inline SemiGraph complete_graph(int n) {
  SemiGraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return b.build();
}

inline SemiGraph k33() {
  SemiGraphBuilder b(6);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) b.add_edge(i, j);
  return b.build();
}

/// Petersen graph minus two adjacent vertices; ports u0, v0 at the ends of
/// one deleted vertex, u1, v1 at the other (u* on the inner pentagram).
inline SemiGraph gadget_x() {
  SemiGraph p = petersen();
  auto [x, map] = delete_vertices(p, {0, 1});
  SemiGraphBuilder b(x);
  b.set_port("u0", map[5]);
  b.set_port("v0", map[4]);
  b.set_port("u1", map[6]);
  b.set_port("v1", map[2]);
  return b.build();
}

/// Two copies of X and a junction vertex x: L.u1-x, L.v1-R.v0, x-R.u0.
/// Ports: u0, v0 (left copy), x, u1, v1 (right copy).
inline SemiGraph gadget_y() {
  SemiGraph x = gadget_x();
  SemiGraphBuilder b;
  Vertex l = b.append(x);
  Vertex r = b.append(x);
  Vertex jx = b.add_vertex();
  b.join_to_vertex(l + x.port("u1"), jx);
  b.join(l + x.port("v1"), r + x.port("v0"));
  b.join_to_vertex(r + x.port("u0"), jx);
  b.add_semi_edge(jx);
  b.set_port("u0", l + x.port("u0"));
  b.set_port("v0", l + x.port("v0"));
  b.set_port("x", jx);
  b.set_port("u1", r + x.port("u1"));
  b.set_port("v1", r + x.port("v1"));
  return b.build();
}

/// Connected bipartite cubic graph of girth 4, 6 or 8: K3,3, Heawood,
/// Tutte-Coxeter.
inline SemiGraph catalog_bipartite_cubic(int g) {
  switch (g) {
    case 4: return k33();
    case 6: return lcf_graph({5, -5}, 7);
    case 8: return lcf_graph({-13, -9, 7, -7, 9, 13}, 5);
    default:
      throw PreconditionError("no catalog graph of girth " + std::to_string(g) +
                              " (supported: 4, 6, 8; import larger girths as graph6)");
  }
}

/// Deletes the vertices of the 2-path u-v-w from a cubic graph; the five
/// dangling edge-ends become semi-edges with ports m0..m4 (ascending vertex).
inline SemiGraph m_gadget(const SemiGraph& l, std::array<Vertex, 3> path) {
  auto [u, v, w] = path;
  if (!l.is_graph() || !l.is_cubic()) throw PreconditionError("m_gadget needs a cubic graph");
  if (u == w || !l.has_edge(u, v) || !l.has_edge(v, w)) throw GraphError("(u,v,w) is not a path of length 2");
  auto [m, map] = delete_vertices(l, {u, v, w});
  if (m.num_semi_edges() != 5) throw GraphError("removing the path leaves " + std::to_string(m.num_semi_edges()) + " semi-edges");
  SemiGraphBuilder b(m);
  int k = 0;
  for (Vertex s : m.semi_vertices()) b.set_port("m" + std::to_string(k++), s);
  return b.build();
}

// ---------------------------------------------------------------------------
// Z-gadgets.

inline const std::array<std::string, 5>& z_port_names() {
  static const std::array<std::string, 5> names{"top1", "top2", "mid", "bot1", "bot2"};
  return names;
}

/// A 5-port cubic semi-graph used for both end blocks of the composition.
struct ZContract {
  int girth = 5;
  SemiGraph gadget;
};

struct ClauseCheck {
  std::string id;
  bool passed = false;
  std::string detail;
};

struct ZValidation {
  std::vector<ClauseCheck> clauses;
  Length semi_girth = Length::infinite();
  std::optional<ConflictColouring> pattern_witness;

  bool passed() const {
    for (const auto& c : clauses)
      if (!c.passed) return false;
    return !clauses.empty();
  }
};

/// Multiset pattern a,a,b,b,c (colours not necessarily distinct): exactly
/// one colour occurs an odd number of times among five port colours.
inline bool is_aabbc_pattern(const std::array<int, 3>& counts) {
  int odd = 0, total = 0;
  for (int c : counts) {
    odd += c % 2;
    total += c;
  }
  return total == 5 && odd == 1;
}

inline ZValidation validate_z(const ZContract& z, int g) {
  ZValidation rep;
  const SemiGraph& h = z.gadget;
  auto add = [&](std::string id, bool ok, std::string detail) {
    rep.clauses.push_back({std::move(id), ok, std::move(detail)});
    return ok;
  };

  add("cubic", h.is_cubic(), h.is_cubic() ? "every vertex has degree 3" : "some vertex has degree != 3");

  bool ports_ok = h.num_semi_edges() == 5 && h.ports().size() == 5;
  std::string port_detail = std::to_string(h.ports().size()) + " ports, " + std::to_string(h.num_semi_edges()) + " semi-edges";
  for (const auto& name : z_port_names()) {
    auto v = h.find_port(name);
    if (!v || !h.has_semi_edge(*v)) {
      ports_ok = false;
      port_detail += "; missing port " + name;
    }
  }
  add("ports", ports_ok, port_detail);

  bool colourable = h.max_degree() <= 3 && is_colourable(h);
  add("non_colourable", !colourable, colourable ? "a proper 3-edge-colouring exists" : "no proper 3-edge-colouring");

  int rv = -1;
  if (h.max_degree() <= 3) rv = vertex_resistance(h).value();
  add("resistance_one", rv == 1, "r_v = " + std::to_string(rv));

  rep.semi_girth = semi_girth(h);
  bool sg_ok = !rep.semi_girth.is_infinite() ? rep.semi_girth.value() >= g : true;
  add("semi_girth", sg_ok, "semi-girth " + to_string(rep.semi_girth) + " vs required " + std::to_string(g));

  bool pattern_ok = false;
  std::string pattern_detail = "skipped";
  if (ports_ok && rv == 1) {
    std::vector<int> port_ids;
    for (const auto& name : z_port_names()) port_ids.push_back(*h.semi_edge_at(h.port(name)));
    for_all_colourings_with_conflicts(h, 1, [&](const EdgeColouring& c, int conflicts) {
      if (conflicts != 1) return true;
      std::array<int, 3> counts{};
      for (int id : port_ids) ++counts[c[id] - 1];
      if (!is_aabbc_pattern(counts)) return true;
      pattern_ok = true;
      rep.pattern_witness = ConflictColouring{c, conflicting_vertices(h, c)};
      return false;
    });
    pattern_detail = pattern_ok ? "1-conflict colouring with port pattern a,a,b,b,c found"
                                : "no 1-conflict colouring has port pattern a,a,b,b,c";
  }
  add("port_pattern", pattern_ok, pattern_detail);
  return rep;
}

/// Default Z-gadget for girth 5: Y with ports (u0, v0) -> top, x -> mid,
/// (u1, v1) -> bottom.
inline ZContract z_default() {
  SemiGraph y = gadget_y();
  SemiGraphBuilder b(y);
  b.clear_ports();
  b.set_port("top1", y.port("u0"));
  b.set_port("top2", y.port("v0"));
  b.set_port("mid", y.port("x"));
  b.set_port("bot1", y.port("u1"));
  b.set_port("bot2", y.port("v1"));
  ZContract z{5, b.build()};
  static const bool valid = validate_z(z, 5).passed();
  if (!valid) throw TheoremViolation("default Z-gadget fails its contract");
  return z;
}

// ---------------------------------------------------------------------------
// Composition G^a_g(B).

struct CompositionPlan {
  int a = 0;               // number of Y-gadgets on the middle path
  int b = 0;               // X-chain length between the two Z top pairs
  std::vector<int> chains; // b_0..b_a: bottom X-chain lengths
  ZContract z;
  std::optional<std::uint64_t> seed;  // randomises strand pairing when set

  void validate() const {
    if (a < 0 || b < 0) throw PreconditionError("plan counts must be non-negative");
    if (static_cast<int>(chains.size()) != a + 1) throw PreconditionError("plan needs exactly a+1 bottom chain lengths");
    for (int c : chains)
      if (c < 0) throw PreconditionError("plan counts must be non-negative");
  }
};

/// One embedded gadget copy; embedding maps local vertex -> composed vertex.
struct GadgetInstance {
  std::string label;  // "ZL", "ZR", "Y1", "top1", "bottom0.2", ...
  std::string kind;   // "Z", "Y" or "X"
  SemiGraph local;
  std::vector<Vertex> embedding;

  Vertex global_port(std::string_view name) const { return embedding[local.port(name)]; }
};

struct Composition {
  CompositionPlan plan;
  SemiGraph graph;
  std::vector<GadgetInstance> instances;
  std::vector<Vertex> middle;  // y_1..y_a

  const GadgetInstance& instance(std::string_view label) const {
    for (const auto& i : instances)
      if (i.label == label) return i;
    throw GraphError("no gadget instance '" + std::string(label) + "'");
  }
};

inline int expected_order(const CompositionPlan& p) {
  int sum = p.b;
  for (int c : p.chains) sum += c;
  return 2 * p.z.gadget.order() + 8 * sum + 18 * p.a;
}

inline Composition compose(const CompositionPlan& plan) {
  plan.validate();
  Composition out;
  out.plan = plan;
  const SemiGraph x = gadget_x();
  const SemiGraph y = gadget_y();
  const SemiGraph& z = plan.z.gadget;
  SemiGraphBuilder b;
  std::optional<std::mt19937_64> rng;
  if (plan.seed) rng.emplace(*plan.seed);

  auto place = [&](const SemiGraph& g, std::string label, std::string kind) {
    Vertex off = b.append(g);
    GadgetInstance inst{std::move(label), std::move(kind), g, {}};
    for (Vertex v = 0; v < g.order(); ++v) inst.embedding.push_back(v + off);
    out.instances.push_back(std::move(inst));
    return out.instances.size() - 1;
  };
  auto port = [&](std::size_t inst, std::string_view name) { return out.instances[inst].global_port(name); };
  using Pair = std::pair<Vertex, Vertex>;
  // Joins an open strand pair to a left port pair; first strand to the first port.
  auto attach = [&](Pair strands, Vertex first, Vertex second) {
    if (rng && ((*rng)() & 1)) std::swap(strands.first, strands.second);
    b.join(strands.first, first);
    b.join(strands.second, second);
  };
  auto chain = [&](Pair strands, int length, const std::string& prefix) {
    for (int k = 1; k <= length; ++k) {
      auto xi = place(x, prefix + std::to_string(k), "X");
      attach(strands, port(xi, "u0"), port(xi, "v0"));
      strands = {port(xi, "u1"), port(xi, "v1")};
    }
    return strands;
  };

  auto zl = place(z, "ZL", "Z");
  auto zr = place(z, "ZR", "Z");

  Pair top = chain({port(zl, "top1"), port(zl, "top2")}, plan.b, "top");
  attach(top, port(zr, "top1"), port(zr, "top2"));

  Pair bottom{port(zl, "bot1"), port(zl, "bot2")};
  Vertex prev_mid = port(zl, "mid");
  for (int i = 1; i <= plan.a; ++i) {
    bottom = chain(bottom, plan.chains[i - 1], "bottom" + std::to_string(i - 1) + ".");
    auto yi = place(y, "Y" + std::to_string(i), "Y");
    attach(bottom, port(yi, "u0"), port(yi, "v0"));
    bottom = {port(yi, "u1"), port(yi, "v1")};
    Vertex hub = b.add_vertex();
    out.middle.push_back(hub);
    if (i == 1)
      b.join_to_vertex(prev_mid, hub);
    else
      b.add_edge(prev_mid, hub);
    b.join_to_vertex(port(yi, "x"), hub);
    prev_mid = hub;
  }
  bottom = chain(bottom, plan.chains[plan.a], "bottom" + std::to_string(plan.a) + ".");
  attach(bottom, port(zr, "bot1"), port(zr, "bot2"));
  if (plan.a == 0)
    b.join(prev_mid, port(zr, "mid"));
  else
    b.join_to_vertex(port(zr, "mid"), prev_mid);

  b.clear_ports();
  out.graph = b.build();
  if (!out.graph.is_graph()) throw TheoremViolation("composition left semi-edges behind");
  return out;
}

/// Parameters for resistance r and oddness omega: a = r-2, b = omega-r, and
/// every bottom chain b+1 long.
inline CompositionPlan theorem_plan(int r, int omega, int g, std::optional<ZContract> z = std::nullopt) {
  if (r < 3) throw PreconditionError("resistance must be at least 3");
  if (omega % 2 != 0) throw PreconditionError("oddness must be even");
  if (omega < r) throw PreconditionError("oddness must be at least the resistance");
  if (!z) {
    if (g != 5) throw PreconditionError("no built-in Z-gadget for girth " + std::to_string(g) + "; supply one from .sgf");
    z = z_default();
  } else if (z->girth < g) {
    throw PreconditionError("Z-gadget girth parameter below requested g");
  }
  CompositionPlan p;
  p.a = r - 2;
  p.b = omega - r;
  p.chains.assign(p.a + 1, p.b + 1);
  p.z = *z;
  return p;
}

}  // namespace snarklab
