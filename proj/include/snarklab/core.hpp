#pragma once

// Semi-graph data model: vertices 0..n-1, edges (unordered pairs) and
// semi-edges (at most one per vertex). Values are immutable once built;
// all construction goes through SemiGraphBuilder.

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace snarklab {

using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

/// Invalid construction or mutation of a semi-graph.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input does not satisfy an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An object whose existence is guaranteed by a lemma was not found. Always a
/// bug or a silently violated precondition.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An edge uv (u < v) or a semi-edge (u), with v == kNoVertex.
struct Element {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;

  static Element edge(Vertex a, Vertex b) {
    if (a == b) throw GraphError("loop at vertex " + std::to_string(a));
    return a < b ? Element{a, b} : Element{b, a};
  }
  static Element semi(Vertex a) { return Element{a, kNoVertex}; }

  bool is_semi() const { return v == kNoVertex; }
  bool incident(Vertex w) const { return u == w || v == w; }
  /// The endpoint that is not w; kNoVertex for a semi-edge.
  Vertex other(Vertex w) const { return u == w ? v : u; }

  // Edges sort before semi-edges; each group lexicographically.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (a.is_semi() != b.is_semi()) return a.is_semi() ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.v <=> b.v;
  }
  friend bool operator==(const Element&, const Element&) = default;
};

inline std::string to_string(const Element& e) {
  if (e.is_semi()) return "(" + std::to_string(e.u) + ")";
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

/// Named attachment point of a gadget.
struct PortLabel {
  std::string name;
  Vertex vertex = kNoVertex;
  friend bool operator==(const PortLabel&, const PortLabel&) = default;
};

class SemiGraphBuilder;

class SemiGraph {
 public:
  SemiGraph() = default;

  int order() const { return n_; }
  int num_edges() const { return num_edges_; }
  int num_semi_edges() const { return static_cast<int>(elements_.size()) - num_edges_; }
  int num_elements() const { return static_cast<int>(elements_.size()); }
  bool is_graph() const { return num_semi_edges() == 0; }

  /// Canonically ordered: edges (lexicographic) then semi-edges by vertex.
  std::span<const Element> elements() const { return elements_; }
  const Element& element(int id) const { return elements_[id]; }
  std::span<const Element> edges() const { return std::span(elements_).first(num_edges_); }

  /// Ids of the elements incident with v, ascending.
  std::span<const int> incident(Vertex v) const {
    return std::span(incidence_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }
  bool is_cubic() const {
    for (Vertex v = 0; v < n_; ++v)
      if (degree(v) != 3) return false;
    return true;
  }

  std::optional<int> find_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return std::nullopt;
    for (int id : incident(a))
      if (!elements_[id].is_semi() && elements_[id].other(a) == b) return id;
    return std::nullopt;
  }
  bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  std::optional<int> semi_edge_at(Vertex v) const {
    if (v < 0 || v >= n_) return std::nullopt;
    for (int id : incident(v))
      if (elements_[id].is_semi()) return id;
    return std::nullopt;
  }
  bool has_semi_edge(Vertex v) const { return semi_edge_at(v).has_value(); }

  std::optional<int> index_of(const Element& e) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
    if (it == elements_.end() || *it != e) return std::nullopt;
    return static_cast<int>(it - elements_.begin());
  }

  /// Vertices carrying a semi-edge, ascending.
  std::vector<Vertex> semi_vertices() const {
    std::vector<Vertex> out;
    for (int id = num_edges_; id < num_elements(); ++id) out.push_back(elements_[id].u);
    return out;
  }

  /// Neighbours over edges (semi-edges have no far end).
  std::vector<Vertex> neighbours(Vertex v) const {
    std::vector<Vertex> out;
    for (int id : incident(v))
      if (!elements_[id].is_semi()) out.push_back(elements_[id].other(v));
    return out;
  }

  const std::vector<PortLabel>& ports() const { return ports_; }
  std::optional<Vertex> find_port(std::string_view name) const {
    for (const auto& p : ports_)
      if (p.name == name) return p.vertex;
    return std::nullopt;
  }
  Vertex port(std::string_view name) const {
    if (auto v = find_port(name)) return *v;
    throw GraphError("no port named '" + std::string(name) + "'");
  }

  friend bool operator==(const SemiGraph& a, const SemiGraph& b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_ && a.ports_ == b.ports_;
  }

 private:
  friend class SemiGraphBuilder;

  int n_ = 0;
  int num_edges_ = 0;
  std::vector<Element> elements_;
  std::vector<int> offsets_{0};
  std::vector<int> incidence_;
  std::vector<PortLabel> ports_;
};

/// Single-owner mutable staging area for a SemiGraph.
class SemiGraphBuilder {
 public:
  explicit SemiGraphBuilder(int n = 0) : n_(n) {
    if (n < 0) throw GraphError("negative vertex count");
  }

  explicit SemiGraphBuilder(const SemiGraph& g) : n_(g.order()), ports_(g.ports()) {
    for (const auto& e : g.elements()) {
      if (e.is_semi())
        semi_.insert(e.u);
      else
        edges_.insert({e.u, e.v});
    }
  }

  int order() const { return n_; }

  Vertex add_vertex() { return n_++; }
  /// Adds k vertices and returns the first new index.
  Vertex add_vertices(int k) {
    Vertex first = n_;
    n_ += k;
    return first;
  }

  SemiGraphBuilder& add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    if (!edges_.insert(ordered(u, v)).second)
      throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    return *this;
  }

  SemiGraphBuilder& add_semi_edge(Vertex u) {
    check_vertex(u);
    if (!semi_.insert(u).second) throw GraphError("duplicate semi-edge at vertex " + std::to_string(u));
    return *this;
  }

  SemiGraphBuilder& remove_edge(Vertex u, Vertex v) {
    if (u == v || edges_.erase(ordered(u, v)) == 0)
      throw GraphError("no edge " + std::to_string(u) + "-" + std::to_string(v));
    return *this;
  }

  SemiGraphBuilder& remove_semi_edge(Vertex u) {
    if (semi_.erase(u) == 0) throw GraphError("no semi-edge at vertex " + std::to_string(u));
    drop_port_at(u);
    return *this;
  }

  bool has_edge(Vertex u, Vertex v) const { return u != v && edges_.count(ordered(u, v)) > 0; }
  bool has_semi_edge(Vertex u) const { return semi_.count(u) > 0; }

  /// Replaces semi-edges (u) and (v) by the edge uv.
  SemiGraphBuilder& join(Vertex u, Vertex v) {
    if (!has_semi_edge(u)) throw GraphError("join: vertex " + std::to_string(u) + " carries no semi-edge");
    if (!has_semi_edge(v)) throw GraphError("join: vertex " + std::to_string(v) + " carries no semi-edge");
    if (u == v) throw GraphError("join would create a loop at " + std::to_string(u));
    if (has_edge(u, v)) throw GraphError("join would create a parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    remove_semi_edge(u);
    remove_semi_edge(v);
    return add_edge(u, v);
  }

  /// Replaces the semi-edge (u) by the edge uv for a plain vertex v.
  SemiGraphBuilder& join_to_vertex(Vertex u, Vertex v) {
    check_vertex(v);
    if (!has_semi_edge(u)) throw GraphError("join: vertex " + std::to_string(u) + " carries no semi-edge");
    if (u == v) throw GraphError("join would create a loop at " + std::to_string(u));
    if (has_edge(u, v)) throw GraphError("join would create a parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    remove_semi_edge(u);
    return add_edge(u, v);
  }

  /// Disjoint union; returns the offset of g's vertex 0. Ports of g are
  /// carried over with `prefix` prepended to their names.
  Vertex append(const SemiGraph& g, std::string_view prefix = {}) {
    Vertex off = add_vertices(g.order());
    for (const auto& e : g.elements()) {
      if (e.is_semi())
        semi_.insert(e.u + off);
      else
        edges_.insert({e.u + off, e.v + off});
    }
    if (!prefix.empty())
      for (const auto& p : g.ports()) ports_.push_back({std::string(prefix) + p.name, p.vertex + off});
    return off;
  }

  SemiGraphBuilder& set_port(std::string name, Vertex v) {
    check_vertex(v);
    if (!has_semi_edge(v)) throw GraphError("port '" + name + "' at vertex " + std::to_string(v) + " carries no semi-edge");
    for (const auto& p : ports_)
      if (p.name == name) throw GraphError("duplicate port name '" + name + "'");
    ports_.push_back({std::move(name), v});
    return *this;
  }

  void clear_ports() { ports_.clear(); }

  SemiGraph build() const {
    SemiGraph g;
    g.n_ = n_;
    for (const auto& [u, v] : edges_) g.elements_.push_back(Element{u, v});
    g.num_edges_ = static_cast<int>(edges_.size());
    for (Vertex u : semi_) g.elements_.push_back(Element::semi(u));
    std::vector<int> deg(n_ + 1, 0);
    for (const auto& e : g.elements_) {
      ++deg[e.u];
      if (!e.is_semi()) ++deg[e.v];
    }
    g.offsets_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.incidence_.assign(g.offsets_[n_], 0);
    std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (int id = 0; id < g.num_elements(); ++id) {
      const auto& e = g.elements_[id];
      g.incidence_[fill[e.u]++] = id;
      if (!e.is_semi()) g.incidence_[fill[e.v]++] = id;
    }
    for (int v = 0; v < n_; ++v) std::sort(g.incidence_.begin() + g.offsets_[v], g.incidence_.begin() + g.offsets_[v + 1]);
    g.ports_ = ports_;
    return g;
  }

 private:
  static std::pair<Vertex, Vertex> ordered(Vertex u, Vertex v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
      throw GraphError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
  }

  void drop_port_at(Vertex v) {
    std::erase_if(ports_, [v](const PortLabel& p) { return p.vertex == v; });
  }

  int n_ = 0;
  std::set<std::pair<Vertex, Vertex>> edges_;
  std::set<Vertex> semi_;
  std::vector<PortLabel> ports_;
};

// ---------------------------------------------------------------------------
// Value-level operations.

inline SemiGraph add_edge(const SemiGraph& g, Vertex u, Vertex v) {
  SemiGraphBuilder b(g);
  b.add_edge(u, v);
  return b.build();
}

/// Joins two semi-edges into an edge between their carriers.
inline SemiGraph join(const SemiGraph& g, const Element& a, const Element& b) {
  if (!a.is_semi() || !b.is_semi()) throw GraphError("join expects two semi-edges");
  if (!g.index_of(a) || !g.index_of(b)) throw GraphError("join: semi-edge not present");
  SemiGraphBuilder bld(g);
  bld.join(a.u, b.u);
  return bld.build();
}

/// Joins the semi-edge a to vertex v.
inline SemiGraph join(const SemiGraph& g, const Element& a, Vertex v) {
  if (!a.is_semi()) throw GraphError("join expects a semi-edge");
  if (!g.index_of(a)) throw GraphError("join: semi-edge not present");
  SemiGraphBuilder bld(g);
  bld.join_to_vertex(a.u, v);
  return bld.build();
}

/// Closes a semi-graph into a graph: each pair of semi-edge carriers is
/// joined; 1 or 3 leftover semi-edges are joined to one new vertex.
inline SemiGraph closure_to_graph(const SemiGraph& g, const std::vector<std::pair<Vertex, Vertex>>& pairing) {
  SemiGraphBuilder b(g);
  std::set<Vertex> used;
  for (const auto& [u, v] : pairing) {
    if (!g.has_semi_edge(u) || !g.has_semi_edge(v))
      throw GraphError("pairing references a vertex without a semi-edge");
    if (!used.insert(u).second || !used.insert(v).second) throw GraphError("pairing uses a semi-edge twice");
    b.join(u, v);
  }
  std::vector<Vertex> leftover;
  for (Vertex v : g.semi_vertices())
    if (!used.count(v)) leftover.push_back(v);
  if (leftover.size() == 2 || leftover.size() > 3)
    throw GraphError("closure leaves " + std::to_string(leftover.size()) + " semi-edges; expected 0, 1 or 3");
  if (!leftover.empty()) {
    Vertex w = b.add_vertex();
    for (Vertex v : leftover) b.join_to_vertex(v, w);
  }
  b.clear_ports();
  return b.build();
}

/// Keeps the listed vertices (relabelled in ascending order); every edge to a
/// deleted vertex becomes a semi-edge at its surviving end. Returns the graph
/// and the old->new map (kNoVertex for deleted vertices).
inline std::pair<SemiGraph, std::vector<Vertex>> delete_vertices(const SemiGraph& g, const std::set<Vertex>& removed) {
  std::vector<Vertex> map(g.order(), kNoVertex);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!removed.count(v)) map[v] = next++;
  SemiGraphBuilder b(next);
  for (const auto& e : g.elements()) {
    if (e.is_semi()) {
      if (map[e.u] != kNoVertex) b.add_semi_edge(map[e.u]);
      continue;
    }
    Vertex mu = map[e.u], mv = map[e.v];
    if (mu != kNoVertex && mv != kNoVertex)
      b.add_edge(mu, mv);
    else if (mu != kNoVertex)
      b.add_semi_edge(mu);
    else if (mv != kNoVertex)
      b.add_semi_edge(mv);
  }
  return {b.build(), map};
}

/// True iff h embeds into g under `embedding` (h-vertex -> g-vertex): edges
/// map to edges, each semi-edge of h maps to a semi-edge or an edge at the
/// image vertex, and degrees do not decrease.
inline bool is_semi_subgraph(const SemiGraph& h, const SemiGraph& g, const std::vector<Vertex>& embedding) {
  if (static_cast<int>(embedding.size()) != h.order()) throw GraphError("embedding size differs from h's order");
  std::set<Vertex> image;
  for (Vertex v : embedding) {
    if (v < 0 || v >= g.order()) throw GraphError("embedding maps outside g");
    if (!image.insert(v).second) return false;
  }
  for (const auto& e : h.elements()) {
    Vertex gu = embedding[e.u];
    if (e.is_semi()) {
      if (!g.has_semi_edge(gu) && g.neighbours(gu).empty()) return false;
    } else if (!g.has_edge(gu, embedding[e.v])) {
      return false;
    }
  }
  for (Vertex v = 0; v < h.order(); ++v)
    if (g.degree(embedding[v]) < h.degree(v)) return false;
  return true;
}

}  // namespace snarklab
