#pragma once

// Certificates for composed graphs assembled from gadget-local pieces: an
// (a+2)-conflict colouring and a 2-factor with 2+a+b odd cycles.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "snarklab/budget.hpp"
#include "snarklab/colouring.hpp"
#include "snarklab/core.hpp"
#include "snarklab/factors.hpp"
#include "snarklab/gadgets.hpp"

namespace snarklab {

/// Local element id -> composed element id. A port semi-edge maps to the join
/// edge that leaves the instance at that port.
inline std::vector<int> element_image(const SemiGraph& g, const GadgetInstance& inst) {
  const SemiGraph& h = inst.local;
  std::vector<int> img(h.num_elements(), -1);
  std::vector<char> internal(g.num_elements(), 0);
  for (int id = 0; id < h.num_edges(); ++id) {
    const Element& e = h.element(id);
    auto gid = g.find_edge(inst.embedding[e.u], inst.embedding[e.v]);
    if (!gid) throw GraphError("edge of " + inst.label + " missing from the composed graph");
    img[id] = *gid;
    internal[*gid] = 1;
  }
  for (int id = h.num_edges(); id < h.num_elements(); ++id) {
    Vertex gv = inst.embedding[h.element(id).u];
    for (int gid : g.incident(gv))
      if (!internal[gid]) img[id] = gid;
    if (img[id] < 0) throw GraphError("port of " + inst.label + " is not joined");
  }
  return img;
}

struct StitchedColouring {
  EdgeColouring colouring;
  std::vector<Vertex> conflicts;
};

namespace detail {

// One unit of the stitching search: an embedded gadget or a middle vertex.
struct StitchPiece {
  std::vector<int> boundary;                          // composed ids shared with other pieces
  std::vector<std::vector<Colour>> boundary_colours;  // per option
  std::vector<std::vector<std::pair<int, Colour>>> assignment;  // per option, every element it owns
};

// Local colourings closed under colour permutation, one per boundary tuple.
inline StitchPiece colouring_piece(const SemiGraph& g, const GadgetInstance& inst,
                                   const std::vector<EdgeColouring>& local) {
  StitchPiece p;
  auto img = element_image(g, inst);
  const SemiGraph& h = inst.local;
  for (int id = h.num_edges(); id < h.num_elements(); ++id) p.boundary.push_back(img[id]);
  std::set<std::vector<Colour>> seen;
  for (const auto& base : local)
    for (const auto& perm : colour_permutations()) {
      EdgeColouring c = permute_colours(base, perm);
      std::vector<Colour> key;
      for (int id = h.num_edges(); id < h.num_elements(); ++id) key.push_back(c[id]);
      if (!seen.insert(key).second) continue;
      std::vector<std::pair<int, Colour>> as;
      for (int id = 0; id < h.num_elements(); ++id) as.emplace_back(img[id], c[id]);
      p.boundary_colours.push_back(std::move(key));
      p.assignment.push_back(std::move(as));
    }
  return p;
}

class FrontierStitcher {
 public:
  FrontierStitcher(int num_elements, std::vector<StitchPiece> pieces, BudgetMeter& meter)
      : pieces_(std::move(pieces)), meter_(meter), colour_(num_elements, 0), choice_(pieces_.size(), 0),
        failed_(pieces_.size() + 1) {
    std::vector<int> first(num_elements, -1), last(num_elements, -1);
    for (std::size_t k = 0; k < pieces_.size(); ++k)
      for (int id : pieces_[k].boundary) {
        if (first[id] < 0) first[id] = static_cast<int>(k);
        last[id] = static_cast<int>(k);
      }
    frontier_.resize(pieces_.size() + 1);
    for (int id = 0; id < num_elements; ++id)
      for (int k = first[id] + 1; first[id] >= 0 && k <= last[id]; ++k) frontier_[k].push_back(id);
  }

  /// Chosen option per piece, or nullopt when no consistent choice exists.
  std::optional<std::vector<std::size_t>> solve() {
    if (search(0)) return choice_;
    return std::nullopt;
  }
  bool exhausted() const { return meter_.exhausted(); }

 private:
  bool search(std::size_t k) {
    if (k == pieces_.size()) return true;
    std::uint64_t key = 0;
    for (int id : frontier_[k]) key = key * 4 + colour_[id];
    if (frontier_[k].size() <= 31 && failed_[k].count(key)) return false;
    const StitchPiece& p = pieces_[k];
    for (std::size_t o = 0; o < p.boundary_colours.size(); ++o) {
      if (!meter_.tick()) return false;
      const auto& bc = p.boundary_colours[o];
      bool ok = true;
      for (std::size_t i = 0; ok && i < bc.size(); ++i) ok = colour_[p.boundary[i]] == 0 || colour_[p.boundary[i]] == bc[i];
      if (!ok) continue;
      std::vector<int> fresh;
      for (std::size_t i = 0; i < bc.size(); ++i)
        if (colour_[p.boundary[i]] == 0) {
          colour_[p.boundary[i]] = bc[i];
          fresh.push_back(p.boundary[i]);
        }
      choice_[k] = o;
      if (search(k + 1)) return true;
      for (int id : fresh) colour_[id] = 0;
      if (meter_.exhausted()) return false;
    }
    if (frontier_[k].size() <= 31) failed_[k].insert(key);
    return false;
  }

  std::vector<StitchPiece> pieces_;
  BudgetMeter& meter_;
  std::vector<Colour> colour_;
  std::vector<std::size_t> choice_;
  std::vector<std::vector<int>> frontier_;
  std::vector<std::unordered_set<std::uint64_t>> failed_;
};

// Pieces in chain order: ZL, top chain, ZR, then bottom chains with each Y
// followed by its middle vertex.
inline std::vector<const GadgetInstance*> stitch_order(const Composition& comp) {
  std::vector<const GadgetInstance*> out{&comp.instance("ZL")};
  for (const auto& i : comp.instances)
    if (i.label.rfind("top", 0) == 0) out.push_back(&i);
  out.push_back(&comp.instance("ZR"));
  for (const auto& i : comp.instances)
    if (i.kind != "Z" && i.label.rfind("top", 0) != 0) out.push_back(&i);
  return out;
}

}  // namespace detail

/// Colours every X properly, each Z with one conflict, each Y with its only
/// conflict at x, and each middle vertex properly, agreeing on join edges.
inline std::optional<StitchedColouring> stitched_conflict_colouring(const Composition& comp,
                                                                    const Budget& budget = {}) {
  const SemiGraph& g = comp.graph;
  std::map<std::string, std::vector<EdgeColouring>> tables;
  auto table = [&](const GadgetInstance& inst) -> const std::vector<EdgeColouring>& {
    auto it = tables.find(inst.kind);
    if (it != tables.end()) return it->second;
    std::vector<EdgeColouring> rows;
    if (inst.kind == "X") {
      for_all_proper_colourings(inst.local, [&](const EdgeColouring& c) {
        rows.push_back(c);
        return true;
      });
    } else {
      Vertex x = inst.kind == "Y" ? inst.local.port("x") : kNoVertex;
      for_all_colourings_with_conflicts(inst.local, 1, [&](const EdgeColouring& c, int k) {
        if (k == 1 && (x == kNoVertex || conflicting_vertices(inst.local, c) == std::vector<Vertex>{x}))
          rows.push_back(c);
        return true;
      });
    }
    return tables.emplace(inst.kind, std::move(rows)).first->second;
  };

  std::vector<detail::StitchPiece> pieces;
  std::size_t hub = 0;
  for (const GadgetInstance* inst : detail::stitch_order(comp)) {
    pieces.push_back(detail::colouring_piece(g, *inst, table(*inst)));
    if (inst->kind != "Y") continue;
    detail::StitchPiece p;
    Vertex y = comp.middle[hub++];
    for (int id : g.incident(y)) p.boundary.push_back(id);
    for (const auto& perm : colour_permutations()) {
      std::vector<Colour> bc{perm[1], perm[2], perm[3]};
      std::vector<std::pair<int, Colour>> as;
      for (std::size_t i = 0; i < 3; ++i) as.emplace_back(p.boundary[i], bc[i]);
      p.boundary_colours.push_back(bc);
      p.assignment.push_back(as);
    }
    pieces.push_back(std::move(p));
  }

  BudgetMeter meter(budget);
  detail::FrontierStitcher stitcher(g.num_elements(), pieces, meter);
  auto choice = stitcher.solve();
  if (!choice) return std::nullopt;
  EdgeColouring c(g.num_elements());
  for (std::size_t k = 0; k < pieces.size(); ++k)
    for (auto [id, col] : pieces[k].assignment[(*choice)[k]]) c.set(id, col);
  return StitchedColouring{c, conflicting_vertices(g, c)};
}

// ---------------------------------------------------------------------------
// 2-factor witness.

struct StitchedTwoFactor {
  TwoFactor factor;
  int predicted_odd = 0;
};

namespace detail {

// A local 1-factor seen from the 2-factor side: the complementary internal
// edges form cycles plus at most one path between the two ports whose join
// edges stay in the 2-factor.
struct LocalFactorOption {
  ElementSet matching;
  int odd_cycles = 0;
  int path_vertices = 0;
};

// Best option per path parity for the given set of ports left outside the
// matching (every other port's semi-edge is matched).
inline std::array<std::optional<LocalFactorOption>, 2> local_factor_options(const SemiGraph& h,
                                                                            const std::vector<Vertex>& open_ports) {
  FactorConstraints cons;
  for (int id = h.num_edges(); id < h.num_elements(); ++id) {
    bool open = std::find(open_ports.begin(), open_ports.end(), h.element(id).u) != open_ports.end();
    (open ? cons.forbidden : cons.required).push_back(id);
  }
  std::array<std::optional<LocalFactorOption>, 2> best;
  enumerate_one_factors(
      h,
      [&](const OneFactor& m) {
        std::vector<std::vector<Vertex>> adj(h.order());
        for (int id = 0; id < h.num_edges(); ++id)
          if (!m.contains(id)) {
            adj[h.element(id).u].push_back(h.element(id).v);
            adj[h.element(id).v].push_back(h.element(id).u);
          }
        std::vector<char> seen(h.order(), 0);
        LocalFactorOption opt{m.elements, 0, 0};
        auto walk = [&](Vertex s) {
          int len = 0;
          Vertex prev = kNoVertex, cur = s;
          while (cur != kNoVertex && !seen[cur]) {
            seen[cur] = 1;
            ++len;
            Vertex nxt = kNoVertex;
            for (Vertex w : adj[cur])
              if (w != prev && !seen[w]) nxt = w;
            prev = cur;
            cur = nxt;
          }
          return len;
        };
        if (!open_ports.empty()) opt.path_vertices = walk(open_ports.front());
        for (Vertex v = 0; v < h.order(); ++v)
          if (!seen[v]) opt.odd_cycles += walk(v) % 2;
        auto& slot = best[opt.path_vertices % 2];
        if (!slot || opt.odd_cycles < slot->odd_cycles) slot = opt;
        return true;
      },
      Budget{}, cons);
  return best;
}

}  // namespace detail

/// The middle path stays in the 2-factor; bottom chain joins and the edges
/// from middle vertices into Y are matched; the top chain carries exactly one
/// strand per link, chosen to minimise odd cycles. The result is revalidated
/// from scratch on the composed graph.
inline std::optional<StitchedTwoFactor> stitched_two_factor(const Composition& comp) {
  const SemiGraph& g = comp.graph;
  ElementSet matching(g.num_elements());
  auto embed = [&](const GadgetInstance& inst, const ElementSet& local) {
    auto img = element_image(g, inst);
    local.for_each([&](int id) { matching.set(img[id]); });
  };

  int fixed_odd = 0;
  for (const auto& inst : comp.instances) {
    if (inst.kind == "Z" || inst.label.rfind("top", 0) == 0) continue;
    auto opts = detail::local_factor_options(inst.local, {});
    const auto* o = opts[0] ? &*opts[0] : nullptr;
    if (!o) return std::nullopt;
    fixed_odd += o->odd_cycles;
    embed(inst, o->matching);
  }
  for (std::size_t i = 0; i < comp.middle.size(); ++i) {
    auto e = g.find_edge(comp.middle[i], comp.instance("Y" + std::to_string(i + 1)).global_port("x"));
    if (!e) return std::nullopt;
    matching.set(*e);
  }

  // Top chain DP over (composed id of the strand in the 2-factor, parity).
  std::vector<const GadgetInstance*> chain{&comp.instance("ZL")};
  for (const auto& i : comp.instances)
    if (i.label.rfind("top", 0) == 0) chain.push_back(&i);
  chain.push_back(&comp.instance("ZR"));

  struct Cell {
    int cost;
    int prev_edge, prev_parity;
    ElementSet local;
  };
  using Key = std::pair<int, int>;
  std::vector<std::map<Key, Cell>> layers(chain.size());
  auto join_at = [&](const GadgetInstance& inst, const char* port) {
    return element_image(g, inst)[*inst.local.semi_edge_at(inst.local.port(port))];
  };
  auto relax = [&](std::size_t k, Key key, Cell cell) {
    auto it = layers[k].find(key);
    if (it == layers[k].end() || cell.cost < it->second.cost) layers[k][key] = std::move(cell);
  };

  const char* zl_pair[2] = {"top1", "top2"};
  const auto& zl = *chain.front();
  for (const char* t : zl_pair) {
    auto opts = detail::local_factor_options(zl.local, {zl.local.port("mid"), zl.local.port(t)});
    for (int par = 0; par < 2; ++par)
      if (opts[par]) relax(0, {join_at(zl, t), par}, {opts[par]->odd_cycles, -1, -1, opts[par]->matching});
  }
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const auto& inst = *chain[k];
    const bool last = k + 1 == chain.size();
    std::vector<const char*> left = last ? std::vector<const char*>{"top1", "top2"} : std::vector<const char*>{"u0", "v0"};
    std::vector<const char*> right = last ? std::vector<const char*>{"mid"} : std::vector<const char*>{"u1", "v1"};
    for (const auto& [key, cell] : layers[k - 1]) {
      const char* in = nullptr;
      for (const char* p : left)
        if (join_at(inst, p) == key.first) in = p;
      if (!in) return std::nullopt;
      for (const char* out : right) {
        auto opts = detail::local_factor_options(inst.local, {inst.local.port(in), inst.local.port(out)});
        for (int par = 0; par < 2; ++par) {
          if (!opts[par]) continue;
          int next_edge = last ? -1 : join_at(inst, out);
          relax(k, {next_edge, key.second ^ par}, {cell.cost + opts[par]->odd_cycles, key.first, key.second, opts[par]->matching});
        }
      }
    }
  }

  std::optional<Key> best;
  int best_cost = 0;
  const int hubs = static_cast<int>(comp.middle.size());
  for (const auto& [key, cell] : layers.back()) {
    int cost = cell.cost + ((key.second + hubs) % 2);
    if (!best || cost < best_cost) {
      best = key;
      best_cost = cost;
    }
  }
  if (!best) return std::nullopt;
  Key key = *best;
  for (std::size_t k = chain.size(); k-- > 0;) {
    const Cell& cell = layers[k].at(key);
    embed(*chain[k], cell.local);
    // The strand that is not in the 2-factor is matched.
    if (k > 0) {
      const auto& prev = *chain[k - 1];
      const char* ports[2] = {k == 1 ? "top1" : "u1", k == 1 ? "top2" : "v1"};
      for (const char* p : ports)
        if (join_at(prev, p) != cell.prev_edge) matching.set(join_at(prev, p));
    }
    key = {cell.prev_edge, cell.prev_parity};
  }

  if (!is_one_factor(g, matching)) return std::nullopt;
  auto f = two_factor_from_edges(g, matching.complement());
  if (!f) return std::nullopt;
  return StitchedTwoFactor{*f, best_cost + fixed_odd};
}

}  // namespace snarklab
