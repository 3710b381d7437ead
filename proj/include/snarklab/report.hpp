#pragma once

// JSON serialisation of invariants, measures and their certificates. Key order
// is fixed by construction (ordered_json), and wall-clock fields appear only
// on request, so node-budgeted runs serialise byte-identically.

#include <optional>
#include <string>

#include "snarklab/verify.hpp"

namespace snarklab {

struct MeasureOptions {
  Budget budget;
  int jobs = 1;
  bool timing = false;
};

struct MeasureReport {
  MeasureBundle bundle;
  std::optional<bool> colourable;
  Json json;

  bool all_exact() const {
    auto exact = [](const auto& m) { return !m || m->is_exact(); };
    return colourable.has_value() && exact(bundle.r) && exact(bundle.rv) && exact(bundle.omega) && exact(bundle.mu3);
  }
};

namespace detail {

inline Json length_json(const Length& l) { return l.is_infinite() ? Json("inf") : Json(l.value()); }

template <class Cert, class F>
Json measure_json(const MeasureResult<Cert>& m, F&& certificate) {
  Json j;
  j["status"] = to_string(m.status);
  if (m.is_exact()) {
    j["value"] = m.upper;
  } else {
    j["lower"] = m.lower;
    j["upper"] = m.upper;
  }
  j["nodes"] = m.nodes;
  j["certificate"] = m.certificate ? certificate(*m.certificate) : Json();
  return j;
}

inline Json factor_json(const SemiGraph& g, const OneFactor& f) { return element_list(g, f.elements); }

}  // namespace detail

inline Json invariants_json(const SemiGraph& g, int jobs = 1) {
  Json j;
  j["n"] = g.order();
  j["m"] = g.num_edges();
  j["semi"] = g.num_semi_edges();
  j["girth"] = detail::length_json(girth(g));
  j["semi_girth"] = detail::length_json(semi_girth(g));
  j["connected"] = is_connected(g);
  j["bridgeless"] = is_bridgeless(g);
  if (g.is_graph() && g.is_cubic() && is_connected(g))
    j["cyclic_ge4"] = !has_cyclic_cut_below(g, 4, jobs).has_value();
  else
    j["cyclic_ge4"] = nullptr;
  return j;
}

/// Runs every measure that applies to `g` and serialises values and
/// certificates.
inline MeasureReport measure_report(const SemiGraph& g, const Json& input, const MeasureOptions& opt = {}) {
  detail::Stopwatch sw;
  MeasureReport rep;
  Json j;
  j["input"] = input;
  j["invariants"] = invariants_json(g, opt.jobs);
  Json ms;
  if (g.max_degree() > 3) {
    j["measures"] = nullptr;
    j["notes"] = "maximum degree above 3: no colouring measures";
    rep.json = std::move(j);
    return rep;
  }

  bool exhausted = false;
  auto col = find_proper_colouring(g, opt.budget, &exhausted);
  if (col || !exhausted) rep.colourable = col.has_value();
  Json cj;
  cj["status"] = rep.colourable ? "exact" : "bounded";
  cj["value"] = rep.colourable ? Json(*rep.colourable) : Json();
  cj["certificate"] = col ? detail::colour_values(*col) : Json();
  ms["colourable"] = cj;

  rep.bundle.r = edge_resistance(g, opt.budget);
  ms["r"] = detail::measure_json(*rep.bundle.r, [&](const RemovedElements& c) {
    Json a = Json::array();
    for (int id : c.removed) a.push_back(to_string(g.element(id)));
    Json o;
    o["removed"] = a;
    o["colouring"] = detail::colour_values(c.colouring);
    return o;
  });
  rep.bundle.rv = vertex_resistance(g, opt.budget);
  ms["r_v"] = detail::measure_json(*rep.bundle.rv, [&](const ConflictColouring& c) {
    Json o;
    o["conflicts"] = c.conflicts;
    o["colouring"] = detail::colour_values(c.colouring);
    return o;
  });

  if (g.is_graph() && g.is_cubic() && is_bridgeless(g)) {
    rep.bundle.omega = oddness(g, opt.budget);
    ms["omega"] = detail::measure_json(*rep.bundle.omega, [&](const TwoFactor& f) {
      Json o;
      o["cycles"] = f.cycles;
      o["odd"] = f.odd_count();
      return o;
    });
  } else {
    ms["omega"] = nullptr;
  }

  if (g.is_cubic()) {
    try {
      rep.bundle.mu3 = mu3(g, opt.budget);
      ms["mu3"] = detail::measure_json(*rep.bundle.mu3, [&](const DefectCertificate& d) {
        Json o;
        o["m1"] = detail::factor_json(g, d.triple.m1);
        o["m2"] = detail::factor_json(g, d.triple.m2);
        o["m3"] = detail::factor_json(g, d.triple.m3);
        o["uncovered"] = d.uncovered;
        return o;
      });
    } catch (const PreconditionError&) {
      ms["mu3"] = nullptr;
    }
  } else {
    ms["mu3"] = nullptr;
  }
  j["measures"] = ms;
  ClaimReport check = check_certificates(g, rep.bundle);
  j["certificates"] = check.to_json(false);
  if (opt.timing) j["seconds"] = sw.seconds();
  rep.json = std::move(j);
  return rep;
}

}  // namespace snarklab
