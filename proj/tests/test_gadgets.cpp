#include <gtest/gtest.h>

#include "snarklab/colouring.hpp"
#include "snarklab/gadgets.hpp"
#include "snarklab/io.hpp"

using namespace snarklab;

namespace {

ZContract rename_to_z(const SemiGraph& g, int girth) {
  SemiGraphBuilder b(g);
  b.clear_ports();
  auto sv = g.semi_vertices();
  for (std::size_t i = 0; i < sv.size() && i < 5; ++i) b.set_port(z_port_names()[i], sv[i]);
  return {girth, b.build()};
}

const ClauseCheck* clause(const ZValidation& v, std::string_view id) {
  for (const auto& c : v.clauses)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST(Gadgets, XShape) {
  SemiGraph x = gadget_x();
  EXPECT_EQ(x.order(), 8);
  EXPECT_EQ(x.num_semi_edges(), 4);
  EXPECT_TRUE(x.is_cubic());
  EXPECT_TRUE(is_colourable(x));
  for (const char* p : {"u0", "v0", "u1", "v1"}) EXPECT_TRUE(x.has_semi_edge(x.port(p)));
}

TEST(Gadgets, YShape) {
  SemiGraph y = gadget_y();
  EXPECT_EQ(y.order(), 17);
  EXPECT_EQ(y.num_semi_edges(), 5);
  EXPECT_TRUE(y.is_cubic());
  EXPECT_FALSE(is_colourable(y));
  EXPECT_EQ(y.ports().size(), 5U);
}

TEST(Gadgets, Catalog) {
  EXPECT_EQ(catalog_bipartite_cubic(4).order(), 6);
  EXPECT_EQ(catalog_bipartite_cubic(6).order(), 14);
  EXPECT_EQ(catalog_bipartite_cubic(8).order(), 30);
  EXPECT_THROW(catalog_bipartite_cubic(5), PreconditionError);
  EXPECT_EQ(lcf_graph({5, -5}, 7).num_edges(), 21);
}

TEST(Gadgets, MGadget) {
  SemiGraph m = m_gadget(catalog_bipartite_cubic(6), {0, 1, 2});
  EXPECT_EQ(m.order(), 11);
  EXPECT_EQ(m.num_edges(), 14);
  EXPECT_EQ(m.num_semi_edges(), 5);
  EXPECT_EQ(m.port("m4"), m.semi_vertices().back());
  EXPECT_THROW(m_gadget(catalog_bipartite_cubic(6), {0, 2, 4}), GraphError);
  EXPECT_THROW(m_gadget(gadget_x(), {0, 1, 2}), PreconditionError);
}

TEST(ZContract, PatternPredicate) {
  EXPECT_TRUE(is_aabbc_pattern({2, 2, 1}));
  EXPECT_TRUE(is_aabbc_pattern({4, 1, 0}));
  EXPECT_TRUE(is_aabbc_pattern({0, 0, 5}));
  EXPECT_FALSE(is_aabbc_pattern({3, 1, 1}));
  EXPECT_FALSE(is_aabbc_pattern({2, 2, 2}));
}

TEST(ZContract, DefaultPassesEveryClause) {
  ZContract z = z_default();
  ZValidation v = validate_z(z, 5);
  EXPECT_TRUE(v.passed());
  EXPECT_EQ(v.clauses.size(), 6U);
  EXPECT_EQ(v.semi_girth, Length::of(5));
  ASSERT_TRUE(v.pattern_witness);
  EXPECT_EQ(v.pattern_witness->conflicts.size(), 1U);
}

TEST(ZContract, GirthRequirementAboveSemiGirthFails) {
  ZValidation v = validate_z(z_default(), 6);
  EXPECT_FALSE(v.passed());
  EXPECT_FALSE(clause(v, "semi_girth")->passed);
}

TEST(ZContract, ColourableCandidateFails) {
  ZContract m = rename_to_z(m_gadget(catalog_bipartite_cubic(6), {0, 1, 2}), 5);
  ZValidation v = validate_z(m, 5);
  EXPECT_TRUE(clause(v, "ports")->passed);
  EXPECT_FALSE(clause(v, "non_colourable")->passed);
  EXPECT_FALSE(clause(v, "resistance_one")->passed);
  EXPECT_FALSE(v.passed());
}

TEST(ZContract, FourPortGadgetFailsPorts) {
  ZValidation v = validate_z(rename_to_z(gadget_x(), 5), 5);
  EXPECT_FALSE(clause(v, "ports")->passed);
  EXPECT_FALSE(v.passed());
}

TEST(Compose, OrdersMatchFormula) {
  struct Case {
    int a, b;
    std::vector<int> chains;
    int order;
  };
  for (const Case& c : std::vector<Case>{{0, 0, {0}, 34}, {1, 1, {0, 0}, 60}, {1, 1, {1, 0}, 68}, {1, 1, {2, 2}, 92}, {2, 0, {1, 1, 1}, 94}}) {
    CompositionPlan p{c.a, c.b, c.chains, z_default(), std::nullopt};
    Composition comp = compose(p);
    EXPECT_EQ(comp.graph.order(), c.order);
    EXPECT_EQ(expected_order(p), c.order);
    EXPECT_TRUE(comp.graph.is_graph());
    EXPECT_TRUE(comp.graph.is_cubic());
    EXPECT_EQ(static_cast<int>(comp.middle.size()), c.a);
    for (const auto& inst : comp.instances) EXPECT_TRUE(is_semi_subgraph(inst.local, comp.graph, inst.embedding));
  }
}

TEST(Compose, InstanceLabels) {
  Composition comp = compose(theorem_plan(3, 4, 5));
  EXPECT_EQ(comp.instance("ZL").kind, "Z");
  EXPECT_EQ(comp.instance("Y1").kind, "Y");
  EXPECT_EQ(comp.instance("top1").kind, "X");
  EXPECT_EQ(comp.instance("bottom1.2").kind, "X");
  EXPECT_THROW(comp.instance("Y2"), GraphError);
  EXPECT_EQ(comp.instances.size(), 2U + 1 + 1 + 4);
}

TEST(Compose, SeedIsDeterministicAndPreservesShape) {
  CompositionPlan p = theorem_plan(3, 4, 5);
  p.seed = 42;
  SemiGraph a = compose(p).graph, b = compose(p).graph;
  EXPECT_EQ(emit_sgf(a), emit_sgf(b));
  EXPECT_EQ(a.order(), 92);
  EXPECT_TRUE(a.is_cubic());
  bool differs = false;
  for (std::uint64_t s = 0; s < 8 && !differs; ++s) {
    p.seed = s;
    differs = emit_sgf(compose(p).graph) != emit_sgf(compose(theorem_plan(3, 4, 5)).graph);
  }
  EXPECT_TRUE(differs);
}

TEST(Compose, PlanValidation) {
  CompositionPlan p{1, 0, {0}, z_default(), std::nullopt};
  EXPECT_THROW(compose(p), PreconditionError);
  p = {-1, 0, {}, z_default(), std::nullopt};
  EXPECT_THROW(compose(p), PreconditionError);
}

TEST(TheoremPlan, ParametersAndErrors) {
  CompositionPlan p = theorem_plan(5, 6, 5);
  EXPECT_EQ(p.a, 3);
  EXPECT_EQ(p.b, 1);
  EXPECT_EQ(p.chains, (std::vector<int>{2, 2, 2, 2}));
  EXPECT_EQ(expected_order(p), 160);
  EXPECT_EQ(expected_order(theorem_plan(3, 6, 5)), 140);
  EXPECT_THROW(theorem_plan(2, 4, 5), PreconditionError);
  EXPECT_THROW(theorem_plan(3, 5, 5), PreconditionError);
  EXPECT_THROW(theorem_plan(5, 4, 5), PreconditionError);
  EXPECT_THROW(theorem_plan(3, 4, 6), PreconditionError);
  ZContract z = z_default();
  EXPECT_THROW(theorem_plan(3, 4, 6, z), PreconditionError);
  z.girth = 6;
  EXPECT_NO_THROW(theorem_plan(3, 4, 6, z));
}
