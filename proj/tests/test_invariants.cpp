#include <gtest/gtest.h>

#include "oracles.hpp"
#include "snarklab/gadgets.hpp"
#include "snarklab/invariants.hpp"
#include "snarklab/io.hpp"

using namespace snarklab;

namespace {

int as_int(const Length& l) { return l.is_infinite() ? oracle::kInf : l.value(); }

}  // namespace

TEST(Girth, MatchesOracleOnRandomSemiGraphs) {
  for (unsigned seed = 0; seed < 60; ++seed) {
    SemiGraph g = oracle::random_subcubic(4 + seed % 7, seed);
    EXPECT_EQ(as_int(girth(g)), oracle::girth(g)) << emit_sgf(g);
    EXPECT_EQ(as_int(semi_girth(g)), oracle::semi_girth(g)) << emit_sgf(g);
  }
}

TEST(Girth, CatalogValues) {
  EXPECT_EQ(girth(petersen()), Length::of(5));
  EXPECT_EQ(girth(k33()), Length::of(4));
  EXPECT_EQ(girth(complete_graph(4)), Length::of(3));
  EXPECT_EQ(girth(catalog_bipartite_cubic(6)), Length::of(6));
  EXPECT_EQ(girth(catalog_bipartite_cubic(8)), Length::of(8));
  EXPECT_EQ(girth(gadget_x()), Length::of(5));
  EXPECT_EQ(semi_girth(gadget_x()), Length::of(4));
  EXPECT_EQ(semi_girth(gadget_y()), Length::of(5));
}

TEST(Girth, AcyclicIsInfinite) {
  SemiGraphBuilder b(3);
  b.add_edge(0, 1).add_edge(1, 2).add_semi_edge(0);
  EXPECT_TRUE(girth(b.build()).is_infinite());
  EXPECT_EQ(semi_girth(b.build()), Length::infinite());
  EXPECT_EQ(to_string(Length::infinite()), "inf");
  EXPECT_LT(Length::of(100), Length::infinite());
}

TEST(Structure, BipartiteConnectedBridges) {
  EXPECT_TRUE(is_bipartite(catalog_bipartite_cubic(8)));
  EXPECT_EQ(catalog_bipartite_cubic(8).num_edges(), 45);
  EXPECT_FALSE(is_bipartite(petersen()));
  EXPECT_TRUE(is_bridgeless(petersen()));
  SemiGraphBuilder b(6);
  b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 0).add_edge(3, 4).add_edge(4, 5).add_edge(5, 3);
  EXPECT_FALSE(is_connected(b.build()));
  b.add_edge(2, 3);
  SemiGraph g = b.build();
  EXPECT_TRUE(is_connected(g));
  ASSERT_EQ(bridges(g).size(), 1U);
  EXPECT_EQ(g.element(bridges(g)[0]), Element::edge(2, 3));
}

TEST(CyclicCut, MatchesOracle) {
  std::vector<SemiGraph> graphs{petersen(), k33(), complete_graph(4), catalog_bipartite_cubic(6)};
  // Two triangles joined by a perfect matching (prism): cyclic 3-cut.
  SemiGraphBuilder prism(6);
  prism.add_edge(0, 1).add_edge(1, 2).add_edge(2, 0).add_edge(3, 4).add_edge(4, 5).add_edge(5, 3);
  prism.add_edge(0, 3).add_edge(1, 4).add_edge(2, 5);
  graphs.push_back(prism.build());
  for (const auto& g : graphs) {
    int want = oracle::min_cyclic_cut(g, 5);
    for (int k = 1; k <= 5; ++k) {
      auto cut = has_cyclic_cut_below(g, k);
      EXPECT_EQ(cut.has_value(), want < k) << emit_graph6(g) << " k=" << k;
      if (cut) {
        EXPECT_LT(cut->size, k);
        EXPECT_TRUE(cut->side_has_cycle.first && cut->side_has_cycle.second);
      }
    }
  }
}

TEST(CyclicCut, ParallelJobsAgree) {
  SemiGraph g = catalog_bipartite_cubic(6);
  EXPECT_EQ(has_cyclic_cut_below(g, 5, 1).has_value(), has_cyclic_cut_below(g, 5, 3).has_value());
}

TEST(Hamiltonian, EndpointPairsMatchOracle) {
  for (const SemiGraph& g : {gadget_x(), petersen(), k33()}) {
    auto got = hamiltonian_path_endpoint_pairs(g);
    EXPECT_EQ(got, oracle::hamiltonian_endpoint_pairs(g));
  }
  EXPECT_EQ(hamiltonian_path_endpoint_pairs(gadget_x()).size(), 10U);
}

TEST(Hamiltonian, Cycles) {
  EXPECT_FALSE(hamiltonian_cycle_exists(petersen()));
  auto c = find_hamiltonian_cycle(gadget_y());
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->size(), 17U);
  for (std::size_t i = 0; i < c->size(); ++i) EXPECT_TRUE(gadget_y().has_edge((*c)[i], (*c)[(i + 1) % c->size()]));
  EXPECT_TRUE(hamiltonian_cycle_exists(k33()));
}
