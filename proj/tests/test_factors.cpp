#include <gtest/gtest.h>

#include "oracles.hpp"
#include "snarklab/factors.hpp"
#include "snarklab/gadgets.hpp"
#include "snarklab/io.hpp"

using namespace snarklab;

namespace {

std::vector<int> as_indicator(const OneFactor& f) {
  std::vector<int> v(f.elements.size(), 0);
  f.elements.for_each([&](int id) { v[id] = 1; });
  return v;
}

std::vector<SemiGraph> cubic_family() {
  std::vector<SemiGraph> out{petersen(), k33(), complete_graph(4), lcf_graph({3, -3}, 4), lcf_graph({5, -5}, 6)};
  std::mt19937 rng(7);
  while (out.size() < 20) {
    int n = 2 * (4 + rng() % 3);
    std::vector<int> shifts(n);
    for (int i = 0; i < n; ++i) shifts[i] = 2 + static_cast<int>(rng() % (n - 3));
    SemiGraph g = lcf_graph(shifts, 1);
    if (g.is_cubic() && is_bridgeless(g)) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(OneFactors, KnownCounts) {
  EXPECT_EQ(all_one_factors(complete_graph(4)).size(), 3U);
  EXPECT_EQ(all_one_factors(k33()).size(), 6U);
  EXPECT_EQ(all_one_factors(petersen()).size(), 6U);
  EXPECT_EQ(all_one_factors(catalog_bipartite_cubic(6)).size(), 24U);
}

TEST(OneFactors, MatchOracleIncludingSemiEdges) {
  for (unsigned seed = 300; seed < 340; ++seed) {
    SemiGraph g = oracle::random_subcubic(3 + seed % 7, seed);
    std::vector<std::vector<int>> got;
    for (const auto& f : all_one_factors(g)) {
      EXPECT_TRUE(is_one_factor(g, f.elements));
      got.push_back(as_indicator(f));
    }
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, oracle::one_factors(g)) << emit_sgf(g);
  }
}

TEST(OneFactors, Constraints) {
  SemiGraph g = petersen();
  auto all = oracle::one_factors(g);
  for (int id = 0; id < g.num_edges(); id += 4) {
    FactorConstraints cons{{id}, {(id + 1) % g.num_edges()}};
    std::size_t want = 0;
    for (const auto& f : all) want += f[id] && !f[(id + 1) % g.num_edges()];
    auto e = enumerate_one_factors(
        g,
        [&](const OneFactor& f) {
          EXPECT_TRUE(f.contains(id));
          return true;
        },
        Budget{}, cons);
    EXPECT_EQ(e.count, want);
  }
  EXPECT_TRUE(one_factor_containing(g, 3).contains(3));
}

TEST(OneFactors, BudgetTruncates) {
  bool truncated = false;
  auto fs = all_one_factors(catalog_bipartite_cubic(6), Budget::nodes(5), &truncated);
  EXPECT_TRUE(truncated);
  EXPECT_LT(fs.size(), 24U);
}

TEST(TwoFactors, ComplementsAndColourClasses) {
  SemiGraph g = k33();
  auto fs = two_factors(g);
  EXPECT_EQ(fs.size(), 6U);
  for (const auto& f : fs) {
    int total = 0;
    for (int len : f.cycle_lengths()) total += len;
    EXPECT_EQ(total, g.order());
  }
  ElementSet bad(g.num_elements());
  bad.set(0);
  EXPECT_FALSE(two_factor_from_edges(g, bad).has_value());
  EXPECT_THROW(two_factors(gadget_x()), PreconditionError);
}

TEST(Oddness, MatchesOracle) {
  for (const auto& g : cubic_family()) {
    auto r = oddness(g);
    ASSERT_TRUE(r.is_exact());
    EXPECT_EQ(r.value(), oracle::oddness(g)) << emit_graph6(g);
    EXPECT_EQ(r.certificate->odd_count(), r.value());
  }
  EXPECT_EQ(oddness(petersen()).value(), 2);
}

TEST(Oddness, HintAndPreconditions) {
  SemiGraph p = petersen();
  auto hint = two_factors(p).front();
  auto r = oddness(p, Budget{}, hint);
  EXPECT_TRUE(r.is_exact());
  EXPECT_EQ(r.value(), 2);
  SemiGraphBuilder b(6);
  b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 0).add_edge(3, 4).add_edge(4, 5).add_edge(5, 3).add_edge(2, 3);
  EXPECT_THROW(oddness(b.build()), PreconditionError);
  EXPECT_THROW(oddness(gadget_x()), PreconditionError);
}
