#include <gtest/gtest.h>

#include "snarklab/gadgets.hpp"
#include "snarklab/io.hpp"

using namespace snarklab;

namespace {

void expect_same(const SemiGraph& a, const SemiGraph& b) {
  ASSERT_EQ(a.order(), b.order());
  ASSERT_EQ(a.num_elements(), b.num_elements());
  for (int id = 0; id < a.num_elements(); ++id) EXPECT_EQ(a.element(id), b.element(id));
  ASSERT_EQ(a.ports().size(), b.ports().size());
  for (std::size_t i = 0; i < a.ports().size(); ++i) {
    EXPECT_EQ(a.ports()[i].name, b.ports()[i].name);
    EXPECT_EQ(a.ports()[i].vertex, b.ports()[i].vertex);
  }
}

int error_line(std::string_view text) {
  try {
    parse_sgf(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(Sgf, RoundTripsEveryGadget) {
  for (const SemiGraph& g : {petersen(), gadget_x(), gadget_y(), z_default().gadget,
                             m_gadget(catalog_bipartite_cubic(6), {0, 1, 2})}) {
    std::string text = emit_sgf(g);
    SemiGraph back = parse_sgf(text);
    expect_same(g, back);
    EXPECT_EQ(emit_sgf(back), text);
  }
}

TEST(Sgf, CommentsBlankLinesAndPortsBeforeSemiEdges) {
  SemiGraph g = parse_sgf("# header\n\nn 2\np a 1\ns 1\ne 0 1\n");
  EXPECT_EQ(g.port("a"), 1);
  EXPECT_EQ(g.num_semi_edges(), 1);
}

TEST(Sgf, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("n 3\ne 0 1\ne 1 0\n"), 3);
  EXPECT_EQ(error_line("n 2\nq 1\n"), 2);
  EXPECT_EQ(error_line("e 0 1\n"), 1);
  EXPECT_EQ(error_line("n 2\ne 0 x\n"), 2);
  EXPECT_EQ(error_line("n 2\ne 0 2\n"), 2);
  EXPECT_EQ(error_line("n 2\ns 0\ns 0\n"), 3);
  EXPECT_EQ(error_line("n 2\np a 0\n"), 2);
  EXPECT_EQ(error_line("n 2\nn 2\n"), 2);
  EXPECT_EQ(error_line("n 2\ne 0 1\r\n"), 2);
  EXPECT_EQ(error_line(""), 0);
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(emit_graph6(petersen()), "IheA@GUAo");
  EXPECT_EQ(emit_graph6(catalog_bipartite_cubic(6)), "MhEGHC@AI?_PC@_G_");
  EXPECT_EQ(emit_graph6(k33()), "EFz_");
}

TEST(Graph6, RoundTripAndHeaders) {
  for (const SemiGraph& g : {petersen(), k33(), complete_graph(4), catalog_bipartite_cubic(8)}) {
    SemiGraph back = parse_graph6(emit_graph6(g));
    expect_same(g, back);
  }
  EXPECT_EQ(parse_graph6(">>graph6<<EFz_\n").num_edges(), 9);
}

TEST(Graph6, LargeOrderHeader) {
  SemiGraphBuilder b(70);
  for (Vertex v = 0; v + 1 < 70; ++v) b.add_edge(v, v + 1);
  SemiGraph g = b.build();
  std::string s = emit_graph6(g);
  EXPECT_EQ(s[0], 126);
  expect_same(parse_graph6(s), g);
}

TEST(Graph6, Rejections) {
  EXPECT_THROW(emit_graph6(gadget_x()), GraphError);
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("EFz"), ParseError);
  EXPECT_THROW(parse_graph6("EFz__"), ParseError);
  EXPECT_THROW(parse_graph6("EFz_\nEFz_"), ParseError);
  EXPECT_THROW(parse_graph6("E\x01z_"), ParseError);
}
