#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "signless/graph6.hpp"

using namespace signless;

TEST(Graph6, HandEncodedExamples) {
  // K3: bits 111 padded to 111000 = 56 -> 'w'.
  EXPECT_EQ(to_graph6(make_complete(3)), "Bw");
  EXPECT_EQ(from_graph6("Bw"), make_complete(3));
  EXPECT_EQ(to_graph6(Graph(2)), "A?");
  EXPECT_EQ(from_graph6("A?"), Graph(2));
  // K2: single bit 1 -> 100000 = 32 -> '_'.
  EXPECT_EQ(to_graph6(make_complete(2)), "A_");
  EXPECT_EQ(from_graph6("A_"), make_complete(2));
  EXPECT_EQ(to_graph6(make_complete(4)), "C~");
  EXPECT_EQ(from_graph6("C~"), make_complete(4));
  EXPECT_EQ(to_graph6(Graph(1)), "@");
}

TEST(Graph6, ColumnMajorBitOrder) {
  // Only x(0,2) set: bits 010000 -> 16 -> 'O'.
  Graph g(3);
  g.add_edge(0, 2);
  EXPECT_EQ(to_graph6(g), "BO");
  // Only x(1,2): bits 001000 -> 8 -> 'G'.
  Graph h(3);
  h.add_edge(1, 2);
  EXPECT_EQ(to_graph6(h), "BG");
}

TEST(Graph6, AcceptsHeaderPrefix) {
  EXPECT_EQ(from_graph6(">>graph6<<Bw"), make_complete(3));
}

TEST(Graph6, Errors) {
  EXPECT_THROW(from_graph6(""), Graph6Error);
  EXPECT_THROW(from_graph6("?"), Graph6Error);        // n = 0
  EXPECT_THROW(from_graph6("~"), Graph6Error);        // long form
  EXPECT_THROW(from_graph6("~?@?"), Graph6Error);
  EXPECT_THROW(from_graph6(" w"), Graph6Error);       // header below '?'
  EXPECT_THROW(from_graph6("B"), Graph6Error);        // missing body
  EXPECT_THROW(from_graph6("Bww"), Graph6Error);      // body too long
  EXPECT_THROW(from_graph6("Bx"), Graph6Error);       // padding bit set
  EXPECT_THROW(from_graph6("B\x7f"), Graph6Error);    // body byte out of range
  EXPECT_THROW(to_graph6(Graph(63)), Graph6Error);
}

TEST(Graph6Property, RoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % kMaxGraph6Order);
    const double p = (rng() % 100) / 100.0;
    const Graph g = oracle::random_graph(n, p, rng);
    const std::string text = to_graph6(g);
    ASSERT_EQ(text.size(), 1 + (n * (n - 1) / 2 + 5) / 6);
    EXPECT_EQ(from_graph6(text), g);
  }
}

TEST(Graph6, Stream) {
  std::istringstream in("Bw\r\n\nA?\nC~\n");
  const auto graphs = read_graph6_stream(in);
  ASSERT_EQ(graphs.size(), 3U);
  EXPECT_EQ(graphs[0], make_complete(3));
  EXPECT_EQ(graphs[1], Graph(2));
  EXPECT_EQ(graphs[2], make_complete(4));
}
