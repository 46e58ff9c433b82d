#include "minorcolor/coloring.hpp"

#include <gtest/gtest.h>

#include "minorcolor/errors.hpp"

using namespace minorcolor;

TEST(ColorSet, StandardColorsAndRoots) {
  ColorSet cs = ColorSet::standard(2, 5);
  EXPECT_EQ(cs.colors(), (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(cs.annihilator_roots(), (std::vector<std::int64_t>{0, 3, 4}));
  EXPECT_TRUE(cs.contains(2));
  EXPECT_FALSE(cs.contains(0));
  EXPECT_FALSE(cs.contains(3));
}

TEST(ColorSet, ShiftedSwapsTopColor) {
  ColorSet cs = ColorSet::shifted(3, 5, 7);  // {1, 2, 5} in Z_7
  EXPECT_EQ(cs.colors(), (std::vector<std::int64_t>{1, 2, 5}));
  EXPECT_EQ(cs.annihilator_roots(), (std::vector<std::int64_t>{0, 3, 4, 6}));
  EXPECT_FALSE(cs.contains(3));  // the swapped-out top color
  EXPECT_TRUE(cs.contains(5));
  // beta must lie outside {0..t}
  EXPECT_THROW(ColorSet::shifted(3, 2, 7), DomainError);
  EXPECT_THROW(ColorSet::shifted(3, 0, 7), DomainError);
}

TEST(FindColoring, LeastProperColoring) {
  SimpleGraph k3 = SimpleGraph::complete(3);
  EXPECT_FALSE(find_coloring(k3, ColorSet::standard(2, 11)).has_value());
  auto c = find_coloring(k3, ColorSet::standard(3, 11));
  ASSERT_TRUE(c);
  EXPECT_TRUE(is_proper(k3, *c));
  // backtracking scans vertices and colors ascending
  EXPECT_EQ(c->at(1), 1);
  EXPECT_EQ(c->at(2), 2);
  EXPECT_EQ(c->at(3), 3);
}

TEST(FindColoring, ShiftedSet) {
  SimpleGraph p3 = SimpleGraph::path(3);
  auto c = find_coloring(p3, ColorSet::shifted(2, 4, 7));  // colors {1, 4}
  ASSERT_TRUE(c);
  EXPECT_TRUE(is_proper(p3, *c));
  EXPECT_EQ(c->at(1), 1);
  EXPECT_EQ(c->at(2), 4);
  EXPECT_EQ(c->at(3), 1);
}

TEST(ChromaticNumber, KnownValues) {
  EXPECT_EQ(chromatic_number(SimpleGraph(1, {})), 1);
  EXPECT_EQ(chromatic_number(SimpleGraph::path(4)), 2);
  EXPECT_EQ(chromatic_number(SimpleGraph::cycle(5)), 3);
  EXPECT_EQ(chromatic_number(SimpleGraph::cycle(6)), 2);
  EXPECT_EQ(chromatic_number(SimpleGraph::complete(4)), 4);
  // Petersen graph: outer C_5, inner 5-star polygon, spokes
  SimpleGraph pet(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                       {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6},
                       {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}});
  EXPECT_EQ(chromatic_number(pet), 3);
}

TEST(IsProper, RejectsOffSetColors) {
  SimpleGraph k2 = SimpleGraph::complete(2);
  ColorAssignment c;
  c.colorset = ColorSet::standard(2, 5);
  c.values = {{1, 1}, {2, 3}};  // 3 is not a color at t = 2
  EXPECT_FALSE(is_proper(k2, c));
  c.values = {{1, 1}, {2, 2}};
  EXPECT_TRUE(is_proper(k2, c));
  c.values = {{1, 1}};  // vertex 2 unassigned
  EXPECT_FALSE(is_proper(k2, c));
}

TEST(TransferContraction, ColorsRemovedVertexLikeKeptOne) {
  // contract 2->1 in C_4; color the triangle; pull the coloring back
  SimpleGraph c4 = SimpleGraph::cycle(4);
  Edge e{2, 1};
  SimpleGraph tri = contract_edge(c4, e);
  auto col = find_coloring(tri, ColorSet::standard(3, 11));
  ASSERT_TRUE(col);
  ColorAssignment back = transfer_contraction_coloring(c4, e, *col);
  EXPECT_EQ(back.at(2), back.at(1));
  EXPECT_TRUE(is_proper(without_edge(c4, e), back));
}

TEST(TransferContraction, ImproperInputThrows) {
  SimpleGraph k3 = SimpleGraph::complete(3);
  Edge e{1, 2};
  ColorAssignment bad;
  bad.colorset = ColorSet::standard(2, 5);
  bad.values = {{2, 1}, {3, 1}};  // not proper on the contracted K_2
  EXPECT_THROW(transfer_contraction_coloring(k3, e, bad), DomainError);
}

TEST(ExtendPendant, GivesFreshColor) {
  SimpleGraph p3 = SimpleGraph::path(3);  // 3 is pendant on 2
  ColorAssignment partial;
  partial.colorset = ColorSet::standard(2, 5);
  partial.values = {{1, 1}, {2, 2}};
  ColorAssignment full = extend_pendant_coloring(p3, 3, partial);
  EXPECT_TRUE(is_proper(p3, full));
  EXPECT_NE(full.at(3), full.at(2));
}

TEST(RecolorShifted, BetaBecomesTopColor) {
  SimpleGraph p3 = SimpleGraph::path(3);
  auto c = find_coloring(p3, ColorSet::shifted(2, 4, 7));
  ASSERT_TRUE(c);
  ColorAssignment std_c = recolor_shifted_to_standard(*c);
  EXPECT_EQ(std_c.colorset.kind, ColorSet::Kind::Standard);
  EXPECT_TRUE(is_proper(p3, std_c));
  EXPECT_EQ(std_c.at(2), 2);  // was beta = 4
}

TEST(BrooksBound, HoldsOnSmallConnectedGraphs) {
  EXPECT_TRUE(brooks_bound_check(SimpleGraph::path(4)));
  EXPECT_TRUE(brooks_bound_check(SimpleGraph::complete(4)));  // named exception
  EXPECT_TRUE(brooks_bound_check(SimpleGraph::cycle(5)));     // named exception
  SimpleGraph star(4, {{1, 2}, {1, 3}, {1, 4}});
  EXPECT_TRUE(brooks_bound_check(star));
}
