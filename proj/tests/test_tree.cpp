#include <gtest/gtest.h>

#include "dyckstat/error.hpp"
#include "dyckstat/tree.hpp"

namespace dyckstat {
namespace {

OrderedTree leaf() { return OrderedTree(); }
OrderedTree node(std::vector<OrderedTree> kids) { return OrderedTree(std::move(kids)); }

TEST(Lambda, SmallTrees) {
  EXPECT_EQ(path_to_tree(parse_path("UD")), node({leaf()}));
  EXPECT_EQ(path_to_tree(parse_path("UDUD")), node({leaf(), leaf()}));
  EXPECT_EQ(path_to_tree(parse_path("UUDD")), make_path_tree(2).tree());
  EXPECT_EQ(render_text(tree_to_path(make_bouquet(3).tree())), "UUDUDD");
  EXPECT_EQ(render_text(tree_to_path(node({leaf()}))), "UD");
  EXPECT_EQ(render_text(tree_to_path(node({leaf(), leaf(), leaf()}))), "UDUDUD");
}

TEST(Lambda, RoundTripsBothWays) {
  for (int n = 0; n <= 10; ++n) {
    for_each_dyck(n, [](const DyckPath& p) {
      const auto t = path_to_tree(p);
      ASSERT_EQ(tree_to_path(t), p);
      ASSERT_EQ(t.edge_count(), p.semilength());
      ASSERT_EQ(render_word(t), render_text(p));
    });
  }
}

TEST(Edges, ExteriorEdgesMatchExteriorPairs) {
  EXPECT_TRUE(exterior_edges(make_path_tree(5).tree()).empty());
  EXPECT_EQ(exterior_edges(path_to_tree(parse_path("UUUUDDUDDUDD"))).size(), 2u);
  for (int n = 0; n <= 8; ++n) {
    for_each_dyck(n, [](const DyckPath& p) {
      const auto t = path_to_tree(p);
      ASSERT_EQ(static_cast<int>(exterior_edges(t).size()), exterior_pairs(p));
    });
  }
}

TEST(Edges, LevelsMatchUpStepHeights) {
  EXPECT_EQ(edges_at_residue(make_bouquet(6).tree(), ResidueSpec(3, {0})), 0);
  EXPECT_GE(edges_at_residue(make_path_tree(3).tree(), ResidueSpec(3, {0})), 1);
  const ResidueSpec specs[] = {ResidueSpec(3, {0}), ResidueSpec(2, {1}), ResidueSpec(4, {0, 3})};
  for (int n = 0; n <= 8; ++n) {
    for_each_dyck(n, [&](const DyckPath& p) {
      const auto t = path_to_tree(p);
      for (const auto& spec : specs) ASSERT_EQ(edges_at_residue(t, spec), up_steps_at_residue(p, spec));
      ASSERT_EQ(red_edge_count(t), up_steps_at_residue(p, ResidueSpec(3, {0})));
    });
  }
}

TEST(Edges, PreorderIndices) {
  const auto es = edges(node({node({leaf()}), leaf()}));
  ASSERT_EQ(es.size(), 3u);
  EXPECT_EQ(es[0], (EdgeRef{0, 1, 1}));
  EXPECT_EQ(es[1], (EdgeRef{1, 2, 2}));
  EXPECT_EQ(es[2], (EdgeRef{0, 3, 1}));
}

TEST(Planted, DecomposeAndMerge) {
  EXPECT_EQ(decompose_planted(make_path_tree(3).tree()).size(), 1u);
  const auto parts = decompose_planted(path_to_tree(parse_path("UDUD")));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], make_path_tree(1));
  EXPECT_TRUE(decompose_planted(OrderedTree()).empty());
  for (int n = 0; n <= 8; ++n) {
    for_each_dyck(n, [](const DyckPath& p) {
      const auto t = path_to_tree(p);
      ASSERT_EQ(merge_planted(decompose_planted(t)), t);
    });
  }
}

TEST(Planted, Shapes) {
  EXPECT_EQ(make_bouquet(1), make_path_tree(1));
  EXPECT_EQ(make_bouquet(2), make_path_tree(2));
  EXPECT_EQ(render_text(tree_to_path(make_bouquet(4).tree())), "UUDUDUDD");
  EXPECT_TRUE(is_bouquet(make_bouquet(5).tree()));
  EXPECT_FALSE(is_bouquet(make_path_tree(3).tree()));
  EXPECT_TRUE(is_path_tree(make_path_tree(4).tree()));
  EXPECT_EQ(make_path_tree(4).edge_count(), 4u);
}

TEST(Planted, Errors) {
  EXPECT_THROW(PlantedTree(node({leaf(), leaf()})), Error);
  EXPECT_THROW(make_bouquet(0), Error);
  EXPECT_THROW(make_path_tree(0), Error);
}

TEST(Render, Outline) { EXPECT_EQ(render_outline(path_to_tree(parse_path("UUDDUD"))), "*\n  +\n    o\n  o\n"); }

}  // namespace
}  // namespace dyckstat
