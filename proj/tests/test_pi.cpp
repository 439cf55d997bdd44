#include <gtest/gtest.h>

#include <unordered_set>

#include "dyckstat/error.hpp"
#include "dyckstat/pi.hpp"

namespace dyckstat {
namespace {

OrderedTree leaf() { return OrderedTree(); }
OrderedTree node(std::vector<OrderedTree> kids) { return OrderedTree(std::move(kids)); }
// Subtree whose root starts a hanging chain of k edges (k >= 1).
OrderedTree hanging_chain(int k) { return make_path_tree(k).tree(); }

// v with children [leaf, leaf, e], e with a leaf and a 2-edge chain; 7 edges, uv and ve exterior.
PlantedTree two_exterior_edges() {
  return PlantedTree::stalk_over(node({leaf(), leaf(), node({leaf(), hanging_chain(1)})}));
}

// v with children [leaf, d, 2-edge chain], d with two leaves; 7 edges.
PlantedTree second_block() {
  return PlantedTree::stalk_over(node({leaf(), node({leaf(), leaf()}), hanging_chain(1)}));
}

TEST(Phi, BaseCase) {
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(phi(make_path_tree(k)), make_bouquet(k)) << k;
  EXPECT_EQ(phi(make_path_tree(2)), make_path_tree(2));
  EXPECT_EQ(phi_inverse(make_bouquet(5)), make_path_tree(5));
  EXPECT_EQ(phi_inverse(make_path_tree(1)), make_path_tree(1));
}

TEST(Phi, CaseLabels) {
  EXPECT_EQ(phi_case(make_path_tree(4)), PhiCase::Base);
  EXPECT_EQ(phi_case(PlantedTree::stalk_over(node({node({leaf(), leaf()}), leaf()}))), PhiCase::Case2);
  EXPECT_EQ(phi_case(PlantedTree::stalk_over(node({leaf(), leaf()}))), PhiCase::Case3);
  EXPECT_EQ(phi_case(two_exterior_edges()), PhiCase::Case1);
  EXPECT_EQ(phi_inverse_case(make_bouquet(4)), PhiCase::Base);
}

TEST(Phi, TwoExteriorEdgesBecomeTwoRedEdges) {
  const auto t = two_exterior_edges();
  ASSERT_EQ(t.edge_count(), 7u);
  ASSERT_EQ(exterior_edges(t.tree()).size(), 2u);
  const auto image = phi(t);
  EXPECT_EQ(image.edge_count(), 7u);
  EXPECT_EQ(red_edge_count(image.tree()), 2);
  EXPECT_EQ(edges_at_residue(image.tree(), ResidueSpec(3, {0})), 2);
  EXPECT_EQ(phi_inverse(image), t);
}

TEST(Phi, TwoBlockTreeHasFourRedEdges) {
  const auto t = node({two_exterior_edges().tree().children()[0], second_block().tree().children()[0]});
  ASSERT_EQ(t.edge_count(), 14u);
  ASSERT_EQ(decompose_planted(t).size(), 2u);
  ASSERT_EQ(exterior_edges(t).size(), 4u);
  const auto image = Phi(t);
  EXPECT_EQ(red_edge_count(image), 4);
  EXPECT_EQ(Phi_inverse(image), t);
}

TEST(Phi, RoundTripOnPlantedTrees) {
  for (int n = 1; n <= 9; ++n) {
    for_each_dyck(n - 1, [](const DyckPath& inner) {
      const auto t = PlantedTree::stalk_over(path_to_tree(inner));
      const auto image = phi(t);
      ASSERT_EQ(phi_inverse(image), t) << render_word(t.tree());
      ASSERT_EQ(phi(phi_inverse(t)), t) << render_word(t.tree());
      ASSERT_EQ(red_edge_count(image.tree()), static_cast<int>(exterior_edges(t.tree()).size()));
    });
  }
}

TEST(Phi, TraceRecordsEveryCall) {
  PhiTrace trace;
  phi(two_exterior_edges(), &trace);
  ASSERT_FALSE(trace.entries.empty());
  EXPECT_EQ(trace.entries.front().depth, 0);
  EXPECT_EQ(trace.entries.front().label, PhiCase::Case1);
  EXPECT_EQ(trace.entries.front().word, render_word(two_exterior_edges().tree()));
}

TEST(Pi, Examples) {
  EXPECT_EQ(render_text(Pi(parse_path("UUDD"))), "UUDD");
  EXPECT_EQ(render_text(Pi(parse_path("UUUDDD"))), "UUDUDD");
  EXPECT_TRUE(Pi(DyckPath{}).empty());
  EXPECT_EQ(Phi(OrderedTree()), OrderedTree());
}

TEST(Pi, TransportsExteriorPairsToRedSteps) {
  const ResidueSpec red(3, {0});
  std::map<int, std::uint64_t> exterior;
  std::map<int, std::uint64_t> reds;
  for_each_dyck(6, [&](const DyckPath& p) {
    ++exterior[exterior_pairs(p)];
    ++reds[up_steps_at_residue(Pi(p), red)];
  });
  const std::map<int, std::uint64_t> row6 = {{0, 32}, {1, 56}, {2, 34}, {3, 9}, {4, 1}};
  EXPECT_EQ(exterior, row6);
  EXPECT_EQ(reds, row6);
}

TEST(Pi, BijectiveAndInvertible) {
  for (int n = 0; n <= 8; ++n) {
    std::unordered_set<DyckPath> images;
    for_each_dyck(n, [&](const DyckPath& p) {
      const auto q = Pi(p);
      ASSERT_EQ(exterior_pairs(p), up_steps_at_residue(q, ResidueSpec(3, {0})));
      ASSERT_TRUE(images.insert(q).second);
      ASSERT_EQ(Pi_inverse(q), p);
    });
    EXPECT_EQ(images.size(), catalan(n));
  }
}

}  // namespace
}  // namespace dyckstat
