#include "rosetree/node_identity.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "rosetree/notation.hpp"
#include "support/generators.hpp"

namespace rosetree {
namespace {

using Str = std::string;

std::vector<std::uint64_t> ids_of(std::span<const NodeId> ids) {
  std::vector<std::uint64_t> out;
  for (auto id : ids) out.push_back(id.value);
  return out;
}

TEST(NumberTree, SingleNode) {
  const auto n = number_tree(parse_notation("x"));
  EXPECT_EQ(n.datum().id, NodeId{0});
  EXPECT_EQ(n.datum().value, "x");
  EXPECT_TRUE(n.is_leaf());
}

TEST(NumberTree, PreorderIds) {
  const auto n = number_tree(parse_notation("a(b(d,e),c)"));
  std::vector<std::pair<std::uint64_t, Str>> got;
  for (const auto& d : labels(n)) got.emplace_back(d.id.value, d.value);
  EXPECT_EQ(got, (std::vector<std::pair<std::uint64_t, Str>>{
                     {0, "a"}, {1, "b"}, {2, "d"}, {3, "e"}, {4, "c"}}));
}

TEST(NumberTree, IdsMatchPreorderPositionOnRandomTrees) {
  std::mt19937 rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto tree = testing::random_tree(rng, 150);
    const auto numbered = number_tree(tree);
    const auto flat = testing::preorder_oracle(numbered);
    const auto data = testing::preorder_oracle(tree);
    ASSERT_EQ(flat.size(), data.size());
    for (std::size_t k = 0; k < flat.size(); ++k) {
      EXPECT_EQ(flat[k].id.value, k);
      EXPECT_EQ(flat[k].value, data[k]);
    }
    EXPECT_EQ(strip_ids(numbered), tree);
  }
}

TEST(NumberTree, AllNodesShareOneFreshToken) {
  const auto t = parse_notation("a(b,c)");
  const auto one = number_tree(t);
  const auto two = number_tree(t);
  EXPECT_NE(one.datum().source, two.datum().source);
  for (const auto& d : labels(one)) EXPECT_EQ(d.source, one.datum().source);
}

TEST(NumberTree, ExpandsSharedSubtrees) {
  const auto shared = build_uniform(5, 4);
  const auto numbered = number_tree(shared);
  EXPECT_EQ(size(numbered), uniform_size(5, 4));
  const auto ids = labels(numbered);
  for (std::size_t k = 0; k < ids.size(); ++k) ASSERT_EQ(ids[k].id.value, k);
}

TEST(NumberTree, DeepPathDoesNotRecurse) {
  Tree<int> t(0);
  for (int i = 1; i < 100000; ++i) t = Tree<int>(i, List<Tree<int>>{t});
  const auto n = number_tree(t);
  EXPECT_EQ(n.datum().id, NodeId{0});
  EXPECT_EQ(n.datum().value, 99999);
}

TEST(SameNode, Examples) {
  const auto root = from_tree(number_tree(parse_notation("a(b,c)")));
  const auto b = root.down_first();
  const auto c = b.next_sibling();
  EXPECT_TRUE(same_node(b, b));
  EXPECT_FALSE(same_node(b, c));
  EXPECT_TRUE(same_node(b, root.down_to(0)));
  EXPECT_TRUE(same_node(c, root.down_to(1)));
  EXPECT_TRUE(same_node(c.prev_sibling(), b));
}

TEST(CompareNodes, Examples) {
  const auto root = from_tree(number_tree(parse_notation("a(b,c)")));
  const auto b = root.down_first();
  const auto c = b.next_sibling();
  EXPECT_EQ(compare_nodes(b, c), std::strong_ordering::less);
  EXPECT_EQ(compare_nodes(c, b), std::strong_ordering::greater);
  EXPECT_EQ(compare_nodes(c, c), std::strong_ordering::equal);
  EXPECT_EQ(compare_nodes(root, b), std::strong_ordering::less);
}

TEST(CompareNodes, AgreesWithTraversalOrder) {
  std::mt19937 rng(42);
  for (int i = 0; i < 50; ++i) {
    const auto numbered = number_tree(testing::random_tree(rng, 60));
    std::vector<NumberedCursor<int>> all;
    for (const auto& c : from_tree(numbered).descendants_or_self()) all.push_back(c);
    for (std::size_t x = 0; x < all.size(); ++x) {
      for (std::size_t y = 0; y < all.size(); ++y) {
        ASSERT_EQ(compare_nodes(all[x], all[y]), x <=> y);
        ASSERT_EQ(same_node(all[x], all[y]), x == y);
      }
    }
  }
}

TEST(CompareNodes, AncestorsPrecedeDescendants) {
  std::mt19937 rng(43);
  for (int i = 0; i < 50; ++i) {
    const auto numbered = number_tree(testing::random_tree(rng, 100));
    for (const auto& c : from_tree(numbered).descendants_or_self()) {
      for (const auto& a : c.ancestors()) {
        ASSERT_LT(node_id(a), node_id(c));
      }
    }
  }
}

TEST(NodeSet, InsertKeepsDocumentOrder) {
  const auto root = from_tree(number_tree(parse_notation("a(b(d,e),c)")));
  const auto c4 = root.down_to(1);
  const auto c1 = root.down_first();
  ASSERT_EQ(node_id(c4), NodeId{4});
  const NodeSet s = set_insert(set_insert(NodeSet{}, c4), c1);
  EXPECT_EQ(ids_of(set_members(s)), (std::vector<std::uint64_t>{1, 4}));
  EXPECT_EQ(set_insert(s, c1), s);
  EXPECT_TRUE(s.contains(NodeId{1}));
  EXPECT_FALSE(s.contains(NodeId{2}));
}

TEST(NodeSet, UnionIdentityAndMerge) {
  const SourceToken tok = mint_source_token();
  const NodeSet s = NodeSet::of(tok, {NodeId{5}, NodeId{1}, NodeId{3}, NodeId{1}});
  EXPECT_EQ(ids_of(s.members()), (std::vector<std::uint64_t>{1, 3, 5}));
  EXPECT_EQ(set_union(s, NodeSet{}), s);
  EXPECT_EQ(set_union(NodeSet{}, s), s);
  const NodeSet u = set_union(s, NodeSet::of(tok, {NodeId{2}, NodeId{3}, NodeId{9}}));
  EXPECT_EQ(ids_of(u.members()), (std::vector<std::uint64_t>{1, 2, 3, 5, 9}));
}

TEST(NodeSet, RejectsMixedSources) {
  const auto t = parse_notation("a(b)");
  const auto one = from_tree(number_tree(t));
  const auto two = from_tree(number_tree(t));
  const NodeSet s = set_insert(NodeSet{}, one);
  EXPECT_THROW((void)set_insert(s, two), SourceMismatch);
  EXPECT_THROW((void)set_union(s, set_insert(NodeSet{}, two)), SourceMismatch);
}

TEST(NodeSet, SiblingAxesUnion) {
  const auto root = from_tree(number_tree(parse_notation("a(x,b,y)")));
  const auto b = root.down_to(1);
  ASSERT_EQ(b.datum().value, "b");
  const NodeSet both =
      set_union(collect_set(b.following_siblings()), collect_set(b.preceding_siblings()));
  EXPECT_EQ(ids_of(both.members()), (std::vector<std::uint64_t>{1, 3}));
}

TEST(NodeSet, AxisUnionMatchesBruteForce) {
  std::mt19937 rng(44);
  for (int i = 0; i < 50; ++i) {
    const auto numbered = number_tree(testing::random_tree(rng, 80));
    std::vector<NumberedCursor<int>> all;
    for (const auto& c : from_tree(numbered).descendants_or_self()) all.push_back(c);
    const auto& pick = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    const NodeSet got = set_union(collect_set(pick.ancestors()), collect_set(pick.descendants_or_self()));
    // Brute force by root paths: related iff one path is a prefix of the other.
    const auto mine = pick.root_path();
    std::vector<std::uint64_t> want;
    for (const auto& c : all) {
      const auto p = c.root_path();
      const bool prefix = p.size() <= mine.size() && std::equal(p.begin(), p.end(), mine.begin());
      const bool below = mine.size() <= p.size() && std::equal(mine.begin(), mine.end(), p.begin());
      if (prefix && p.size() < mine.size()) want.push_back(node_id(c).value);
      else if (below) want.push_back(node_id(c).value);
    }
    EXPECT_EQ(ids_of(got.members()), want);
  }
}

}  // namespace
}  // namespace rosetree
