#include "rosetree/bench.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "rosetree/tree.hpp"

namespace rosetree::bench {
namespace {

TEST(Bench, MethodNames) {
  for (Method m : all_methods) EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_EQ(to_string(Method::list_cursor), "list_cursor");
  EXPECT_FALSE(parse_method("list").has_value());
  EXPECT_FALSE(parse_method("").has_value());
}

TEST(Bench, NodeCounts) {
  EXPECT_EQ(run(10, 4, Method::list_direct).node_count, 1398101u);
  EXPECT_EQ(run(8, 4, Method::list_cursor).node_count, 87381u);
  for (Method m : all_methods) {
    EXPECT_EQ(run(0, 4, m).node_count, 1u);
    EXPECT_EQ(run(4, 1, m).node_count, 5u);
    const Report r = run(6, 3, m);
    EXPECT_EQ(r.node_count, uniform_size(6, 3));
    EXPECT_EQ(r.method, m);
    EXPECT_EQ(r.depth, 6);
    EXPECT_EQ(r.branch, 3);
    EXPECT_GE(r.wall_time, 0.0);
  }
}

TEST(Bench, BadArguments) {
  EXPECT_THROW((void)run(-1, 4, Method::list_direct), std::invalid_argument);
  EXPECT_THROW((void)run(3, 0, Method::list_direct), std::invalid_argument);
}

TEST(Bench, DirectMethodsAllocateNothing) {
  EXPECT_EQ(run(6, 4, Method::list_direct).cell_ops, 0u);
  EXPECT_EQ(run(6, 4, Method::search_direct).cell_ops, 0u);
}

TEST(Bench, CursorCellsGrowLinearly) {
  double previous_slope = 0;
  for (int depth = 4; depth <= 8; ++depth) {
    const Report r = run(depth, 4, Method::search_cursor);
    const double slope = static_cast<double>(r.cell_ops) / static_cast<double>(r.node_count);
    if (depth > 4) {
      EXPECT_NEAR(slope / previous_slope, 1.0, 0.10) << "depth " << depth;
    }
    previous_slope = slope;
  }
}

TEST(Bench, VerifyLists) {
  EXPECT_NO_THROW(verify_lists(6, 4));
  EXPECT_NO_THROW(verify_lists(0, 1));
}

}  // namespace
}  // namespace rosetree::bench
