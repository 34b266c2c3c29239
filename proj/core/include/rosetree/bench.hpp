#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace rosetree::bench {

// The four traversals of build_uniform(depth, branch):
//   search_direct  consume preorder_stream over the tree
//   search_cursor  consume descendants_or_self from a root cursor
//   list_direct    labels()
//   list_cursor    NavCursor::collect()
enum class Method { search_direct, search_cursor, list_direct, list_cursor };

inline constexpr Method all_methods[] = {Method::search_direct, Method::search_cursor,
                                         Method::list_direct, Method::list_cursor};

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

struct Report {
  Method method;
  int depth;
  int branch;
  std::uint64_t node_count;
  // Seconds spent in the traversal alone; building the tree is excluded.
  double wall_time;
  // Persistent cells allocated during the traversal.
  std::uint64_t cell_ops;
};

// Builds the tree, runs one traversal to completion and checks the number of
// visited nodes against the closed-form size. Throws ConsistencyError on a
// mismatch and std::invalid_argument for depth < 0 or branch < 1.
Report run(int depth, int branch, Method method);

// Checks that labels() and collect() agree element by element. Throws
// ConsistencyError otherwise.
void verify_lists(int depth, int branch);

}  // namespace rosetree::bench
