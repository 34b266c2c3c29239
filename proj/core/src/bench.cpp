#include "rosetree/bench.hpp"

#include <chrono>
#include <string>

#include "rosetree/counters.hpp"
#include "rosetree/errors.hpp"
#include "rosetree/nav_cursor.hpp"
#include "rosetree/tree.hpp"

namespace rosetree::bench {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::search_direct: return "search_direct";
    case Method::search_cursor: return "search_cursor";
    case Method::list_direct: return "list_direct";
    case Method::list_cursor: return "list_cursor";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (Method m : all_methods) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

namespace {

// Keeps the traversal observable so the optimiser cannot drop it.
volatile std::int64_t sink;

std::uint64_t traverse(const Tree<int>& t, Method method) {
  std::int64_t checksum = 0;
  std::uint64_t count = 0;
  switch (method) {
    case Method::search_direct:
      for (const auto& node : preorder_stream(t)) {
        checksum += node.datum();
        ++count;
      }
      break;
    case Method::search_cursor:
      for (const auto& c : from_tree(t).descendants_or_self()) {
        checksum += c.datum();
        ++count;
      }
      break;
    case Method::list_direct: {
      auto data = labels(t);
      count = data.size();
      checksum = data.empty() ? 0 : data.back();
      break;
    }
    case Method::list_cursor: {
      auto data = from_tree(t).collect();
      count = data.size();
      checksum = data.empty() ? 0 : data.back();
      break;
    }
  }
  sink = checksum;
  return count;
}

}  // namespace

Report run(int depth, int branch, Method method) {
  const std::uint64_t expected = uniform_size(depth, branch);
  const Tree<int> t = build_uniform(depth, branch);

  const stats::CellScope cells;
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t count = traverse(t, method);
  const auto t1 = std::chrono::steady_clock::now();
  const std::uint64_t cell_ops = cells.elapsed();

  if (count != expected) {
    throw ConsistencyError(std::string(to_string(method)) + " visited " +
                           std::to_string(count) + " nodes, expected " +
                           std::to_string(expected));
  }
  return Report{method, depth, branch, count,
                std::chrono::duration<double>(t1 - t0).count(), cell_ops};
}

void verify_lists(int depth, int branch) {
  const Tree<int> t = build_uniform(depth, branch);
  const auto direct = labels(t);
  const auto cursor = from_tree(t).collect();
  if (direct.size() != cursor.size()) {
    throw ConsistencyError("labels and collect differ in length");
  }
  for (std::size_t i = 0; i < direct.size(); ++i) {
    if (direct[i] != cursor[i]) {
      throw ConsistencyError("labels and collect differ at position " +
                             std::to_string(i));
    }
  }
}

}  // namespace rosetree::bench
