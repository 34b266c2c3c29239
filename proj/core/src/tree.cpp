#include "rosetree/tree.hpp"

#include <string>

namespace rosetree {

Tree<int> build_uniform(int depth, int branch) {
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  if (branch < 1) throw std::invalid_argument("branch must be at least 1");
  Tree<int> t(0);
  for (int d = 1; d <= depth; ++d) {
    List<Tree<int>> kids;
    for (int i = 0; i < branch; ++i) kids = cons(t, std::move(kids));
    t = Tree<int>(d, std::move(kids));
  }
  return t;
}

std::uint64_t uniform_size(int depth, int branch) {
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  if (branch < 1) throw std::invalid_argument("branch must be at least 1");
  std::uint64_t total = 0;
  std::uint64_t level = 1;
  for (int d = 0; d <= depth; ++d) {
    total += level;
    level *= static_cast<std::uint64_t>(branch);
  }
  return total;
}

}  // namespace rosetree
