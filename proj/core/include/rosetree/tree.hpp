#pragma once

#include <concepts>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rosetree/counters.hpp"
#include "rosetree/detail/rc.hpp"
#include "rosetree/errors.hpp"
#include "rosetree/lazy_range.hpp"
#include "rosetree/list.hpp"

namespace rosetree {

// Immutable rose tree: a datum and an ordered list of child trees.
//
// A Tree is a handle to a shared node. Copying is O(1) and never deep-copies;
// the same subtree may appear any number of times inside other trees.
template <class D>
class Tree {
  struct Node {
    D datum;
    List<Tree> children;
  };

 public:
  using datum_type = D;
  using children_type = List<Tree>;

  explicit Tree(D datum, List<Tree> children = {})
      : node_(make(std::move(datum), std::move(children))) {}

  Tree(const Tree&) = default;
  Tree(Tree&&) noexcept = default;
  Tree& operator=(const Tree&) = default;
  ROSETREE_HOT Tree& operator=(Tree&& other) noexcept {
    Tree old(std::move(other));
    node_.swap(old.node_);
    return *this;
  }

  ROSETREE_HOT ~Tree() {
    if (node_.unique() && !node_->children.empty()) dismantle();
  }

  const D& datum() const noexcept { return node_->datum; }
  const List<Tree>& children() const noexcept { return node_->children; }
  bool is_leaf() const noexcept { return node_->children.empty(); }

  // Same datum, new children. The receiver is untouched.
  Tree rebuild(List<Tree> new_children) const {
    return Tree(node_->datum, std::move(new_children));
  }

  // Physical identity, not structural equality.
  bool same_node(const Tree& other) const noexcept {
    return node_ == other.node_;
  }

  friend bool operator==(const Tree& a, const Tree& b)
    requires std::equality_comparable<D>
  {
    std::vector<std::pair<const Tree*, const Tree*>> pending{{&a, &b}};
    while (!pending.empty()) {
      auto [x, y] = pending.back();
      pending.pop_back();
      if (x->same_node(*y)) continue;
      if (!(x->datum() == y->datum())) return false;
      auto xi = x->children().begin();
      auto yi = y->children().begin();
      const auto end = x->children().end();
      for (; xi != end && yi != end; ++xi, ++yi) pending.emplace_back(&*xi, &*yi);
      if (xi != end || yi != end) return false;
    }
    return true;
  }

 private:
  static detail::Rc<Node> make(D datum, List<Tree> children) {
    stats::count_cell();
    return detail::Rc<Node>::make(Node{std::move(datum), std::move(children)});
  }

  // Frees a uniquely owned subtree without recursing once per level: child
  // lists are emptied into a worklist before their owners die.
  void dismantle() noexcept {
    std::vector<List<Tree>> work;
    work.push_back(std::move(node_->children));
    node_.reset();
    while (!work.empty()) {
      List<Tree> pending = std::move(work.back());
      work.pop_back();
      while (!pending.empty()) {
        Tree t = pending.steal_front();
        if (t.node_.unique() && !t.node_->children.empty()) {
          work.push_back(std::move(t.node_->children));
        }
      }
    }
  }

  // Mutated only by dismantle(), on a node nobody else can see.
  detail::Rc<Node> node_;
};

template <class D>
Tree<D> make_node(D datum, List<Tree<D>> children = {}) {
  return Tree<D>(std::move(datum), std::move(children));
}

template <class D, std::ranges::input_range R>
  requires std::convertible_to<std::ranges::range_reference_t<R>, Tree<D>>
Tree<D> make_node(D datum, R&& children) {
  return Tree<D>(std::move(datum), List<Tree<D>>::from(std::forward<R>(children)));
}

template <class D>
const D& datum(const Tree<D>& t) noexcept {
  return t.datum();
}

template <class D>
const List<Tree<D>>& children(const Tree<D>& t) noexcept {
  return t.children();
}

template <class D>
Tree<D> rebuild(List<Tree<D>> new_children, const Tree<D>& t) {
  return t.rebuild(std::move(new_children));
}

// Complete `branch`-ary tree of the given depth. Every level shares a single
// child subtree, so memory is O(depth) while the logical size is
// (branch^(depth+1) - 1) / (branch - 1). Node data are the remaining depth.
Tree<int> build_uniform(int depth, int branch);

// Logical node count of build_uniform(depth, branch), from the closed form.
std::uint64_t uniform_size(int depth, int branch);

namespace detail {

// Demand-driven preorder walk over a tree; the state is a stack of the
// not-yet-visited sibling tails along the current path.
template <class D>
class PreorderWalk {
 public:
  explicit PreorderWalk(Tree<D> root) : current_(std::move(root)) {}

  bool advance() {
    if (!started_) {
      started_ = true;
      pending_.push_back(current_->children());
      return true;
    }
    while (!pending_.empty() && pending_.back().empty()) pending_.pop_back();
    if (pending_.empty()) return false;
    auto& top = pending_.back();
    current_ = top.head();
    top.pop_front();
    pending_.push_back(current_->children());
    return true;
  }

  const Tree<D>& current() const noexcept { return *current_; }

 private:
  std::optional<Tree<D>> current_;
  std::vector<List<Tree<D>>> pending_;
  bool started_ = false;
};

}  // namespace detail

template <class D>
using PreorderRange = LazyRange<detail::PreorderWalk<D>>;

// Every subtree of t in preorder, t first.
template <class D>
PreorderRange<D> preorder_stream(const Tree<D>& t) {
  return PreorderRange<D>(detail::PreorderWalk<D>(t));
}

// Number of nodes a full traversal visits; shared subtrees count once per
// occurrence.
template <class D>
std::uint64_t size(const Tree<D>& t) {
  std::uint64_t n = 0;
  std::vector<const Tree<D>*> stack{&t};
  while (!stack.empty()) {
    const Tree<D>* node = stack.back();
    stack.pop_back();
    ++n;
    for (const auto& child : node->children()) stack.push_back(&child);
  }
  return n;
}

// Preorder data, read straight off the tree structure; the reference that the
// cursor traversals are checked against.
template <class D>
std::vector<D> labels(const Tree<D>& t) {
  std::vector<D> out;
  std::vector<typename List<Tree<D>>::const_iterator> stack;
  out.push_back(t.datum());
  stack.push_back(t.children().begin());
  const auto end = t.children().end();
  while (!stack.empty()) {
    auto& it = stack.back();
    if (it == end) {
      stack.pop_back();
      continue;
    }
    const Tree<D>& node = *it;
    ++it;
    out.push_back(node.datum());
    stack.push_back(node.children().begin());
  }
  return out;
}

}  // namespace rosetree
