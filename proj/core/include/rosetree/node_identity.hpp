#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rosetree/errors.hpp"
#include "rosetree/list.hpp"
#include "rosetree/nav_cursor.hpp"
#include "rosetree/tree.hpp"

namespace rosetree {

// Zero-based preorder index of a node within one numbered tree.
struct NodeId {
  std::uint64_t value = 0;

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

// Opaque tag minted once per number_tree() call. Ids from trees with
// different tokens are unrelated.
struct SourceToken {
  std::uint64_t value = 0;

  friend bool operator==(const SourceToken&, const SourceToken&) = default;
};

SourceToken mint_source_token() noexcept;

template <class D>
struct Numbered {
  NodeId id;
  SourceToken source;
  D value;

  friend bool operator==(const Numbered&, const Numbered&) = default;
};

template <class D>
using NumberedTree = Tree<Numbered<D>>;
template <class D>
using NumberedCursor = NavCursor<Numbered<D>>;

// Copy of t with every datum paired with its preorder index. Shared subtrees
// are expanded: the result has size(t) physical nodes.
template <class D>
NumberedTree<D> number_tree(const Tree<D>& t) {
  const SourceToken token = mint_source_token();
  struct Frame {
    const Tree<D>* source;
    typename List<Tree<D>>::const_iterator next_child;
    NodeId id;
    std::vector<NumberedTree<D>> done;
  };

  std::uint64_t next_id = 0;
  std::vector<Frame> stack;
  stack.push_back({&t, t.children().begin(), NodeId{next_id++}, {}});
  for (;;) {
    Frame& top = stack.back();
    if (top.next_child != top.source->children().end()) {
      const Tree<D>* child = &*top.next_child;
      ++top.next_child;
      stack.push_back({child, child->children().begin(), NodeId{next_id++}, {}});
      continue;
    }
    NumberedTree<D> built(Numbered<D>{top.id, token, top.source->datum()},
                          List<NumberedTree<D>>::from(top.done));
    stack.pop_back();
    if (stack.empty()) return built;
    stack.back().done.push_back(std::move(built));
  }
}

// Drops the ids again.
template <class D>
Tree<D> strip_ids(const NumberedTree<D>& t) {
  std::vector<Tree<D>> kids;
  for (const auto& c : t.children()) kids.push_back(strip_ids(c));
  return Tree<D>(t.datum().value, List<Tree<D>>::from(kids));
}

template <class D>
NodeId node_id(const NumberedCursor<D>& c) noexcept {
  return c.datum().id;
}

// O(1). Both cursors must come from the same numbered tree.
template <class D>
bool same_node(const NumberedCursor<D>& a, const NumberedCursor<D>& b) noexcept {
  return a.datum().id == b.datum().id;
}

// Document order. O(1).
template <class D>
std::strong_ordering compare_nodes(const NumberedCursor<D>& a,
                                   const NumberedCursor<D>& b) noexcept {
  return a.datum().id <=> b.datum().id;
}

// Document-ordered set of nodes from one numbered tree. An empty set is not
// yet tied to a tree; the first insertion fixes its source.
class NodeSet {
 public:
  NodeSet() = default;

  template <class D>
  NodeSet insert(const NumberedCursor<D>& c) const {
    return insert(c.datum().source, c.datum().id);
  }

  NodeSet insert(SourceToken source, NodeId id) const;

  // Any order, duplicates allowed.
  static NodeSet of(SourceToken source, std::vector<NodeId> ids);

  std::span<const NodeId> members() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(NodeId id) const noexcept;
  const std::optional<SourceToken>& source() const noexcept { return source_; }

  // O(|a| + |b|).
  friend NodeSet set_union(const NodeSet& a, const NodeSet& b);

  friend bool operator==(const NodeSet& a, const NodeSet& b) noexcept {
    return a.ids_ == b.ids_ && (a.ids_.empty() || a.source_ == b.source_);
  }

 private:
  std::optional<SourceToken> source_;
  std::vector<NodeId> ids_;
};

template <class D>
NodeSet set_insert(const NodeSet& s, const NumberedCursor<D>& c) {
  return s.insert(c);
}

inline std::span<const NodeId> set_members(const NodeSet& s) noexcept {
  return s.members();
}

// Every node of an axis, as a set.
template <class Range>
NodeSet collect_set(const Range& cursors, const NodeSet& into = {}) {
  std::optional<SourceToken> source;
  std::vector<NodeId> ids;
  for (const auto& c : cursors) {
    if (source && !(*source == c.datum().source)) {
      throw SourceMismatch("cursors come from different numbered trees");
    }
    source = c.datum().source;
    ids.push_back(c.datum().id);
  }
  if (!source) return into;
  return set_union(into, NodeSet::of(*source, std::move(ids)));
}

}  // namespace rosetree
