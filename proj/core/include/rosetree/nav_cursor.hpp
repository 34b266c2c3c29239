#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "rosetree/counters.hpp"
#include "rosetree/detail/rc.hpp"
#include "rosetree/errors.hpp"
#include "rosetree/lazy_range.hpp"
#include "rosetree/list.hpp"
#include "rosetree/tree.hpp"

namespace rosetree {

struct PositionFlags {
  bool at_left;
  bool at_right;
  bool at_top;
  bool at_bottom;

  friend bool operator==(const PositionFlags&, const PositionFlags&) = default;
};

namespace detail {
template <class D> class SiblingWalk;
template <class D> class DescendantWalk;
template <class D> class AncestorWalk;
}  // namespace detail

template <class D>
class NavCursor;

template <class D>
using SiblingRange = LazyRange<detail::SiblingWalk<D>>;
template <class D>
using DescendantRange = LazyRange<detail::DescendantWalk<D>>;
template <class D>
using AncestorRange = LazyRange<detail::AncestorWalk<D>>;

// Read-only cursor into an unchanging tree.
//
// A cursor is a focus subtree plus the focus's left siblings (nearest first),
// its right siblings (nearest first) and the cursor of its parent. The tree
// itself has no parent links; the context carries everything needed to move
// in any of the four directions in O(1).
//
// Invariant: when a parent is present,
//   reverse(left_context) ++ [focus] ++ right_context == parent.focus.children
// and a root cursor has both contexts empty.
//
// Cursors are values. Every move returns a new cursor and leaves the receiver
// usable. There is deliberately no operator==: comparing two cursors
// structurally means comparing the source tree with itself. Compare
// root_path() or number the tree (node_identity.hpp) instead.
template <class D>
class NavCursor {
 public:
  using tree_type = Tree<D>;
  using list_type = List<Tree<D>>;

  explicit NavCursor(Tree<D> root) : focus_(std::move(root)) {}

  static NavCursor from_tree(Tree<D> root) { return NavCursor(std::move(root)); }

  // The whole tree. Only a root cursor may be turned back into a tree.
  const Tree<D>& to_tree() const {
    if (!at_top()) throw NotAtTop("cursor is not at the root");
    return focus_;
  }

  const Tree<D>& focus() const noexcept { return focus_; }
  const D& datum() const noexcept { return focus_.datum(); }
  const list_type& left_context() const noexcept { return left_; }
  const list_type& right_context() const noexcept { return right_; }

  // nullptr at the root.
  const NavCursor* parent() const noexcept { return parent_.get(); }

  bool at_left() const noexcept { return left_.empty(); }
  bool at_right() const noexcept { return right_.empty(); }
  bool at_top() const noexcept { return parent_ == nullptr; }
  bool at_bottom() const noexcept { return focus_.is_leaf(); }

  PositionFlags flags() const noexcept {
    return {at_left(), at_right(), at_top(), at_bottom()};
  }

  NavCursor next_sibling() const& { return NavCursor(*this).next_sibling(); }
  NavCursor next_sibling() && {
    if (at_right()) throw AtBoundary("no next sibling");
    step_next();
    return std::move(*this);
  }

  NavCursor prev_sibling() const& { return NavCursor(*this).prev_sibling(); }
  NavCursor prev_sibling() && {
    if (at_left()) throw AtBoundary("no previous sibling");
    step_prev();
    return std::move(*this);
  }

  NavCursor down_first() const& { return NavCursor(*this).down_first(); }
  NavCursor down_first() && {
    if (at_bottom()) throw AtBoundary("focus has no children");
    step_down();
    return std::move(*this);
  }

  // Returns the stored parent cursor; allocates nothing.
  NavCursor up() const& {
    if (at_top()) throw AtBoundary("cursor is at the root");
    return *parent_;
  }
  NavCursor up() && {
    if (at_top()) throw AtBoundary("cursor is at the root");
    step_up();
    return std::move(*this);
  }

  // Child `index` of the focus. O(index): the skipped children are pushed onto
  // the left context one at a time.
  NavCursor down_to(std::size_t index) const {
    list_type rest = focus_.children();
    list_type left;
    for (std::size_t i = 0; i < index && !rest.empty(); ++i) {
      left = cons(rest.head(), std::move(left));
      rest.pop_front();
    }
    if (rest.empty()) {
      throw IndexOutOfRange("child index " + std::to_string(index) +
                            " out of range");
    }
    Tree<D> child = rest.head();
    rest.pop_front();
    stats::count_cell();
    return NavCursor(std::move(child), std::move(left), std::move(rest),
                     detail::Rc<NavCursor>::make(*this));
  }

  // Strictly later siblings, nearest first.
  SiblingRange<D> following_siblings() const;
  // Strictly earlier siblings, nearest first.
  SiblingRange<D> preceding_siblings() const;
  // This cursor, then every descendant in preorder.
  DescendantRange<D> descendants_or_self() const;
  // Parent first, root last.
  AncestorRange<D> ancestors() const;

  // Preorder data of the focus subtree, gathered purely by cursor moves.
  std::vector<D> collect() const {
    std::vector<D> out;
    NavCursor cur = *this;
    std::size_t depth = 0;
    for (;;) {
      out.push_back(cur.datum());
      if (!cur.at_bottom()) {
        cur.step_down();
        ++depth;
        continue;
      }
      while (depth > 0 && cur.at_right()) {
        cur.step_up();
        --depth;
      }
      if (depth == 0) return out;
      cur.step_next();
    }
  }

  // Child indexes from the root down to the focus.
  std::vector<std::size_t> root_path() const {
    std::vector<std::size_t> path;
    for (const NavCursor* c = this; c->parent_ != nullptr; c = c->parent_.get()) {
      path.push_back(c->left_.size());
    }
    return {path.rbegin(), path.rend()};
  }

  // Number of ancestors.
  std::size_t depth() const noexcept {
    std::size_t d = 0;
    for (const NavCursor* c = parent_.get(); c != nullptr; c = c->parent_.get()) ++d;
    return d;
  }

 private:
  template <class> friend class detail::SiblingWalk;
  template <class> friend class detail::DescendantWalk;

  // In-place moves for cursors nobody else holds. Preconditions are the
  // caller's job.
  void step_next() {
    Tree<D> next = right_.steal_front();
    left_ = cons(std::move(focus_), std::move(left_));
    focus_ = std::move(next);
  }

  void step_prev() {
    Tree<D> prev = left_.steal_front();
    right_ = cons(std::move(focus_), std::move(right_));
    focus_ = std::move(prev);
  }

  void step_down() {
    list_type kids = focus_.children();
    Tree<D> first = kids.steal_front();
    stats::count_cell();
    auto frame = detail::Rc<NavCursor>::make(std::move(*this));
    focus_ = std::move(first);
    right_ = std::move(kids);
    parent_ = std::move(frame);
  }

  // Nobody else can observe a frame we hold the only reference to, so its
  // contents can be taken rather than copied.
  void step_up() {
    auto frame = std::move(parent_);
    if (frame.unique()) {
      *this = std::move(*frame);
    } else {
      *this = *frame;
    }
  }

  NavCursor(Tree<D> focus, list_type left, list_type right,
            detail::Rc<NavCursor> parent)
      : focus_(std::move(focus)),
        left_(std::move(left)),
        right_(std::move(right)),
        parent_(std::move(parent)) {}

  Tree<D> focus_;
  list_type left_;
  list_type right_;
  // Never mutated while shared; see up() &&.
  detail::Rc<NavCursor> parent_;
};

template <class D>
NavCursor<D> from_tree(Tree<D> t) {
  return NavCursor<D>(std::move(t));
}

namespace detail {

template <class D>
class SiblingWalk {
 public:
  SiblingWalk(NavCursor<D> start, bool forward)
      : current_(std::move(start)), forward_(forward) {}

  bool advance() {
    if (forward_) {
      if (current_.at_right()) return false;
      current_.step_next();
    } else {
      if (current_.at_left()) return false;
      current_.step_prev();
    }
    return true;
  }

  const NavCursor<D>& current() const noexcept { return current_; }

 private:
  NavCursor<D> current_;
  bool forward_;
};

template <class D>
class DescendantWalk {
 public:
  explicit DescendantWalk(NavCursor<D> start) : current_(std::move(start)) {}

  bool advance() {
    if (!started_) {
      started_ = true;
      return true;
    }
    if (!current_.at_bottom()) {
      current_.step_down();
      ++depth_;
      return true;
    }
    while (depth_ > 0 && current_.at_right()) {
      current_.step_up();
      --depth_;
    }
    if (depth_ == 0) return false;
    current_.step_next();
    return true;
  }

  const NavCursor<D>& current() const noexcept { return current_; }

 private:
  NavCursor<D> current_;
  std::size_t depth_ = 0;
  bool started_ = false;
};

template <class D>
class AncestorWalk {
 public:
  explicit AncestorWalk(NavCursor<D> start) : current_(std::move(start)) {}

  bool advance() {
    if (current_.at_top()) return false;
    current_ = current_.up();
    return true;
  }

  const NavCursor<D>& current() const noexcept { return current_; }

 private:
  NavCursor<D> current_;
};

}  // namespace detail

template <class D>
SiblingRange<D> NavCursor<D>::following_siblings() const {
  return SiblingRange<D>(detail::SiblingWalk<D>(*this, true));
}

template <class D>
SiblingRange<D> NavCursor<D>::preceding_siblings() const {
  return SiblingRange<D>(detail::SiblingWalk<D>(*this, false));
}

template <class D>
DescendantRange<D> NavCursor<D>::descendants_or_self() const {
  return DescendantRange<D>(detail::DescendantWalk<D>(*this));
}

template <class D>
AncestorRange<D> NavCursor<D>::ancestors() const {
  return AncestorRange<D>(detail::AncestorWalk<D>(*this));
}

}  // namespace rosetree
