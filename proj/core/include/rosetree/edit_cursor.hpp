#pragma once

#include <memory>
#include <utility>

#include "rosetree/counters.hpp"
#include "rosetree/detail/rc.hpp"
#include "rosetree/errors.hpp"
#include "rosetree/list.hpp"
#include "rosetree/tree.hpp"

namespace rosetree {

enum class Side { left, right };

constexpr Side opposite(Side s) noexcept {
  return s == Side::left ? Side::right : Side::left;
}

// Which side of the parent position the current level was entered from.
enum class ParentLink { none, left, right };

template <class D>
class EditCursor;

template <class D>
struct Removed {
  Tree<D> tree;
  EditCursor<D> cursor;
};

// Editing cursor that sits *between* sibling trees.
//
// `left` holds the trees before the position and `right` the trees after it,
// both nearest first. `changed` records whether this level's sequence may
// differ from the one that was entered; while it is clear, up() hands back the
// stored parent cursor untouched, so pure navigation never rebuilds anything.
//
// Every operation except up(), extract() and promote_children() is O(1). up()
// on a changed level costs O(|left|), paid for by the moves and left inserts
// that made `left` that long, so a single-threaded edit session is O(1)
// amortised per operation. Branching a cursor and editing both futures may pay
// the same debt twice.
template <class D>
class EditCursor {
 public:
  using list_type = List<Tree<D>>;

  struct Flags {
    bool at_top;
    bool at_left;
    bool at_right;

    friend bool operator==(const Flags&, const Flags&) = default;
  };

  // Positioned just before `t` at the top level.
  static EditCursor start(Tree<D> t) {
    return EditCursor(list_type(), cons(std::move(t), list_type()), false,
                      ParentLink::none, nullptr);
  }

  const list_type& left() const noexcept { return left_; }
  const list_type& right() const noexcept { return right_; }
  const list_type& side(Side s) const noexcept {
    return s == Side::left ? left_ : right_;
  }
  bool changed() const noexcept { return changed_; }
  ParentLink link() const noexcept { return link_; }
  // nullptr at the top level.
  const EditCursor* parent() const noexcept { return parent_.get(); }

  bool at_top() const noexcept { return link_ == ParentLink::none; }
  bool at_left() const noexcept { return left_.empty(); }
  bool at_right() const noexcept { return right_.empty(); }
  Flags flags() const noexcept { return {at_top(), at_left(), at_right()}; }

  // Nearest tree on that side.
  const Tree<D>& peek(Side s) const {
    require(s);
    return side(s).head();
  }
  const D& peek_datum(Side s) const { return peek(s).datum(); }

  // Carries one whole tree across the position. Does not touch `changed`.
  EditCursor move(Side s) const {
    require(s);
    EditCursor out = *this;
    Tree<D> t = out.side_mut(s).head();
    out.side_mut(s).pop_front();
    out.side_mut(opposite(s)) = cons(std::move(t), std::move(out.side_mut(opposite(s))));
    return out;
  }

  EditCursor insert(Side s, Tree<D> t) const {
    EditCursor out = *this;
    out.side_mut(s) = cons(std::move(t), std::move(out.side_mut(s)));
    out.changed_ = true;
    return out;
  }

  // Removes and returns the nearest tree on that side.
  Removed<D> remove(Side s) const {
    require(s);
    EditCursor out = *this;
    Tree<D> t = out.side_mut(s).head();
    out.side_mut(s).pop_front();
    out.changed_ = true;
    return {std::move(t), std::move(out)};
  }

  // No equality check against the old tree; always marks the level changed.
  EditCursor replace(Side s, Tree<D> t) const {
    require(s);
    EditCursor out = *this;
    out.side_mut(s).pop_front();
    out.side_mut(s) = cons(std::move(t), std::move(out.side_mut(s)));
    out.changed_ = true;
    return out;
  }

  // Enters the children of the nearest tree on that side, positioned before
  // the first child.
  EditCursor down(Side s) const {
    require(s);
    list_type kids = side(s).head().children();
    stats::count_cell();
    return EditCursor(list_type(), std::move(kids), false,
                      s == Side::left ? ParentLink::left : ParentLink::right,
                      detail::Rc<const EditCursor>::make(*this));
  }

  // Replaces the nearest tree on that side by its children, in document
  // order. O(number of children).
  EditCursor promote_children(Side s) const {
    require(s);
    EditCursor out = *this;
    list_type kids = out.side_mut(s).head().children();
    out.side_mut(s).pop_front();
    if (s == Side::left) {
      out.left_ = reverse_append(kids, std::move(out.left_));
    } else {
      out.right_ = append(kids, std::move(out.right_));
    }
    out.changed_ = true;
    return out;
  }

  EditCursor up() const {
    if (at_top()) throw AtBoundary("edit cursor is at the top level");
    if (!changed_) return *parent_;
    EditCursor out = *parent_;
    list_type& near = out.side_mut(link_ == ParentLink::left ? Side::left : Side::right);
    Tree<D> rebuilt = near.head().rebuild(reverse_append(left_, right_));
    near.pop_front();
    near = cons(std::move(rebuilt), std::move(near));
    out.changed_ = true;
    return out;
  }

  // The edited tree. Climbs to the top level and requires exactly one tree
  // there, wherever the top-level position happens to be.
  Tree<D> extract() const {
    EditCursor top = *this;
    while (!top.at_top()) top = top.up();
    const std::size_t count = top.left_.size() + top.right_.size();
    if (count == 0) throw EmptyDocument("no tree at the top level");
    if (count > 1) {
      throw MultipleRoots(std::to_string(count) + " trees at the top level");
    }
    return top.left_.empty() ? top.right_.head() : top.left_.head();
  }

 private:
  EditCursor(list_type left, list_type right, bool changed, ParentLink link,
             detail::Rc<const EditCursor> parent)
      : left_(std::move(left)),
        right_(std::move(right)),
        changed_(changed),
        link_(link),
        parent_(std::move(parent)) {}

  void require(Side s) const {
    if (side(s).empty()) {
      throw AtBoundary(s == Side::left ? "nothing to the left"
                                       : "nothing to the right");
    }
  }

  list_type& side_mut(Side s) noexcept { return s == Side::left ? left_ : right_; }

  list_type left_;
  list_type right_;
  bool changed_;
  ParentLink link_;
  detail::Rc<const EditCursor> parent_;
};

template <class D>
EditCursor<D> start(Tree<D> t) {
  return EditCursor<D>::start(std::move(t));
}

}  // namespace rosetree
