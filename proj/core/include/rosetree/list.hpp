#pragma once

#include <cassert>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <memory>
#include <ranges>
#include <utility>
#include <vector>

#include "rosetree/counters.hpp"
#include "rosetree/detail/rc.hpp"

namespace rosetree {

// Immutable singly linked list with shared tails.
//
// O(1) head, tail and prepend. Copies share every cell, so a List is cheap to
// pass by value. Destruction of long uniquely owned spines is iterative.
template <class T>
class List {
  struct Cell {
    template <class U>
    Cell(U&& h, detail::Rc<Cell> t)
        : head(std::forward<U>(h)), tail(std::move(t)) {}

    T head;
    detail::Rc<Cell> tail;
  };

  explicit List(detail::Rc<Cell> cells) noexcept
      : cells_(std::move(cells)) {}

 public:
  using value_type = T;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = T;
    using difference_type = std::ptrdiff_t;
    using pointer = const T*;
    using reference = const T&;

    const_iterator() noexcept = default;

    reference operator*() const noexcept { return cell_->head; }
    pointer operator->() const noexcept { return &cell_->head; }

    const_iterator& operator++() noexcept {
      cell_ = cell_->tail.get();
      return *this;
    }
    const_iterator operator++(int) noexcept {
      auto old = *this;
      ++*this;
      return old;
    }

    friend bool operator==(const_iterator, const_iterator) noexcept = default;

   private:
    friend class List;
    explicit const_iterator(const Cell* cell) noexcept : cell_(cell) {}

    const Cell* cell_ = nullptr;
  };
  using iterator = const_iterator;

  List() noexcept = default;

  List(std::initializer_list<T> items) : List(from(items)) {}

  List(const List&) = default;
  List(List&&) noexcept = default;

  List& operator=(const List& other) {
    if (this != &other) {
      auto keep = other.cells_;
      release();
      cells_ = std::move(keep);
    }
    return *this;
  }

  ROSETREE_HOT List& operator=(List&& other) noexcept {
    List old(std::move(other));
    cells_.swap(old.cells_);
    return *this;
  }

  ROSETREE_HOT ~List() { release(); }

  // Builds a list holding the elements of `range` in the same order.
  template <std::ranges::input_range R>
  static List from(R&& range) {
    std::vector<T> items(std::ranges::begin(range), std::ranges::end(range));
    List out;
    for (auto it = items.rbegin(); it != items.rend(); ++it) {
      out = cons(std::move(*it), std::move(out));
    }
    return out;
  }

  ROSETREE_HOT friend List cons(T head, List tail) {
    stats::count_cell();
    return List(detail::Rc<Cell>::make(std::move(head), std::move(tail.cells_)));
  }

  bool empty() const noexcept { return cells_ == nullptr; }

  const T& head() const noexcept {
    assert(!empty());
    return cells_->head;
  }

  List tail() const noexcept {
    assert(!empty());
    return List(cells_->tail);
  }

  // Drops the head in place; cheaper than `l = l.tail()` on an rvalue path.
  ROSETREE_HOT void pop_front() noexcept {
    assert(!empty());
    auto old = std::move(cells_);
    if (old.unique()) {
      cells_ = std::move(old->tail);
    } else {
      cells_ = old->tail;
    }
  }

  // Removes the head and returns it, moving it out when no other list shares
  // the cell.
  T steal_front() {
    assert(!empty());
    auto old = std::move(cells_);
    if (old.unique()) {
      T out = std::move(old->head);
      cells_ = std::move(old->tail);
      return out;
    }
    cells_ = old->tail;
    return old->head;
  }

  // O(n).
  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto* c = cells_.get(); c != nullptr; c = c->tail.get()) ++n;
    return n;
  }

  const_iterator begin() const noexcept { return const_iterator(cells_.get()); }
  const_iterator end() const noexcept { return const_iterator(); }

  // True when both lists are the very same chain of cells (or both empty).
  bool same_cells(const List& other) const noexcept {
    return cells_ == other.cells_;
  }

  friend bool operator==(const List& a, const List& b)
    requires std::equality_comparable<T>
  {
    const Cell* x = a.cells_.get();
    const Cell* y = b.cells_.get();
    while (x != nullptr && y != nullptr) {
      if (x == y) return true;
      if (!(x->head == y->head)) return false;
      x = x->tail.get();
      y = y->tail.get();
    }
    return x == y;
  }

 private:
  ROSETREE_HOT void release() noexcept {
    if (!cells_) return;
    auto p = std::move(cells_);
    while (p.unique()) {
      auto next = std::move(p->tail);
      p = std::move(next);
    }
  }

  detail::Rc<Cell> cells_;
};

// reverse(front) ++ back. Allocates |front| cells.
template <class T>
List<T> reverse_append(const List<T>& front, List<T> back) {
  for (const T& x : front) back = cons(x, std::move(back));
  return back;
}

// front ++ back. Allocates |front| cells; `back` is shared.
template <class T>
List<T> append(const List<T>& front, List<T> back) {
  if (front.empty()) return back;
  std::vector<const T*> items;
  for (const T& x : front) items.push_back(&x);
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    back = cons(**it, std::move(back));
  }
  return back;
}

template <class T>
List<T> reverse(const List<T>& l) {
  return reverse_append(l, List<T>());
}

}  // namespace rosetree
