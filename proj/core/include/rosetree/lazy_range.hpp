#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <utility>
#include <vector>

namespace rosetree {

// A restartable, demand-driven sequence.
//
// `Walk` is a small state machine with `bool advance()` and `current()`. The
// range keeps a pristine copy of the initial state; every begin() starts a
// fresh walk from it, so a range can be iterated any number of times and
// consuming k elements costs k calls to advance().
template <class Walk>
class LazyRange {
 public:
  using value_type =
      std::remove_cvref_t<decltype(std::declval<const Walk&>().current())>;

  class iterator {
   public:
    using iterator_concept = std::input_iterator_tag;
    using value_type = LazyRange::value_type;
    using difference_type = std::ptrdiff_t;
    using reference = const value_type&;

    iterator() = default;

    reference operator*() const { return walk_->current(); }
    const value_type* operator->() const { return &walk_->current(); }

    iterator& operator++() {
      if (!walk_->advance()) walk_.reset();
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept {
      return !it.walk_.has_value();
    }

   private:
    friend class LazyRange;
    explicit iterator(Walk walk) : walk_(std::move(walk)) {}

    std::optional<Walk> walk_;
  };

  explicit LazyRange(Walk seed) : seed_(std::move(seed)) {}

  iterator begin() const {
    Walk walk = seed_;
    if (!walk.advance()) return iterator();
    return iterator(std::move(walk));
  }
  std::default_sentinel_t end() const noexcept { return {}; }

  bool empty() const { return begin() == end(); }

 private:
  Walk seed_;
};

// Materialises a lazy range; convenient in tests and small callers.
template <class Range>
auto to_vector(const Range& range) {
  std::vector<typename Range::value_type> out;
  for (const auto& x : range) out.push_back(x);
  return out;
}

}  // namespace rosetree
