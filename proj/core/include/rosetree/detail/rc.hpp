#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <new>
#include <utility>

#if __has_include(<sys/single_threaded.h>)
#include <sys/single_threaded.h>
#define ROSETREE_HAVE_SINGLE_THREADED 1
#endif

// Forces inlining of the few tiny functions every traversal step goes through.
// Without it the outcome depends on how busy the including translation unit
// is, and whichever out-of-line copy the linker keeps is used everywhere.
#if defined(__GNUC__) || defined(__clang__)
#define ROSETREE_HOT [[gnu::always_inline]] inline
#else
#define ROSETREE_HOT inline
#endif

namespace rosetree::detail {

// True while the process has never started a second thread. Counter updates
// made before that point are published by the thread creation itself.
inline bool process_single_threaded() noexcept {
#ifdef ROSETREE_HAVE_SINGLE_THREADED
  return __libc_single_threaded != 0;
#else
  return false;
#endif
}

// Per-thread free list of fixed-size blocks.
//
// A block freed on another thread joins that thread's list, which is fine:
// blocks are interchangeable. The state is trivially destructible so that it
// stays usable while other thread-locals and statics are torn down; a separate
// reaper returns the cached blocks when the thread exits.
template <std::size_t Size>
class BlockPool {
  struct Block {
    Block* next;
  };
  struct State {
    Block* head;
    std::size_t count;
    bool dead;
  };
  struct Reaper {
    ~Reaper() {
      State& s = state();
      while (s.head != nullptr) {
        Block* next = s.head->next;
        ::operator delete(s.head);
        s.head = next;
      }
      s.count = 0;
      s.dead = true;
    }
  };

  static constexpr std::size_t kMaxCached = std::size_t{1} << 16;

  static State& state() noexcept {
    thread_local State s{nullptr, 0, false};
    return s;
  }

 public:
  static void* allocate() {
    State& s = state();
    if (s.head != nullptr) {
      Block* b = s.head;
      s.head = b->next;
      --s.count;
      return b;
    }
    if (!s.dead) {
      thread_local Reaper reaper;
      (void)reaper;
    }
    return ::operator new(Size);
  }

  static void deallocate(void* p) noexcept {
    State& s = state();
    if (s.dead || s.count >= kMaxCached) {
      ::operator delete(p);
      return;
    }
    auto* b = static_cast<Block*>(p);
    b->next = s.head;
    s.head = b;
    ++s.count;
  }
};

// Intrusive, atomically reference-counted owning pointer.
//
// Lighter than std::shared_ptr (one word, one counter, no control block).
// The pointee is reachable mutably only so that a sole owner may cannibalise
// it; shared pointees are treated as immutable by every caller.
template <class T>
class Rc {
  struct Box {
    template <class... Args>
    explicit Box(Args&&... args) : value(std::forward<Args>(args)...) {}

    static void* operator new(std::size_t) { return BlockPool<sizeof(Box)>::allocate(); }
    static void operator delete(void* p) noexcept { BlockPool<sizeof(Box)>::deallocate(p); }

    std::atomic<std::uint32_t> refs{1};
    T value;
  };

  explicit Rc(Box* box) noexcept : box_(box) {}

 public:
  Rc() noexcept = default;
  Rc(std::nullptr_t) noexcept {}

  template <class... Args>
  static Rc make(Args&&... args) {
    return Rc(new Box(std::forward<Args>(args)...));
  }

  ROSETREE_HOT Rc(const Rc& other) noexcept : box_(other.box_) {
    if (box_ == nullptr) return;
    if (process_single_threaded()) {
      box_->refs.store(box_->refs.load(std::memory_order_relaxed) + 1,
                       std::memory_order_relaxed);
    } else {
      box_->refs.fetch_add(1, std::memory_order_relaxed);
    }
  }
  ROSETREE_HOT Rc(Rc&& other) noexcept : box_(std::exchange(other.box_, nullptr)) {}

  ROSETREE_HOT Rc& operator=(const Rc& other) noexcept {
    Rc(other).swap(*this);
    return *this;
  }
  ROSETREE_HOT Rc& operator=(Rc&& other) noexcept {
    Rc(std::move(other)).swap(*this);
    return *this;
  }

  ROSETREE_HOT ~Rc() { reset(); }

  ROSETREE_HOT void reset() noexcept {
    Box* b = std::exchange(box_, nullptr);
    if (b == nullptr) return;
    // A sole owner can skip the read-modify-write.
    const std::uint32_t seen = b->refs.load(std::memory_order_acquire);
    if (seen == 1) {
      destroy(b);
    } else if (process_single_threaded()) {
      b->refs.store(seen - 1, std::memory_order_relaxed);
    } else if (b->refs.fetch_sub(1, std::memory_order_acq_rel) == 1) {
      destroy(b);
    }
  }

  ROSETREE_HOT void swap(Rc& other) noexcept { std::swap(box_, other.box_); }

  T* get() const noexcept { return box_ != nullptr ? &box_->value : nullptr; }
  T& operator*() const noexcept { return box_->value; }
  T* operator->() const noexcept { return &box_->value; }
  explicit operator bool() const noexcept { return box_ != nullptr; }

  // True when this is the only reference.
  bool unique() const noexcept {
    return box_ != nullptr && box_->refs.load(std::memory_order_acquire) == 1;
  }

  friend bool operator==(const Rc& a, const Rc& b) noexcept { return a.box_ == b.box_; }
  friend bool operator==(const Rc& a, std::nullptr_t) noexcept { return a.box_ == nullptr; }

 private:
  // Kept out of the forced-inline path: destroying a box can reach ~Rc of the
  // same type again.
  static void destroy(Box* b) noexcept { delete b; }

  Box* box_ = nullptr;
};

}  // namespace rosetree::detail
