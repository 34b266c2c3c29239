#pragma once

#include <cstdint>

// Allocation accounting for the persistent structures.
//
// Every heap cell created by List, Tree, NavCursor and EditCursor bumps a
// per-thread counter. The counter is what the benchmarks report as
// `cell_ops` and what the complexity tests assert against.
namespace rosetree::stats {

inline thread_local std::uint64_t cell_counter = 0;

inline void count_cell() noexcept { ++cell_counter; }
inline std::uint64_t cells() noexcept { return cell_counter; }
inline void reset_cells() noexcept { cell_counter = 0; }

// Counts cells allocated on this thread during its lifetime.
class CellScope {
 public:
  CellScope() noexcept : start_(cell_counter) {}
  std::uint64_t elapsed() const noexcept { return cell_counter - start_; }

 private:
  std::uint64_t start_;
};

}  // namespace rosetree::stats
