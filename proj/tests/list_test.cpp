#include "rosetree/list.hpp"

#include <gtest/gtest.h>

#include <string>
#include <thread>
#include <vector>

namespace rosetree {
namespace {

std::vector<int> items(const List<int>& l) { return {l.begin(), l.end()}; }

TEST(List, ConsPrependsAndSharesTail) {
  const List<int> tail{2, 3};
  const List<int> l = cons(1, tail);
  EXPECT_EQ(items(l), (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(l.tail().same_cells(tail));
  EXPECT_EQ(items(tail), (std::vector<int>{2, 3}));
}

TEST(List, EmptyList) {
  const List<int> l;
  EXPECT_TRUE(l.empty());
  EXPECT_EQ(l.size(), 0u);
  EXPECT_EQ(l.begin(), l.end());
}

TEST(List, PopFrontLeavesCopiesIntact) {
  List<int> a{1, 2, 3};
  const List<int> b = a;
  a.pop_front();
  EXPECT_EQ(items(a), (std::vector<int>{2, 3}));
  EXPECT_EQ(items(b), (std::vector<int>{1, 2, 3}));
}

TEST(List, ReverseAppendAndAppend) {
  const List<int> front{1, 2, 3};
  const List<int> back{9};
  EXPECT_EQ(items(reverse_append(front, back)), (std::vector<int>{3, 2, 1, 9}));
  EXPECT_EQ(items(append(front, back)), (std::vector<int>{1, 2, 3, 9}));
  EXPECT_EQ(items(reverse(front)), (std::vector<int>{3, 2, 1}));
  EXPECT_TRUE(append(List<int>{}, back).same_cells(back));
}

TEST(List, AppendAllocatesOneCellPerFrontElement) {
  const List<int> front{1, 2, 3, 4};
  const List<int> back{5, 6};
  stats::CellScope scope;
  auto joined = append(front, back);
  EXPECT_EQ(scope.elapsed(), 4u);
  auto rev = reverse_append(front, back);
  EXPECT_EQ(scope.elapsed(), 8u);
}

TEST(List, StructuralEquality) {
  EXPECT_EQ((List<int>{1, 2}), (List<int>{1, 2}));
  EXPECT_NE((List<int>{1, 2}), (List<int>{1}));
  EXPECT_NE((List<int>{1, 2}), (List<int>{2, 1}));
  EXPECT_EQ(List<int>{}, List<int>{});
}

TEST(List, LongSpineDestroysWithoutRecursion) {
  List<int> l;
  for (int i = 0; i < 2'000'000; ++i) l = cons(i, std::move(l));
  EXPECT_EQ(l.head(), 1'999'999);
  l = List<int>{};
  EXPECT_TRUE(l.empty());
}

TEST(List, SharedAcrossThreads) {
  List<std::string> shared;
  for (int i = 0; i < 1000; ++i) shared = cons(std::to_string(i), std::move(shared));
  std::vector<std::thread> workers;
  std::vector<std::size_t> sizes(4);
  for (std::size_t w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      std::size_t total = 0;
      for (int round = 0; round < 200; ++round) {
        List<std::string> mine = shared;
        for (int k = 0; k < 10; ++k) mine = cons(std::string("x"), std::move(mine));
        total += mine.size();
      }
      sizes[w] = total;
    });
  }
  for (auto& t : workers) t.join();
  for (auto s : sizes) EXPECT_EQ(s, 200u * 1010u);
  EXPECT_EQ(shared.size(), 1000u);
  EXPECT_EQ(shared.head(), "999");
}

}  // namespace
}  // namespace rosetree
