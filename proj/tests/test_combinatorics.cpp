#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tsf/combinatorics.hpp"

using namespace tsf;

TEST_CASE("binomial values and zero convention") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(7, 0) == 1);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(-2, 0) == 0);
  CHECK(binom(60, 30) == Integer("118264581564861424"));
}

TEST_CASE("multi-index enumeration order and counts") {
  auto v = enumerate_multi_indices(2, 2);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == MultiIndex{2, 0});
  CHECK(v[1] == MultiIndex{1, 1});
  CHECK(v[2] == MultiIndex{0, 2});
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= 6; ++r)
      CHECK(Integer(enumerate_multi_indices(n, r).size()) ==
            binom(n + r - 1, r));
}

TEST_CASE("zero-variable edge cases") {
  CHECK(enumerate_multi_indices(0, 0).size() == 1);
  CHECK(enumerate_multi_indices(0, 3).empty());
  CHECK(enumerate_multi_indices_up_to(0, 3).size() == 1);
}

TEST_CASE("degree-bounded enumeration is graded") {
  auto v = enumerate_multi_indices_up_to(3, 4);
  CHECK(Integer(v.size()) == binom(3 + 4, 4));
  for (size_t i = 1; i < v.size(); ++i)
    CHECK(degree(v[i - 1]) <= degree(v[i]));
}

TEST_CASE("index set enumeration") {
  auto s = enumerate_index_sets(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s.front() == IndexSet{1, 2});
  CHECK(s.back() == IndexSet{3, 4});
  CHECK(enumerate_index_sets(3, 0).size() == 1);
  CHECK(enumerate_index_sets(3, 0)[0].empty());
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(Integer(enumerate_index_sets(n, k).size()) == binom(n, k));
}
