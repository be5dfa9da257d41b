#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tsf/spaces.hpp"

using namespace tsf;

TEST_CASE("classical dimension formulas at spot values") {
  CHECK(dim_P(3, 1, 2) == 30);
  CHECK(dim_Pminus(3, 1, 1) == 6);   // lowest-order edge space
  CHECK(dim_Pminus(3, 2, 1) == 4);   // lowest-order face space
  CHECK(dim_H(2, 0, 3) == 4);
  CHECK(dim_kappaH(3, 1, 2) == 10);
  CHECK(dim_dH(3, 0, 3) == dim_kappaH(3, 1, 2));
  CHECK(dim_Qminus(3, 2, 1) == 6);
  CHECK(dim_Qminus(3, 0, 2) == 27);
}

TEST_CASE("generated spaces match closed-form dimensions") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int r = 0; r <= 4; ++r) {
        CAPTURE(n); CAPTURE(k); CAPTURE(r);
        CHECK(Integer(space_H(n, k, r).dim()) == dim_H(n, k, r));
        CHECK(Integer(space_P(n, k, r).dim()) == dim_P(n, k, r));
        if (r >= 1) {
          CHECK(Integer(space_Pminus(n, k, r).dim()) == dim_Pminus(n, k, r));
          CHECK(Integer(space_J(n, k, r).dim()) == dim_J(n, k, r));
          CHECK(Integer(space_Sminus(n, k, r).dim()) == dim_Sminus(n, k, r));
        }
        CHECK(Integer(space_S(n, k, r).dim()) == dim_S(n, k, r));
      }
}

TEST_CASE("both J constructions agree") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int r = 1; r <= 4; ++r) {
        CAPTURE(n); CAPTURE(k); CAPTURE(r);
        CHECK(space_J(n, k, r) == space_J_char(n, k, r));
      }
}

TEST_CASE("both trimmed constructions agree") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int r = 1; r <= 4; ++r) {
        CAPTURE(n); CAPTURE(k); CAPTURE(r);
        CHECK(space_Sminus(n, k, r) == space_Sminus_decomp(n, k, r));
      }
}

TEST_CASE("trimmed polynomial forms sit between full degrees") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int r = 1; r <= 3; ++r) {
        FormSpace pm = space_Pminus(n, k, r);
        CHECK(subspace(space_P(n, k, r - 1), pm));
        CHECK(subspace(pm, space_P(n, k, r)));
      }
}

TEST_CASE("linear-degree filtered spaces vanish above the cutoff") {
  CHECK(space_H_linear(3, 1, 3, 3).dim() == 0);  // ell > n-k
  CHECK(space_H_linear(3, 1, 1, 2).dim() == 0);  // ell > r
  CHECK(space_H_linear(3, 0, 3, 3).dim() == 1);  // x1 x2 x3 only
  for (const auto& f : space_H_linear(3, 1, 4, 2).basis())
    CHECK(linear_degree(f) >= 2);
}

TEST_CASE("serendipity degrees are bounded") {
  // every member of S_r has polynomial degree at most r + n - k, tightened
  // by one at k = 0
  int n = 3, r = 2;
  for (int k = 0; k <= n; ++k) {
    int cap = r + n - k - (k == 0 ? 1 : 0);
    for (const auto& f : space_S(n, k, r).basis())
      CHECK(max_degree(f) <= cap);
  }
}

TEST_CASE("piecewise closed forms match the general formula") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int r = 1; r <= 50; ++r) {
        CAPTURE(n); CAPTURE(k); CAPTURE(r);
        CHECK(appendix_b_dim(n, k, r) == dim_Sminus(n, k, r));
      }
}

TEST_CASE("generate_space and dim_formula dispatch consistently") {
  for (const char* name : {"H", "P", "Pminus", "J", "Jchar", "S", "Sminus",
                           "dJ", "kappaH"}) {
    SpaceKind kind = parse_space_kind(name);
    for (int k = 0; k <= 2; ++k) {
      CAPTURE(name); CAPTURE(k);
      CHECK(Integer(generate_space(kind, 2, k, 2).dim()) ==
            dim_formula(kind, 2, k, 2));
    }
  }
  CHECK_THROWS_AS(parse_space_kind("nope"), std::invalid_argument);
  CHECK_THROWS_AS(generate_space(parse_space_kind("Qminus"), 2, 1, 1),
                  std::invalid_argument);
  CHECK(dim_formula(parse_space_kind("Qminus"), 3, 1, 2) == 54);
}

TEST_CASE("low-order trimmed spaces match published counts") {
  CHECK(dim_Sminus(2, 1, 1) == 4);
  CHECK(dim_Sminus(3, 1, 1) == 12);
  CHECK(dim_Sminus(3, 2, 1) == 6);
  CHECK(dim_Sminus(3, 1, 2) == 36);
  CHECK(dim_Sminus(4, 2, 7) == 1910);
  CHECK(dim_S(3, 2, 2) == 39);
  CHECK(space_S(3, 3, 0).dim() == 1);
}
