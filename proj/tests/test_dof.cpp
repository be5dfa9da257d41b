#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tsf/dof.hpp"

using namespace tsf;

TEST_CASE("face enumeration counts and shape") {
  CHECK(faces(3, 0).size() == 8);
  CHECK(faces(3, 1).size() == 12);
  CHECK(faces(3, 2).size() == 6);
  CHECK(faces(3, 3).size() == 1);
  CHECK(faces(2, 1).size() == 4);
  auto vs = faces(2, 0);
  CHECK(vs.front().pinned ==
        std::vector<std::pair<int, int>>{{1, -1}, {2, -1}});
  CHECK(vs.back().pinned == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}});
  for (const auto& f : faces(3, 1)) {
    CHECK(f.dim() == 1);
    CHECK(f.pinned.size() == 2);
  }
}

TEST_CASE("face integration of monomials") {
  // int_{[-1,1]^2} x1^2 dx1 dx2 = (2/3)(2) = 4/3
  PolyForm w = PolyForm::monomial(2, {2, 0}, {1, 2});
  CHECK(integrate_over_face(w) == Rational(4, 3));
  // odd powers vanish
  CHECK(integrate_over_face(PolyForm::monomial(2, {1, 2}, {1, 2})) == 0);
  // int_{[-1,1]} x^2 dx = 2/3; product rule gives 4/9 on x1^2 x2^2
  CHECK(integrate_over_face(PolyForm::monomial(2, {2, 2}, {1, 2})) ==
        Rational(4, 9));
  CHECK(integrate_over_face(PolyForm::monomial(0, {}, {})) == 1);
}

TEST_CASE("trace to a face composes axis traces") {
  // 2-form x3^2 dx1^dx2 onto the face x3 = -1 of the cube
  Face f;
  f.n = 3;
  f.pinned = {{3, -1}};
  f.free_axes = {1, 2};
  PolyForm w = PolyForm::monomial(3, {0, 0, 2}, {1, 2});
  CHECK(trace_to_face(w, f) == PolyForm::monomial(2, {0, 0}, {1, 2}));
  // vertex trace of a 0-form evaluates it
  Face v;
  v.n = 2;
  v.pinned = {{1, 1}, {2, -1}};
  PolyForm u = PolyForm::monomial(2, {1, 1}, {});
  CHECK(trace_to_face(u, v) == PolyForm::monomial(0, {}, {}, Rational(-1)));
}

TEST_CASE("functional list length matches the closed-form count") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int r = 1; r <= 4; ++r) {
        CAPTURE(n); CAPTURE(k); CAPTURE(r);
        CHECK(Integer(dof_functionals(n, k, r).size()) == dof_count(n, k, r));
      }
}

TEST_CASE("count equals dimension across the published verification range") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int r = 1; r <= 20; ++r) {
        CAPTURE(n); CAPTURE(k); CAPTURE(r);
        CHECK(dof_count(n, k, r) == dim_Sminus(n, k, r));
      }
}

TEST_CASE("low-order counts") {
  CHECK(dof_count(2, 0, 2) == 8);
  CHECK(dof_count(3, 1, 1) == 12);   // one per edge
  CHECK(dof_count(3, 2, 1) == 6);    // one per facet
  CHECK(interior_dof_count(2, 1, 2) == 2);
  CHECK(interior_dof_count(3, 0, 2) == 0);
}

TEST_CASE("applying a functional") {
  // edge integral of the constant 1-form dx1 along the bottom edge of the
  // square, weight 1: integral of dx1 over [-1,1] = 2
  Face edge;
  edge.n = 2;
  edge.pinned = {{2, -1}};
  edge.free_axes = {1};
  DofFunctional phi{edge, PolyForm::monomial(1, {0}, {}),
                    DofFunctional::Part::P};
  CHECK(apply_dof(phi, PolyForm::monomial(2, {0, 0}, {1})) == 2);
  CHECK(apply_dof(phi, PolyForm::monomial(2, {0, 0}, {2})) == 0);
}

TEST_CASE("unisolvence on small spaces") {
  for (int r = 1; r <= 3; ++r)
    for (int k = 0; k <= 2; ++k) {
      CAPTURE(k); CAPTURE(r);
      UnisolvenceReport rep = unisolvence_check(2, k, r);
      CHECK(rep.square);
      CHECK(rep.unisolvent);
      CHECK(rep.kernel_dim == 0);
    }
  UnisolvenceReport rep = unisolvence_check(3, 2, 1);
  CHECK(rep.rows == 6);
  CHECK(rep.unisolvent);
}

TEST_CASE("interior-count bookkeeping identity") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int r = 1; r <= 10; ++r) {
        CAPTURE(n); CAPTURE(k); CAPTURE(r);
        CHECK(minimality_identity(n, k, r));
      }
}
