#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "tsf/polyform.hpp"

using namespace tsf;

namespace {

PolyForm random_form(std::mt19937& rng, int n, int k, int max_deg,
                     bool homogeneous) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> expo(0, max_deg);
  PolyForm f(n, k);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    MultiIndex alpha(n, 0);
    int budget = homogeneous ? max_deg : expo(rng);
    for (int j = 0; j < budget; ++j) {
      std::uniform_int_distribution<int> axis(0, n - 1);
      alpha[axis(rng)] += 1;
    }
    IndexSet sigma;
    std::vector<int> pool;
    for (int j = 1; j <= n; ++j) pool.push_back(j);
    std::shuffle(pool.begin(), pool.end(), rng);
    sigma.assign(pool.begin(), pool.begin() + k);
    std::sort(sigma.begin(), sigma.end());
    int c = coeff(rng);
    if (c == 0) c = 1;
    f += PolyForm::monomial(n, alpha, sigma, Rational(c));
  }
  return f;
}

}  // namespace

TEST_CASE("monomial construction normalizes sigma") {
  PolyForm a = PolyForm::monomial(3, {1, 0, 0}, {3, 1});
  PolyForm b = PolyForm::monomial(3, {1, 0, 0}, {1, 3}, Rational(-1));
  CHECK(a == b);
  CHECK(PolyForm::monomial(3, {0, 0, 0}, {2, 2}).is_zero());
}

TEST_CASE("exterior derivative worked example") {
  // d(x1^2 dx2) = 2 x1 dx1 ^ dx2
  PolyForm w = PolyForm::monomial(2, {2, 0}, {2});
  PolyForm expect = PolyForm::monomial(2, {1, 0}, {1, 2}, Rational(2));
  CHECK(exterior_derivative(w) == expect);
}

TEST_CASE("koszul worked example") {
  // kappa(x1 x2 dx1 ^ dx2) = x1^2 x2 dx2 - x1 x2^2 dx1
  PolyForm w = PolyForm::monomial(2, {1, 1}, {1, 2});
  PolyForm expect = PolyForm::monomial(2, {2, 1}, {2}) +
                    PolyForm::monomial(2, {1, 2}, {1}, Rational(-1));
  CHECK(koszul(w) == expect);
}

TEST_CASE("trace substitutes, drops, and relabels") {
  // tr onto x2 = 1 of x2^3 dx1 + x1 dx2: second term dies, first keeps x1.
  PolyForm w = PolyForm::monomial(2, {0, 3}, {1}) +
               PolyForm::monomial(2, {1, 0}, {2});
  PolyForm t = trace(w, 2, Rational(1));
  CHECK(t == PolyForm::monomial(1, {0}, {1}));
  // relabelling: tr onto x1 = -1 of x1^2 dx2^dx3 -> dx1^dx2 on R^2
  PolyForm u = PolyForm::monomial(3, {2, 0, 0}, {2, 3});
  CHECK(trace(u, 1, Rational(-1)) == PolyForm::monomial(2, {0, 0}, {1, 2}));
}

TEST_CASE("linear degree") {
  CHECK(linear_degree(MultiIndex{1, 2, 1}, IndexSet{2}) == 2);
  CHECK(linear_degree(MultiIndex{1, 2, 1}, IndexSet{1, 2}) == 1);
  CHECK(linear_degree(MultiIndex{0, 0}, IndexSet{}) == 0);
  PolyForm f = PolyForm::monomial(2, {1, 1}, {}) +
               PolyForm::monomial(2, {2, 0}, {});
  CHECK(linear_degree(f) == 0);
  CHECK_THROWS_AS(linear_degree(PolyForm(2, 0)), std::domain_error);
}

TEST_CASE("wedge is graded anticommutative") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3;
    int ka = trial % 2 + 1, kb = trial % 3;
    PolyForm a = random_form(rng, n, ka, 3, false);
    PolyForm b = random_form(rng, n, kb, 3, false);
    PolyForm lhs = wedge(a, b);
    PolyForm rhs = wedge(b, a);
    if ((ka * kb) % 2 != 0) rhs *= Rational(-1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("d is an antiderivation") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3;
    int ka = trial % 2, kb = trial % 2 + 1;
    PolyForm a = random_form(rng, n, ka, 3, false);
    PolyForm b = random_form(rng, n, kb, 3, false);
    PolyForm lhs = exterior_derivative(wedge(a, b));
    PolyForm rhs = wedge(exterior_derivative(a), b);
    PolyForm tail = wedge(a, exterior_derivative(b));
    if (ka % 2 != 0) tail *= Rational(-1);
    rhs += tail;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("d after d and kappa after kappa vanish; homotopy formula") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 3;
    int k = trial % (n + 1);
    int r = trial % 5;
    PolyForm w = random_form(rng, n, k, r, true);
    CHECK(exterior_derivative(exterior_derivative(w)).is_zero());
    CHECK(koszul(koszul(w)).is_zero());
    PolyForm h = exterior_derivative(koszul(w)) + koszul(exterior_derivative(w));
    CHECK(h == Rational(r + k) * w);
  }
}

TEST_CASE("trace commutes with d") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 3;
    int k = trial % n;
    PolyForm w = random_form(rng, n, k, 4, false);
    int axis = trial % n + 1;
    Rational c(trial % 2 == 0 ? 1 : -1);
    CHECK(trace(exterior_derivative(w), axis, c) ==
          exterior_derivative(trace(w, axis, c)));
  }
}

TEST_CASE("homogeneous component and max degree") {
  PolyForm f = PolyForm::monomial(2, {2, 1}, {1}) +
               PolyForm::monomial(2, {0, 1}, {1});
  CHECK(max_degree(f) == 3);
  CHECK(homogeneous_component(f, 1) == PolyForm::monomial(2, {0, 1}, {1}));
  CHECK(homogeneous_component(f, 2).is_zero());
  CHECK(max_degree(PolyForm(2, 1)) == -1);
}

TEST_CASE("rendering") {
  PolyForm f = PolyForm::monomial(4, {2, 0, 1, 0}, {1, 4}, Rational(3, 2));
  CHECK(to_string(f) == "(3/2) x1^2 x3 dx1^dx4");
  CHECK(to_string(PolyForm(2, 1)) == "0");
}
