#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tsf/properties.hpp"

using namespace tsf;

TEST_CASE("nested inclusions with strict trimming") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int r = 1; r <= 3; ++r) {
        PropertyReport rep = check_inclusion(n, k, r);
        CAPTURE(n); CAPTURE(k); CAPTURE(r); CAPTURE(rep.detail);
        CHECK(rep.pass);
      }
}

TEST_CASE("d maps the trimmed space into the next one") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int r = 1; r <= 3; ++r) {
        PropertyReport rep = check_subcomplex(n, k, r);
        CAPTURE(n); CAPTURE(k); CAPTURE(r); CAPTURE(rep.detail);
        CHECK(rep.pass);
      }
}

TEST_CASE("all four complexes are exact") {
  using CF = ComplexFamily;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r)
      for (CF fam : {CF::Sminus, CF::SDescending, CF::PDescending, CF::Pminus}) {
        PropertyReport rep = check_exactness(n, r, fam);
        CAPTURE(n); CAPTURE(r); CAPTURE(rep.property); CAPTURE(rep.detail);
        CHECK(rep.pass);
      }
}

TEST_CASE("exactness rank ledger example") {
  PropertyReport rep = check_exactness(3, 1, ComplexFamily::Sminus);
  CHECK(rep.pass);
  CHECK(rep.detail == "dims 8,12,6,1");
}

TEST_CASE("facet traces land in the facet space") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int r = 1; r <= 3; ++r) {
        PropertyReport rep = check_trace(n, k, r);
        CAPTURE(n); CAPTURE(k); CAPTURE(r); CAPTURE(rep.detail);
        CHECK(rep.pass);
      }
}

TEST_CASE("direct sum decompositions and lemma identities") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int r = 1; r <= 3; ++r) {
        PropertyReport rep = check_decompositions(n, k, r);
        CAPTURE(n); CAPTURE(k); CAPTURE(r); CAPTURE(rep.detail);
        CHECK(rep.pass);
      }
}

TEST_CASE("J identities") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int r = 1; r <= 3; ++r) {
        PropertyReport rep = check_J_identities(n, k, r);
        CAPTURE(n); CAPTURE(k); CAPTURE(r); CAPTURE(rep.detail);
        CHECK(rep.pass);
      }
}

TEST_CASE("report wrappers carry matrix shape and counts") {
  PropertyReport uni = check_unisolvence(2, 1, 2);
  CHECK(uni.pass);
  CHECK(uni.detail == "10x10 rank 10");
  PropertyReport min = check_minimality(3, 2, 2);
  CHECK(min.pass);
  CHECK(min.property == "minimality");
}
