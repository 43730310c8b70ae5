#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prism/alexander.hpp"

using namespace prism;

TEST_CASE("torsion oracle for sigma = (1,1,3,5)") {
  TorsionSequence ts = torsion_coefficients({1, 1, 3, 5});
  CHECK(ts.q == 9);
  REQUIRE(ts.t.size() == 19);
  CHECK(ts.t[0] == 4);
  CHECK(ts.t[18] == 0);
  for (const Int& x : ts.t) CHECK(x >= 0);
  CHECK(ts.stabilization_bound >= 3);
}

TEST_CASE("polynomial round trip and normalization") {
  for (const Sigma& s :
       {Sigma{1, 1, 3, 5}, Sigma{1, 1, 1, 3, 4, 10}, Sigma{1, 2, 2, 3, 3, 7},
        Sigma{1, 1, 2, 2, 3, 5}}) {
    TorsionSequence ts = torsion_coefficients(s);
    AlexanderPolynomial a = alexander_polynomial(ts);
    // value at T = 1 is b_0 + 2 sum b_i = 1 by construction; re-check
    Int at1 = a.b[0];
    for (size_t i = 1; i < a.b.size(); ++i) at1 += 2 * a.b[i];
    CHECK(at1 == 1);
    TorsionSequence back = torsion_from_polynomial(a, ts.q);
    CHECK(back.t == ts.t);
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(torsion_coefficients({1}), domain_error);
  CHECK_THROWS_AS(torsion_coefficients({1, 1, 1}), domain_error);  // norm 3
  CHECK_THROWS_AS(torsion_coefficients({2, 2}), domain_error);
}

TEST_CASE("vanishing at the top index") {
  for (const Sigma& s : {Sigma{1, 1, 3, 5}, Sigma{1, 2, 2, 3, 3, 7}}) {
    TorsionSequence ts = torsion_coefficients(s);
    CHECK(ts.t.back() == 0);
  }
}
