#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prism/changemaker.hpp"
#include "prism/ctype.hpp"
#include "prism/isometry.hpp"

using namespace prism;

TEST_CASE("identity and basis changes") {
  CTypeLattice L = build_ctype(7, 9);
  auto w = are_isometric(L.gram, L.gram);
  REQUIRE(w.has_value());
  CHECK(verify_isometry(L.gram, L.gram, *w));

  // reversed basis order
  int n = L.gram.rank();
  Mat rev(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rev[i][j] = L.gram.gram()[n - 1 - i][n - 1 - j];
  GramLattice R(rev);
  auto w2 = are_isometric(L.gram, R);
  REQUIRE(w2.has_value());
  CHECK(verify_isometry(L.gram, R, *w2));
}

TEST_CASE("sign flips are isometries") {
  GramLattice a({{2, -1}, {-1, 2}});
  GramLattice b({{2, 1}, {1, 2}});
  auto w = are_isometric(a, b);
  REQUIRE(w.has_value());
  CHECK(verify_isometry(a, b, *w));
}

TEST_CASE("definitive negatives") {
  CHECK(!are_isometric(GramLattice({{2, -1}, {-1, 2}}),
                       GramLattice({{1, 0}, {0, 3}})));  // same det, rank
  CHECK(!are_isometric(GramLattice(Mat{{2}}), GramLattice({{2, 0}, {0, 1}})));
  CHECK(!are_isometric(build_ctype(3, 7).gram, build_ctype(5, 7).gram));
}

TEST_CASE("changemaker complement matches its chain lattice") {
  // sigma = (1,1,3,5) realizes C(7,9)
  GramLattice G = complement_gram({1, 1, 3, 5});
  CTypeLattice L = build_ctype(7, 9);
  auto w = are_isometric(L.gram, G);
  REQUIRE(w.has_value());
  CHECK(verify_isometry(L.gram, G, *w));
  CHECK(!are_isometric(build_ctype(2, 9).gram, G));
}

TEST_CASE("witness verification rejects wrong matrices") {
  GramLattice a({{2, -1}, {-1, 2}});
  CHECK(!verify_isometry(a, a, Isometry{{{1, 0}, {1, 1}}}));
  CHECK(verify_isometry(a, a, Isometry{{{1, 0}, {0, 1}}}));
  CHECK(verify_isometry(a, a, Isometry{{{0, -1}, {-1, 0}}}));
}