#include <doctest.h>

#include "polyforge/formulas.hpp"

using namespace polyforge;
using namespace polyforge::formulas;

TEST_CASE("binomial zero-extension and small values") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(4, 3) == 4);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(-2, 0) == 0);
  CHECK(binomial(64, 32) == 1832624140942590534LL);
  CHECK_THROWS_AS(binomial(70, 35), Error);
}

TEST_CASE("binomial Pascal identity") {
  for (int n = 1; n <= 64; ++n)
    for (int c = -4; c <= 64; ++c)
      CHECK(binomial(n, c) == binomial(n - 1, c - 1) + binomial(n - 1, c));
  // Negative n is identically zero, so both sides vanish.
  for (int n = -64; n < 0; ++n)
    for (int c = -4; c <= 64; ++c)
      CHECK(binomial(n, c) == binomial(n - 1, c - 1) + binomial(n - 1, c));
}

TEST_CASE("phi values") {
  CHECK(phi(1, 4, 4) == 16);
  for (int d = 2; d <= 10; ++d) {
    for (int k = 0; k <= d - 1; ++k)
      CHECK(phi(k, d, 1) == binomial(d + 1, k + 1));
    for (int s = 1; s <= d; ++s) CHECK(phi(0, d, s) == d + s);
  }
  CHECK_THROWS_AS(phi(1, 4, 5), Error);
  CHECK_THROWS_AS(phi(4, 4, 2), Error);
}

TEST_CASE("phi monotone in s") {
  for (int d = 2; d <= 10; ++d)
    for (int b = 1; b <= d; ++b)
      for (int a = b + 1; a <= d; ++a)
        for (int k = 0; k <= d - 1; ++k) {
          std::int64_t diff = phi(k, d, a) - phi(k, d, b);
          CHECK(diff == binomial(d + 1 - b, k + 1) - binomial(d + 1 - a, k + 1));
          CHECK(diff >= 0);
        }
}

TEST_CASE("zeta values") {
  CHECK(zeta(1, 4, 4) == 18);
  CHECK(zeta(2, 4, 4) == 17);
  for (int d = 2; d <= 10; ++d)
    for (int s = 2; s <= d; ++s) CHECK(zeta(0, d, s) == phi(0, d, s));
  CHECK_THROWS_AS(zeta(1, 4, 1), Error);
}

TEST_CASE("d+2 facet closed form") {
  CHECK(fk_dplus2_facets(1, 4, 4, 2) == 18);
  for (int d = 2; d <= 9; ++d)
    for (int a = 2; a <= d; ++a)
      for (int m = 1; m <= a / 2; ++m)
        CHECK(fk_dplus2_facets(0, d, a, m) == d + 1 + m * (a - m));
}

TEST_CASE("d+2 vertex closed form") {
  for (int d = 2; d <= 9; ++d)
    for (int a = 2; a <= d; ++a)
      for (int m = 1; m <= a / 2; ++m) {
        CHECK(fk_dplus2_vertices(d - 1, d, a, m) == d + 1 + m * (a - m));
        CHECK(fk_dplus2_vertices(0, d, a, m) == d + 2);
      }
}

TEST_CASE("pentasm closed form") {
  CHECK(fk_pentasm(2, 4) == 17);
  CHECK(fk_pentasm(1, 2) == 5);
  for (int d = 2; d <= 12; ++d) CHECK(fk_pentasm(0, d) == 2 * d + 1);
}

TEST_CASE("pentasm pyramid sum equals zeta") {
  for (int d = 2; d <= 12; ++d)
    for (int s = 2; s <= d; ++s)
      for (int k = 0; k <= d - 1; ++k)
        CHECK(fk_pentasm_pyr(k, d, s) == zeta(k, d, s));
}

TEST_CASE("Z closed form") {
  CHECK(fk_z(0, 3) == 5);
  CHECK(fk_z(1, 4) == 17);
  CHECK(fk_z(0, 2) == 3);
  CHECK(fk_z(1, 2) == 3);
  for (int d = 3; d <= 12; ++d) {
    CHECK(fk_z(1, d) == static_cast<std::int64_t>(d) * d + d - 3);
    for (int k = 1; k <= std::min(2, d - 1); ++k)
      CHECK(fk_z(k, d) == zeta(k, d, d - 1) + 1);
    for (int k = 3; k <= d - 1; ++k) CHECK(fk_z(k, d) == zeta(k, d, d - 1));
  }
}

TEST_CASE("wedge facet count identity") {
  FVector square{2, {4, 4}};
  FVector edge{1, {2}};
  CHECK(fk_wedge_facet(0, square, edge) == 6);
  CHECK(fk_wedge_facet(1, square, edge) == 9);
  CHECK(fk_wedge_facet(2, square, edge) == 5);
  CHECK(fk_wedge_facet(3, square, edge) == 1);
  CHECK_THROWS_AS(fk_wedge_facet(4, square, edge), Error);
  CHECK_THROWS_AS(fk_wedge_facet(-1, square, edge), Error);
  // Vertex splitting: k = 0 reduces to 2 f_0(P) - f_0(F).
  FVector pyr{3, {5, 8, 5}};
  FVector base{2, {4, 4}};
  CHECK(fk_wedge_facet(0, pyr, base) == 2 * 5 - 4);
}

TEST_CASE("refined s=2 bound") {
  CHECK(refined_s2_bound(2, 5, 3) == 29);
  for (int d = 3; d <= 12; ++d)
    for (int ell = 3; ell <= d; ++ell)
      for (int k = 1; k <= d - 2; ++k) {
        if (k >= ell - 1)
          CHECK(refined_s2_bound(k, d, ell) ==
                fk_dplus2_vertices(k, d, ell, 1));
        else
          CHECK(refined_s2_bound(k, d, ell) ==
                phi(k, d, 2) + binomial(d - 1, k - 1));
      }
}

TEST_CASE("monotonicity predicates") {
  // Equality below the threshold, strictness at or above it.
  Lemma23Result below = lemma23_predicates(0, 5, 4, 1);
  REQUIRE(below.applicable_m);
  CHECK(below.leq_m);
  CHECK_FALSE(below.strict_m);
  Lemma23Result strict = lemma23_predicates(3, 5, 4, 1);
  REQUIRE(strict.applicable_a);
  CHECK(strict.strict_a);

  for (int d = 2; d <= 10; ++d)
    for (int a = 2; a <= d; ++a)
      for (int m = 1; m <= a / 2; ++m)
        for (int k = 0; k <= d - 1; ++k)
          CHECK(lemma23_predicates(k, d, a, m).consistent());
}
