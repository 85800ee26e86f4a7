#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "stablecoh/liegroups.hpp"

using namespace stablecoh;

TEST_CASE("exterior algebra poincare polynomials") {
  CHECK(exterior_poincare({}) == IntPoly(Coeff(1)));
  CHECK(exterior_poincare({1, 3}) == IntPoly::from_terms({{0, 1}, {1, 1}, {3, 1}, {4, 1}}));
  CHECK(exterior_poincare({3, 5}) == IntPoly::from_terms({{0, 1}, {3, 1}, {5, 1}, {8, 1}}));
  CHECK_THROWS_AS(exterior_poincare({0}), std::invalid_argument);
}

TEST_CASE("gl towers: frozen values") {
  CHECK(gl_poincare(0) == IntPoly(Coeff(1)));
  CHECK(gl_poincare(1) == IntPoly::from_terms({{0, 1}, {1, 1}}));
  CHECK(gl_poincare(2) == IntPoly::from_terms({{0, 1}, {1, 1}, {3, 1}, {4, 1}}));
  // coefficient profile 1,1,0,1,1,1,1,0,1,1 in degrees 0..9
  IntPoly three = gl_poincare(3);
  std::vector<Coeff> profile;
  for (int k = 0; k <= 9; ++k) profile.push_back(three.coeff(k));
  CHECK(profile == std::vector<Coeff>{1, 1, 0, 1, 1, 1, 1, 0, 1, 1});
}

TEST_CASE("pgl towers: frozen values and rejection") {
  CHECK(pgl_poincare(1) == IntPoly(Coeff(1)));
  CHECK(pgl_poincare(2) == IntPoly::from_terms({{0, 1}, {3, 1}}));
  CHECK(pgl_poincare(3) == exterior_poincare({3, 5}));
  CHECK_THROWS_AS(pgl_poincare(0), std::invalid_argument);
}

TEST_CASE("gl factors through pgl by one odd line") {
  IntPoly line = IntPoly::from_terms({{0, 1}, {1, 1}});
  for (int m = 1; m <= 16; ++m) CHECK(gl_poincare(m) == pgl_poincare(m) * line);
}

TEST_CASE("total rank of the gl tower is 2^m") {
  for (int m = 0; m <= 16; ++m) CHECK(gl_poincare(m).sum_of_coeffs() == Coeff(1) << m);
}

TEST_CASE("one-step recurrence h^k + h^(k-(2n+1)) = h^k one step up") {
  GlStepCheck small = verify_gl_step(1, 4);
  CHECK(small.pass);
  REQUIRE(small.rows.size() == 5);
  CHECK(small.rows[3].lhs_same == 0);
  CHECK(small.rows[3].lhs_shifted == 1);
  CHECK(small.rows[3].rhs == 1);
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(verify_gl_step(n, (n + 1) * (n + 1) + 2).pass);
  }
  CHECK_THROWS_AS(verify_gl_step(0, 3), std::invalid_argument);
}
