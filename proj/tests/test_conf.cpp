#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "stablecoh/conf.hpp"

using namespace stablecoh;

namespace {
IntPoly closed_form(const ConfSpec& s) {
  // independent route: shifted gaussian binomial at q = t^2
  int j = s.points, n = s.ambient_dim;
  if (s.punctured) return gaussian_binomial(n, j).substituted_power(2).shifted(j * (j + 1));
  return gaussian_binomial(n + 1, j).substituted_power(2).shifted(j * (j - 1));
}
}  // namespace

TEST_CASE("frozen small configuration spaces") {
  GradedDims two_on_line = conf_bm_poincare({2, 1, false});
  REQUIRE(two_on_line.ranks.size() == 1);
  CHECK(two_on_line.rank(2) == 1);
  CHECK(two_on_line.space == "UConf_2(P^1)");
  CHECK(two_on_line.twist == "sign");

  GradedDims one_in_plane = conf_bm_poincare({1, 2, false});
  CHECK(one_in_plane.poincare() == IntPoly::from_terms({{0, 1}, {2, 1}, {4, 1}}));

  // one point in the affine line: a single class in top degree 2
  GradedDims affine = conf_bm_poincare({1, 1, true});
  REQUIRE(affine.ranks.size() == 1);
  CHECK(affine.rank(2) == 1);
  CHECK(affine.space == "UConf_1(P^1 - pt)");

  CHECK(conf_bm_poincare({2, 1, true}).ranks.empty());
}

TEST_CASE("zero points means rank 1 in degree 0") {
  for (int n = 0; n <= 4; ++n)
    for (bool punctured : {false, true}) {
      GradedDims dims = conf_bm_poincare({0, n, punctured});
      REQUIRE(dims.ranks.size() == 1);
      CHECK(dims.rank(0) == 1);
    }
}

TEST_CASE("one punctured point sits in top degree 2n") {
  for (int n = 1; n <= 6; ++n) {
    GradedDims dims = conf_bm_poincare({1, n, true});
    CHECK(dims.poincare().max_degree() == 2 * n);
    CHECK(dims.rank(2 * n) == 1);
  }
}

TEST_CASE("enumeration matches the shifted gaussian binomial closed forms") {
  for (int n = 0; n <= 6; ++n)
    for (int j = 0; j <= n + 2; ++j)
      for (bool punctured : {false, true}) {
        CAPTURE(n);
        CAPTURE(j);
        CAPTURE(punctured);
        CHECK(conf_bm_poincare({j, n, punctured}).poincare() == closed_form({j, n, punctured}));
      }
}

TEST_CASE("vanishing thresholds") {
  for (int n = 0; n <= 6; ++n)
    for (int j = 0; j <= n + 3; ++j) {
      CHECK(conf_bm_poincare({j, n, false}).ranks.empty() == (j > n + 1));
      CHECK(conf_bm_poincare({j, n, true}).ranks.empty() == (j > n));
    }
}

TEST_CASE("split check: frozen cases") {
  SplitCheck one = verify_split(1, 1);
  CHECK(one.pass);
  REQUIRE(one.rows.size() == 2);
  CHECK(one.rows[0].degree == 0);
  CHECK(one.rows[0].closed == 1);
  CHECK(one.rows[0].punctured_same == 0);
  CHECK(one.rows[0].punctured_one_less == 1);
  CHECK(one.rows[1].degree == 2);
  CHECK(one.rows[1].closed == 1);
  CHECK(one.rows[1].punctured_same == 1);
  CHECK(one.rows[1].punctured_one_less == 0);

  SplitCheck two = verify_split(2, 1);
  CHECK(two.pass);
  REQUIRE(two.rows.size() == 1);
  CHECK(two.rows[0].degree == 2);

  CHECK(verify_split(1, 0).pass);  // P^0 is a point; degenerate but consistent
  CHECK_THROWS_AS(verify_split(0, 1), std::invalid_argument);
}

TEST_CASE("split holds for every point count up to the vanishing line") {
  for (int n = 0; n <= 5; ++n)
    for (int j = 1; j <= n + 1; ++j) {
      CAPTURE(n);
      CAPTURE(j);
      CHECK(verify_split(j, n).pass);
    }
}

TEST_CASE("total dimension over all point counts is 2^(n+1)") {
  CHECK(total_conf_dimension(0) == 2);
  CHECK(total_conf_dimension(1) == 4);
  CHECK(total_conf_dimension(2) == 8);
  for (int n = 0; n <= 6; ++n) CHECK(total_conf_dimension(n) == Coeff(1) << (n + 1));
}
