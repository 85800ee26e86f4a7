#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "stablecoh/intpoly.hpp"
#include "stablecoh/schubert.hpp"

using namespace stablecoh;

namespace {
SchubertSymbol S(std::vector<int> a) { return SchubertSymbol{std::move(a)}; }
}  // namespace

TEST_CASE("symbol enumeration: frozen small cases") {
  auto syms = enumerate_symbols(1, 2);
  REQUIRE(syms.size() == 2);
  CHECK(syms[0].a == std::vector<int>{0, 0, 1});
  CHECK(syms[1].a == std::vector<int>{0, 1, 1});

  auto top = enumerate_symbols(2, 2);
  REQUIRE(top.size() == 1);
  CHECK(top[0].a == std::vector<int>{0, 1, 2});

  CHECK(enumerate_symbols(3, 2).empty());
  REQUIRE(enumerate_symbols(0, 0).size() == 1);
  CHECK(enumerate_symbols(0, 0)[0].a == std::vector<int>{0});
}

TEST_CASE("a1 = 0 filter keeps exactly the symbols that stay at zero first") {
  auto syms = enumerate_symbols(1, 2, true);
  REQUIRE(syms.size() == 1);
  CHECK(syms[0].a == std::vector<int>{0, 0, 1});
  CHECK(enumerate_symbols(2, 2, true).empty());  // (0,1,2) needs a step at 1
  for (int m = 1; m <= 8; ++m)
    for (int p = 0; p <= m; ++p) {
      // filtered count is C(m-1, p): all steps land in positions 2..m
      CHECK(Coeff(enumerate_symbols(p, m, true).size()) == binomial(m - 1, p));
    }
}

TEST_CASE("enumeration is lexicographic in the step sequence") {
  auto syms = enumerate_symbols(2, 4);
  REQUIRE(Coeff(syms.size()) == binomial(4, 2));
  for (size_t i = 1; i < syms.size(); ++i) CHECK(syms[i - 1].a < syms[i].a);
  for (auto& s : syms) {
    CHECK(s.valid());
    CHECK(s.plane_dim() == 2);
    CHECK(s.ambient_dim() == 4);
  }
}

TEST_CASE("cell dimensions") {
  CHECK(cell_dimension(S({0, 0, 1})) == 1);  // step at position 2: 2 - 1
  CHECK(cell_dimension(S({0, 1, 1})) == 0);
  CHECK(cell_dimension(S({0, 1, 2})) == 0);
  CHECK(cell_dimension(S({0, 0, 1, 1, 2})) == 3);  // steps at 2 and 4: (2-1) + (4-2)
  CHECK(S({0, 1, 1, 2}).step_positions() == std::vector<int>{1, 3});
}

TEST_CASE("grassmannian poincare: frozen values") {
  CHECK(grassmannian_poincare(1, 2) == IntPoly::from_terms({{0, 1}, {2, 1}}));
  CHECK(grassmannian_poincare(2, 4) ==
        IntPoly::from_terms({{0, 1}, {2, 1}, {4, 2}, {6, 1}, {8, 1}}));
  CHECK(grassmannian_poincare(0, 5) == IntPoly(Coeff(1)));
  CHECK(grassmannian_poincare(4, 2).is_zero());
}

TEST_CASE("grassmannian poincare equals gaussian binomial at q = t^2") {
  for (int m = 0; m <= 12; ++m)
    for (int p = 0; p <= m; ++p) {
      CAPTURE(m);
      CAPTURE(p);
      CHECK(grassmannian_poincare(p, m) == gaussian_binomial(m, p).substituted_power(2));
    }
}

TEST_CASE("betti numbers are palindromic and count C(m, p) cells") {
  for (int m = 0; m <= 12; ++m)
    for (int p = 0; p <= m; ++p) {
      IntPoly poincare = grassmannian_poincare(p, m);
      CHECK(poincare.sum_of_coeffs() == binomial(m, p));
      int top = 2 * p * (m - p);
      for (int deg = 0; deg <= top; ++deg) CHECK(poincare.coeff(deg) == poincare.coeff(top - deg));
    }
}

TEST_CASE("total betti sum is 2^m") {
  for (int m = 0; m <= 16; ++m) {
    CAPTURE(m);
    CHECK(total_betti_sum(m) == Coeff(1) << m);
  }
}

TEST_CASE("bad arguments are rejected") {
  CHECK_THROWS_AS(enumerate_symbols(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(total_betti_sum(-1), std::invalid_argument);
}
