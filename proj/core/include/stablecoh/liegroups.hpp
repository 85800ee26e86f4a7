#pragma once

#include <optional>
#include <vector>

#include "stablecoh/intpoly.hpp"

namespace stablecoh {

// Poincare polynomial of an exterior algebra on generators of the given degrees.
IntPoly exterior_poincare(const std::vector<int>& degrees);

// Exterior generators in degrees 1, 3, ..., 2m-1.
IntPoly gl_poincare(int m);

// Exterior generators in degrees 3, 5, ..., 2m-1; m >= 1 (m = 1 gives 1).
IntPoly pgl_poincare(int m);

// Degreewise check of the one-step recurrence
//   h^k(step n) + h^(k - (2n+1))(step n)  =  h^k(step n+1).
struct GlStepCheck {
  int n = 0;
  struct Row {
    int k;
    Coeff lhs_same;
    Coeff lhs_shifted;
    Coeff rhs;
  };
  std::vector<Row> rows;
  bool pass = false;
  std::optional<int> first_failure;
};
GlStepCheck verify_gl_step(int n, int k_max);

}  // namespace stablecoh
