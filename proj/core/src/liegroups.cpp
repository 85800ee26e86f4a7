#include "stablecoh/liegroups.hpp"

#include <stdexcept>

namespace stablecoh {

IntPoly exterior_poincare(const std::vector<int>& degrees) {
  IntPoly out(Coeff(1));
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("exterior_poincare: degrees must be positive");
    out = out * IntPoly::from_terms({{0, 1}, {d, 1}});
  }
  return out;
}

IntPoly gl_poincare(int m) {
  if (m < 0) throw std::invalid_argument("gl_poincare: negative argument");
  std::vector<int> degrees;
  for (int i = 1; i <= m; ++i) degrees.push_back(2 * i - 1);
  return exterior_poincare(degrees);
}

IntPoly pgl_poincare(int m) {
  if (m < 1) throw std::invalid_argument("pgl_poincare: needs m >= 1");
  std::vector<int> degrees;
  for (int i = 2; i <= m; ++i) degrees.push_back(2 * i - 1);
  return exterior_poincare(degrees);
}

GlStepCheck verify_gl_step(int n, int k_max) {
  if (n < 1 || k_max < 0) throw std::invalid_argument("verify_gl_step: bad arguments");
  GlStepCheck check;
  check.n = n;
  IntPoly lo = gl_poincare(n), hi = gl_poincare(n + 1);
  check.pass = true;
  for (int k = 0; k <= k_max; ++k) {
    GlStepCheck::Row row{k, lo.coeff(k), k >= 2 * n + 1 ? lo.coeff(k - (2 * n + 1)) : Coeff(0),
                         hi.coeff(k)};
    if (row.lhs_same + row.lhs_shifted != row.rhs) {
      check.pass = false;
      if (!check.first_failure) check.first_failure = k;
    }
    check.rows.push_back(std::move(row));
  }
  return check;
}

}  // namespace stablecoh
