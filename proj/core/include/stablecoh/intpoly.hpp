#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stablecoh {

using Coeff = boost::multiprecision::cpp_int;

// Sparse univariate polynomial over arbitrary-precision integers, optionally
// known only modulo t^N.  Terms are kept in strictly increasing degree, with
// no zero coefficients and no stored degree >= the truncation order.
// Arithmetic between operands takes the weaker knowledge: the result's
// truncation order is the minimum of the operands' (exact = no bound), so a
// mixed exact/truncated expression can never over-claim precision.
class IntPoly {
 public:
  using Term = std::pair<int, Coeff>;

  IntPoly() = default;  // zero, exact
  explicit IntPoly(Coeff constant);
  static IntPoly monomial(int degree, Coeff coeff = 1);
  static IntPoly from_terms(std::vector<Term> terms,
                            std::optional<int> truncation = std::nullopt);

  const std::vector<Term>& terms() const { return terms_; }
  std::optional<int> truncation_order() const { return trunc_; }
  bool exact() const { return !trunc_.has_value(); }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(int degree) const;
  int max_degree() const;       // -1 for the zero polynomial
  Coeff sum_of_coeffs() const;  // evaluation at t = 1

  IntPoly truncated(int order) const;      // reduce mod t^order
  IntPoly shifted(int offset) const;       // multiply by t^offset, offset >= 0
  IntPoly substituted_power(int k) const;  // t -> t^k, k >= 1

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  bool operator==(const IntPoly&) const = default;

  std::string str(std::string_view var = "t") const;

 private:
  std::vector<Term> terms_;   // strictly increasing degree, nonzero coeffs
  std::optional<int> trunc_;  // nullopt = exact

  void normalize();
  static std::optional<int> meet(std::optional<int> a, std::optional<int> b);
};

Coeff binomial(long long m, long long p);

// Gaussian binomial [m, p]_q in the variable q, exact; zero when p > m.
IntPoly gaussian_binomial(int m, int p);

// Inverse of a modulo t^order.  The constant coefficient must be +1 or -1
// (the only units over the integers); anything else throws.
IntPoly series_inverse(const IntPoly& a, int order);

}  // namespace stablecoh
