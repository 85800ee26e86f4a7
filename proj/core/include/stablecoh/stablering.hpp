#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stablecoh/intpoly.hpp"

namespace stablecoh {

enum class GenKind { exterior, nilpotent_poly };

struct RingGenerator {
  std::string name;
  int degree = 0;
  GenKind kind = GenKind::exterior;
  int truncation = 0;  // nu for nilpotent_poly (x^nu = 0); unused for exterior

  bool operator==(const RingGenerator&) const = default;
};

// The six spaces whose stable cohomology rings are tabulated: the universal
// smooth family (X), its marked variant (Xp), the vertical subfamily (Xv),
// and the GIT-style quotient models (Xstar, Ustar, Mstar).
enum class Space { X, Xp, Xv, Xstar, Ustar, Mstar };
const char* space_name(Space s);
std::optional<Space> space_from_string(const std::string& name);

// Degrees k < bound are certified; hypothesis_ok records d >= 4n+1.
struct StableWindow {
  int bound = 0;
  bool hypothesis_ok = false;

  bool operator==(const StableWindow&) const = default;
};

struct GradedRingPresentation {
  Space space = Space::X;
  int d = 0;
  int n = 0;
  std::vector<RingGenerator> generators;
  StableWindow window;
};

GradedRingPresentation ring_presentation(Space space, int d, int n);

// Product of (1 + t^deg) over exterior generators and
// (1 + t^deg + ... + t^(deg*(nu-1))) over nilpotent ones;
// reduced mod t^window.bound when truncate is set.
IntPoly ring_poincare(const GradedRingPresentation& pres, bool truncate = false);

// Normal form: square-free exterior exponents, nilpotent exponents < nu.
struct Monomial {
  std::vector<int> exponents;  // aligned with presentation.generators

  bool operator==(const Monomial&) const = default;
};
Monomial one_monomial(const GradedRingPresentation& pres);
bool is_normal_form(const GradedRingPresentation& pres, const Monomial& m);
int monomial_degree(const GradedRingPresentation& pres, const Monomial& m);
std::string monomial_str(const GradedRingPresentation& pres, const Monomial& m);

// Product with Koszul signs; zero when an exterior generator repeats or a
// nilpotent power reaches nu.
struct SignedMonomial {
  int sign = 0;  // 0 encodes the zero product
  Monomial mono;

  bool is_zero() const { return sign == 0; }
};
SignedMonomial monomial_product(const GradedRingPresentation& pres, const Monomial& a,
                                const Monomial& b);

// All normal-form monomials of degree <= max_degree, lexicographic in the
// exponent vector; and the resulting counting polynomial (mod t^(max_degree+1)).
std::vector<Monomial> enumerate_basis(const GradedRingPresentation& pres, int max_degree);
IntPoly basis_poincare(const GradedRingPresentation& pres, int max_degree);

// Two-column first-quadrant check: base Q[x]/(x^(n+1)) (degree-2 classes from
// P^n), fiber the exterior algebra on u_3..u_{2n-1} and a transgressing class
// e of degree 2n-1 with d(e) = x^n.  Survivors must assemble to the Ustar
// tower; with the transgression switched off they must not.
struct SerreCheck {
  int n = 0;
  bool transgression = true;
  IntPoly einfty;  // survivor counting polynomial
  IntPoly target;  // pgl tower (n+1) times (1 + t^2 + ... + t^(2(n-1)))
  bool matches = false;
};
SerreCheck serre_einfty(int n, bool transgression = true);

// (1 + t^2 + ... + t^(2n)) / (1 + t^(2n+1)) mod t^bound.  A hypothetical
// degenerate answer would need this to be a counting series; the first
// negative coefficient (at 2n+1 when visible) refutes it.
struct ContradictionCheck {
  int n = 0;
  int bound = 0;
  IntPoly series;
  std::optional<int> first_negative;
};
ContradictionCheck degenerate_contradiction(int n, int bound);

// Rank of the twisted summand in degree k: zero for even n, the gl tower
// (n+1) coefficient for odd n.  verified records whether (d, k) sits inside
// the certified window (d >= 4n+1 and k < floor((d-1)/2)).
struct TwistedRank {
  int d = 0;
  int n = 0;
  int k = 0;
  Coeff rank;
  bool verified = false;
};
TwistedRank twisted_coefficients(int d, int n, int k);

// First Chern coefficient of the fiberwise line: d(d - n - 1), nonvanishing
// exactly when d > n + 1.
struct ChernCoefficient {
  Coeff coefficient;
  bool nonvanishing = false;
};
ChernCoefficient fiberwise_chern_coefficient(int d, int n);

}  // namespace stablecoh
