#include "stablecoh/stablering.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "stablecoh/liegroups.hpp"

namespace stablecoh {

const char* space_name(Space s) {
  switch (s) {
    case Space::X: return "X";
    case Space::Xp: return "Xp";
    case Space::Xv: return "Xv";
    case Space::Xstar: return "Xstar";
    case Space::Ustar: return "Ustar";
    case Space::Mstar: return "Mstar";
  }
  return "?";
}

std::optional<Space> space_from_string(const std::string& name) {
  if (name == "X") return Space::X;
  if (name == "Xp" || name == "X^p") return Space::Xp;
  if (name == "Xv" || name == "X_v") return Space::Xv;
  if (name == "Xstar") return Space::Xstar;
  if (name == "Ustar") return Space::Ustar;
  if (name == "Mstar") return Space::Mstar;
  return std::nullopt;
}

namespace {

RingGenerator exterior_gen(int degree) {
  return {"u" + std::to_string(degree), degree, GenKind::exterior, 0};
}

RingGenerator nilpotent_x(int nu) { return {"x", 2, GenKind::nilpotent_poly, nu}; }

}  // namespace

GradedRingPresentation ring_presentation(Space space, int d, int n) {
  if (d < 1 || n < 1) throw std::invalid_argument("ring_presentation: needs d >= 1 and n >= 1");
  GradedRingPresentation pres;
  pres.space = space;
  pres.d = d;
  pres.n = n;
  // the unmarked family stays certified one degree longer
  pres.window.bound = space == Space::X ? (d + 1) / 2 : (d - 1) / 2;
  pres.window.hypothesis_ok = d >= 4 * n + 1;
  auto odd_range = [&](int lo, int hi) {
    for (int deg = lo; deg <= hi; deg += 2) pres.generators.push_back(exterior_gen(deg));
  };
  switch (space) {
    case Space::X: odd_range(1, 2 * n + 1); break;
    case Space::Xv: odd_range(1, 2 * n - 1); break;
    case Space::Xp:
      odd_range(1, 2 * n - 1);
      pres.generators.push_back({"e", 2 * n - 1, GenKind::exterior, 0});
      break;
    case Space::Xstar:
      odd_range(1, 2 * n + 1);
      pres.generators.push_back(nilpotent_x(n));
      break;
    case Space::Ustar:
      odd_range(3, 2 * n + 1);
      pres.generators.push_back(nilpotent_x(n));
      break;
    case Space::Mstar: pres.generators.push_back(nilpotent_x(n)); break;
  }
  for (const RingGenerator& g : pres.generators) {
    bool odd = g.degree % 2 == 1;
    if (g.kind == GenKind::exterior ? !odd : odd)
      throw std::logic_error("ring_presentation: parity/kind mismatch");
    if (g.kind == GenKind::nilpotent_poly && g.truncation < 1)
      throw std::logic_error("ring_presentation: nilpotency order must be >= 1");
  }
  return pres;
}

IntPoly ring_poincare(const GradedRingPresentation& pres, bool truncate) {
  IntPoly out(Coeff(1));
  for (const RingGenerator& g : pres.generators) {
    if (g.kind == GenKind::exterior) {
      out = out * IntPoly::from_terms({{0, 1}, {g.degree, 1}});
    } else {
      std::vector<IntPoly::Term> geometric;
      for (int e = 0; e < g.truncation; ++e) geometric.emplace_back(g.degree * e, 1);
      out = out * IntPoly::from_terms(std::move(geometric));
    }
  }
  return truncate ? out.truncated(pres.window.bound) : out;
}

Monomial one_monomial(const GradedRingPresentation& pres) {
  return Monomial{std::vector<int>(pres.generators.size(), 0)};
}

bool is_normal_form(const GradedRingPresentation& pres, const Monomial& m) {
  if (m.exponents.size() != pres.generators.size()) return false;
  for (size_t i = 0; i < pres.generators.size(); ++i) {
    int e = m.exponents[i];
    if (e < 0) return false;
    const RingGenerator& g = pres.generators[i];
    if (g.kind == GenKind::exterior && e > 1) return false;
    if (g.kind == GenKind::nilpotent_poly && e >= g.truncation) return false;
  }
  return true;
}

int monomial_degree(const GradedRingPresentation& pres, const Monomial& m) {
  int deg = 0;
  for (size_t i = 0; i < pres.generators.size(); ++i)
    deg += pres.generators[i].degree * m.exponents[i];
  return deg;
}

std::string monomial_str(const GradedRingPresentation& pres, const Monomial& m) {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < pres.generators.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (any) os << " ";
    any = true;
    os << pres.generators[i].name;
    if (m.exponents[i] > 1) os << "^" << m.exponents[i];
  }
  return any ? os.str() : "1";
}

SignedMonomial monomial_product(const GradedRingPresentation& pres, const Monomial& a,
                                const Monomial& b) {
  if (!is_normal_form(pres, a) || !is_normal_form(pres, b))
    throw std::invalid_argument("monomial_product: operand not in normal form");
  SignedMonomial out;
  out.mono.exponents.resize(pres.generators.size());
  long long inversions = 0, seen_odd_in_a_above = 0;
  // walk generators from the top so we know how many odd factors of a each
  // odd factor of b has to cross
  for (size_t idx = pres.generators.size(); idx-- > 0;) {
    const RingGenerator& g = pres.generators[idx];
    int ea = a.exponents[idx], eb = b.exponents[idx], sum = ea + eb;
    bool odd = g.degree % 2 == 1;
    if (odd && eb) inversions += seen_odd_in_a_above;
    if (odd && ea) ++seen_odd_in_a_above;
    if (g.kind == GenKind::exterior && sum > 1) return SignedMonomial{};   // square of odd class
    if (g.kind == GenKind::nilpotent_poly && sum >= g.truncation) return SignedMonomial{};
    out.mono.exponents[idx] = sum;
  }
  out.sign = inversions % 2 == 0 ? 1 : -1;
  return out;
}

std::vector<Monomial> enumerate_basis(const GradedRingPresentation& pres, int max_degree) {
  std::vector<Monomial> out;
  Monomial current = one_monomial(pres);
  auto rec = [&](auto&& self, size_t idx, int degree_left) -> void {
    if (idx == pres.generators.size()) {
      out.push_back(current);
      return;
    }
    const RingGenerator& g = pres.generators[idx];
    int max_exp = g.kind == GenKind::exterior ? 1 : g.truncation - 1;
    for (int e = 0; e <= max_exp; ++e) {
      int cost = e * g.degree;
      if (cost > degree_left) break;
      current.exponents[idx] = e;
      self(self, idx + 1, degree_left - cost);
    }
    current.exponents[idx] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

IntPoly basis_poincare(const GradedRingPresentation& pres, int max_degree) {
  std::map<int, Coeff> counts;
  for (const Monomial& m : enumerate_basis(pres, max_degree))
    counts[monomial_degree(pres, m)] += 1;
  std::vector<IntPoly::Term> terms(counts.begin(), counts.end());
  return IntPoly::from_terms(std::move(terms), max_degree + 1);
}

SerreCheck serre_einfty(int n, bool transgression) {
  if (n < 2) throw std::domain_error("serre_einfty: supported for n >= 2 only");
  SerreCheck check;
  check.n = n;
  check.transgression = transgression;
  std::map<int, Coeff> counts;
  int fiber_gens = n - 1;  // degrees 3, 5, ..., 2n-1
  int e_degree = 2 * n - 1;
  for (unsigned mask = 0; mask < (1u << fiber_gens); ++mask) {
    int udeg = 0;
    for (int i = 0; i < fiber_gens; ++i)
      if (mask & (1u << i)) udeg += 2 * i + 3;
    for (int eps = 0; eps <= 1; ++eps)
      for (int j = 0; j <= n; ++j) {
        // d(u_S e x^j) = +- u_S x^(n+j), nonzero only for j = 0; that kills
        // the pair (u_S e, u_S x^n) and nothing else
        bool killed = transgression && ((eps == 1 && j == 0) || (eps == 0 && j == n));
        if (!killed) counts[udeg + eps * e_degree + 2 * j] += 1;
      }
  }
  std::vector<IntPoly::Term> terms(counts.begin(), counts.end());
  check.einfty = IntPoly::from_terms(std::move(terms));
  std::vector<IntPoly::Term> truncated_x;
  for (int j = 0; j < n; ++j) truncated_x.emplace_back(2 * j, 1);
  check.target = pgl_poincare(n + 1) * IntPoly::from_terms(std::move(truncated_x));
  check.matches = check.einfty == check.target;
  return check;
}

ContradictionCheck degenerate_contradiction(int n, int bound) {
  if (n < 1 || bound < 1)
    throw std::invalid_argument("degenerate_contradiction: needs n >= 1 and bound >= 1");
  ContradictionCheck check;
  check.n = n;
  check.bound = bound;
  std::vector<IntPoly::Term> numerator;
  for (int j = 0; j <= n; ++j) numerator.emplace_back(2 * j, 1);
  IntPoly denominator = IntPoly::from_terms({{0, 1}, {2 * n + 1, 1}});
  check.series = IntPoly::from_terms(std::move(numerator)) * series_inverse(denominator, bound);
  for (auto& [deg, c] : check.series.terms())
    if (c < 0) {
      check.first_negative = deg;
      break;
    }
  return check;
}

TwistedRank twisted_coefficients(int d, int n, int k) {
  if (d < 1 || n < 1 || k < 0)
    throw std::invalid_argument("twisted_coefficients: bad arguments");
  TwistedRank out;
  out.d = d;
  out.n = n;
  out.k = k;
  out.rank = n % 2 == 0 ? Coeff(0) : gl_poincare(n + 1).coeff(k);
  out.verified = d >= 4 * n + 1 && k < (d - 1) / 2;
  return out;
}

ChernCoefficient fiberwise_chern_coefficient(int d, int n) {
  if (d < 1 || n < 1)
    throw std::invalid_argument("fiberwise_chern_coefficient: bad arguments");
  ChernCoefficient out;
  out.coefficient = Coeff(d) * (d - n - 1);
  out.nonvanishing = d > n + 1;
  return out;
}

}  // namespace stablecoh
