#include "stablecoh/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "stablecoh/conf.hpp"
#include "stablecoh/intpoly.hpp"
#include "stablecoh/liegroups.hpp"
#include "stablecoh/schubert.hpp"
#include "stablecoh/stablering.hpp"
#include "stablecoh/vassiliev.hpp"

namespace stablecoh {
namespace {

using Task = std::function<std::optional<std::string>()>;
using Witness = std::optional<std::string>;

struct CheckSuite {
  std::string name;
  ParamList params;
  std::vector<Task> tasks;
  std::optional<std::string> unsupported;  // reason; suite has no tasks then
};

Coeff two_pow(int k) { return Coeff(1) << k; }

// --- q-polynomial layer -----------------------------------------------------

Witness check_qpoly_ring_laws() {
  // fixed operands with coefficients far beyond 64 bits
  Coeff big = Coeff("123456789012345678901234567890");
  IntPoly a = IntPoly::from_terms({{0, 1}, {3, -7}, {12, big}});
  IntPoly b = IntPoly::from_terms({{1, 5}, {3, 7}, {9, -big}});
  IntPoly c = IntPoly::from_terms({{0, -1}, {2, 2}});
  if ((a + b) * c != a * c + b * c) return "distributivity failed";
  if (a * b != b * a) return "commutativity failed";
  if (!(a - a).is_zero()) return "a - a not zero";
  if ((a * b) * c != a * (b * c)) return "associativity failed";
  if (a.substituted_power(2).max_degree() != 24) return "substituted_power degree wrong";
  if (a.shifted(5).coeff(17) != big) return "shifted moved coefficients wrong";
  IntPoly t8 = a.truncated(8);
  if (t8.truncation_order() != std::optional<int>(8) || t8.coeff(12) != 0)
    return "truncated kept too much";
  if ((t8 * b).truncation_order() != std::optional<int>(8))
    return "mixed product over-claimed precision";
  return std::nullopt;
}

Witness check_gaussian_identities(int m) {
  for (int p = 0; p <= m; ++p) {
    IntPoly g = gaussian_binomial(m, p);
    std::ostringstream at;
    at << "m=" << m << " p=" << p;
    if (g != gaussian_binomial(m, m - p)) return at.str() + ": symmetry failed";
    if (g.sum_of_coeffs() != binomial(m, p)) return at.str() + ": q=1 value wrong";
    int expected_top = p == 0 || p == m ? 0 : p * (m - p);
    if (g.max_degree() != expected_top) return at.str() + ": degree wrong";
    // the Pascal step the implementation does NOT use
    if (p >= 1 && p <= m - 1) {
      IntPoly rhs = gaussian_binomial(m - 1, p - 1).shifted(m - p) + gaussian_binomial(m - 1, p);
      if (g != rhs) return at.str() + ": q-Pascal recurrence failed";
    }
    for (const auto& [deg, coeff] : g.terms())
      if (coeff <= 0) return at.str() + ": nonpositive coefficient";
  }
  return std::nullopt;
}

Witness check_series_inverses() {
  const int order = 40;
  std::vector<IntPoly> units = {
      gl_poincare(5),
      grassmannian_poincare(3, 7),
      IntPoly::from_terms({{0, 1}, {1, -1}, {3, 1}}),
      IntPoly::from_terms({{0, -1}, {2, 3}, {7, -5}}),
  };
  for (size_t i = 0; i < units.size(); ++i) {
    IntPoly inv = series_inverse(units[i], order);
    if ((units[i] * inv).truncated(order) != IntPoly(Coeff(1)).truncated(order)) {
      std::ostringstream os;
      os << "unit #" << i << ": a * inverse(a) != 1 mod t^" << order;
      return os.str();
    }
  }
  return std::nullopt;
}

// --- Schubert layer ---------------------------------------------------------

Witness check_schubert_oracle(int m) {
  for (int p = 0; p <= m; ++p)
    if (grassmannian_poincare(p, m) != gaussian_binomial(m, p).substituted_power(2)) {
      std::ostringstream os;
      os << "m=" << m << " p=" << p << ": cell count disagrees with gaussian binomial";
      return os.str();
    }
  return std::nullopt;
}

Witness check_schubert_invariants(int m) {
  for (int p = 0; p <= m; ++p) {
    std::ostringstream at;
    at << "m=" << m << " p=" << p;
    auto symbols = enumerate_symbols(p, m);
    if (Coeff(symbols.size()) != binomial(m, p)) return at.str() + ": symbol count wrong";
    if (m >= 1) {
      auto restricted = enumerate_symbols(p, m, true);
      if (Coeff(restricted.size()) != binomial(m - 1, p))
        return at.str() + ": restricted symbol count wrong";
      for (const auto& s : restricted)
        if (s.a.size() < 2 || s.a[1] != 0) return at.str() + ": restricted symbol moves early";
    }
    int top = p * (m - p);
    for (size_t i = 0; i < symbols.size(); ++i) {
      if (!symbols[i].valid()) return at.str() + ": invalid symbol emitted";
      if (i > 0 && !(symbols[i - 1].a < symbols[i].a))
        return at.str() + ": enumeration not in lexicographic order";
      int dim = cell_dimension(symbols[i]);
      if (dim < 0 || dim > top) return at.str() + ": cell dimension out of range";
    }
    IntPoly poincare = grassmannian_poincare(p, m);
    for (int k = 0; k <= top; ++k)
      if (poincare.coeff(2 * k) != poincare.coeff(2 * (top - k)))
        return at.str() + ": Betti numbers not palindromic";
  }
  return std::nullopt;
}

// --- configuration spaces ---------------------------------------------------

Witness check_conf_closed_forms(int n) {
  std::ostringstream at;
  at << "n=" << n;
  for (bool punctured : {false, true}) {
    GradedDims empty_case = conf_bm_poincare({0, n, punctured});
    if (empty_case.ranks != std::map<int, Coeff>{{0, 1}})
      return at.str() + ": empty configuration space should contribute one unit";
  }
  for (int j = 1; j <= n + 1; ++j) {
    IntPoly closed = conf_bm_poincare({j, n, false}).poincare();
    IntPoly expected = gaussian_binomial(n + 1, j).substituted_power(2).shifted(j * (j - 1));
    if (closed != expected) {
      std::ostringstream os;
      os << at.str() << " j=" << j << ": closed ranks differ from shifted gaussian binomial";
      return os.str();
    }
  }
  for (int j = 1; j <= n; ++j) {
    IntPoly punctured = conf_bm_poincare({j, n, true}).poincare();
    IntPoly expected = gaussian_binomial(n, j).substituted_power(2).shifted(j * (j + 1));
    if (punctured != expected) {
      std::ostringstream os;
      os << at.str() << " j=" << j << ": punctured ranks differ from shifted gaussian binomial";
      return os.str();
    }
  }
  for (int j = n + 2; j <= n + 4; ++j)
    if (!conf_bm_poincare({j, n, false}).ranks.empty()) {
      std::ostringstream os;
      os << at.str() << " j=" << j << ": closed ranks should vanish";
      return os.str();
    }
  for (int j = n + 1; j <= n + 3; ++j)
    if (!conf_bm_poincare({j, n, true}).ranks.empty()) {
      std::ostringstream os;
      os << at.str() << " j=" << j << ": punctured ranks should vanish";
      return os.str();
    }
  return std::nullopt;
}

Witness check_split(int n) {
  for (int j = 1; j <= n + 2; ++j) {
    SplitCheck split = verify_split(j, n);
    if (!split.pass) {
      std::ostringstream os;
      os << "n=" << n << " j=" << j << ": split fails in degree "
         << (split.first_failure ? *split.first_failure : -1);
      return os.str();
    }
  }
  return std::nullopt;
}

// --- degeneration diagonals and the exterior towers --------------------------

Witness check_degeneration(int n, PageVariant variant) {
  int k_max = (2 * n + 1) * (n + 1) + 2;
  for (int k = 0; k <= k_max; ++k) {
    DiagonalSum diag = diagonal_sum(n, k, variant);
    if (!diag.equal) {
      std::ostringstream os;
      os << "n=" << n << " k=" << k << ": column sum " << diag.lhs << " != tower coefficient "
         << diag.rhs;
      return os.str();
    }
  }
  return std::nullopt;
}

Witness check_gl_step(int n) {
  GlStepCheck step = verify_gl_step(n, (n + 2) * (n + 2));
  if (!step.pass) {
    std::ostringstream os;
    os << "n=" << n << ": recurrence fails at k="
       << (step.first_failure ? *step.first_failure : -1);
    return os.str();
  }
  return std::nullopt;
}

Witness check_gl_pgl_factorization(int m) {
  std::ostringstream at;
  at << "m=" << m;
  IntPoly gl = gl_poincare(m);
  if (gl != pgl_poincare(m) * IntPoly::from_terms({{0, 1}, {1, 1}}))
    return at.str() + ": gl tower is not pgl tower times (1 + t)";
  if (gl.sum_of_coeffs() != two_pow(m)) return at.str() + ": total rank is not 2^m";
  return std::nullopt;
}

// --- first-page bookkeeping ---------------------------------------------------

Witness check_e1_page(int d, int nmax) {
  if (d == 3) {
    // below the working range the page constructor must refuse
    for (int bad_d : {1, 2}) {
      bool threw = false;
      try {
        build_e1_page(bad_d, 1, PageVariant::full);
      } catch (const std::domain_error&) {
        threw = true;
      }
      if (!threw) {
        std::ostringstream os;
        os << "d=" << bad_d << ": page constructor accepted an unusable degree";
        return os.str();
      }
    }
  }
  for (int n = 1; n <= nmax; ++n) {
    for (PageVariant variant : {PageVariant::full, PageVariant::marked}) {
      std::ostringstream at;
      at << "d=" << d << " n=" << n << " variant=" << variant_name(variant);
      SpectralSequencePage page = build_e1_page(d, n, variant);
      ParamDims dims = param_dims(d, n);
      long long e = variant == PageVariant::full ? dims.dim_V : dims.e_d;
      if (page.e != e) return at.str() + ": wrong Euler bookkeeping constant";
      if (page.truncation_column != dims.N) return at.str() + ": wrong truncation column";
      if (page.stability_degree != 2 * e - dims.N) return at.str() + ": wrong stability degree";
      if (page.stability_degree != stability_cutoff(d, n, variant))
        return at.str() + ": stability degree disagrees with the cutoff helper";
      size_t expected_entries = 0;
      int j_cap = std::min(dims.N, variant == PageVariant::full ? n + 1 : n);
      for (int j = 1; j <= j_cap; ++j)
        expected_entries +=
            conf_bm_poincare({j, n, variant == PageVariant::marked}).ranks.size();
      if (page.entries.size() != expected_entries)
        return at.str() + ": page is missing entries or invented some";
      for (size_t i = 0; i < page.entries.size(); ++i) {
        const PageEntry& entry = page.entries[i];
        std::ostringstream where;
        where << at.str() << " entry#" << i;
        if (i > 0) {
          const PageEntry& prev = page.entries[i - 1];
          if (std::pair(prev.column, prev.total_degree) >=
              std::pair(entry.column, entry.total_degree))
            return where.str() + ": entries out of order";
        }
        if (entry.column < 1 || entry.column > page.truncation_column)
          return where.str() + ": column outside the usable range";
        ConfSpec expected_conf{entry.column, n, variant == PageVariant::marked};
        if (entry.conf != expected_conf) return where.str() + ": wrong configuration space";
        GradedDims dims_here = conf_bm_poincare(entry.conf);
        if (entry.rank != dims_here.rank(entry.conf_degree) || entry.rank <= 0)
          return where.str() + ": rank does not match the configuration space";
        long long j = entry.column, m = entry.conf_degree;
        if (entry.total_degree != 2 * (e - (n + 1) * j) + (j - 1) + m)
          return where.str() + ": total degree formula violated";
        if (entry.dual_k != 2 * e - 1 - entry.total_degree)
          return where.str() + ": dual degree formula violated";
        if (entry.dual_k < 0) return where.str() + ": negative dual degree";
        if ((2 * n + 1) * j - entry.dual_k != m)
          return where.str() + ": dual degree misses the diagonal";
        if (entry.dual_k <= INT_MAX &&
            !diagonal_sum(n, static_cast<int>(entry.dual_k), variant).equal)
          return where.str() + ": diagonal identity fails at the dual degree";
      }
    }
  }
  return std::nullopt;
}

// --- stable ring layer --------------------------------------------------------

Witness check_serre(int n) {
  std::ostringstream at;
  at << "n=" << n;
  SerreCheck with = serre_einfty(n, true);
  if (!with.matches) return at.str() + ": survivors do not assemble to the quotient tower";
  IntPoly tower = ring_poincare(ring_presentation(Space::Ustar, 4 * n + 1, n));
  if (with.target != tower) return at.str() + ": target differs from the quotient tower";
  if (with.einfty != with.target) return at.str() + ": matches flag is inconsistent";
  SerreCheck without = serre_einfty(n, false);
  if (without.matches) return at.str() + ": switched-off transgression still matches";
  if (without.einfty.sum_of_coeffs() <= with.einfty.sum_of_coeffs())
    return at.str() + ": transgression did not remove anything";
  return std::nullopt;
}

Witness check_contradiction(int n) {
  std::ostringstream at;
  at << "n=" << n;
  for (int bound : {1, 2 * n + 1, 2 * n + 2, 2 * n + 6}) {
    ContradictionCheck c = degenerate_contradiction(n, bound);
    bool visible = bound > 2 * n + 1;
    if (c.first_negative.has_value() != visible)
      return at.str() + ": first negative coefficient mis-detected";
    if (visible && *c.first_negative != 2 * n + 1)
      return at.str() + ": first negative coefficient at the wrong degree";
    for (const auto& [deg, coeff] : c.series.terms()) {
      if (deg < 2 * n + 1) {
        bool good = deg % 2 == 0 && deg <= 2 * n && coeff == 1;
        if (!good) return at.str() + ": series prefix is not the projective-space series";
      }
    }
    if (visible && c.series.coeff(2 * n + 1) != -1)
      return at.str() + ": coefficient at degree 2n+1 should be -1";
  }
  return std::nullopt;
}

Witness check_ring(int n, int dmax) {
  std::ostringstream at;
  at << "n=" << n;
  std::vector<int> ds = {4 * n + 1, 4 * n + 3};
  if (dmax > 4 * n + 3) ds.push_back(dmax);
  IntPoly one_plus_t = IntPoly::from_terms({{0, 1}, {1, 1}});
  for (int d : ds) {
    std::ostringstream dat;
    dat << at.str() << " d=" << d;
    auto pres = [&](Space s) { return ring_presentation(s, d, n); };
    if (ring_poincare(pres(Space::X)) != gl_poincare(n + 1))
      return dat.str() + ": X tower wrong";
    if (ring_poincare(pres(Space::Xv)) != gl_poincare(n))
      return dat.str() + ": vertical tower wrong";
    if (ring_poincare(pres(Space::Xp)) !=
        ring_poincare(pres(Space::Xv)) * IntPoly::from_terms({{0, 1}, {2 * n - 1, 1}}))
      return dat.str() + ": marked tower is not the vertical tower with one more class";
    if (ring_poincare(pres(Space::Xstar)) != ring_poincare(pres(Space::Ustar)) * one_plus_t)
      return dat.str() + ": quotient towers do not differ by (1 + t)";
    if (ring_poincare(pres(Space::Xstar)) !=
        gl_poincare(n + 1) * ring_poincare(pres(Space::Mstar)))
      return dat.str() + ": quotient tower does not factor through the moduli part";
    for (Space s : {Space::X, Space::Xp, Space::Xv, Space::Xstar, Space::Ustar, Space::Mstar}) {
      GradedRingPresentation p = pres(s);
      int expected_bound = s == Space::X ? (d + 1) / 2 : (d - 1) / 2;
      if (p.window.bound != expected_bound)
        return dat.str() + ": wrong certified window for " + space_name(s);
      if (p.window.hypothesis_ok != (d >= 4 * n + 1))
        return dat.str() + ": wrong hypothesis flag for " + space_name(s);
      if (basis_poincare(p, 12) != ring_poincare(p).truncated(13))
        return dat.str() + ": monomial basis disagrees with the counting product for " +
               space_name(s);
      if (ring_poincare(p, true) != ring_poincare(p).truncated(p.window.bound))
        return dat.str() + ": truncated tower not reduced mod the window for " + space_name(s);
    }
  }
  // multiplication spot checks on the largest quotient model
  GradedRingPresentation pres_x = ring_presentation(Space::Xstar, 4 * n + 1, n);
  std::vector<Monomial> basis = enumerate_basis(pres_x, 2 * n + 3);
  std::mt19937 rng(97 + static_cast<unsigned>(n));
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const Monomial &a = basis[pick(rng)], &b = basis[pick(rng)], &c = basis[pick(rng)];
    SignedMonomial ab = monomial_product(pres_x, a, b);
    SignedMonomial ba = monomial_product(pres_x, b, a);
    if (ab.is_zero() != ba.is_zero())
      return at.str() + ": product vanishing is not symmetric";
    if (!ab.is_zero()) {
      int da = monomial_degree(pres_x, a), db = monomial_degree(pres_x, b);
      int sign = da % 2 == 1 && db % 2 == 1 ? -1 : 1;
      if (ab.mono != ba.mono || ab.sign != sign * ba.sign)
        return at.str() + ": graded commutativity failed";
      if (monomial_degree(pres_x, ab.mono) != da + db)
        return at.str() + ": product degree is not additive";
    }
    SignedMonomial ab_c = ab.is_zero() ? ab : monomial_product(pres_x, ab.mono, c);
    SignedMonomial bc = monomial_product(pres_x, b, c);
    SignedMonomial a_bc = bc.is_zero() ? bc : monomial_product(pres_x, a, bc.mono);
    int lhs_sign = ab.sign * ab_c.sign, rhs_sign = bc.sign * a_bc.sign;
    if (lhs_sign != rhs_sign || (lhs_sign != 0 && ab_c.mono != a_bc.mono))
      return at.str() + ": associativity failed";
  }
  // twisted summand ranks
  int k_cap = 2 * (n + 1) * (n + 1);
  for (int d : {4 * n - 1, 4 * n + 1}) {
    for (int k = 0; k <= k_cap; ++k) {
      TwistedRank tw = twisted_coefficients(d, n, k);
      Coeff expected = n % 2 == 0 ? Coeff(0) : gl_poincare(n + 1).coeff(k);
      if (tw.rank != expected) {
        std::ostringstream os;
        os << at.str() << " d=" << d << " k=" << k << ": twisted rank wrong";
        return os.str();
      }
      if (tw.verified != (d >= 4 * n + 1 && k < (d - 1) / 2)) {
        std::ostringstream os;
        os << at.str() << " d=" << d << " k=" << k << ": verified flag wrong";
        return os.str();
      }
    }
  }
  // fiberwise line coefficient
  ChernCoefficient border = fiberwise_chern_coefficient(n + 1, n);
  if (border.coefficient != 0 || border.nonvanishing)
    return at.str() + ": line coefficient should vanish at d = n + 1";
  ChernCoefficient generic = fiberwise_chern_coefficient(4 * n + 1, n);
  if (generic.coefficient != Coeff(4 * n + 1) * (3 * n) || !generic.nonvanishing)
    return at.str() + ": line coefficient should be d(d - n - 1)";
  return std::nullopt;
}

// --- suite assembly -----------------------------------------------------------

std::vector<CheckSuite> build_suites(const VerifyOptions& opts) {
  const int nmax = opts.nmax, dmax = opts.dmax;
  std::vector<CheckSuite> suites;

  {
    CheckSuite s{"qpoly_invariants", {{"mmax", 12LL}}, {}, std::nullopt};
    s.tasks.push_back(check_qpoly_ring_laws);
    for (int m = 0; m <= 12; ++m)
      s.tasks.push_back([m] { return check_gaussian_identities(m); });
    s.tasks.push_back(check_series_inverses);
    suites.push_back(std::move(s));
  }
  {
    CheckSuite s{"schubert_oracle", {{"mmax", 12LL}}, {}, std::nullopt};
    for (int m = 0; m <= 12; ++m) s.tasks.push_back([m] { return check_schubert_oracle(m); });
    suites.push_back(std::move(s));
  }
  {
    CheckSuite s{"schubert_invariants", {{"mmax", 12LL}}, {}, std::nullopt};
    for (int m = 0; m <= 12; ++m)
      s.tasks.push_back([m] { return check_schubert_invariants(m); });
    suites.push_back(std::move(s));
  }
  {
    CheckSuite s{"two_power_identities",
                 {{"mmax", 16LL}, {"nmax", static_cast<long long>(nmax)}},
                 {},
                 std::nullopt};
    s.tasks.push_back([] {
      for (int m = 0; m <= 16; ++m)
        if (total_betti_sum(m) != two_pow(m)) {
          std::ostringstream os;
          os << "m=" << m << ": Betti total is not 2^m";
          return Witness(os.str());
        }
      return Witness();
    });
    s.tasks.push_back([nmax] {
      for (int n = 0; n <= nmax; ++n)
        if (total_conf_dimension(n) != two_pow(n + 1)) {
          std::ostringstream os;
          os << "n=" << n << ": configuration total is not 2^(n+1)";
          return Witness(os.str());
        }
      return Witness();
    });
    suites.push_back(std::move(s));
  }
  {
    CheckSuite s{"conf_closed_forms", {{"nmax", static_cast<long long>(nmax)}}, {}, std::nullopt};
    for (int n = 0; n <= nmax; ++n) s.tasks.push_back([n] { return check_conf_closed_forms(n); });
    suites.push_back(std::move(s));
  }
  {
    CheckSuite s{"split_decomposition", {{"nmax", static_cast<long long>(nmax)}}, {}, std::nullopt};
    for (int n = 0; n <= nmax; ++n) s.tasks.push_back([n] { return check_split(n); });
    suites.push_back(std::move(s));
  }
  {
    CheckSuite s{"degeneration_full", {{"nmax", static_cast<long long>(nmax)}}, {}, std::nullopt};
    for (int n = 1; n <= nmax; ++n)
      s.tasks.push_back([n] { return check_degeneration(n, PageVariant::full); });
    suites.push_back(std::move(s));
  }
  {
    CheckSuite s{"degeneration_marked", {{"nmax", static_cast<long long>(nmax)}}, {}, std::nullopt};
    for (int n = 1; n <= nmax; ++n)
      s.tasks.push_back([n] { return check_degeneration(n, PageVariant::marked); });
    suites.push_back(std::move(s));
  }
  {
    CheckSuite s{"gl_step_recurrence", {{"mmax", 16LL}, {"nmax", 8LL}}, {}, std::nullopt};
    for (int n = 1; n <= 8; ++n) s.tasks.push_back([n] { return check_gl_step(n); });
    for (int m = 1; m <= 16; ++m)
      s.tasks.push_back([m] { return check_gl_pgl_factorization(m); });
    suites.push_back(std::move(s));
  }
  {
    CheckSuite s{"e1_page_consistency",
                 {{"dmax", static_cast<long long>(dmax)}, {"nmax", static_cast<long long>(nmax)}},
                 {},
                 std::nullopt};
    for (int d = 3; d <= dmax; ++d)
      s.tasks.push_back([d, nmax] { return check_e1_page(d, nmax); });
    suites.push_back(std::move(s));
  }
  {
    CheckSuite s{"serre_einfty", {{"nmax", static_cast<long long>(nmax)}}, {}, std::nullopt};
    if (nmax < 2)
      s.unsupported = "two-column comparison needs nmax >= 2";
    else
      for (int n = 2; n <= nmax; ++n) s.tasks.push_back([n] { return check_serre(n); });
    suites.push_back(std::move(s));
  }
  {
    CheckSuite s{"divisibility_contradiction",
                 {{"nmax", static_cast<long long>(nmax)}},
                 {},
                 std::nullopt};
    for (int n = 1; n <= nmax; ++n) s.tasks.push_back([n] { return check_contradiction(n); });
    suites.push_back(std::move(s));
  }
  {
    CheckSuite s{"ring_consistency",
                 {{"dmax", static_cast<long long>(dmax)}, {"nmax", static_cast<long long>(nmax)}},
                 {},
                 std::nullopt};
    for (int n = 1; n <= nmax; ++n) s.tasks.push_back([n, dmax] { return check_ring(n, dmax); });
    suites.push_back(std::move(s));
  }
  return suites;
}

}  // namespace

unsigned sweep_thread_cap() {
  const char* env = std::getenv("STABLECOH_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 0) return 1;  // garbage: stay sequential
  if (v == 0) return 0;
  return static_cast<unsigned>(std::min(v, 256L));
}

std::vector<VerificationReport> verify_all(const VerifyOptions& opts) {
  std::vector<CheckSuite> suites = build_suites(opts);

  struct FlatTask {
    size_t suite;
    const Task* run;
  };
  std::vector<FlatTask> flat;
  for (size_t i = 0; i < suites.size(); ++i)
    for (const Task& t : suites[i].tasks) flat.push_back({i, &t});

  std::vector<Witness> witnesses(flat.size());
  std::vector<double> elapsed(flat.size(), 0.0);
  unsigned threads = opts.threads;
  if (threads == 0) threads = sweep_thread_cap();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  size_t task_floor = std::max<size_t>(flat.size(), 1);
  if (threads > task_floor) threads = static_cast<unsigned>(task_floor);

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < flat.size();) {
      auto start = std::chrono::steady_clock::now();
      try {
        witnesses[i] = (*flat[i].run)();
      } catch (const std::exception& ex) {
        witnesses[i] = std::string("unexpected exception: ") + ex.what();
      }
      elapsed[i] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  // merge in registration order so the reported witness never depends on
  // which thread finished first
  std::vector<VerificationReport> reports;
  size_t cursor = 0;
  for (size_t i = 0; i < suites.size(); ++i) {
    VerificationReport report;
    report.check = suites[i].name;
    report.params = suites[i].params;
    if (suites[i].unsupported) {
      report.status = CheckStatus::unsupported;
      report.witness = suites[i].unsupported;
    } else {
      report.status = CheckStatus::pass;
      for (size_t t = 0; t < suites[i].tasks.size(); ++t, ++cursor) {
        report.elapsed_ms += elapsed[cursor];
        if (witnesses[cursor] && report.status == CheckStatus::pass) {
          report.status = CheckStatus::fail;
          report.witness = witnesses[cursor];
        }
      }
    }
    reports.push_back(std::move(report));
  }
  std::sort(reports.begin(), reports.end(), report_order);
  return reports;
}

}  // namespace stablecoh
