// Acceptance gate: one line per criterion, nonzero exit if any fails.
// argv[1] must be the path to the stablecoh binary (used by the last
// criterion, which drives the real executable end to end).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "stablecoh/conf.hpp"
#include "stablecoh/intpoly.hpp"
#include "stablecoh/liegroups.hpp"
#include "stablecoh/schubert.hpp"
#include "stablecoh/stablering.hpp"
#include "stablecoh/vassiliev.hpp"

using namespace stablecoh;
using Failure = std::optional<std::string>;

namespace {

std::string tool_path;

Failure schubert_oracle_equivalence() {
  for (int m = 0; m <= 12; ++m)
    for (int p = 0; p <= m; ++p)
      if (grassmannian_poincare(p, m) != gaussian_binomial(m, p).substituted_power(2)) {
        std::ostringstream os;
        os << "mismatch at p=" << p << " m=" << m;
        return os.str();
      }
  return std::nullopt;
}

Failure two_power_identities() {
  for (int m = 0; m <= 16; ++m)
    if (total_betti_sum(m) != Coeff(1) << m) {
      std::ostringstream os;
      os << "Betti total wrong at m=" << m;
      return os.str();
    }
  for (int n = 0; n <= 6; ++n)
    if (total_conf_dimension(n) != Coeff(1) << (n + 1)) {
      std::ostringstream os;
      os << "configuration total wrong at n=" << n;
      return os.str();
    }
  return std::nullopt;
}

Failure split_decomposition() {
  for (int n = 0; n <= 5; ++n)
    for (int j = 1; j <= n + 1; ++j) {
      SplitCheck split = verify_split(j, n);
      if (!split.pass) {
        std::ostringstream os;
        os << "split fails at j=" << j << " n=" << n << " degree "
           << (split.first_failure ? *split.first_failure : -1);
        return os.str();
      }
    }
  return std::nullopt;
}

Failure degeneration_full() {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= (2 * n + 1) * (n + 1); ++k) {
      DiagonalSum diag = diagonal_sum(n, k, PageVariant::full);
      if (!diag.equal) {
        std::ostringstream os;
        os << "mismatch at n=" << n << " k=" << k;
        return os.str();
      }
    }
  std::vector<Coeff> profile_n1 = {1, 1, 0, 1, 1, 0};
  for (int k = 0; k <= 5; ++k) {
    DiagonalSum diag = diagonal_sum(1, k, PageVariant::full);
    if (diag.lhs != profile_n1[k] || diag.rhs != profile_n1[k]) {
      std::ostringstream os;
      os << "n=1 profile wrong at k=" << k;
      return os.str();
    }
  }
  for (int k : {4, 6, 8, 9}) {
    DiagonalSum diag = diagonal_sum(2, k, PageVariant::full);
    if (diag.lhs != 1 || diag.rhs != 1) {
      std::ostringstream os;
      os << "n=2 value at k=" << k << " is not 1";
      return os.str();
    }
  }
  return std::nullopt;
}

Failure degeneration_marked() {
  for (int n = 1; n <= 5; ++n) {
    IntPoly tower = gl_poincare(n);
    for (int k = 0; k <= (2 * n + 1) * (n + 1) + 4; ++k) {
      DiagonalSum diag = diagonal_sum(n, k, PageVariant::marked);
      if (!diag.equal || diag.rhs != tower.coeff(k)) {
        std::ostringstream os;
        os << "mismatch at n=" << n << " k=" << k;
        return os.str();
      }
    }
  }
  for (int n = 1; n <= 8; ++n) {
    GlStepCheck step = verify_gl_step(n, (n + 2) * (n + 2));
    if (!step.pass) {
      std::ostringstream os;
      os << "tower recurrence fails at n=" << n;
      return os.str();
    }
  }
  return std::nullopt;
}

Failure e1_page_consistency() {
  const std::pair<int, int> cases[] = {{5, 1}, {7, 1}, {9, 2}, {13, 3}};
  for (auto [d, n] : cases) {
    for (PageVariant variant : {PageVariant::full, PageVariant::marked}) {
      SpectralSequencePage page = build_e1_page(d, n, variant);
      std::ostringstream at;
      at << "d=" << d << " n=" << n << " " << variant_name(variant);
      if (page.stability_degree != 2 * page.e - page.params.N ||
          page.stability_degree != stability_cutoff(d, n, variant))
        return at.str() + ": stability cutoff is not 2e - N";
      for (const PageEntry& entry : page.entries) {
        if (entry.dual_k != 2 * page.e - 1 - entry.total_degree)
          return at.str() + ": an entry violates k = 2e - 1 - T";
        DiagonalSum diag = diagonal_sum(n, static_cast<int>(entry.dual_k), variant);
        if (!diag.equal || diag.lhs < entry.rank)
          return at.str() + ": an entry does not reappear in its diagonal sum";
      }
    }
  }
  return std::nullopt;
}

Failure serre_reproduction() {
  for (int n = 2; n <= 5; ++n) {
    SerreCheck with = serre_einfty(n, true);
    std::vector<IntPoly::Term> truncated_poly;
    for (int e = 0; e < n; ++e) truncated_poly.emplace_back(2 * e, 1);
    IntPoly expected = pgl_poincare(n + 1) * IntPoly::from_terms(std::move(truncated_poly));
    if (!with.matches || with.einfty != expected) {
      std::ostringstream os;
      os << "survivors differ from the quotient tower at n=" << n;
      return os.str();
    }
    if (serre_einfty(n, false).matches) {
      std::ostringstream os;
      os << "disabled transgression still matches at n=" << n;
      return os.str();
    }
  }
  return std::nullopt;
}

Failure divisibility_contradiction() {
  for (int n = 1; n <= 6; ++n)
    for (int bound : {1, n + 1, 2 * n + 1, 2 * n + 2, 3 * n + 4}) {
      ContradictionCheck check = degenerate_contradiction(n, bound);
      bool expect_visible = bound > 2 * n + 1;
      if (check.first_negative.has_value() != expect_visible ||
          (expect_visible && *check.first_negative != 2 * n + 1)) {
        std::ostringstream os;
        os << "first negative wrong at n=" << n << " bound=" << bound;
        return os.str();
      }
    }
  return std::nullopt;
}

Failure ring_consistency() {
  IntPoly one_plus_t = IntPoly::from_terms({{0, 1}, {1, 1}});
  for (int n = 1; n <= 5; ++n) {
    for (int d : {4 * n + 1, 4 * n + 3, 4 * n + 11}) {
      std::ostringstream at;
      at << "n=" << n << " d=" << d;
      IntPoly xstar = ring_poincare(ring_presentation(Space::Xstar, d, n));
      IntPoly ustar = ring_poincare(ring_presentation(Space::Ustar, d, n));
      IntPoly mstar = ring_poincare(ring_presentation(Space::Mstar, d, n));
      if (xstar != ustar * one_plus_t) return at.str() + ": Xstar != Ustar * (1+t)";
      if (xstar != gl_poincare(n + 1) * mstar)
        return at.str() + ": Xstar != gl tower * moduli factor";
      if (!ring_presentation(Space::Xstar, d, n).window.hypothesis_ok)
        return at.str() + ": hypothesis flag should hold for d >= 4n+1";
    }
    // nilpotency: x^(n-1) survives, one more power of x is zero
    GradedRingPresentation pres = ring_presentation(Space::Xstar, 4 * n + 1, n);
    size_t x_index = pres.generators.size() - 1;
    Monomial x = one_monomial(pres), x_pow = one_monomial(pres);
    x.exponents[x_index] = 1;
    x_pow.exponents[x_index] = n - 1;
    if (!is_normal_form(pres, x_pow)) {
      std::ostringstream os;
      os << "x^(n-1) should be a basis monomial at n=" << n;
      return os.str();
    }
    if (n == 1) {
      if (is_normal_form(pres, x)) return "x should already be zero when the moduli factor is Q";
    } else {
      SignedMonomial top = monomial_product(pres, x_pow, x);
      if (!top.is_zero()) {
        std::ostringstream os;
        os << "x^n should vanish at n=" << n;
        return os.str();
      }
    }
  }
  for (int k = 0; k <= 20; ++k)
    if (twisted_coefficients(13, 2, k).rank != 0) {
      std::ostringstream os;
      os << "twisted rank should vanish for n=2, k=" << k;
      return os.str();
    }
  IntPoly gl4 = gl_poincare(4);
  for (int k = 0; k < 6; ++k) {
    TwistedRank tw = twisted_coefficients(13, 3, k);
    if (tw.rank != gl4.coeff(k) || !tw.verified) {
      std::ostringstream os;
      os << "twisted rank differs from the exterior tower at n=3, k=" << k;
      return os.str();
    }
  }
  return std::nullopt;
}

Failure end_to_end_cli() {
  if (tool_path.empty()) return "no binary path given on the command line";
  std::string command = "'" + tool_path + "' verify-all --nmax 4 --dmax 17 --format json";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return "could not start the binary";
  std::string output;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  int raw_status = pclose(pipe);
  if (!WIFEXITED(raw_status)) return "binary did not exit normally";
  if (int code = WEXITSTATUS(raw_status); code != 0) {
    std::ostringstream os;
    os << "exit code " << code << " instead of 0";
    return os.str();
  }
  nlohmann::json report;
  try {
    report = nlohmann::json::parse(output);
  } catch (const nlohmann::json::parse_error&) {
    return "output is not valid JSON";
  }
  const std::vector<std::string> expected_checks = {
      "conf_closed_forms",     "degeneration_full",   "degeneration_marked",
      "divisibility_contradiction", "e1_page_consistency", "gl_step_recurrence",
      "qpoly_invariants",      "ring_consistency",    "schubert_invariants",
      "schubert_oracle",       "serre_einfty",        "split_decomposition",
      "two_power_identities"};
  if (report["status"] != "pass") return "overall status is not pass";
  if (report["data"].size() != expected_checks.size()) {
    std::ostringstream os;
    os << "expected " << expected_checks.size() << " check rows, got " << report["data"].size();
    return os.str();
  }
  for (size_t i = 0; i < expected_checks.size(); ++i) {
    if (report["data"][i]["check"] != expected_checks[i])
      return "check list differs at row " + std::to_string(i) + ": " +
             report["data"][i]["check"].get<std::string>();
    if (report["data"][i]["status"] != "pass")
      return "check " + expected_checks[i] + " did not pass";
  }
  return std::nullopt;
}

struct Criterion {
  std::string label;
  std::function<Failure()> run;
  long long budget_ms = 1000;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) tool_path = argv[1];
  std::vector<Criterion> criteria = {
      {"Schubert enumeration matches the gaussian binomial oracle (m <= 12)",
       schubert_oracle_equivalence},
      {"Betti and configuration totals are exact powers of two (m <= 16, n <= 6)",
       two_power_identities},
      {"closed configuration ranks split degreewise (j <= n+1, n <= 5)", split_decomposition},
      {"degeneration diagonal matches the full exterior tower, pinned profiles included (n <= 5)",
       degeneration_full},
      {"marked diagonal matches the smaller tower; one-step recurrence holds (n <= 8)",
       degeneration_marked},
      {"first-page entries satisfy the duality bookkeeping for (5,1), (7,1), (9,2), (13,3)",
       e1_page_consistency},
      {"two-column page survivors reproduce the quotient tower (2 <= n <= 5)",
       serre_reproduction},
      {"degenerate counting series goes negative exactly at degree 2n+1 (n <= 6)",
       divisibility_contradiction},
      {"ring towers factor consistently; nilpotency and twisted ranks check out (n <= 5)",
       ring_consistency},
      {"stablecoh verify-all --nmax 4 --dmax 17 exits 0 with a full JSON report",
       end_to_end_cli, 10000},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Failure failure;
    try {
      failure = criteria[i].run();
    } catch (const std::exception& ex) {
      failure = std::string("unexpected exception: ") + ex.what();
    }
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    if (!failure && ms > criteria[i].budget_ms) {
      std::ostringstream os;
      os << "took " << ms << " ms, budget " << criteria[i].budget_ms << " ms";
      failure = os.str();
    }
    bool ok = !failure.has_value();
    failures += ok ? 0 : 1;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": "
              << criteria[i].label << " [" << ms << " ms]";
    if (!ok) std::cout << " -- " << *failure;
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
