#include "stablecoh/vassiliev.hpp"

#include <limits>
#include <stdexcept>

#include "stablecoh/liegroups.hpp"

namespace stablecoh {

ParamDims param_dims(int d, int n) {
  if (d < 1 || n < 1) throw std::invalid_argument("param_dims: needs d >= 1 and n >= 1");
  Coeff dv = binomial(n + d, n);
  if (dv > std::numeric_limits<long long>::max() / 4)
    throw std::domain_error("param_dims: unsupported parameter range (dimension overflow)");
  ParamDims p;
  p.d = d;
  p.n = n;
  p.dim_V = static_cast<long long>(dv);
  p.dim_Vp = p.dim_V - 1;
  p.e_d = p.dim_V - (n + 1);
  p.N = (d - 1) / 2;
  p.stable_bound = p.N;
  return p;
}

const char* variant_name(PageVariant v) { return v == PageVariant::full ? "full" : "marked"; }

SpectralSequencePage build_e1_page(int d, int n, PageVariant variant) {
  if (d < 3) throw std::domain_error("build_e1_page: needs d >= 3 (no columns otherwise)");
  SpectralSequencePage page;
  page.params = param_dims(d, n);
  page.variant = variant;
  page.e = variant == PageVariant::full ? page.params.dim_V : page.params.e_d;
  page.truncation_column = page.params.N;
  page.stability_degree = 2 * page.e - page.params.N;
  if (page.e - static_cast<long long>(n + 1) * page.params.N < 0)
    throw std::domain_error("build_e1_page: unsupported parameter range (negative stratum)");
  bool punctured = variant == PageVariant::marked;
  for (int j = 1; j <= page.params.N; ++j) {
    ConfSpec spec{j, n, punctured};
    for (auto& [m, rank] : conf_bm_poincare(spec).ranks) {
      PageEntry entry;
      entry.column = j;
      entry.total_degree = 2 * (page.e - static_cast<long long>(n + 1) * j) + (j - 1) + m;
      entry.rank = rank;
      entry.conf = spec;
      entry.conf_degree = m;
      entry.dual_k = 2 * page.e - 1 - entry.total_degree;
      page.entries.push_back(std::move(entry));
    }
  }
  return page;
}

DiagonalSum diagonal_sum(int n, int k, PageVariant variant) {
  if (n < 1 || k < 0) throw std::invalid_argument("diagonal_sum: needs n >= 1 and k >= 0");
  DiagonalSum out;
  out.n = n;
  out.k = k;
  out.variant = variant;
  bool punctured = variant == PageVariant::marked;
  int j_max = punctured ? n : n + 1;  // later columns vanish
  out.lhs = 0;
  for (int j = 0; j <= j_max; ++j) {
    long long degree = static_cast<long long>(2 * n + 1) * j - k;
    if (degree < 0) continue;
    out.lhs += conf_bm_poincare({j, n, punctured}).rank(static_cast<int>(degree));
  }
  out.rhs = gl_poincare(punctured ? n : n + 1).coeff(k);
  out.equal = out.lhs == out.rhs;
  return out;
}

long long stability_cutoff(int d, int n, PageVariant variant) {
  if (d < 3) throw std::domain_error("stability_cutoff: needs d >= 3");
  ParamDims p = param_dims(d, n);
  long long e = variant == PageVariant::full ? p.dim_V : p.e_d;
  return 2 * e - p.N;
}

}  // namespace stablecoh
