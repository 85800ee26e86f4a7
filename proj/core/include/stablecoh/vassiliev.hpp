#pragma once

#include <vector>

#include "stablecoh/conf.hpp"
#include "stablecoh/intpoly.hpp"

namespace stablecoh {

// Dimension bookkeeping for degree-d hypersurfaces in P^n.
struct ParamDims {
  int d = 0;
  int n = 0;
  long long dim_V = 0;   // C(n+d, n), dimension of the coefficient space
  long long dim_Vp = 0;  // dim_V - 1
  long long e_d = 0;     // dim_V - (n + 1)
  int N = 0;             // floor((d-1)/2), last usable column
  int stable_bound = 0;  // degrees k < stable_bound are in the stable window
};
ParamDims param_dims(int d, int n);

enum class PageVariant { full, marked };
const char* variant_name(PageVariant v);

// One nonzero spot on the first page, with the configuration space and the
// Borel-Moore degree it came from.
struct PageEntry {
  int column = 0;              // j
  long long total_degree = 0;  // T = 2(e - (n+1)j) + (j-1) + m
  Coeff rank;
  ConfSpec conf;
  int conf_degree = 0;     // m
  long long dual_k = 0;    // 2e - 1 - T
};

struct SpectralSequencePage {
  ParamDims params;
  PageVariant variant = PageVariant::full;
  long long e = 0;                  // dim_V (full) or e_d (marked)
  int truncation_column = 0;        // N; no entries beyond it
  long long stability_degree = 0;   // 2e - N
  std::vector<PageEntry> entries;   // sorted by (column, total_degree)
};

// First-page assembly for d >= 3.  Full variant: closed configuration spaces
// against e = dim_V.  Marked variant: punctured spaces against e = e_d.
SpectralSequencePage build_e1_page(int d, int n, PageVariant variant);

// Degreewise identity between the column sums and the matching exterior tower:
//   sum_j rank_{(2n+1)j - k} conf(j)  =  [t^k] gl tower (n+1 full / n marked).
struct DiagonalSum {
  int n = 0;
  int k = 0;
  PageVariant variant = PageVariant::full;
  Coeff lhs;
  Coeff rhs;
  bool equal = false;
};
DiagonalSum diagonal_sum(int n, int k, PageVariant variant);

// Everything in total degree < 2e - N is stable on the first page.
long long stability_cutoff(int d, int n, PageVariant variant);

}  // namespace stablecoh
