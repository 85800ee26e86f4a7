#pragma once

#include <vector>

#include "stablecoh/intpoly.hpp"

namespace stablecoh {

// Schubert symbol for Gr(p, C^m): a nondecreasing sequence a_0 = 0, ..., a_m = p
// with steps of 0 or 1.  Cells are indexed by where the p steps happen.
struct SchubertSymbol {
  std::vector<int> a;  // length m + 1

  int ambient_dim() const { return static_cast<int>(a.size()) - 1; }  // m
  int plane_dim() const { return a.empty() ? 0 : a.back(); }          // p
  bool valid() const;
  std::vector<int> step_positions() const;  // 1-indexed positions j with a_j = a_{j-1} + 1
};

// All symbols for Gr(p, C^m) in lexicographic order of the step sequence.
// With a1_zero set, only symbols whose first entry past a_0 is still 0
// (used for the one-point-removed ambient space).
std::vector<SchubertSymbol> enumerate_symbols(int p, int m, bool a1_zero = false);

// Complex cell dimension: sum over step positions j_1 < ... < j_p of (j_i - i).
int cell_dimension(const SchubertSymbol& s);

// Poincare polynomial of Gr(p, C^m) in homological degree (2 * cell dimension),
// computed by cell enumeration.
IntPoly grassmannian_poincare(int p, int m);

// Sum of all Betti numbers over every p for fixed m; equals 2^m.
Coeff total_betti_sum(int m);

}  // namespace stablecoh
