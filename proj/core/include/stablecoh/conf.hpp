#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stablecoh/intpoly.hpp"

namespace stablecoh {

// Unordered configuration space of `points` points in P^ambient_dim (or in
// P^ambient_dim minus a point when punctured), with the sign local system.
struct ConfSpec {
  int points = 0;       // j
  int ambient_dim = 0;  // n
  bool punctured = false;

  bool operator==(const ConfSpec&) const = default;
};

std::string conf_space_label(const ConfSpec& spec);

// Graded dimension table with provenance: which space, which twist.
struct GradedDims {
  std::map<int, Coeff> ranks;  // degree -> rank, no zero entries
  std::string space;
  std::string twist;

  Coeff rank(int degree) const;
  Coeff total() const;
  IntPoly poincare() const;
};

// Twisted Borel-Moore ranks.  Closed case: Grassmannian cells of Gr(j, C^(n+1))
// shifted into degree j(j-1) + 2 * celldim.  Punctured case: the same shift
// over the symbols that stay at zero first (a_1 = 0).
GradedDims conf_bm_poincare(const ConfSpec& spec);

// Degreewise check that the closed space splits off the point-free part:
// rank_m closed(j)  =  rank_m punctured(j) + rank_m punctured(j-1).
struct SplitCheck {
  int points = 0;
  int ambient_dim = 0;
  struct Row {
    int degree;
    Coeff closed;
    Coeff punctured_same;
    Coeff punctured_one_less;
  };
  std::vector<Row> rows;
  bool pass = false;
  std::optional<int> first_failure;  // witness degree
};
SplitCheck verify_split(int j, int n);

// Sum of total ranks over every point count j >= 0; equals 2^(n+1).
Coeff total_conf_dimension(int n);

}  // namespace stablecoh
