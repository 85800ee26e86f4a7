#include "stablecoh/conf.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "stablecoh/schubert.hpp"

namespace stablecoh {

std::string conf_space_label(const ConfSpec& spec) {
  std::ostringstream os;
  os << "UConf_" << spec.points << "(P^" << spec.ambient_dim;
  if (spec.punctured) os << " - pt";
  os << ")";
  return os.str();
}

Coeff GradedDims::rank(int degree) const {
  auto it = ranks.find(degree);
  return it == ranks.end() ? Coeff(0) : it->second;
}

Coeff GradedDims::total() const {
  Coeff t = 0;
  for (auto& [deg, r] : ranks) t += r;
  return t;
}

IntPoly GradedDims::poincare() const {
  std::vector<IntPoly::Term> terms(ranks.begin(), ranks.end());
  return IntPoly::from_terms(std::move(terms));
}

GradedDims conf_bm_poincare(const ConfSpec& spec) {
  if (spec.points < 0 || spec.ambient_dim < 0)
    throw std::invalid_argument("conf_bm_poincare: negative argument");
  GradedDims out;
  out.space = conf_space_label(spec);
  out.twist = "sign";
  int shift = spec.points * (spec.points - 1);
  for (const SchubertSymbol& s :
       enumerate_symbols(spec.points, spec.ambient_dim + 1, spec.punctured))
    out.ranks[shift + 2 * cell_dimension(s)] += 1;
  return out;
}

SplitCheck verify_split(int j, int n) {
  if (j < 1) throw std::invalid_argument("verify_split: needs at least one point");
  SplitCheck check;
  check.points = j;
  check.ambient_dim = n;
  GradedDims closed = conf_bm_poincare({j, n, false});
  GradedDims punct_same = conf_bm_poincare({j, n, true});
  GradedDims punct_less = conf_bm_poincare({j - 1, n, true});
  std::set<int> degrees;
  for (auto* dims : {&closed, &punct_same, &punct_less})
    for (auto& [deg, r] : dims->ranks) degrees.insert(deg);
  check.pass = true;
  for (int deg : degrees) {
    SplitCheck::Row row{deg, closed.rank(deg), punct_same.rank(deg), punct_less.rank(deg)};
    if (row.closed != row.punctured_same + row.punctured_one_less) {
      check.pass = false;
      if (!check.first_failure) check.first_failure = deg;
    }
    check.rows.push_back(std::move(row));
  }
  return check;
}

Coeff total_conf_dimension(int n) {
  if (n < 0) throw std::invalid_argument("total_conf_dimension: negative argument");
  Coeff total = 0;
  for (int j = 0; j <= n + 2; ++j)  // one past the vanishing line, which adds zero
    total += conf_bm_poincare({j, n, false}).total();
  return total;
}

}  // namespace stablecoh
