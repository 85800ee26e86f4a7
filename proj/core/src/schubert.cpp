#include "stablecoh/schubert.hpp"

#include <map>
#include <stdexcept>

namespace stablecoh {

bool SchubertSymbol::valid() const {
  if (a.empty() || a.front() != 0) return false;
  for (size_t i = 1; i < a.size(); ++i) {
    int step = a[i] - a[i - 1];
    if (step != 0 && step != 1) return false;
  }
  return true;
}

std::vector<int> SchubertSymbol::step_positions() const {
  std::vector<int> pos;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] == a[i - 1] + 1) pos.push_back(static_cast<int>(i));
  return pos;
}

std::vector<SchubertSymbol> enumerate_symbols(int p, int m, bool a1_zero) {
  if (p < 0 || m < 0) throw std::invalid_argument("enumerate_symbols: negative argument");
  std::vector<SchubertSymbol> out;
  if (p > m) return out;
  std::vector<int> a(static_cast<size_t>(m) + 1, 0);
  // depth-first over steps b_i in {0, 1}, trying 0 before 1 => lexicographic
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i > m) {
      if (used == p) out.push_back(SchubertSymbol{a});
      return;
    }
    int slots_left = m - i + 1;
    if (used + slots_left < p) return;  // cannot finish
    if (used > p) return;
    bool forbid_step = a1_zero && i == 1;
    a[static_cast<size_t>(i)] = a[static_cast<size_t>(i) - 1];
    self(self, i + 1, used);
    if (!forbid_step) {
      a[static_cast<size_t>(i)] = a[static_cast<size_t>(i) - 1] + 1;
      self(self, i + 1, used + 1);
      a[static_cast<size_t>(i)] = a[static_cast<size_t>(i) - 1];
    }
  };
  rec(rec, 1, 0);
  return out;
}

int cell_dimension(const SchubertSymbol& s) {
  int dim = 0, i = 0;
  for (int j : s.step_positions()) dim += j - (++i);
  return dim;
}

IntPoly grassmannian_poincare(int p, int m) {
  std::map<int, Coeff> ranks;
  for (const SchubertSymbol& s : enumerate_symbols(p, m))
    ranks[2 * cell_dimension(s)] += 1;
  std::vector<IntPoly::Term> terms(ranks.begin(), ranks.end());
  return IntPoly::from_terms(std::move(terms));
}

Coeff total_betti_sum(int m) {
  if (m < 0) throw std::invalid_argument("total_betti_sum: negative argument");
  Coeff total = 0;
  for (int p = 0; p <= m; ++p) total += grassmannian_poincare(p, m).sum_of_coeffs();
  return total;
}

}  // namespace stablecoh
