#include "stablecoh/intpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stablecoh {

IntPoly::IntPoly(Coeff constant) {
  if (constant != 0) terms_.emplace_back(0, std::move(constant));
}

IntPoly IntPoly::monomial(int degree, Coeff coeff) {
  if (degree < 0) throw std::invalid_argument("IntPoly: negative degree");
  IntPoly p;
  if (coeff != 0) p.terms_.emplace_back(degree, std::move(coeff));
  return p;
}

IntPoly IntPoly::from_terms(std::vector<Term> terms, std::optional<int> truncation) {
  if (truncation && *truncation < 0)
    throw std::invalid_argument("IntPoly: negative truncation order");
  IntPoly p;
  p.terms_ = std::move(terms);
  p.trunc_ = truncation;
  p.normalize();
  return p;
}

void IntPoly::normalize() {
  std::map<int, Coeff> acc;
  for (auto& [deg, c] : terms_) {
    if (deg < 0) throw std::invalid_argument("IntPoly: negative degree");
    if (trunc_ && deg >= *trunc_) continue;
    acc[deg] += c;
  }
  terms_.clear();
  for (auto& [deg, c] : acc)
    if (c != 0) terms_.emplace_back(deg, std::move(c));
}

Coeff IntPoly::coeff(int degree) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), degree,
                             [](const Term& t, int d) { return t.first < d; });
  if (it != terms_.end() && it->first == degree) return it->second;
  return 0;
}

int IntPoly::max_degree() const { return terms_.empty() ? -1 : terms_.back().first; }

Coeff IntPoly::sum_of_coeffs() const {
  Coeff s = 0;
  for (auto& [deg, c] : terms_) s += c;
  return s;
}

std::optional<int> IntPoly::meet(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

IntPoly IntPoly::truncated(int order) const {
  if (order < 0) throw std::invalid_argument("IntPoly: negative truncation order");
  IntPoly p = *this;
  p.trunc_ = meet(trunc_, order);
  p.normalize();
  return p;
}

IntPoly IntPoly::shifted(int offset) const {
  if (offset < 0) throw std::invalid_argument("IntPoly: negative shift");
  IntPoly p;
  p.terms_.reserve(terms_.size());
  for (auto& [deg, c] : terms_) p.terms_.emplace_back(deg + offset, c);
  if (trunc_) p.trunc_ = *trunc_ + offset;
  return p;
}

IntPoly IntPoly::substituted_power(int k) const {
  if (k < 1) throw std::invalid_argument("IntPoly: substitution power must be >= 1");
  IntPoly p;
  p.terms_.reserve(terms_.size());
  for (auto& [deg, c] : terms_) p.terms_.emplace_back(deg * k, c);
  // knowledge mod t^N becomes knowledge mod t^(kN): intermediate degrees are known zero
  if (trunc_) p.trunc_ = *trunc_ * k;
  return p;
}

IntPoly IntPoly::operator-() const {
  IntPoly p = *this;
  for (auto& [deg, c] : p.terms_) c = -c;
  return p;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly p;
  p.terms_ = a.terms_;
  p.terms_.insert(p.terms_.end(), b.terms_.begin(), b.terms_.end());
  p.trunc_ = IntPoly::meet(a.trunc_, b.trunc_);
  p.normalize();
  return p;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly p;
  p.trunc_ = IntPoly::meet(a.trunc_, b.trunc_);
  std::map<int, Coeff> acc;
  for (auto& [da, ca] : a.terms_)
    for (auto& [db, cb] : b.terms_) {
      int d = da + db;
      if (p.trunc_ && d >= *p.trunc_) continue;
      acc[d] += ca * cb;
    }
  for (auto& [deg, c] : acc)
    if (c != 0) p.terms_.emplace_back(deg, std::move(c));
  return p;
}

std::string IntPoly::str(std::string_view var) const {
  std::ostringstream os;
  if (terms_.empty()) {
    os << "0";
  } else {
    bool first = true;
    for (auto& [deg, c] : terms_) {
      Coeff mag = c < 0 ? Coeff(-c) : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (mag != 1 || deg == 0) os << mag.str();
      if (deg > 0) {
        os << var;
        if (deg > 1) os << "^" << deg;
      }
    }
  }
  if (trunc_) os << " (mod " << var << "^" << *trunc_ << ")";
  return os.str();
}

Coeff binomial(long long m, long long p) {
  if (p < 0 || p > m) return 0;
  if (p > m - p) p = m - p;
  Coeff r = 1;
  for (long long i = 1; i <= p; ++i) {
    r *= m - p + i;
    r /= i;  // exact at every step: r is C(m-p+i, i)
  }
  return r;
}

IntPoly gaussian_binomial(int m, int p) {
  if (m < 0 || p < 0) throw std::invalid_argument("gaussian_binomial: negative argument");
  if (p > m) return IntPoly();
  // Pascal recurrence [m, p] = [m-1, p-1] + q^p [m-1, p], row by row.
  std::vector<IntPoly> row(p + 1);  // row[j] holds [i-1, j]; zero when j > i-1
  row[0] = IntPoly(Coeff(1));
  for (int i = 1; i <= m; ++i)
    for (int j = std::min(i, p); j >= 1; --j) row[j] = row[j - 1] + row[j].shifted(j);
  return row[p];
}

IntPoly series_inverse(const IntPoly& a, int order) {
  if (order < 0) throw std::invalid_argument("series_inverse: negative order");
  Coeff a0 = a.coeff(0);
  if (a0 != 1 && a0 != -1)
    throw std::invalid_argument("series_inverse: constant coefficient is not a unit");
  if (a.truncation_order() && *a.truncation_order() < order)
    throw std::invalid_argument("series_inverse: operand not known to the requested order");
  std::vector<Coeff> b(static_cast<size_t>(std::max(order, 0)));
  std::vector<IntPoly::Term> out;
  if (order > 0) {
    b[0] = a0;  // 1/a0 = a0 for a unit
    out.emplace_back(0, b[0]);
    for (int k = 1; k < order; ++k) {
      Coeff s = 0;
      for (auto& [deg, c] : a.terms()) {
        if (deg < 1) continue;
        if (deg > k) break;
        s += c * b[static_cast<size_t>(k - deg)];
      }
      b[static_cast<size_t>(k)] = -a0 * s;
      if (b[static_cast<size_t>(k)] != 0) out.emplace_back(k, b[static_cast<size_t>(k)]);
    }
  }
  return IntPoly::from_terms(std::move(out), order);
}

}  // namespace stablecoh
