#include "mdsum/qseries.hpp"

#include <algorithm>

namespace mdsum {

QSeries::QSeries(int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

QSeries::QSeries(int order, std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (order < 0) throw std::invalid_argument("negative series order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1, Rational(0));
}

QSeries QSeries::one(int order) { return constant(order, 1); }

QSeries QSeries::constant(int order, const Rational& c) {
  QSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

QSeries QSeries::monomial(int order, int power, const Rational& c) {
  QSeries s(order);
  if (power >= 0 && power <= order) s.coeffs_[power] = c;
  return s;
}

const Rational& QSeries::operator[](int n) const {
  if (n < 0 || n > order()) throw std::out_of_range("coefficient index beyond series order");
  return coeffs_[n];
}

Rational& QSeries::at(int n) {
  if (n < 0 || n > order()) throw std::out_of_range("coefficient index beyond series order");
  return coeffs_[n];
}

QSeries QSeries::truncated(int order) const {
  if (order > this->order()) throw std::out_of_range("cannot extend a truncated series");
  QSeries s = *this;
  s.shrink_to(order);
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

void QSeries::shrink_to(int order) {
  if (order < this->order()) coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries& QSeries::operator+=(const QSeries& other) {
  shrink_to(other.order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  shrink_to(other.order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries& QSeries::add_scaled(const Rational& c, const QSeries& other) {
  shrink_to(other.order());
  if (c == 0) return *this;
  Rational t;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (other.coeffs_[i] == 0) continue;
    t = c * other.coeffs_[i];
    coeffs_[i] += t;
  }
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.order(), b.order());
  QSeries r(n);
  // Skip leading zeros; brackets start at q^{l(l+1)/2}.
  int a0 = 0, b0 = 0;
  while (a0 <= n && a.coeffs_[a0] == 0) ++a0;
  while (b0 <= n && b.coeffs_[b0] == 0) ++b0;
  Rational t;
  for (int i = a0; i <= n; ++i) {
    const Rational& ai = a.coeffs_[i];
    if (ai == 0) continue;
    for (int j = b0; i + j <= n; ++j) {
      const Rational& bj = b.coeffs_[j];
      if (bj == 0) continue;
      t = ai * bj;
      r.coeffs_[i + j] += t;
    }
  }
  return r;
}

std::string QSeries::to_string() const {
  std::string s;
  for (int n = 0; n <= order(); ++n) {
    const Rational& c = coeffs_[n];
    if (c == 0) continue;
    std::string mag = to_pretty_string(abs(c));
    if (s.empty()) s += (c < 0 ? "-" : "");
    else s += (c < 0 ? " - " : " + ");
    if (n == 0) s += mag;
    else {
      if (mag != "1") s += mag + "*";
      s += n == 1 ? "q" : "q^" + std::to_string(n);
    }
  }
  if (s.empty()) s = "0";
  return s + " + O(q^" + std::to_string(order() + 1) + ")";
}

QSeries add(const QSeries& a, const QSeries& b) { return a + b; }
QSeries scale(const Rational& c, const QSeries& a) { return c * a; }
QSeries mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries q_d_dq(const QSeries& a) {
  QSeries r(a.order());
  for (int n = 1; n <= a.order(); ++n) r.at(n) = a[n] * n;
  return r;
}

QSeries eta24(int order) {
  if (order < 1) throw std::invalid_argument("eta24 needs order >= 1");
  // prod (1 - q^n)^24 through q^{order-1}, integer arithmetic.
  const int m = order - 1;
  std::vector<Integer> p(static_cast<std::size_t>(m) + 1, Integer(0));
  p[0] = 1;
  for (int n = 1; n <= m; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (int i = m; i >= n; --i) p[i] -= p[i - n];
  QSeries r(order);
  for (int i = 0; i <= m; ++i) r.at(i + 1) = Rational(p[i]);
  return r;
}

bool agree_to_order(const QSeries& a, const QSeries& b, int n) {
  if (n > a.order() || n > b.order()) throw std::out_of_range("agree_to_order: n exceeds available order");
  for (int i = 0; i <= n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

int first_difference(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.order(), b.order());
  for (int i = 0; i <= n; ++i)
    if (a[i] != b[i]) return i;
  return -1;
}

}  // namespace mdsum
