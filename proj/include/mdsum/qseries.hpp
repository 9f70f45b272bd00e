#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdsum/exactnum.hpp"

namespace mdsum {

/// Truncated power series c_0 + c_1 q + ... + c_N q^N with exact rational
/// coefficients.  N is the order; the coefficients beyond it are unknown,
/// not zero.
class QSeries {
 public:
  QSeries() : coeffs_(1) {}
  explicit QSeries(int order);
  QSeries(int order, std::vector<Rational> coefficients);

  static QSeries zero(int order) { return QSeries(order); }
  static QSeries one(int order);
  static QSeries constant(int order, const Rational& c);
  /// c * q^power, truncated.
  static QSeries monomial(int order, int power, const Rational& c = 1);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& constant_term() const { return coeffs_[0]; }
  /// Coefficient of q^n; throws std::out_of_range beyond the order.
  const Rational& operator[](int n) const;
  Rational& at(int n);
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  QSeries truncated(int order) const;
  bool is_zero() const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const Rational& c);
  /// Adds c * other in place; order drops to the minimum.
  QSeries& add_scaled(const Rational& c, const QSeries& other);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator-(QSeries a) { return a *= Rational(-1); }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  /// Exact equality of coefficients and order.
  bool operator==(const QSeries& other) const = default;

  std::string to_string() const;

 private:
  void shrink_to(int order);
  std::vector<Rational> coeffs_;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries scale(const Rational& c, const QSeries& a);
QSeries mul(const QSeries& a, const QSeries& b);

/// q d/dq: multiplies the coefficient of q^n by n.
QSeries q_d_dq(const QSeries& a);

/// q * prod_{n>=1} (1 - q^n)^24 through q^order.
QSeries eta24(int order);

/// True iff a and b agree on q^0..q^n.  Throws std::out_of_range when n
/// exceeds either order.
bool agree_to_order(const QSeries& a, const QSeries& b, int n);

/// Smallest n with a[n] != b[n], or -1 when they agree on the shared order.
int first_difference(const QSeries& a, const QSeries& b);

}  // namespace mdsum
