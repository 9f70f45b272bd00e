#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "mdsum/qseries.hpp"
#include "mdsum/wordsum.hpp"

namespace mdsum {

/// Commutative product on letters, extended to words by the quasi-shuffle
/// recursion.  A letter z_j is the one-part composition (j).
class Diamond {
 public:
  virtual ~Diamond() = default;
  /// z_a <> z_b as a combination of single letters.
  virtual WordSum letters(int a, int b) const = 0;
};

/// z_a <> z_b = z_{a+b} + sum_{j<=a} lambda^j_{a,b} z_j + sum_{j<=b} lambda^j_{b,a} z_j.
class BracketDiamond final : public Diamond {
 public:
  WordSum letters(int a, int b) const override;
};

/// aw * bv = a(w * bv) + b(aw * v) + (a<>b)(w * v), with 1 * w = w * 1 = w.
/// Products of single words are memoized; bilinearity is applied outside the
/// cache.  Safe for concurrent use.
class QuasiShuffle {
 public:
  explicit QuasiShuffle(std::shared_ptr<const Diamond> diamond);

  WordSum words(const Composition& w, const Composition& v) const;
  WordSum operator()(const WordSum& w, const WordSum& v) const;

  /// The engine built on BracketDiamond, shared process-wide.
  static const QuasiShuffle& brackets();

 private:
  std::shared_ptr<const Diamond> diamond_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<Composition, Composition>, WordSum> memo_;
};

WordSum diamond(int a, int b);
WordSum quasi_shuffle(const WordSum& w, const WordSum& v);
WordSum quasi_shuffle(const Composition& w, const Composition& v);

/// sum of coefficient * [word] through q^order; the empty word is 1.
QSeries evaluate(const WordSum& w, int order);

enum class Subalgebra { MDA, MDE, MDSharp };

/// MDA: every word admissible (first part > 1); MDE: every part even;
/// MDSharp: every part > 1.  The empty word belongs to all three.
bool subalgebra_membership(const WordSum& w, Subalgebra which);
std::string to_string(Subalgebra which);
Subalgebra parse_subalgebra(const std::string& text);

/// sum_j powers[j] T^j with T standing for [1] and every coefficient in MDA.
struct OnePolynomial {
  std::vector<WordSum> powers;

  int degree() const;
  bool is_zero() const;
  WordSum coefficient(int j) const;
  OnePolynomial& operator+=(const OnePolynomial& other);
  OnePolynomial& add_scaled(const Rational& c, const OnePolynomial& other);
  OnePolynomial times_t() const;
  bool operator==(const OnePolynomial& other) const;

  /// Evaluates with T replaced by the series of [1].
  QSeries evaluate(int order) const;
  std::string to_string() const;
};

/// Writes w as a polynomial in [1] over MDA by peeling leading ones:
/// m [1^m u] = [1] [1^{m-1} u] - (remaining terms of z_1 * 1^{m-1}u).
OnePolynomial decompose_in_one(const WordSum& w);
OnePolynomial decompose_in_one(const Composition& w);

}  // namespace mdsum
