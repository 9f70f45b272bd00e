#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "mdsum/composition.hpp"

namespace mdsum {

/// Finite Q-linear combination of words (compositions).  Zero coefficients are
/// never stored, so structural equality is equality of elements.
class WordSum {
 public:
  using Terms = std::map<Composition, Rational>;

  WordSum() = default;
  explicit WordSum(const Composition& word, const Rational& coeff = 1);
  WordSum(std::initializer_list<std::pair<Composition, Rational>> terms);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Composition& word) const;

  void add(const Composition& word, const Rational& coeff);
  WordSum& operator+=(const WordSum& other);
  WordSum& operator-=(const WordSum& other);
  WordSum& operator*=(const Rational& c);
  WordSum& add_scaled(const Rational& c, const WordSum& other);

  friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
  friend WordSum operator-(WordSum a, const WordSum& b) { return a -= b; }
  friend WordSum operator-(WordSum a) { return a *= Rational(-1); }
  friend WordSum operator*(const Rational& c, WordSum a) { return a *= c; }
  bool operator==(const WordSum& other) const = default;

  /// Largest weight / length among the terms (0 for the zero element).
  int weight() const;
  int max_length() const;
  int min_weight() const;

  /// Linear extension of a map on words.
  WordSum map_words(const std::function<WordSum(const Composition&)>& f) const;
  /// Terms satisfying the predicate.
  WordSum filter(const std::function<bool(const Composition&)>& keep) const;

  /// Leading term for normalization: maximal weight, then minimal length,
  /// then the lexicographically smallest parts.
  const std::pair<const Composition, Rational>& leading_term() const;
  /// Scaled so the leading coefficient is 1.  The zero element stays zero.
  WordSum normalized() const;

  /// "[4] - 2[2,2] + 1/3[2]" in canonical order; "0" when empty; the empty
  /// word prints as "1".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Canonical parser for strings produced by to_string.
WordSum parse_word_sum(const std::string& text);

}  // namespace mdsum
