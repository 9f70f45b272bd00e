#include "mdsum/derivation.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "mdsum/brackets.hpp"
#include "mdsum/quasishuffle.hpp"

namespace mdsum {

namespace {

std::vector<int> splice(const std::vector<int>& prefix, std::initializer_list<int> middle, const std::vector<int>& suffix) {
  std::vector<int> out = prefix;
  out.insert(out.end(), middle.begin(), middle.end());
  out.insert(out.end(), suffix.begin(), suffix.end());
  return out;
}

void verify_expression(DerivativeExpression& e, int order) {
  const QSeries lhs = q_d_dq(bracket_series(e.source, order));
  const QSeries rhs = evaluate(e.expression, order);
  const int n = first_difference(lhs, rhs);
  if (n >= 0)
    throw VerificationError("derivative expression for d" + e.source.to_string() + " (" + to_string(e.method) +
                            ") disagrees with q d/dq at q^" + std::to_string(n));
  e.verified_order = order;
}

}  // namespace

std::string to_string(DerivativeMethod m) {
  switch (m) {
    case DerivativeMethod::Len1Split: return "len1-split";
    case DerivativeMethod::Len2ClosedForm: return "len2-closed-form";
    case DerivativeMethod::GeneralExtraction: return "general-extraction";
  }
  return "?";
}

DerivativeExpression d_len1(int s1, int s2, int verify_order) {
  if (s1 < 1 || s2 < 1 || s1 + s2 <= 2) throw std::invalid_argument("d_len1 needs s1, s2 >= 1 and s1 + s2 > 2");
  const int s = s1 + s2 - 2;
  const Rational c(binomial(s, s1 - 1));
  WordSum rhs = quasi_shuffle(Composition{s1}, Composition{s2});
  rhs.add({s + 1}, c);
  for (int a = 1; a <= s + 1; ++a) {
    const int b = s + 2 - a;
    rhs.add({a, b}, -Rational(binomial(a - 1, s1 - 1) + binomial(a - 1, s2 - 1)));
  }
  rhs *= Rational(s) / c;
  DerivativeExpression e{Composition{s}, std::move(rhs), DerivativeMethod::Len1Split, s1, 0};
  verify_expression(e, verify_order);
  return e;
}

DerivativeExpression d_len2(int s1, int s2, int verify_order) {
  if (s1 < 1 || s2 < 1) throw std::invalid_argument("d_len2 needs positive parts");
  WordSum e = quasi_shuffle(Composition{2}, Composition{s1, s2});
  e.add({s1 + 1, s2, 1}, -s1);
  e.add({s1, s2 + 1, 1}, -s2);
  e.add({s1, s2, 2}, -1);
  for (int a = 1; a <= s1 + 1; ++a) e.add({a, s1 + 2 - a, s2}, -(a - 1));
  for (int a = 1; a <= s2; ++a) e.add({s1 + 1, a, s2 + 1 - a}, -s1);
  for (int a = 1; a <= s2 + 1; ++a) e.add({s1, a, s2 + 2 - a}, -(a - 1));
  e.add({s1 + 1, s2}, 2 * s1);
  e.add({s1, s2 + 1}, s2);
  DerivativeExpression out{Composition{s1, s2}, std::move(e), DerivativeMethod::Len2ClosedForm, 0, 0};
  verify_expression(out, verify_order);
  return out;
}

WordSum d_general_expression(const Composition& c) {
  if (c.empty()) return WordSum();
  const std::vector<int>& s = c.parts();
  const int l = c.length();
  WordSum e = quasi_shuffle(Composition{2}, c);

  // D(A): the X-derivative of T(X+Y_1, ..., X+Y_l) X-paired with a new last slot.
  e.add(Composition(splice(s, {2}, {})), -1);
  for (int i = 0; i < l; ++i) {
    std::vector<int> shifted = s;
    shifted[i] += 1;
    shifted.push_back(1);
    e.add(Composition(std::move(shifted)), -s[i]);
  }

  // D(B_j): slot j splits into two parts; either an earlier slot carries the
  // derivative, or the split slot itself does (weight a-1 on its left half).
  for (int j = 0; j < l; ++j) {
    const std::vector<int> suffix(s.begin() + j + 1, s.end());
    for (int i = 0; i < j; ++i) {
      std::vector<int> prefix(s.begin(), s.begin() + j);
      prefix[i] += 1;
      for (int a = 1; a <= s[j]; ++a) e.add(Composition(splice(prefix, {a, s[j] + 1 - a}, suffix)), -s[i]);
    }
    const std::vector<int> prefix(s.begin(), s.begin() + j);
    for (int a = 2; a <= s[j] + 1; ++a) e.add(Composition(splice(prefix, {a, s[j] + 2 - a}, suffix)), -(a - 1));
  }

  for (int i = 0; i < l; ++i) e.add(c.with_part_added(i, 1), Rational((l - i) * s[i]));
  return e;
}

DerivativeExpression d_general(const Composition& c, int verify_order) {
  struct Memo {
    std::shared_mutex mutex;
    std::map<Composition, DerivativeExpression> table;
  };
  static Memo memo;
  {
    std::shared_lock lock(memo.mutex);
    auto it = memo.table.find(c);
    if (it != memo.table.end() && it->second.verified_order >= verify_order) return it->second;
  }
  DerivativeExpression e{c, d_general_expression(c), DerivativeMethod::GeneralExtraction, 0, 0};
  verify_expression(e, verify_order);
  std::unique_lock lock(memo.mutex);
  auto& slot = memo.table[c];
  if (slot.verified_order < e.verified_order) slot = e;
  return e;
}

WordSum derive(const WordSum& w) {
  return w.map_words([](const Composition& c) { return d_general_expression(c); });
}

std::vector<Relation> split_relations(int k, int verify_order) {
  if (k < 4) throw std::invalid_argument("split_relations needs k >= 4");
  std::vector<Relation> out;
  const WordSum first = d_len1(1, k - 1, verify_order).expression;
  for (int s1 = 2; s1 <= k / 2; ++s1) {
    WordSum body = d_len1(s1, k - s1, verify_order).expression - first;
    body = body.normalized();
    require_zero_series(body, verify_order, "split relation");
    out.push_back(Relation::proven(std::move(body), Provenance::DerivationSplit, verify_order));
  }
  return out;
}

Relation leibniz_relations(const Composition& w, const Composition& v, int verify_order) {
  const WordSum dw = d_general(w, verify_order).expression;
  const WordSum dv = d_general(v, verify_order).expression;
  WordSum body = quasi_shuffle(dw, WordSum(v)) + quasi_shuffle(WordSum(w), dv);
  const WordSum product = quasi_shuffle(w, v);
  for (const auto& [word, c] : product.terms()) body.add_scaled(-c, d_general(word, verify_order).expression);
  body = body.normalized();
  require_zero_series(body, verify_order, "Leibniz relation");
  return Relation::proven(std::move(body), Provenance::Leibniz, verify_order);
}

}  // namespace mdsum
