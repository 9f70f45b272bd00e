#include "doctest.h"

#include "mdsum/brackets.hpp"
#include "mdsum/quasishuffle.hpp"

using namespace mdsum;

namespace {

WordSum ws(const std::string& text) { return parse_word_sum(text); }

// The explicit expansion of [a]*[b,c] from the quasi-shuffle recursion.
WordSum length_one_times_two(int a, int b, int c) {
  WordSum out;
  out.add({a, b, c}, 1);
  out.add({b, a, c}, 1);
  out.add({b, c, a}, 1);
  out.add({a + b, c}, 1);
  out.add({b, a + c}, 1);
  for (int j = 1; j <= a; ++j) out.add({b, j}, lambda_coeff(a, c, j));
  for (int j = 1; j <= c; ++j) out.add({b, j}, lambda_coeff(c, a, j));
  for (int j = 1; j <= a; ++j) out.add({j, c}, lambda_coeff(a, b, j));
  for (int j = 1; j <= b; ++j) out.add({j, c}, lambda_coeff(b, a, j));
  return out;
}

}  // namespace

TEST_CASE("word sum text round trip") {
  const WordSum w = ws("[4] - 2[2,2] + 2[3,1] - [3] + 1/3[2] + 5");
  CHECK(w.coefficient({2, 2}) == -2);
  CHECK(w.coefficient({}) == 5);
  CHECK(parse_word_sum(w.to_string()) == w);
  CHECK(w.weight() == 4);
  CHECK(w.max_length() == 2);
  CHECK(ws("0").empty());
  CHECK((w - w).empty());
}

TEST_CASE("normalization picks the top-weight shortest word") {
  const WordSum w = ws("2[4] - 4[2,2] + 4[3,1] - 2[3] + 2/3[2]");
  CHECK(w.leading_term().first == Composition{4});
  CHECK(w.normalized() == ws("[4] - 2[2,2] + 2[3,1] - [3] + 1/3[2]"));
}

TEST_CASE("diamond products") {
  CHECK(diamond(1, 1) == ws("[2] - [1]"));
  CHECK(diamond(1, 2) == ws("[3] - 1/2[2]"));
  for (int a = 2; a <= 8; ++a)
    for (int b = 2; b <= 8; ++b) {
      CHECK(diamond(a, b).coefficient({1}) == 0);
      CHECK(diamond(a, b) == diamond(b, a));
    }
}

TEST_CASE("quasi-shuffle examples") {
  CHECK(quasi_shuffle(Composition{1}, Composition{1}) == ws("2[1,1] + [2] - [1]"));
  CHECK(quasi_shuffle(Composition{1}, Composition{2}) == ws("[1,2] + [2,1] + [3] - 1/2[2]"));
  CHECK(quasi_shuffle(Composition{1}, Composition{2, 1}) == ws("[1,2,1] + 2[2,1,1] - 3/2[2,1] + [2,2] + [3,1]"));
  CHECK(quasi_shuffle(Composition{4}, Composition{4}) == ws("2[4,4] + [8] + 1/360[4] - 1/1512[2]"));
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c) CHECK(quasi_shuffle(Composition{a}, Composition{b, c}) == length_one_times_two(a, b, c));
  const WordSum w = ws("[3,1] - 2[2]");
  CHECK(quasi_shuffle(w, WordSum(Composition{})) == w);
}

TEST_CASE("commutativity, associativity and filtrations") {
  const auto words = compositions_up_to(4, 4);
  for (const auto& x : words)
    for (const auto& y : words) {
      const WordSum p = quasi_shuffle(x, y);
      CHECK(p == quasi_shuffle(y, x));
      CHECK(p.weight() <= x.weight() + y.weight());
      CHECK(p.max_length() <= x.length() + y.length());
    }
  const auto small = compositions_up_to(3, 3);
  for (const auto& x : small)
    for (const auto& y : small)
      for (const auto& z : small) {
        const WordSum lhs = quasi_shuffle(quasi_shuffle(WordSum(x), WordSum(y)), WordSum(z));
        const WordSum rhs = quasi_shuffle(WordSum(x), quasi_shuffle(WordSum(y), WordSum(z)));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("evaluation is multiplicative") {
  const auto words = compositions_up_to(4, 4);
  for (std::size_t i = 0; i < words.size(); i += 2)
    for (std::size_t j = 1; j < words.size(); j += 3) {
      const QSeries lhs = evaluate(quasi_shuffle(words[i], words[j]), 40);
      CHECK(lhs == bracket_series(words[i], 40) * bracket_series(words[j], 40));
    }
  CHECK(evaluate(ws("[4] - 2[2,2] + 2[3,1] - [3] + 1/3[2]"), 200).is_zero());
  CHECK(evaluate(WordSum(Composition{2}), 10) == bracket_series(Composition{2}, 10));
}

TEST_CASE("subalgebras are closed") {
  const WordSum z21(Composition{2, 1});
  CHECK(subalgebra_membership(z21, Subalgebra::MDA));
  CHECK_FALSE(subalgebra_membership(z21, Subalgebra::MDSharp));
  CHECK_FALSE(subalgebra_membership(WordSum(Composition{1, 2}), Subalgebra::MDA));
  const auto admissible = compositions_up_to(5, 3, true);
  for (const auto& x : admissible)
    for (const auto& y : admissible) {
      if (x.weight() + y.weight() > 8) continue;
      const WordSum p = quasi_shuffle(x, y);
      CHECK(subalgebra_membership(p, Subalgebra::MDA));
      if (subalgebra_membership(WordSum(x), Subalgebra::MDE) && subalgebra_membership(WordSum(y), Subalgebra::MDE))
        CHECK(subalgebra_membership(p, Subalgebra::MDE));
      if (subalgebra_membership(WordSum(x), Subalgebra::MDSharp) &&
          subalgebra_membership(WordSum(y), Subalgebra::MDSharp))
        CHECK(subalgebra_membership(p, Subalgebra::MDSharp));
    }
}

TEST_CASE("decomposition in powers of [1]") {
  const OnePolynomial adm = decompose_in_one(WordSum(Composition{3, 1}));
  CHECK(adm.degree() == 0);
  CHECK(adm.coefficient(0) == WordSum(Composition{3, 1}));

  const OnePolynomial one = decompose_in_one(WordSum(Composition{1}));
  CHECK(one.degree() == 1);
  CHECK(one.coefficient(1) == WordSum(Composition{}));
  CHECK(one.coefficient(0).empty());

  const OnePolynomial p11 = decompose_in_one(WordSum(Composition{1, 1}));
  CHECK(p11.coefficient(2) == ws("1/2"));
  CHECK(p11.coefficient(1) == ws("1/2"));
  CHECK(p11.coefficient(0) == ws("-1/2[2]"));

  const OnePolynomial p12 = decompose_in_one(WordSum(Composition{1, 2}));
  CHECK(p12.coefficient(1) == ws("[2]"));
  CHECK(p12.coefficient(0) == ws("-[2,1] - [3] + 1/2[2]"));

  CHECK(decompose_in_one(WordSum()).is_zero());
  for (const auto& w : compositions_up_to(5, 5)) {
    const OnePolynomial p = decompose_in_one(WordSum(w));
    for (const auto& g : p.powers) CHECK(subalgebra_membership(g, Subalgebra::MDA));
    CHECK(p.evaluate(60) == bracket_series(w, 60));
  }
}
