#include "doctest.h"

#include "mdsum/composition.hpp"
#include "mdsum/exactnum.hpp"

using namespace mdsum;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK_THROWS_AS(parse_rational("7/-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_fraction_string(Rational(-2, 4)) == "-1/2");
  CHECK(to_pretty_string(Rational(6, 3)) == "2");
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(7) == 0);
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (unsigned n = 1; n <= 40; ++n) {
    Rational acc = 0;
    for (unsigned k = 0; k <= n; ++k) acc += Rational(binomial(n + 1, k)) * bernoulli(k);
    CHECK(acc == 0);
  }
  for (unsigned n = 3; n <= 41; n += 2) CHECK(bernoulli(n) == 0);
}

TEST_CASE("eulerian polynomials") {
  CHECK(eulerian_polynomial(0).coefficients == std::vector<Integer>{1});
  CHECK(eulerian_polynomial(1).coefficients == std::vector<Integer>{1});
  CHECK(eulerian_polynomial(3).coefficients == std::vector<Integer>{1, 4, 1});
  CHECK(eulerian_polynomial(4).coefficients == std::vector<Integer>{1, 11, 11, 1});
  for (unsigned s = 0; s <= 12; ++s) {
    const auto p = eulerian_polynomial(s);
    CHECK(p.at_one() == factorial(s));
    CHECK(p.coefficients == eulerian_polynomial_by_recurrence(s).coefficients);
    for (const auto& c : p.coefficients) CHECK(c > 0);
  }
}

TEST_CASE("lambda coefficients") {
  CHECK(lambda_coeff(1, 1, 1) == Rational(-1, 2));
  CHECK(lambda_coeff(4, 4, 4) == Rational(1, 720));
  CHECK(lambda_coeff(4, 4, 1) == 0);
  CHECK_THROWS_AS(lambda_coeff(3, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(lambda_coeff(3, 2, 4), std::invalid_argument);
  for (int a = 2; a <= 10; ++a)
    for (int b = 2; b <= 10; ++b) CHECK(lambda_coeff(a, b, 1) + lambda_coeff(b, a, 1) == 0);
}

TEST_CASE("generator counts") {
  CHECK(count_generators(4, 2, false) == 3);
  CHECK(count_generators(4, 2, true) == 2);
  CHECK(count_generators(0, 0, true) == 1);
  CHECK(count_generators(3, 0, false) == 0);
  CHECK(count_generators(1, 1, true) == 0);
  for (int k = 2; k <= 15; ++k) CHECK(count_generators(k, 1, true) == 1);
  for (int k = 0; k <= 15; ++k)
    for (int l = 0; l <= k; ++l) {
      CHECK(count_generators(k, l, false) == static_cast<long>(compositions(k, l, false).size()));
      CHECK(count_generators(k, l, true) == static_cast<long>(compositions(k, l, true).size()));
    }
}

TEST_CASE("composition basics") {
  const Composition c{4, 2};
  CHECK(c.weight() == 6);
  CHECK(c.length() == 2);
  CHECK(c.admissible());
  CHECK_FALSE(Composition{1, 3}.admissible());
  CHECK(Composition{1, 1, 2}.leading_ones() == 2);
  CHECK(parse_composition("4,2") == c);
  CHECK(parse_composition("") == Composition());
  CHECK_THROWS_AS(parse_composition("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_composition("2,,1"), std::invalid_argument);
  CHECK(c.to_string() == "[4,2]");
  // weight, then length, then lex
  CHECK(Composition{3} < Composition{1, 2});
  CHECK(Composition{1, 1} < Composition{3});
  CHECK(Composition{3} < Composition{2, 1});
  CHECK(Composition{1, 2} < Composition{2, 1});
  const auto all = compositions_up_to(5, 5);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
}
