#include "doctest.h"

#include <boost/math/constants/constants.hpp>

#include "mdsum/brackets.hpp"
#include "mdsum/derivation.hpp"
#include "mdsum/linrel.hpp"
#include "mdsum/modular.hpp"
#include "mdsum/mzvlimit.hpp"
#include "mdsum/quasishuffle.hpp"

using namespace mdsum;

namespace {
WordSum ws(const std::string& text) { return parse_word_sum(text); }
Real z(const Composition& c) { return mzv(c).value; }
bool close(const Real& a, const Real& b, double tol) { return abs(a - b) < tol; }
}  // namespace

TEST_CASE("zeta values against an independent summation") {
  const Real pi = boost::math::constants::pi<Real>();
  CHECK(close(z({2}), pi * pi / 6, 1e-40));
  CHECK(close(z({4}), pow(pi, 4) / 90, 1e-40));
  // Hurwitz-zeta summation in mpmath, 30 digits
  const std::vector<std::pair<Composition, const char*>> frozen = {
      {{2, 1}, "1.20205690315959428539973816151"},    {{3, 1}, "0.270580808427784547879000924135"},
      {{2, 2}, "0.811742425283353643637002772406"},   {{4, 4}, "0.0836731130164953616148904365424"},
      {{5, 7}, "0.0369728668539997496559686187866"},  {{7, 5}, "0.00836639918876867807817029942592"},
      {{9, 3}, "0.00201547801088202946783053145858"}, {{3, 2}, "0.228810397603353759768746148942"},
  };
  for (const auto& [c, value] : frozen) {
    CAPTURE(c.to_string());
    CHECK(close(z(c), Real(value), 1e-28));
  }
  const MzvValue v = mzv({5, 3, 2}, 1e-35);
  CHECK(v.error_bound <= 1e-35);
  CHECK(v.index == Composition{5, 3, 2});
}

TEST_CASE("zeta rejects divergent indices and impossible targets") {
  CHECK_THROWS_AS(mzv({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(mzv(Composition{}), std::invalid_argument);
  CHECK_THROWS_AS(mzv({3}, 1e-45), std::invalid_argument);
}

TEST_CASE("classical relations among zeta values") {
  CHECK(abs(z({3}) - z({2, 1})) < 1e-8);
  CHECK(abs(z({4}) - 4 * z({3, 1})) < 1e-8);
  CHECK(abs(z({4}) - Real(4) / 3 * z({2, 2})) < 1e-8);
  CHECK(abs(z({8}) - 12 * z({4, 4})) < 1e-8);
  CHECK(abs(Real(5197) / 691 * z({12}) - 168 * z({5, 7}) - 150 * z({7, 5}) - 28 * z({9, 3})) < 1e-6);
  CHECK(abs(z({2, 1, 1}) - z({4})) < 1e-30);
}

TEST_CASE("stuffle and shuffle products of single zetas") {
  for (int a = 2; a <= 6; ++a)
    for (int b = 2; b <= 6; ++b) {
      const MzvValue x = mzv({a}), y = mzv({b}), ab = mzv({a, b}), ba = mzv({b, a}), s = mzv({a + b});
      const Real bound = x.error_bound * abs(y.value) + y.error_bound * abs(x.value) + ab.error_bound +
                         ba.error_bound + s.error_bound + Real(1e-45);
      CHECK(abs(x.value * y.value - ab.value - ba.value - s.value) <= bound);
    }
  for (int s1 = 2; s1 <= 4; ++s1)
    for (int s2 = 2; s2 <= 4; ++s2) {
      Real rhs = 0;
      for (int a = 2; a < s1 + s2; ++a)
        rhs += Real(Integer(binomial(a - 1, s1 - 1) + binomial(a - 1, s2 - 1)).get_str()) * z({a, s1 + s2 - a});
      CHECK(abs(z({s1}) * z({s2}) - rhs) < 1e-6);
    }
}

TEST_CASE("Z_k on word sums") {
  const ZetaCombination d1 = Z_k_symbolic(d_general({1}).expression, 3);
  CHECK(d1.to_string() == "zeta(3) - zeta(2,1)");
  CHECK(abs(d1.value) < 1e-30);

  const ZetaCombination w8 = Z_k_symbolic(weight8_relation(60).body(), 8);
  CHECK(abs(w8.value) < 1e-8);

  const ZetaCombination low = Z_k_symbolic(ws("[3,2]"), 6);
  CHECK(low.zetas.empty());
  CHECK(low.value == 0);
  CHECK(low.to_string() == "0");

  CHECK_THROWS_AS(Z_k_symbolic(ws("[1,2]"), 3), std::invalid_argument);
  CHECK_THROWS_AS(Z_k_symbolic(ws("[5]"), 4), std::invalid_argument);
}

TEST_CASE("Z_k kills proven admissible relations") {
  int checked = 0;
  for (const Relation& r : proven_relation_pool(8, 60, false)) {
    bool admissible = true;
    for (const auto& [word, coeff] : r.body().terms()) admissible = admissible && word.admissible();
    if (!admissible) continue;
    CAPTURE(r.body().to_string());
    CHECK(abs(Z_k_symbolic(r.body(), r.weight()).value) < 1e-6);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("Z_k^alg") {
  const ZPolynomial p = Z_k_alg(d_len2(1, 1).expression, 4);
  CHECK(p.degree() == 1);
  CHECK(p.coefficients[1].to_string() == "zeta(3) - zeta(2,1)");
  for (const auto& c : p.coefficients) CHECK(abs(c.value) < 1e-6);

  const ZPolynomial adm = Z_k_alg(ws("2[4] - [3,1]"), 4);
  CHECK(adm.degree() == 0);
  CHECK(adm.coefficients[0].zetas == Z_k_symbolic(ws("2[4] - [3,1]"), 4).zetas);

  // derivatives lie in the kernel
  for (const Composition& c : std::vector<Composition>{{2}, {1, 2}, {2, 1}, {3, 1}}) {
    const ZPolynomial d = Z_k_alg(d_general(c).expression, c.weight() + 2);
    CHECK(d.degree() <= c.weight() + 2);
    CHECK(d.max_abs() < 1e-6);
  }

  // the cusp form written in length two: the constant term is the weight-12 relation
  const ZPolynomial delta = Z_k_alg(delta_length_two_form(), 12);
  CHECK(delta.max_abs() < 1e-6);
  const ZetaCombination& c0 = delta.coefficients[0];
  const Rational scale = c0.zetas.at(Composition{5, 7}) / -168;
  CHECK(c0.zetas.at(Composition{12}) == scale * Rational(5197, 691));
  CHECK(c0.zetas.at(Composition{7, 5}) == scale * -150);
  CHECK(c0.zetas.at(Composition{9, 3}) == scale * -28);
}

TEST_CASE("limit diagnostic") {
  const QSeries two = bracket_series({2}, 3000);
  const LimitDiagnostic l2 = limit_diagnostic(two, 2);
  CHECK(l2.reliable);
  CHECK(abs(l2.value - z({2})) < 1e-6);
  CHECK(l2.spread < 1e-6);
  CHECK(l2.ladder.size() == l2.samples.size());

  CHECK(abs(limit_diagnostic(two, 3).value) < 1e-5);
  CHECK(abs(limit_diagnostic(q_d_dq(two), 4).value) < 1e-5);

  // at order 200 only the coarsest point survives, and the result says so
  const LimitDiagnostic coarse = limit_diagnostic(bracket_series({2}, 200), 2);
  CHECK_FALSE(coarse.reliable);
  CHECK_THROWS_AS(limit_diagnostic(bracket_series({2}, 100), 2), std::invalid_argument);
}

TEST_CASE("coefficient growth report") {
  const GrowthReport g = coefficient_growth(bracket_series({4}, 512), 4);
  CHECK(g.n == std::vector<int>{32, 64, 128, 256, 512});
  // sigma_3(n)/(6 n^3) stays between 1/6 and zeta(3)/6
  for (const Real& x : g.scaled) CHECK((x >= Real(1) / 6 && x <= z({3}) / 6));
}

TEST_CASE("modified q-zeta values") {
  CHECK(modified_qzeta({4}, 100) == evaluate(ws("[4] - [3] + 1/3[2]"), 100));
  for (int l = 1; l <= 4; ++l) {
    const Composition twos(std::vector<int>(static_cast<std::size_t>(l), 2));
    CHECK(modified_qzeta(twos, 80) == bracket_series(twos, 80));
  }
  const QSeries m21 = modified_qzeta({2, 1}, 99);
  CHECK(m21 == evaluate(ws("[2,1] - [2]"), 99) + evaluate(d_general({1}).expression, 99));
  CHECK_THROWS_AS(modified_qzeta({1, 3}, 10), std::invalid_argument);
}
