#include "doctest.h"

#include "mdsum/brackets.hpp"
#include "mdsum/derivation.hpp"
#include "mdsum/quasishuffle.hpp"

using namespace mdsum;

namespace {
WordSum ws(const std::string& text) { return parse_word_sum(text); }
}  // namespace

TEST_CASE("length-one derivatives") {
  CHECK(d_len1(1, 2).expression == ws("[3] + 1/2[2] - [2,1]"));
  CHECK(d_len1(2, 2).expression == ws("[4] + 2[3] - 1/6[2] - 4[3,1]"));
  CHECK(d_len1(1, 3).expression == ws("2[4] + [3] + 1/6[2] - 2[2,2] - 2[3,1]"));
  CHECK(d_len1(3, 1).expression == d_len1(1, 3).expression);
  CHECK_THROWS_AS(d_len1(1, 1), std::invalid_argument);
  for (int s = 1; s <= 6; ++s) CHECK(d_general(Composition{s}).expression == d_len1(2, s).expression);
}

TEST_CASE("length-two closed form") {
  CHECK(d_len2(1, 1).expression == ws("[3,1] + [1,3] + 3/2[2,1] + 1/2[1,2] - 2[2,1,1] - [1,2,1]"));
  CHECK(d_len2(1, 2).expression == ws("-1/6[1,2] + 2[1,3] + [1,4] + 3/2[2,2] + [3,2] - 4[1,3,1] - [2,1,2] - 2[2,2,1]"));
  CHECK(d_len2(2, 1).expression == ws("-1/6[2,1] + 1/2[2,2] + [2,3] + 4[3,1] + [4,1] - [2,2,1] - 6[3,1,1]"));
  CHECK(d_len2(2, 2).expression == ws("-1/3[2,2] + 2[2,3] + [2,4] + 4[3,2] + [4,2] - 4[2,3,1] - 4[3,1,2] - 4[3,2,1]"));
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) CHECK(d_general(Composition{a, b}).expression == d_len2(a, b).expression);
}

TEST_CASE("general derivative") {
  CHECK(d_general(Composition{2, 1, 1}).expression ==
        ws("-1/6[2,1,1] + 1/2[2,1,2] - [2,1,2,1] + [2,1,3] + 3/2[2,2,1] - 2[2,2,1,1] + [2,3,1] + 6[3,1,1] "
           "- 8[3,1,1,1] + [4,1,1]"));
  for (const auto& c : compositions_up_to(5, 5)) {
    const DerivativeExpression e = d_general(c, 80);
    CHECK(e.expression.weight() <= c.weight() + 2);
    CHECK(e.expression.max_length() <= c.length() + 1);
    if (c.admissible()) CHECK(subalgebra_membership(e.expression, Subalgebra::MDA));
  }
  CHECK(d_general(Composition{}).expression.empty());
}

TEST_CASE("relations from splits") {
  const auto r4 = split_relations(4);
  REQUIRE(r4.size() == 1);
  CHECK(r4[0].body() == ws("[4] - 2[2,2] + 2[3,1] - [3] + 1/3[2]"));
  CHECK(r4[0].status() == RelationStatus::Proven);
  CHECK(r4[0].provenance() == Provenance::DerivationSplit);
  CHECK(split_relations(5).size() == 1);
  const auto r6 = split_relations(6);
  REQUIRE(r6.size() == 2);
  CHECK(r6[1].body() == ws("[6] - 3/5[5] + 1/10[4] - 6/5[2,4] - 6/5[3,3] + 6/5[5,1]"));
  CHECK_THROWS_AS(split_relations(3), std::invalid_argument);
}

TEST_CASE("relations from the Leibniz rule") {
  CHECK(leibniz_relations({1}, {1}).body() == split_relations(4)[0].body());
  CHECK(leibniz_relations({1}, {2}).body() ==
        ws("[5] - 2[3,1,1] + [2,2,1] - [2,3] - 2[3,2] + [4,1] - 1/2[4] - 1/2[2,2] + 2[3,1] - 1/6[2,1] + 1/12[2] "
           "- 1/12[3]"));
  CHECK(leibniz_relations({1}, {3}).body() ==
        ws("[6] - 1/120[2] + 1/24[3] - 1/2[5] - 1/4[2,2] + [2,2,2] - 1/2[2,3] + [2,3,1] - [2,4] - 1/12[3,1] "
           "- 2[3,1,2] + [3,2] + 3[4,1] - 3[4,1,1] - 5[4,2] + [5,1]"));
  Relation r = leibniz_relations({2}, {2, 1}, 60);
  r.verify(150);
  CHECK(r.verified_order() == 150);
}

TEST_CASE("relation status is fixed by provenance") {
  CHECK_THROWS_AS(Relation::proven(ws("[2]"), Provenance::NumericKernel, 10), std::invalid_argument);
  Relation bogus = Relation::candidate(ws("[2] - [3]"), 0);
  CHECK(bogus.status() == RelationStatus::Candidate);
  CHECK_THROWS_AS(bogus.verify(10), VerificationError);
}
