#include "doctest.h"

#include <algorithm>
#include <random>

#include "mdsum/brackets.hpp"
#include "mdsum/derivation.hpp"
#include "mdsum/linrel.hpp"
#include "mdsum/quasishuffle.hpp"

using namespace mdsum;

namespace {

WordSum ws(const std::string& text) { return parse_word_sum(text); }

ExactMatrix random_matrix(std::mt19937& rng, int rows, int cols, int rank_cap) {
  // product of rows x r and r x cols with small entries, so the rank is at most r
  std::uniform_int_distribution<int> entry(-4, 4);
  const int r = std::min({rows, cols, rank_cap});
  ExactMatrix a(rows, r), b(r, cols), m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < r; ++j) {
      a(i, j) = Rational(entry(rng), 1 + std::abs(entry(rng)));
      a(i, j).canonicalize();
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) b(i, j) = entry(rng);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      for (int t = 0; t < r; ++t) m(i, j) += a(i, t) * b(t, j);
  return m;
}

// Black entries of the Fil table of MDA, rows k = 0..8.
const std::vector<std::vector<long>> kFilMda = {
    {1}, {1, 1}, {1, 2, 2}, {1, 3, 4, 4}, {1, 4, 6, 7, 7}, {1, 5, 9, 12, 13, 13}, {1, 6, 12, 18}, {1, 7, 16}, {1, 8, 20}};

// Black entries of d'(k,l), rows k = 0..8.
const std::vector<std::vector<long>> kDprime = {
    {1, 0}, {0, 0}, {0, 1, 0}, {0, 1, 1, 0}, {0, 1, 1, 1, 0}, {0, 1, 2, 2, 1, 0}, {0, 1, 2, 3}, {0, 1, 3}, {0, 1, 3}};

}  // namespace

TEST_CASE("rank of small matrices") {
  // first eight coefficients of [2],[3],[4],[2,1],[2,2],[3,1],[2,1,1]
  const std::vector<Composition> rows = {{2}, {3}, {4}, {2, 1}, {2, 2}, {3, 1}, {2, 1, 1}};
  ExactMatrix m(7, 8);
  for (int i = 0; i < 7; ++i) {
    const QSeries s = bracket_series(rows[i], 8);
    for (int n = 1; n <= 8; ++n) m(i, n - 1) = s[n];
  }
  CHECK(rank(m) == 6);
  CHECK(kernel_basis(m).size() == 2);
  CHECK(rank(ExactMatrix::identity(5)) == 5);
  CHECK(rank(ExactMatrix(3, 4)) == 0);
  CHECK(rank(ExactMatrix()) == 0);

  const auto k = kernel_basis(ExactMatrix(2, 3));
  REQUIRE(k.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(k[i][j] == (i == j ? 1 : 0));
}

TEST_CASE("rank ignores row order and scaling") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 25; ++trial) {
    const int rows = 2 + trial % 6, cols = 3 + (trial * 7) % 5;
    const ExactMatrix m = random_matrix(rng, rows, cols, 1 + trial % 4);
    const int r = rank(m);
    std::vector<int> perm(rows);
    for (int i = 0; i < rows; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    ExactMatrix p(rows, cols);
    for (int i = 0; i < rows; ++i) {
      Rational scale(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 5) + 1);
      scale.canonicalize();
      for (int j = 0; j < cols; ++j) p(i, j) = m(perm[i], j) * (i % 2 ? scale : Rational(-scale));
    }
    CHECK(rank(p) == r);

    IntegerEchelon e(cols);
    for (int i = 0; i < rows; ++i) e.add(integer_row(m.row(i)));
    CHECK(e.rank() == r);

    const auto kernel = kernel_basis(m);
    CHECK(static_cast<int>(kernel.size()) == cols - r);
    int last_lead = -1;
    for (const auto& v : kernel) {
      int lead = 0;
      while (v[lead] == 0) ++lead;
      CHECK(v[lead] == 1);
      CHECK(lead > last_lead);
      last_lead = lead;
      for (int i = 0; i < rows; ++i) {
        Rational dot = 0;
        for (int j = 0; j < cols; ++j) dot += m(i, j) * v[j];
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("dimension lower bounds") {
  CHECK(dim_lower_bound(Space::MDA, 4, 3, 60) == 7);
  CHECK(dim_lower_bound(Space::MD, 2, 2, 60) == 4);
  CHECK(dim_lower_bound(Space::MD, 6, 6, 200) == 51);
  CHECK_THROWS_AS(dim_lower_bound(Space::MD, 6, 3, 5), std::invalid_argument);
  long previous = 0;
  for (int order : {6, 10, 20, 40}) {
    const long d = dim_lower_bound(Space::MDA, 6, 3, order);
    CHECK(d >= previous);
    previous = d;
  }
  CHECK(previous == 18);
}

TEST_CASE("Fil and gr tables of MDA") {
  DimensionTable fil = fil_table(Space::MDA, 8, 8, 260);
  for (int k = 0; k < static_cast<int>(kFilMda.size()); ++k)
    for (int l = 0; l < static_cast<int>(kFilMda[k].size()); ++l) {
      CAPTURE(k);
      CAPTURE(l);
      CHECK(fil.at(k, l)->value == kFilMda[k][l]);
    }
  for (const auto& [key, cell] : fil.cells) {
    const auto [k, l] = key;
    CHECK(cell.certainty == Certainty::LowerBound);
    if (l > 0) CHECK(cell.value >= fil.at(k, l - 1)->value);
    if (k > l) CHECK(cell.value >= fil.at(k - 1, l)->value);
  }

  const DimensionTable gr = gr_from_fil(fil);
  for (int k = 0; k < static_cast<int>(kDprime.size()); ++k)
    for (int l = 0; l < static_cast<int>(kDprime[k].size()) && l <= k; ++l) {
      CAPTURE(k);
      CAPTURE(l);
      CHECK(gr.at(k, l)->value == kDprime[k][l]);
    }

  const auto dprime = dprime_from_gr(gr);
  DimensionTargets weight{8, 8, Space::MDA, TableKind::GrWeight};
  const DimensionTable dk = dims_from_dprime(dprime, weight);
  const std::vector<long> expected = {1, 0, 1, 2, 3, 6, 10, 18, 32};
  for (int k = 0; k <= 8; ++k) CHECK(dk.at(k, -1)->value == expected[k]);
  CHECK(dprime_by_weight(8, 260) == expected);

  // rebuilding Fil of MDA from d' returns the rank table
  const DimensionTable again = dims_from_dprime(dprime, {8, 8, Space::MDA, TableKind::Fil});
  for (const auto& [key, cell] : fil.cells) CHECK(again.at(key.first, key.second)->value == cell.value);
}

TEST_CASE("tables from d'") {
  std::map<std::pair<int, int>, long> dprime;
  for (int k = 0; k <= 5; ++k)
    for (int l = 0; l < static_cast<int>(kDprime[k].size()); ++l) dprime[{k, l}] = kDprime[k][l];
  const DimensionTable fil = dims_from_dprime(dprime, {5, 5, Space::MDA, TableKind::Fil});
  for (int k = 0; k <= 5; ++k)
    for (int l = 0; l < static_cast<int>(kFilMda[k].size()); ++l) {
      CHECK(fil.at(k, l)->value == kFilMda[k][l]);
      CHECK(fil.at(k, l)->certainty == Certainty::Exact);
    }

  // MD from MDA, against the rank table of MD
  const DimensionTable md = dims_from_dprime(dprime, {5, 5, Space::MD, TableKind::Fil});
  const DimensionTable md_rank = fil_table(Space::MD, 5, 5, 120);
  for (const auto& [key, cell] : md_rank.cells) CHECK(md.at(key.first, key.second)->value == cell.value);
  CHECK(md.at(3, 3)->value == 8);
  CHECK(md.at(4, 4)->value == 15);
  CHECK(md.at(5, 5)->value == 28);

  // gr^W_k(MD) = Fil^W_k(MDA)
  const DimensionTable grw_md = dims_from_dprime(dprime, {5, 5, Space::MD, TableKind::GrWeight});
  const DimensionTable filw_mda = dims_from_dprime(dprime, {5, 5, Space::MDA, TableKind::FilWeight});
  for (int k = 0; k <= 5; ++k) CHECK(grw_md.at(k, -1)->value == filw_mda.at(k, -1)->value);

  // a missing cell is reported, not read as zero
  auto partial = dprime;
  partial.erase({5, 2});
  const DimensionTable gap = dims_from_dprime(partial, {5, 5, Space::MDA, TableKind::Fil});
  CHECK(gap.at(5, 2)->certainty == Certainty::Unknown);
  CHECK(gap.at(5, 1)->certainty == Certainty::Exact);
  CHECK(gap.to_csv().find("MDA,Fil,5,2,,unknown") != std::string::npos);

  std::map<std::pair<int, int>, long> zeros;
  for (int k = 0; k <= 4; ++k)
    for (int l = 0; l <= k; ++l) zeros[{k, l}] = 0;
  zeros[{0, 0}] = 1;
  for (const auto& [key, cell] : dims_from_dprime(zeros, {4, 4, Space::MDA, TableKind::Fil}).cells) {
    CHECK(cell.value == 1);
    CHECK(cell.certainty == Certainty::Exact);
  }
  // MD then only has the powers of [1]
  for (const auto& [key, cell] : dims_from_dprime(zeros, {4, 4, Space::MD, TableKind::Fil}).cells)
    CHECK(cell.value == 1 + std::min(key.first, key.second));
}

TEST_CASE("csv layout") {
  const DimensionTable t = fil_table(Space::MD, 1, 1, 20);
  CHECK(t.to_csv() == "space,kind,k,l,value,certainty\nMD,Fil,0,0,1,lower_bound\nMD,Fil,1,0,1,lower_bound\n"
                      "MD,Fil,1,1,2,lower_bound\n");
}

TEST_CASE("relation search") {
  const auto r4 = relation_search(Space::MDA, 4, 2, 200);
  REQUIRE(r4.size() == 1);
  CHECK(r4[0].body() == ws("[4] - 2[2,2] + 2[3,1] - [3] + 1/3[2]"));
  CHECK(r4[0].status() == RelationStatus::Candidate);
  CHECK(r4[0].provenance() == Provenance::NumericKernel);
  CHECK(relation_search(Space::MDA, 3, 2, 200).empty());

  const auto r8 = relation_search(Space::MD, 8, 2, 300);
  CHECK(in_span(ws("[8] - 1/40[4] + 1/252[2] - 12[4,4]"), r8));
  CHECK_FALSE(in_span(ws("[8] - 1/40[4] + 1/252[2] - 11[4,4]"), r8));
  for (const auto& r : r8) CHECK(r.verified_order() == 300);
}

TEST_CASE("relations among brackets of one weight and length") {
  const auto h9 = homogeneous_relation_search(9, 3, 300);
  REQUIRE(h9.size() == 1);
  WordSum scaled = h9[0].body();
  scaled *= Rational(9, 5);
  CHECK(scaled == ws("9/5[2,3,4] + 2[2,4,3] - [2,5,2] + 2[3,5,1] - 2[3,1,5] - 1/5[3,2,4] - [3,3,3] - [3,4,2] "
                     "+ 3/5[4,4,1] - 3/5[4,1,4] - 11/10[4,2,3] + 1/2[4,3,2] + 4/5[5,1,3] - 4/5[5,3,1] - [6,1,2] "
                     "+ [6,2,1]"));
  CHECK(homogeneous_relation_search(10, 3, 300).size() == 1);
  CHECK(homogeneous_relation_search(8, 2, 300).empty());
  for (int k = 3; k <= 8; ++k) CHECK(homogeneous_relation_search(k, 3, 200).empty());
}

TEST_CASE("conjectured generating series") {
  const auto a = conjecture_expansion(16);
  const std::vector<long> expected = {1, 0, 1, 2, 3, 6, 10, 18, 32, 56, 100, 176, 312, 552, 976, 1728, 3056};
  for (int k = 0; k <= 16; ++k) CHECK(a[k] == expected[k]);
  const auto ok = conjecture_series_check(8, {1, 0, 1, 2, 3, 6, 10, 18, 32});
  CHECK(ok.all_match());
  const auto bad = conjecture_series_check(8, {1, 0, 1, 2, 3, 6, 10, 17, 32});
  CHECK(bad.mismatches == std::vector<int>{7});
}

TEST_CASE("relation counts from derivation identities") {
  const auto pool = proven_relation_pool(8, 60, false);
  for (const auto& r : pool) {
    CHECK(r.status() == RelationStatus::Proven);
    CHECK(evaluate(r.body(), 150).is_zero());
  }
  const auto counts = derived_relation_counts(pool, 8, 4);
  for (int k = 1; k <= 8; ++k) CHECK(counts.at({k, 1}) == 0);
  const std::vector<long> length2 = {0, 0, 1, 1, 2, 2, 3};  // k = 2..8
  for (int k = 2; k <= 8; ++k) CHECK(counts.at({k, 2}) == length2[k - 2]);
  CHECK(counts.at({4, 3}) == 0);
  CHECK(counts.at({5, 3}) == 1);
  CHECK(counts.at({6, 3}) == 3);
  CHECK(counts.at({5, 4}) == 0);

  // counts plus d' give the number of admissible words
  const DimensionTable gr = gr_from_fil(fil_table(Space::MDA, 6, 6, 200));
  DimensionTable fil = fil_table(Space::MDA, 6, 6, 200);
  certify(fil, pool);
  for (const auto& [key, cell] : fil.cells) CHECK(cell.certainty == Certainty::Exact);
  const auto all_counts = derived_relation_counts(pool, 6, 6);
  for (int k = 2; k <= 6; ++k)
    for (int l = 1; l < k; ++l)
      CHECK(all_counts.at({k, l}) + gr.at(k, l)->value == count_generators(k, l, true));
}
