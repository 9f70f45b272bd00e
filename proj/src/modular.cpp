#include "mdsum/modular.hpp"

#include <stdexcept>

#include "mdsum/brackets.hpp"
#include "mdsum/linrel.hpp"
#include "mdsum/quasishuffle.hpp"

namespace mdsum {

namespace {

IdentityCheck compare(const std::string& name, const QSeries& lhs, const QSeries& rhs, int order) {
  const int n = first_difference(lhs.truncated(order), rhs.truncated(order));
  return IdentityCheck{name, order, n < 0, n};
}

Rational power_of_two(int e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return Rational(p);
}

std::vector<Composition> delta_columns(int a, int b) {
  std::vector<Composition> cols{Composition{a}, Composition{b}};
  for (int m = 1; m <= 11; ++m) cols.push_back(Composition{m, 12 - m});
  return cols;
}

}  // namespace

WordSum EisensteinSeries::as_word_sum() const {
  WordSum w(Composition{weight});
  w.add(Composition{}, constant());
  return w;
}

EisensteinSeries eisenstein(int k, int order) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("Eisenstein series need even weight >= 2");
  QSeries s = bracket_series(Composition{k}, order);
  Rational c = -bernoulli(k) / (2 * Rational(factorial(static_cast<unsigned>(k))));
  c.canonicalize();
  s += QSeries::constant(order, c);
  return EisensteinSeries{k, std::move(s)};
}

bool IdentityReport::all_pass() const { return first_failure() == nullptr; }

const IdentityCheck* IdentityReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

Relation weight8_relation(int verify_order) {
  WordSum body = quasi_shuffle(Composition{4}, Composition{4});
  body.add({4}, Rational(1, 720));
  body.add({8}, Rational(-7, 6));
  body = body.normalized();
  require_zero_series(body, verify_order, "weight-8 relation from G4^2 = 7/6 G8");
  return Relation::proven(std::move(body), Provenance::Modular, verify_order);
}

IdentityReport verify_quasi_modular_identities(int order) {
  if (order < 20) throw std::invalid_argument("quasi-modular identities need order >= 20");
  const QSeries g2 = eisenstein(2, order).series;
  const QSeries g4 = eisenstein(4, order).series;
  const QSeries g6 = eisenstein(6, order).series;
  const QSeries g8 = eisenstein(8, order).series;
  IdentityReport report;
  report.checks.push_back(compare("dG2 = 5G4 - 2G2^2", q_d_dq(g2), 5 * g4 - 2 * (g2 * g2), order));
  report.checks.push_back(compare("dG4 = 14G6 - 8G2G4", q_d_dq(g4), 14 * g6 - 8 * (g2 * g4), order));
  report.checks.push_back(
      compare("dG6 = 120/7 G4^2 - 12G2G6", q_d_dq(g6), Rational(120, 7) * (g4 * g4) - 12 * (g2 * g6), order));
  report.checks.push_back(compare("G4^2 = 7/6 G8", g4 * g4, Rational(7, 6) * g8, order));
  const WordSum relwt8 = parse_word_sum("[8] - 1/40[4] + 1/252[2] - 12[4,4]");
  report.checks.push_back(compare("[8] = 1/40[4] - 1/252[2] + 12[4,4]", evaluate(relwt8, order), QSeries(order), order));
  if (const IdentityCheck* bad = report.first_failure())
    throw VerificationError(bad->identity + " fails at q^" + std::to_string(bad->first_failing_coefficient));
  return report;
}

const std::array<std::pair<int, int>, 6>& delta_pairs() {
  static const std::array<std::pair<int, int>, 6> pairs = {{{2, 4}, {4, 6}, {6, 8}, {8, 10}, {10, 11}, {11, 12}}};
  return pairs;
}

Rational delta_length_one_coefficient(int a, int b) {
  Rational c = (power_of_two(b) + 50) / (power_of_two(b) - power_of_two(a));
  c.canonicalize();
  return c;
}

DeltaRepresentation delta_representation(int a, int b, int order) {
  bool known = false;
  for (const auto& p : delta_pairs()) known = known || p == std::make_pair(a, b);
  if (!known) throw std::invalid_argument("no Delta representation for (" + std::to_string(a) + "," + std::to_string(b) + ")");
  if (order < 60) throw std::invalid_argument("Delta representations need order >= 60");

  const auto cols = delta_columns(a, b);
  const int n = static_cast<int>(cols.size());
  const QSeries delta = eta24(order);
  ExactMatrix m(order, n + 1);
  for (int j = 0; j < n; ++j) {
    const QSeries s = bracket_series(cols[j], order);
    for (int q = 1; q <= order; ++q) m(q - 1, j) = s[q];
  }
  for (int q = 1; q <= order; ++q) m(q - 1, n) = -delta[q];
  const auto kernel = kernel_basis(m);
  const std::string where = "Delta representation (" + std::to_string(a) + "," + std::to_string(b) + ")";
  if (kernel.size() != 1 || kernel[0][n] == 0)
    throw VerificationError(where + ": expected a unique solution, kernel dimension " + std::to_string(kernel.size()));

  const Rational scale = 1 / kernel[0][n];
  DeltaRepresentation rep{a, b, {}, {}, {}, {}, {}, {}, 0};
  for (int j = 0; j < n; ++j) {
    Rational x = kernel[0][j] * scale;
    x.canonicalize();
    rep.body.add(cols[j], x);
    if (j == 0) rep.coeff_a = x;
    else if (j == 1) rep.coeff_b = x;
    else rep.double_coeffs[{cols[j][0], cols[j][1]}] = x;
  }
  rep.sigma_coeff_a = rep.coeff_a / Rational(factorial(static_cast<unsigned>(a - 1)));
  rep.sigma_coeff_b = rep.coeff_b / Rational(factorial(static_cast<unsigned>(b - 1)));
  rep.sigma_coeff_a.canonicalize();
  rep.sigma_coeff_b.canonicalize();
  if (rep.sigma_coeff_a != delta_length_one_coefficient(a, b) || rep.sigma_coeff_b != delta_length_one_coefficient(b, a))
    throw VerificationError(where + ": length-one coefficients differ from (2^b+50)/(2^b-2^a)");
  const int bad = first_difference(evaluate(rep.body, order), delta);
  if (bad >= 0) throw VerificationError(where + ": residual nonzero at q^" + std::to_string(bad));
  rep.verified_order = order;
  return rep;
}

std::optional<std::vector<Rational>> delta_combination(const std::vector<DeltaRepresentation>& reps,
                                                       const WordSum& target, const Rational& delta_coefficient) {
  std::map<Composition, int> row;
  auto index = [&](const Composition& c) {
    auto [it, inserted] = row.emplace(c, static_cast<int>(row.size()));
    return it->second;
  };
  for (const auto& r : reps)
    for (const auto& [w, c] : r.body.terms()) index(w);
  for (const auto& [w, c] : target.terms()) index(w);
  const int n = static_cast<int>(reps.size());
  const int words = static_cast<int>(row.size());
  // unknowns c_1..c_n and a last column for the right-hand side
  ExactMatrix m(words + 1, n + 1);
  for (int i = 0; i < n; ++i) {
    for (const auto& [w, c] : reps[i].body.terms()) m(row[w], i) = c;
    m(words, i) = 1;
  }
  for (const auto& [w, c] : target.terms()) m(row[w], n) = -c;
  m(words, n) = -delta_coefficient;
  for (const auto& v : kernel_basis(m)) {
    if (v[n] == 0) continue;
    std::vector<Rational> out(n);
    for (int i = 0; i < n; ++i) {
      out[i] = v[i] / v[n];
      out[i].canonicalize();
    }
    return out;
  }
  return std::nullopt;
}

WordSum delta_length_two_form() {
  return parse_word_sum(
      "168[5,7] + 150[7,5] + 28[9,3] + 1/1408[2] - 83/14400[4] + 187/6048[6] - 7/120[8] - 5197/691[12]");
}

Rational delta_length_two_scale() { return Rational(-1, 64 * 5 * 691); }

DeltaSpanReport delta_span_check(const std::vector<DeltaRepresentation>& reps, int order) {
  std::vector<Composition> cols;
  for (int j = 1; j <= 12; ++j) cols.push_back(Composition{j});
  for (int m = 1; m <= 11; ++m) cols.push_back(Composition{m, 12 - m});
  const int n = static_cast<int>(cols.size());
  const QSeries delta = eta24(order);
  ExactMatrix system(order, n), augmented(order, n + 1);
  for (int j = 0; j < n; ++j) {
    const QSeries s = bracket_series(cols[j], order);
    for (int q = 1; q <= order; ++q) system(q - 1, j) = augmented(q - 1, j) = s[q];
  }
  for (int q = 1; q <= order; ++q) augmented(q - 1, n) = delta[q];
  DeltaSpanReport report;
  const int r = rank(system);
  report.consistent = rank(augmented) == r;
  report.solution_dimension = n - r;
  if (reps.size() > 1) {
    // differences to the first representation span the directions
    ExactMatrix diffs(static_cast<int>(reps.size()) - 1, n);
    for (std::size_t i = 1; i < reps.size(); ++i)
      for (int j = 0; j < n; ++j)
        diffs(static_cast<int>(i) - 1, j) = reps[i].body.coefficient(cols[j]) - reps[0].body.coefficient(cols[j]);
    report.span_dimension = rank(diffs);
  }
  return report;
}

CongruenceReport tau_congruence(int order) {
  if (order < 2) throw std::invalid_argument("tau congruence needs order >= 2");
  const QSeries delta = eta24(order);
  CongruenceReport report{order, {}};
  for (int n = 1; n <= order; ++n) {
    Rational t = delta[n];
    t.canonicalize();
    const Integer diff = t.get_num() - multiple_divisor_sum({11}, n);
    if (diff % 691 != 0) report.failures.push_back(n);
  }
  return report;
}

}  // namespace mdsum
