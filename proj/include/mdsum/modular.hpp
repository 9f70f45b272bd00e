#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdsum/qseries.hpp"
#include "mdsum/relation.hpp"
#include "mdsum/wordsum.hpp"

namespace mdsum {

/// G_k = -B_k / (2 k!) + [k].
struct EisensteinSeries {
  int weight = 0;
  QSeries series;
  Rational constant() const { return series[0]; }
  /// G_k as a word sum: the constant on the empty word plus [k].
  WordSum as_word_sum() const;
};

/// Throws std::invalid_argument for odd k or k < 2.
EisensteinSeries eisenstein(int k, int order);

struct IdentityCheck {
  std::string identity;
  int order = 0;
  bool pass = false;
  int first_failing_coefficient = -1;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
  /// First failing check, if any.
  const IdentityCheck* first_failure() const;
};

/// dG2 = 5G4 - 2G2^2, dG4 = 14G6 - 8G2G4, dG6 = 120/7 G4^2 - 12G2G6,
/// G4^2 = 7/6 G8 and the weight-8 bracket relation.  Throws
/// VerificationError naming the first failing identity; order >= 20.
IdentityReport verify_quasi_modular_identities(int order);

/// [4]*[4] + 1/720[4] - 7/6[8] from G4^2 = 7/6 G8, normalized.
Relation weight8_relation(int verify_order);

/// The pairs (a,b) for which Delta has a representation with [a], [b] and
/// the weight-12 double brackets.
const std::array<std::pair<int, int>, 6>& delta_pairs();

struct DeltaRepresentation {
  int a = 0;
  int b = 0;
  Rational coeff_a;        // of [a]
  Rational coeff_b;        // of [b]
  Rational sigma_coeff_a;  // of (a-1)! [a] = sum sigma_{a-1}(n) q^n
  Rational sigma_coeff_b;
  std::map<std::pair<int, int>, Rational> double_coeffs;  // d_{m,n}, m + n = 12
  WordSum body;                                           // equals Delta
  int verified_order = 0;
};

/// (2^b + 50) / (2^b - 2^a).
Rational delta_length_one_coefficient(int a, int b);

/// Solves Delta = x[a] + y[b] + sum_{m+n=12} d_{m,n}[m,n] exactly from the
/// first order coefficients.  The closed form fixes the length-one part in
/// terms of plain divisor sums: x / (a-1)! = (2^b+50)/(2^b-2^a), and the
/// same with a and b exchanged for y.  Throws std::invalid_argument for
/// other pairs or order < 60, VerificationError if the solution is missing,
/// not unique, or its length-one part differs from the closed form.
DeltaRepresentation delta_representation(int a, int b, int order);

/// Coefficients c_i with sum_i c_i rep_i = target over words and
/// sum_i c_i = delta_coefficient, or nullopt if none exist.
std::optional<std::vector<Rational>> delta_combination(const std::vector<DeltaRepresentation>& reps,
                                                       const WordSum& target, const Rational& delta_coefficient);

/// 168[5,7] + 150[7,5] + 28[9,3] + 1/1408[2] - 83/14400[4] + 187/6048[6]
/// - 7/120[8] - 5197/691[12].
WordSum delta_length_two_form();
/// The multiple of Delta that delta_length_two_form equals: -1/(2^6 5 691).
Rational delta_length_two_scale();

struct DeltaSpanReport {
  int solution_dimension = 0;  // affine dimension of all solutions over [1..12], [m,n]
  int span_dimension = 0;      // affine dimension spanned by the given representations
  bool consistent = false;
  bool covers() const { return consistent && solution_dimension == span_dimension; }
};

/// Compares the representations with every solution of
/// Delta = sum_{j<=12} x_j [j] + sum_{m+n=12} d_{m,n} [m,n].
DeltaSpanReport delta_span_check(const std::vector<DeltaRepresentation>& reps, int order);

struct CongruenceReport {
  int order = 0;
  std::vector<int> failures;
  bool all_pass() const { return failures.empty(); }
};

/// tau(n) = sigma_11(n) mod 691 for 1 <= n <= order.
CongruenceReport tau_congruence(int order);

}  // namespace mdsum
