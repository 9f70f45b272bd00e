#pragma once

// Exact arithmetic and the combinatorial number families used throughout:
// Bernoulli numbers, Eulerian polynomials, binomials and the lambda
// coefficients of the bracket product.
//
// Bernoulli convention: B_n are the Taylor coefficients of X/(e^X - 1), so
// B_1 = -1/2.  Every lambda coefficient depends on this sign.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mdsum {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "num/den" or "num" (decimal, optional leading '-').  Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den" with a positive denominator, e.g. "3/1", "-1/2".
std::string to_fraction_string(const Rational& value);

/// Human-readable form: "3", "-1/2".
std::string to_pretty_string(const Rational& value);

Integer factorial(unsigned n);

/// C(n, k); zero whenever k < 0, k > n or n < 0.
Integer binomial(long n, long k);

/// B_n with B_1 = -1/2, from sum_{k=0}^{n} C(n+1, k) B_k = 0.  Memoized.
Rational bernoulli(unsigned n);

struct EulerianPolynomial {
  unsigned s = 0;
  /// coefficients[n] = A_{s,n}; degree s-1 (the constant 1 for s = 0).
  std::vector<Integer> coefficients;

  Integer at_one() const;
  Integer evaluate(const Integer& t) const;
};

/// Closed form A_{s,n} = sum_{i=0}^{n} (-1)^i C(s+1, i) (n+1-i)^s.
EulerianPolynomial eulerian_polynomial(unsigned s);

/// Same polynomial from P_{k+1}(t) = P_k(t)(1 + k t) + t(1 - t) P_k'(t).
EulerianPolynomial eulerian_polynomial_by_recurrence(unsigned s);

/// lambda^j_{a,b} = (-1)^{b-1} C(a+b-j-1, a-j) B_{a+b-j} / (a+b-j)!.
/// Requires a, b >= 1 and 1 <= j <= a; throws std::invalid_argument otherwise.
/// Memoized in a process-wide table.
Rational lambda_coeff(int a, int b, int j);

}  // namespace mdsum
