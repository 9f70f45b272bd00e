#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "mdsum/qseries.hpp"
#include "mdsum/wordsum.hpp"

namespace mdsum {

using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const Rational& x);
/// Scientific notation with the given number of significant digits.
std::string to_decimal(const Real& x, int digits = 30);

/// Smallest error bound mzv() can certify at this precision.
inline constexpr double kMzvErrorFloor = 1e-40;

struct MzvValue {
  Composition index;
  Real value;
  Real error_bound;
};

/// zeta(s_1, ..., s_l) = sum_{n_1 > ... > n_l > 0} prod n_j^{-s_j}.  The
/// iterated integral over [0,1] is split at 1/2, which writes it as a sum of
/// products of multiple polylogarithms at 1/2; those converge like 2^{-n}
/// and their tails are bounded explicitly.  Throws std::invalid_argument for
/// empty or non-admissible indices or target_error < kMzvErrorFloor.
/// Results are cached.
MzvValue mzv(const Composition& c, double target_error = 1e-30);

/// Li_{m_1,...,m_r}(x) for 0 < x <= 1/2 truncated after n_1 = terms, with a
/// bound on the neglected tail.
struct PolylogValue {
  Real value;
  Real tail_bound;
};
PolylogValue multiple_polylog(const std::vector<int>& m, const Real& x, int terms);

/// A combination of zeta values with its numerical value.
struct ZetaCombination {
  std::map<Composition, Rational> zetas;  // the empty index stands for 1
  Real value = 0;
  Real error_bound = 0;
  /// "zeta(4) - 2 zeta(2,2) + ..." or "0".
  std::string to_string() const;
};

/// Z_k on MDA: words of weight exactly k go to their zeta value, lower
/// weights to 0.  Throws std::invalid_argument for non-admissible words or
/// words of weight above k.
ZetaCombination Z_k_symbolic(const WordSum& w, int k);

/// sum_j Z_{k-j}(g_j) T^j for w = sum_j g_j [1]^j with g_j in MDA.
struct ZPolynomial {
  std::vector<ZetaCombination> coefficients;  // index = power of T
  int degree() const;
  Real max_abs() const;
  std::string to_string() const;
};

ZPolynomial Z_k_alg(const WordSum& w, int k);

/// Numerical look at lim_{q->1} (1-q)^k s(q): samples at q = 1 - 2^{-m},
/// m = 2..8, dropped when the truncation of s is visible there, then
/// extrapolated to h = 0 by Neville's scheme.  A diagnostic, not a proof.
struct LimitDiagnostic {
  Real value = 0;
  Real spread = 0;            // difference of the last two extrapolants
  std::vector<int> ladder;    // m values used
  std::vector<Real> samples;  // (1-q)^k s(q) at those points
  bool reliable = false;      // at least three usable points
};

/// Throws std::invalid_argument when s has order < 200.
LimitDiagnostic limit_diagnostic(const QSeries& s, int k);

/// a_n n^{1-k} at n = order/2^j (j = 4..0), a heuristic trend of the
/// coefficient growth.  Reported, never turned into a membership claim.
struct GrowthReport {
  std::vector<int> n;
  std::vector<Real> scaled;
};
GrowthReport coefficient_growth(const QSeries& s, int k);

/// sum over n_1 > ... > n_l > 0 of prod q^{n_j (s_j - 1)} / (1 - q^{n_j})^{s_j}
/// through q^order.  Throws std::invalid_argument for non-admissible c.
QSeries modified_qzeta(const Composition& c, int order);

}  // namespace mdsum
