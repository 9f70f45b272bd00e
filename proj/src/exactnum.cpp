#include "mdsum/exactnum.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace mdsum {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  std::string text(s.front() == '+' ? s.substr(1) : s);
  return Integer(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw std::invalid_argument("bad denominator: '" + std::string(text) + "'");
  Integer den(std::string(den_text), 10);
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_pretty_string(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return to_fraction_string(r);
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational bernoulli(unsigned n) {
  static std::shared_mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  {
    std::shared_lock lock(mutex);
    if (n < table.size()) return table[n];
  }
  std::unique_lock lock(mutex);
  while (table.size() <= n) {
    const unsigned m = static_cast<unsigned>(table.size());
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    Rational acc = 0;
    for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * table[k];
    Rational b = -acc / Rational(m + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[n];
}

Integer EulerianPolynomial::at_one() const {
  Integer s = 0;
  for (const auto& c : coefficients) s += c;
  return s;
}

Integer EulerianPolynomial::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + *it;
  return acc;
}

EulerianPolynomial eulerian_polynomial(unsigned s) {
  EulerianPolynomial p;
  p.s = s;
  if (s == 0) {
    p.coefficients = {Integer(1)};
    return p;
  }
  p.coefficients.resize(s);
  for (unsigned n = 0; n < s; ++n) {
    Integer acc = 0;
    for (unsigned i = 0; i <= n; ++i) {
      Integer term;
      mpz_ui_pow_ui(term.get_mpz_t(), n + 1 - i, s);
      term *= binomial(s + 1, i);
      if (i % 2) acc -= term;
      else acc += term;
    }
    p.coefficients[n] = acc;
  }
  return p;
}

EulerianPolynomial eulerian_polynomial_by_recurrence(unsigned s) {
  std::vector<Integer> cur{Integer(1)};  // P_0 = P_1 = 1
  for (unsigned k = 1; k < s; ++k) {
    // P_{k+1} = P_k (1 + k t) + t (1 - t) P_k'
    std::vector<Integer> next(cur.size() + 1, Integer(0));
    for (std::size_t n = 0; n < cur.size(); ++n) {
      next[n] += cur[n];
      next[n + 1] += cur[n] * k;
      if (n > 0) {
        Integer deriv = cur[n] * static_cast<unsigned long>(n);  // coefficient of t^{n-1} in P'
        next[n] += deriv;
        next[n + 1] -= deriv;
      }
    }
    while (next.size() > 1 && next.back() == 0) next.pop_back();
    cur = std::move(next);
  }
  EulerianPolynomial p;
  p.s = s;
  p.coefficients = std::move(cur);
  return p;
}

Rational lambda_coeff(int a, int b, int j) {
  if (a < 1 || b < 1) throw std::invalid_argument("lambda_coeff: a and b must be positive");
  if (j < 1 || j > a) throw std::invalid_argument("lambda_coeff: j must lie in [1, a]");
  static std::shared_mutex mutex;
  static std::map<std::tuple<int, int, int>, Rational> cache;
  const auto key = std::make_tuple(a, b, j);
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const int m = a + b - j;
  Rational value = Rational(binomial(m - 1, a - j)) * bernoulli(static_cast<unsigned>(m)) /
                   Rational(factorial(static_cast<unsigned>(m)));
  if ((b - 1) % 2) value = -value;
  value.canonicalize();
  std::unique_lock lock(mutex);
  cache.emplace(key, value);
  return value;
}

}  // namespace mdsum
