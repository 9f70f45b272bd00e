#include "mdsum/mzvlimit.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "mdsum/quasishuffle.hpp"

namespace mdsum {

namespace {

// Words in the letters x = dt/t (false) and y = dt/(1-t) (true).
using Word = std::vector<bool>;

Word word_of(const Composition& c) {
  Word w;
  for (int s : c.parts()) {
    w.insert(w.end(), static_cast<std::size_t>(s - 1), false);
    w.push_back(true);
  }
  return w;
}

// t -> 1-t: reverse and exchange the letters.
Word dual(Word w) {
  std::reverse(w.begin(), w.end());
  w.flip();
  return w;
}

// A word ending in y read as the index of a multiple polylogarithm.
std::vector<int> polylog_index(const Word& w) {
  std::vector<int> m;
  int run = 1;
  for (bool letter : w) {
    if (letter) {
      m.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  return m;
}

int terms_for(std::size_t depth) { return 170 + 3 * static_cast<int>(depth); }

const Real& half() {
  static const Real h = Real(1) / 2;
  return h;
}

PolylogValue polylog_at_half(const Word& w) {
  static std::shared_mutex mutex;
  static std::map<Word, PolylogValue> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
  }
  const std::vector<int> m = polylog_index(w);
  PolylogValue v = multiple_polylog(m, half(), terms_for(m.size()));
  std::unique_lock lock(mutex);
  cache.emplace(w, v);
  return v;
}

std::string term_string(const Rational& c, const std::string& symbol, bool first) {
  Rational a = abs(c);
  a.canonicalize();
  std::string out = first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
  if (a != 1) out += to_pretty_string(a) + (symbol.empty() ? "" : " ");
  else if (symbol.empty()) out += "1";
  return out + symbol;
}

std::string zeta_symbol(const Composition& c) {
  if (c.empty()) return "";
  std::string s = "zeta(";
  for (int i = 0; i < c.length(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

}  // namespace

Real to_real(const Rational& x) {
  Rational y = x;
  y.canonicalize();
  return Real(y.get_num().get_str()) / Real(y.get_den().get_str());
}

std::string to_decimal(const Real& x, int digits) { return x.str(digits, std::ios_base::scientific); }

PolylogValue multiple_polylog(const std::vector<int>& m, const Real& x, int terms) {
  const std::size_t r = m.size();
  if (r == 0) return {Real(1), Real(0)};
  if (x <= 0 || x > half()) throw std::invalid_argument("multiple_polylog needs 0 < x <= 1/2");
  // cum[i] = sum over n_i < n of the chain sums from part i inward
  std::vector<Real> cum(r, Real(0)), term(r);
  Real xn = 1;
  for (int n = 1; n <= terms; ++n) {
    xn *= x;
    const Real inv = Real(1) / n;
    for (std::size_t i = r; i-- > 0;) {
      term[i] = (i + 1 == r ? Real(1) : cum[i + 1]) * pow(inv, m[i]);
    }
    term[0] *= xn;
    for (std::size_t i = 0; i < r; ++i) cum[i] += term[i];
  }
  // inner chain sums are at most (1 + log n)^(r-1); the tail is dominated by
  // a geometric series from n = terms + 1
  const Real n1 = terms + 1;
  const Real growth = pow(1 + log(n1), static_cast<int>(r - 1));
  const Real ratio = x * pow((1 + log(n1 + 1)) / (1 + log(n1)), static_cast<int>(r - 1));
  const Real tail = pow(x, terms + 1) * growth / (1 - ratio);
  return {cum[0], tail};
}

MzvValue mzv(const Composition& c, double target_error) {
  if (c.empty() || !c.admissible())
    throw std::invalid_argument("zeta" + c.to_string() + " diverges: the first part must exceed 1");
  if (target_error < kMzvErrorFloor) throw std::invalid_argument("target error below the working precision");
  static std::shared_mutex mutex;
  static std::map<Composition, MzvValue> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(c);
    if (it != cache.end()) return it->second;
  }
  const Word w = word_of(c);
  Real value = 0, error = 0;
  for (std::size_t j = 0; j <= w.size(); ++j) {
    const PolylogValue a = polylog_at_half(dual(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j))));
    const PolylogValue b = polylog_at_half(Word(w.begin() + static_cast<std::ptrdiff_t>(j), w.end()));
    value += a.value * b.value;
    error += abs(a.value) * b.tail_bound + abs(b.value) * a.tail_bound + a.tail_bound * b.tail_bound;
  }
  // rounding: a few hundred operations per factor at 50 digits
  error += Real(1e-44) * static_cast<double>(w.size() + 1);
  MzvValue out{c, value, error};
  if (out.error_bound > target_error)
    throw std::runtime_error("zeta" + c.to_string() + ": could not reach the requested error bound");
  std::unique_lock lock(mutex);
  cache.emplace(c, out);
  return out;
}

std::string ZetaCombination::to_string() const {
  if (zetas.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, coeff] : zetas) {
    out += term_string(coeff, zeta_symbol(c), first);
    first = false;
  }
  return out;
}

ZetaCombination Z_k_symbolic(const WordSum& w, int k) {
  ZetaCombination out;
  for (const auto& [word, coeff] : w.terms()) {
    if (!word.admissible()) throw std::invalid_argument("Z_k is defined on admissible words; got " + word.to_string());
    if (word.weight() > k)
      throw std::invalid_argument("word " + word.to_string() + " has weight above " + std::to_string(k));
    if (word.weight() < k) continue;
    out.zetas[word] = coeff;
    if (word.empty()) {
      out.value += to_real(coeff);
      continue;
    }
    const MzvValue z = mzv(word);
    const Real c = to_real(coeff);
    out.value += c * z.value;
    out.error_bound += abs(c) * z.error_bound;
  }
  return out;
}

int ZPolynomial::degree() const {
  for (int j = static_cast<int>(coefficients.size()) - 1; j >= 0; --j)
    if (!coefficients[j].zetas.empty()) return j;
  return -1;
}

Real ZPolynomial::max_abs() const {
  Real m = 0;
  for (const auto& c : coefficients) m = std::max(m, Real(abs(c.value)));
  return m;
}

std::string ZPolynomial::to_string() const {
  std::string out;
  for (int j = static_cast<int>(coefficients.size()) - 1; j >= 0; --j) {
    if (coefficients[j].zetas.empty()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coefficients[j].to_string() + ")";
    if (j > 0) out += j == 1 ? " T" : " T^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

ZPolynomial Z_k_alg(const WordSum& w, int k) {
  if (w.weight() > k) throw std::invalid_argument("Z_k^alg needs weight <= k");
  const OnePolynomial p = decompose_in_one(w);
  ZPolynomial out;
  for (std::size_t j = 0; j < p.powers.size(); ++j)
    out.coefficients.push_back(Z_k_symbolic(p.powers[j], k - static_cast<int>(j)));
  return out;
}

LimitDiagnostic limit_diagnostic(const QSeries& s, int k) {
  const int order = s.order();
  if (order < 200) throw std::invalid_argument("limit_diagnostic needs order >= 200");
  std::vector<Real> coeffs(static_cast<std::size_t>(order) + 1);
  Real tail_size = 0;
  for (int n = 0; n <= order; ++n) {
    coeffs[n] = to_real(s[n]);
    if (n > order - 10) tail_size = std::max(tail_size, Real(abs(coeffs[n])));
  }
  LimitDiagnostic d;
  std::vector<Real> hs;
  for (int m = 2; m <= 8; ++m) {
    const Real h = pow(Real(2), -m);
    const Real q = 1 - h;
    Real value = 0;
    for (int n = order; n >= 0; --n) value = value * q + coeffs[n];
    const Real scale = pow(h, k);
    // rough size of what the truncation dropped, allowing polynomial growth
    const Real dropped = tail_size * pow(q, order + 1) / pow(h, 3) * scale;
    if (dropped > Real(1e-10)) continue;
    d.ladder.push_back(m);
    d.samples.push_back(value * scale);
    hs.push_back(h);
  }
  const std::size_t n = hs.size();
  if (n == 0) return d;
  // Neville: table[i] holds the interpolant through points i..i+level at h = 0
  std::vector<Real> table = d.samples;
  Real previous = table.back();
  for (std::size_t level = 1; level < n; ++level) {
    previous = table[n - level];
    for (std::size_t i = 0; i + level < n; ++i)
      table[i] = (hs[i + level] * table[i] - hs[i] * table[i + 1]) / (hs[i + level] - hs[i]);
  }
  d.value = table[0];
  d.spread = n > 1 ? Real(abs(table[0] - previous)) : Real(abs(table[0]));
  d.reliable = n >= 3;
  return d;
}

GrowthReport coefficient_growth(const QSeries& s, int k) {
  GrowthReport g;
  for (int j = 4; j >= 0; --j) {
    const int n = s.order() >> j;
    if (n < 1 || (!g.n.empty() && g.n.back() == n)) continue;
    g.n.push_back(n);
    g.scaled.push_back(to_real(s[n]) * pow(Real(n), 1 - k));
  }
  return g;
}

QSeries modified_qzeta(const Composition& c, int order) {
  if (c.empty() || !c.admissible()) throw std::invalid_argument("modified q-zeta values need an admissible index");
  const int l = c.length();
  const std::size_t width = static_cast<std::size_t>(order) + 1;
  // acc[i]: chains for the last i parts with indices below the current n
  std::vector<std::vector<Integer>> acc(l + 1, std::vector<Integer>(width, Integer(0)));
  acc[0][0] = 1;
  for (int n = 1; n <= order; ++n) {
    for (int i = std::min(l, n); i >= 1; --i) {
      const int s = c[l - i];
      // q^{n(s-1)} / (1-q^n)^s = sum_m C(m+s-1, s-1) q^{n(m+s-1)}
      std::vector<std::pair<int, Integer>> factor;
      for (int m = 0; n * (m + s - 1) <= order; ++m) factor.emplace_back(n * (m + s - 1), binomial(m + s - 1, s - 1));
      const std::vector<Integer>& src = acc[i - 1];
      std::vector<Integer>& dst = acc[i];
      for (int base = 0; base <= order; ++base) {
        if (src[base] == 0) continue;
        for (const auto& [shift, coeff] : factor) {
          if (base + shift > order) break;
          mpz_addmul(dst[base + shift].get_mpz_t(), src[base].get_mpz_t(), coeff.get_mpz_t());
        }
      }
    }
  }
  std::vector<Rational> out(width);
  for (std::size_t i = 0; i < width; ++i) out[i] = Rational(acc[l][i]);
  return QSeries(order, std::move(out));
}

}  // namespace mdsum
