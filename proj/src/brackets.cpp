#include "mdsum/brackets.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace mdsum {

namespace {

void divisor_dfs(const std::vector<int>& r, std::size_t j, int remaining, int u_bound, Integer weight,
                 Integer& total) {
  const std::size_t l = r.size();
  if (j == l) {
    if (remaining == 0) total += weight;
    return;
  }
  const int slots_left = static_cast<int>(l - j);  // u_j >= slots_left
  for (int u = u_bound - 1; u >= slots_left; --u) {
    // the remaining l-j-1 indices need at least (slots_left-1)*slots_left/2
    const int reserve = (slots_left - 1) * slots_left / 2;
    for (int v = 1; u * v + reserve <= remaining; ++v) {
      Integer pv;
      mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(v), static_cast<unsigned long>(r[j]));
      divisor_dfs(r, j + 1, remaining - u * v, u, weight * pv, total);
    }
  }
}

Integer part_factorials(const Composition& c) {
  Integer d = 1;
  for (int s : c.parts()) d *= factorial(static_cast<unsigned>(s - 1));
  return d;
}

QSeries to_series(const std::vector<Integer>& num, const Integer& den, int order) {
  std::vector<Rational> coeffs(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    coeffs[i] = Rational(num[i], den);
    coeffs[i].canonicalize();
  }
  return QSeries(order, std::move(coeffs));
}

// prod over parts of sum_v v^{s-1} q^{u v}, summed over u_1 > ... > u_l.
// acc[i] holds the partial sum over chains that fill the last i parts with
// the smallest indices; u runs upward and i downward so each u is used once.
std::vector<Integer> bracket_numerators(const Composition& c, int order) {
  const int l = c.length();
  const std::size_t width = static_cast<std::size_t>(order) + 1;
  std::vector<std::vector<Integer>> acc(l + 1, std::vector<Integer>(width, Integer(0)));
  acc[0][0] = 1;
  std::vector<std::vector<Integer>> powers(l);
  for (int i = 0; i < l; ++i) {
    powers[i].resize(width);
    for (int v = 1; v <= order; ++v)
      mpz_ui_pow_ui(powers[i][v].get_mpz_t(), static_cast<unsigned long>(v),
                    static_cast<unsigned long>(c[i] - 1));
  }
  std::vector<int> lowest(l + 1);  // first possibly nonzero index of acc[i]
  for (int i = 0; i <= l; ++i) lowest[i] = i * (i + 1) / 2;
  Integer t;
  for (int u = 1; u <= order; ++u) {
    for (int i = std::min(l, u); i >= 1; --i) {
      const std::vector<Integer>& src = acc[i - 1];
      std::vector<Integer>& dst = acc[i];
      const std::vector<Integer>& pw = powers[l - i];  // part paired with this u
      for (int base = lowest[i - 1]; base + u <= order; ++base) {
        if (src[base] == 0) continue;
        for (int v = 1; base + u * v <= order; ++v) {
          mpz_addmul(dst[base + u * v].get_mpz_t(), src[base].get_mpz_t(), pw[v].get_mpz_t());
        }
      }
    }
  }
  return std::move(acc[l]);
}

struct BracketCache {
  std::shared_mutex mutex;
  std::map<Composition, QSeries> series;
};

BracketCache& cache() {
  static BracketCache instance;
  return instance;
}

}  // namespace

Integer multiple_divisor_sum(const std::vector<int>& r, int n) {
  Integer total = 0;
  if (r.empty() || n < 1) return total;
  divisor_dfs(r, 0, n, n + 1, Integer(1), total);
  return total;
}

QSeries bracket_series(const Composition& c, int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  if (c.empty()) return QSeries::one(order);
  auto& bc = cache();
  {
    std::shared_lock lock(bc.mutex);
    auto it = bc.series.find(c);
    if (it != bc.series.end() && it->second.order() >= order) return it->second.truncated(order);
  }
  QSeries s = to_series(bracket_numerators(c, order), part_factorials(c), order);
  std::unique_lock lock(bc.mutex);
  auto& slot = bc.series[c];
  if (slot.order() < order) slot = s;
  return s;
}

std::vector<Integer> eulerian_kernel_expansion(int s, int order) {
  // x P_{s-1}(x) (1-x)^{-s}, with (1-x)^{-s} = sum_m C(m+s-1, s-1) x^m.
  const EulerianPolynomial p = eulerian_polynomial(static_cast<unsigned>(s - 1));
  std::vector<Integer> out(static_cast<std::size_t>(order) + 1, Integer(0));
  for (std::size_t a = 0; a < p.coefficients.size(); ++a) {
    for (int m = 0; static_cast<int>(a) + 1 + m <= order; ++m)
      out[a + 1 + m] += p.coefficients[a] * binomial(m + s - 1, s - 1);
  }
  return out;
}

QSeries bracket_series_oracle(const Composition& c, int order) {
  if (c.empty()) return QSeries::one(order);
  const int l = c.length();
  std::vector<std::vector<Rational>> kernels(l);
  for (int j = 0; j < l; ++j) {
    auto ints = eulerian_kernel_expansion(c[j], order);
    Rational f(factorial(static_cast<unsigned>(c[j] - 1)));
    kernels[j].resize(ints.size());
    for (std::size_t i = 0; i < ints.size(); ++i) kernels[j][i] = Rational(ints[i]) / f;
  }
  // inner[j] = sum over m > n_j > ... > n_l > 0 of the kernels of parts j..l,
  // advanced one m at a time from the innermost layer outward.
  const std::size_t width = static_cast<std::size_t>(order) + 1;
  std::vector<std::vector<Rational>> inner(l + 1, std::vector<Rational>(width, Rational(0)));
  inner[l][0] = 1;
  for (int m = 1; m <= order; ++m) {
    // S_j(m+1) = S_j(m) + K_{s_j}(q^m) S_{j+1}(m); j ascending so S_{j+1}(m) is still old.
    for (int j = 0; j < l; ++j) {
      const auto& prev = inner[j + 1];
      auto& cur = inner[j];
      for (int base = 0; base + m <= order; ++base) {
        if (prev[base] == 0) continue;
        for (int e = 1; base + m * e <= order; ++e) cur[base + m * e] += prev[base] * kernels[j][e];
      }
    }
  }
  return QSeries(order, std::move(inner[0]));
}

std::vector<Integer> partition_numbers(int order) {
  std::vector<Integer> p(static_cast<std::size_t>(order) + 1, Integer(0));
  p[0] = 1;
  for (int n = 1; n <= order; ++n) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const bool plus = (k % 2) == 1;
      if (plus) p[n] += p[n - g1];
      else p[n] -= p[n - g1];
      if (g2 <= n) {
        if (plus) p[n] += p[n - g2];
        else p[n] -= p[n - g2];
      }
    }
  }
  return p;
}

bool partition_identity_check(int order) {
  QSeries total(order);
  for (int l = 1; l * (l + 1) / 2 <= order; ++l)
    total += bracket_series(Composition(std::vector<int>(l, 1)), order);
  const auto p = partition_numbers(order);
  for (int n = 1; n <= order; ++n)
    if (total[n] != Rational(p[n])) return false;
  return true;
}

void clear_bracket_cache() {
  auto& bc = cache();
  std::unique_lock lock(bc.mutex);
  bc.series.clear();
}

}  // namespace mdsum
