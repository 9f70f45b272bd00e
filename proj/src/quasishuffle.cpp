#include "mdsum/quasishuffle.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>

#include "mdsum/brackets.hpp"

namespace mdsum {

namespace {

Composition rest_of(const Composition& w) {
  return Composition(std::vector<int>(w.parts().begin() + 1, w.parts().end()));
}

void add_prefixed(WordSum& out, int letter, const Rational& scale, const WordSum& tail) {
  for (const auto& [word, c] : tail.terms()) {
    std::vector<int> parts;
    parts.reserve(word.parts().size() + 1);
    parts.push_back(letter);
    parts.insert(parts.end(), word.parts().begin(), word.parts().end());
    out.add(Composition(std::move(parts)), scale * c);
  }
}

}  // namespace

WordSum BracketDiamond::letters(int a, int b) const {
  WordSum out(Composition{a + b});
  for (int j = 1; j <= a; ++j) out.add(Composition{j}, lambda_coeff(a, b, j));
  for (int j = 1; j <= b; ++j) out.add(Composition{j}, lambda_coeff(b, a, j));
  return out;
}

QuasiShuffle::QuasiShuffle(std::shared_ptr<const Diamond> diamond) : diamond_(std::move(diamond)) {}

const QuasiShuffle& QuasiShuffle::brackets() {
  static const QuasiShuffle engine(std::make_shared<BracketDiamond>());
  return engine;
}

WordSum QuasiShuffle::words(const Composition& w, const Composition& v) const {
  if (w.empty()) return WordSum(v);
  if (v.empty()) return WordSum(w);
  auto key = w <= v ? std::make_pair(w, v) : std::make_pair(v, w);
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const int a = w[0];
  const int b = v[0];
  const Composition w_rest = rest_of(w);
  const Composition v_rest = rest_of(v);
  WordSum out;
  add_prefixed(out, a, 1, words(w_rest, v));
  add_prefixed(out, b, 1, words(w, v_rest));
  const WordSum inner = words(w_rest, v_rest);
  const WordSum merged = diamond_->letters(a, b);
  for (const auto& [letter, c] : merged.terms()) add_prefixed(out, letter[0], c, inner);
  std::unique_lock lock(mutex_);
  memo_.emplace(std::move(key), out);
  return out;
}

WordSum QuasiShuffle::operator()(const WordSum& w, const WordSum& v) const {
  WordSum out;
  for (const auto& [x, cx] : w.terms())
    for (const auto& [y, cy] : v.terms()) out.add_scaled(cx * cy, words(x, y));
  return out;
}

WordSum diamond(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("diamond: letters must be positive");
  return BracketDiamond().letters(a, b);
}

WordSum quasi_shuffle(const WordSum& w, const WordSum& v) { return QuasiShuffle::brackets()(w, v); }

WordSum quasi_shuffle(const Composition& w, const Composition& v) { return QuasiShuffle::brackets().words(w, v); }

QSeries evaluate(const WordSum& w, int order) {
  QSeries out(order);
  for (const auto& [word, c] : w.terms()) out.add_scaled(c, bracket_series(word, order));
  return out;
}

bool subalgebra_membership(const WordSum& w, Subalgebra which) {
  for (const auto& [word, c] : w.terms()) {
    if (word.empty()) continue;
    switch (which) {
      case Subalgebra::MDA:
        if (!word.admissible()) return false;
        break;
      case Subalgebra::MDE:
        for (int p : word.parts())
          if (p % 2) return false;
        break;
      case Subalgebra::MDSharp:
        for (int p : word.parts())
          if (p < 2) return false;
        break;
    }
  }
  return true;
}

std::string to_string(Subalgebra which) {
  switch (which) {
    case Subalgebra::MDA: return "MDA";
    case Subalgebra::MDE: return "MDE";
    case Subalgebra::MDSharp: return "MDsharp";
  }
  return "?";
}

Subalgebra parse_subalgebra(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "mda") return Subalgebra::MDA;
  if (t == "mde") return Subalgebra::MDE;
  if (t == "mdsharp" || t == "md#") return Subalgebra::MDSharp;
  throw std::invalid_argument("unknown subalgebra '" + text + "'");
}

int OnePolynomial::degree() const {
  for (int j = static_cast<int>(powers.size()) - 1; j >= 0; --j)
    if (!powers[j].empty()) return j;
  return -1;
}

bool OnePolynomial::is_zero() const { return degree() < 0; }

WordSum OnePolynomial::coefficient(int j) const {
  return j >= 0 && j < static_cast<int>(powers.size()) ? powers[j] : WordSum();
}

OnePolynomial& OnePolynomial::operator+=(const OnePolynomial& other) { return add_scaled(1, other); }

OnePolynomial& OnePolynomial::add_scaled(const Rational& c, const OnePolynomial& other) {
  if (powers.size() < other.powers.size()) powers.resize(other.powers.size());
  for (std::size_t j = 0; j < other.powers.size(); ++j) powers[j].add_scaled(c, other.powers[j]);
  while (!powers.empty() && powers.back().empty()) powers.pop_back();
  return *this;
}

OnePolynomial OnePolynomial::times_t() const {
  OnePolynomial out;
  if (is_zero()) return out;
  out.powers.reserve(powers.size() + 1);
  out.powers.emplace_back();
  out.powers.insert(out.powers.end(), powers.begin(), powers.end());
  return out;
}

bool OnePolynomial::operator==(const OnePolynomial& other) const {
  const int n = static_cast<int>(std::max(powers.size(), other.powers.size()));
  for (int j = 0; j < n; ++j)
    if (coefficient(j) != other.coefficient(j)) return false;
  return true;
}

QSeries OnePolynomial::evaluate(int order) const {
  QSeries out(order);
  const QSeries one = bracket_series(Composition{1}, order);
  QSeries power = QSeries::one(order);
  for (std::size_t j = 0; j < powers.size(); ++j) {
    if (j) power = power * one;
    if (!powers[j].empty()) out += mdsum::evaluate(powers[j], order) * power;
  }
  return out;
}

std::string OnePolynomial::to_string() const {
  std::string s;
  for (int j = degree(); j >= 0; --j) {
    if (powers[j].empty()) continue;
    if (!s.empty()) s += " + ";
    std::string body = powers[j].to_string();
    if (j == 0) s += "(" + body + ")";
    else s += "(" + body + ")*T" + (j > 1 ? "^" + std::to_string(j) : "");
  }
  return s.empty() ? "0" : s;
}

namespace {

struct DecompositionMemo {
  std::shared_mutex mutex;
  std::map<Composition, OnePolynomial> table;
};

DecompositionMemo& decomposition_memo() {
  static DecompositionMemo memo;
  return memo;
}

}  // namespace

OnePolynomial decompose_in_one(const Composition& w) {
  const int m = w.leading_ones();
  if (m == 0) {
    OnePolynomial p;
    p.powers.emplace_back(w);
    return p;
  }
  auto& memo = decomposition_memo();
  {
    std::shared_lock lock(memo.mutex);
    auto it = memo.table.find(w);
    if (it != memo.table.end()) return it->second;
  }
  const Composition shorter = rest_of(w);  // 1^{m-1} u
  WordSum rest = quasi_shuffle(Composition{1}, shorter);
  if (rest.coefficient(w) != m) throw std::logic_error("unexpected multiplicity while peeling leading ones");
  rest.add(w, -Rational(m));
  OnePolynomial p = decompose_in_one(shorter).times_t();
  p.add_scaled(-1, decompose_in_one(rest));
  OnePolynomial out;
  out.add_scaled(Rational(1, m), p);
  std::unique_lock lock(memo.mutex);
  memo.table.emplace(w, out);
  return out;
}

OnePolynomial decompose_in_one(const WordSum& w) {
  OnePolynomial out;
  for (const auto& [word, c] : w.terms()) out.add_scaled(c, decompose_in_one(word));
  return out;
}

}  // namespace mdsum
