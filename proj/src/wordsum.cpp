#include "mdsum/wordsum.hpp"

#include <cctype>
#include <stdexcept>

namespace mdsum {

WordSum::WordSum(const Composition& word, const Rational& coeff) { add(word, coeff); }

WordSum::WordSum(std::initializer_list<std::pair<Composition, Rational>> terms) {
  for (const auto& [w, c] : terms) add(w, c);
}

Rational WordSum::coefficient(const Composition& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WordSum::add(const Composition& word, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

WordSum& WordSum::operator+=(const WordSum& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

WordSum& WordSum::operator-=(const WordSum& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

WordSum& WordSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

WordSum& WordSum::add_scaled(const Rational& c, const WordSum& other) {
  if (c == 0) return *this;
  for (const auto& [w, x] : other.terms_) add(w, c * x);
  return *this;
}

int WordSum::weight() const { return terms_.empty() ? 0 : terms_.rbegin()->first.weight(); }

int WordSum::min_weight() const { return terms_.empty() ? 0 : terms_.begin()->first.weight(); }

int WordSum::max_length() const {
  int l = 0;
  for (const auto& [w, c] : terms_) l = std::max(l, w.length());
  return l;
}

WordSum WordSum::map_words(const std::function<WordSum(const Composition&)>& f) const {
  WordSum out;
  for (const auto& [w, c] : terms_) out.add_scaled(c, f(w));
  return out;
}

WordSum WordSum::filter(const std::function<bool(const Composition&)>& keep) const {
  WordSum out;
  for (const auto& [w, c] : terms_)
    if (keep(w)) out.terms_.emplace(w, c);
  return out;
}

const std::pair<const Composition, Rational>& WordSum::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  // Canonical order is weight, length, lex; the first term of the top weight
  // is therefore the shortest, lex-smallest one of that weight.
  const int top = weight();
  for (const auto& entry : terms_)
    if (entry.first.weight() == top) return entry;
  return *terms_.rbegin();
}

WordSum WordSum::normalized() const {
  if (terms_.empty()) return *this;
  WordSum out = *this;
  out *= Rational(1) / leading_term().second;
  return out;
}

std::string WordSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    const Rational mag = abs(c);
    if (s.empty()) s += (c < 0 ? "-" : "");
    else s += (c < 0 ? " - " : " + ");
    if (w.empty()) {
      s += to_pretty_string(mag);
      continue;
    }
    if (mag != 1) s += to_pretty_string(mag);
    s += w.to_string();
  }
  return s;
}

WordSum parse_word_sum(const std::string& text) {
  WordSum out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.substr(i) == "0") return out;
  while (i < text.size()) {
    skip();
    Rational sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    }
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    Rational coeff = start == i ? Rational(1) : parse_rational(text.substr(start, i - start));
    skip();
    Composition word;
    if (i < text.size() && text[i] == '[') {
      auto close = text.find(']', i);
      if (close == std::string::npos) throw std::invalid_argument("unterminated bracket in '" + text + "'");
      word = parse_composition(text.substr(i + 1, close - i - 1));
      i = close + 1;
    } else if (start == i) {
      throw std::invalid_argument("malformed word sum '" + text + "'");
    }
    out.add(word, sign * coeff);
    skip();
  }
  return out;
}

}  // namespace mdsum
