#include "mdsum/composition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mdsum {

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Composition::leading_ones() const {
  int m = 0;
  while (m < length() && parts_[m] == 1) ++m;
  return m;
}

Composition Composition::with_part_added(std::size_t i, int delta) const {
  std::vector<int> p = parts_;
  p.at(i) += delta;
  return Composition(std::move(p));
}

std::strong_ordering Composition::operator<=>(const Composition& other) const {
  if (auto c = weight_ <=> other.weight_; c != 0) return c;
  if (auto c = parts_.size() <=> other.parts_.size(); c != 0) return c;
  return parts_ <=> other.parts_;
}

std::string Composition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << c.to_string(); }

Composition parse_composition(std::string_view text) {
  std::vector<int> parts;
  while (!text.empty() && (text.front() == ' ' || text.front() == '[')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == ']')) text.remove_suffix(1);
  if (text.empty()) return Composition();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view tok = text.substr(pos, next - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty() || tok.size() > 6) throw std::invalid_argument("bad composition part: '" + std::string(tok) + "'");
    int v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad composition part: '" + std::string(tok) + "'");
      v = v * 10 + (c - '0');
    }
    if (v < 1) throw std::invalid_argument("composition parts must be positive");
    parts.push_back(v);
    pos = next + 1;
  }
  return Composition(std::move(parts));
}

Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> p = a.parts();
  p.insert(p.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(p));
}

namespace {

void enumerate(int remaining, int slots, std::vector<int>& prefix, bool admissible,
               std::vector<Composition>& out) {
  if (slots == 0) {
    if (remaining == 0) out.emplace_back(prefix);
    return;
  }
  const int lo = (prefix.empty() && admissible) ? 2 : 1;
  for (int p = lo; p <= remaining - (slots - 1); ++p) {
    prefix.push_back(p);
    enumerate(remaining - p, slots - 1, prefix, admissible, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions(int k, int l, bool admissible_only) {
  std::vector<Composition> out;
  if (k < 0 || l < 0) return out;
  if (l == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  std::vector<int> prefix;
  enumerate(k, l, prefix, admissible_only, out);
  return out;
}

std::vector<Composition> compositions_up_to(int max_weight, int max_length, bool admissible_only) {
  std::vector<Composition> out;
  for (int k = 1; k <= max_weight; ++k)
    for (int l = 1; l <= std::min(k, max_length); ++l) {
      auto part = compositions(k, l, admissible_only);
      out.insert(out.end(), part.begin(), part.end());
    }
  return out;
}

Integer count_generators(int k, int l, bool admissible) {
  if (k < 0 || l < 0) return 0;
  if (k == 0 && l == 0) return 1;
  if (l == 0) return 0;
  return admissible ? binomial(k - 2, l - 1) : binomial(k - 1, l - 1);
}

}  // namespace mdsum
