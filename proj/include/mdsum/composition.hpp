#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mdsum/exactnum.hpp"

namespace mdsum {

/// Index (s_1, ..., s_l) of a bracket.  s_1 is the outermost index.  The
/// empty composition stands for [empty] = 1.
///
/// Ordering is the canonical one used for matrix columns and normal forms:
/// ascending weight, then ascending length, then lexicographic on parts.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// s_1 > 1.  The empty composition counts as admissible.
  bool admissible() const { return parts_.empty() || parts_.front() > 1; }
  /// Number of leading parts equal to 1.
  int leading_ones() const;

  Composition with_part_added(std::size_t i, int delta) const;

  bool operator==(const Composition& other) const { return parts_ == other.parts_; }
  std::strong_ordering operator<=>(const Composition& other) const;

  /// "[4,2]", "[]" for the empty composition.
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Composition& c);

/// Parses "4,2" (leftmost = s_1).  An empty string gives the empty
/// composition.  Throws std::invalid_argument for non-positive or
/// malformed parts.
Composition parse_composition(std::string_view text);

Composition concat(const Composition& a, const Composition& b);

/// All compositions of weight exactly k and length exactly l, in canonical
/// order.  With admissible_only, only those with s_1 > 1.  (k, l) = (0, 0)
/// yields the empty composition.
std::vector<Composition> compositions(int k, int l, bool admissible_only = false);

/// Non-empty compositions with weight <= max_weight and length <= max_length,
/// canonical order.
std::vector<Composition> compositions_up_to(int max_weight, int max_length,
                                            bool admissible_only = false);

/// b(k,l) = C(k-1, l-1) or, for admissible, a(k,l) = C(k-2, l-1); (0,0) -> 1.
Integer count_generators(int k, int l, bool admissible);

}  // namespace mdsum
