#pragma once

#include <stdexcept>
#include <string>

#include "mdsum/wordsum.hpp"

namespace mdsum {

/// Thrown when an identity that should hold exactly fails on the series.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Provenance { DerivationSplit, Leibniz, Modular, NumericKernel };
enum class RelationStatus { Proven, Candidate };

std::string to_string(Provenance p);
std::string to_string(RelationStatus s);
Provenance parse_provenance(const std::string& text);

/// A combination of brackets that vanishes.  Proven relations come from
/// identities (derivation splits, the Leibniz rule, modular forms); kernel
/// vectors of coefficient matrices are candidates and stay candidates.
class Relation {
 public:
  /// Throws std::invalid_argument for the numeric-kernel provenance.
  static Relation proven(WordSum body, Provenance provenance, int verified_order);
  static Relation candidate(WordSum body, int verified_order);

  const WordSum& body() const { return body_; }
  Provenance provenance() const { return provenance_; }
  RelationStatus status() const { return status_; }
  int verified_order() const { return verified_order_; }
  int weight() const { return body_.weight(); }
  int max_length() const { return body_.max_length(); }

  /// Re-checks the body to the given order; throws VerificationError on a
  /// nonzero coefficient.
  void verify(int order);

  bool operator==(const Relation& other) const = default;

 private:
  Relation(WordSum body, Provenance provenance, RelationStatus status, int verified_order);
  WordSum body_;
  Provenance provenance_;
  RelationStatus status_;
  int verified_order_;
};

/// Evaluates the word sum and fails loudly unless it is zero through order.
void require_zero_series(const WordSum& body, int order, const std::string& what);

}  // namespace mdsum
