#include "mdsum/relation.hpp"

#include "mdsum/quasishuffle.hpp"

namespace mdsum {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::DerivationSplit: return "derivation-split";
    case Provenance::Leibniz: return "leibniz";
    case Provenance::Modular: return "modular";
    case Provenance::NumericKernel: return "numeric-kernel";
  }
  return "?";
}

std::string to_string(RelationStatus s) { return s == RelationStatus::Proven ? "proven" : "candidate"; }

Provenance parse_provenance(const std::string& text) {
  if (text == "derivation-split") return Provenance::DerivationSplit;
  if (text == "leibniz") return Provenance::Leibniz;
  if (text == "modular") return Provenance::Modular;
  if (text == "numeric-kernel") return Provenance::NumericKernel;
  throw std::invalid_argument("unknown provenance '" + text + "'");
}

Relation::Relation(WordSum body, Provenance provenance, RelationStatus status, int verified_order)
    : body_(std::move(body)), provenance_(provenance), status_(status), verified_order_(verified_order) {}

Relation Relation::proven(WordSum body, Provenance provenance, int verified_order) {
  if (provenance == Provenance::NumericKernel)
    throw std::invalid_argument("kernel vectors cannot be recorded as proven relations");
  return Relation(std::move(body), provenance, RelationStatus::Proven, verified_order);
}

Relation Relation::candidate(WordSum body, int verified_order) {
  return Relation(std::move(body), Provenance::NumericKernel, RelationStatus::Candidate, verified_order);
}

void Relation::verify(int order) {
  require_zero_series(body_, order, "relation " + body_.to_string());
  if (order > verified_order_) verified_order_ = order;
}

void require_zero_series(const WordSum& body, int order, const std::string& what) {
  const QSeries s = evaluate(body, order);
  for (int n = 0; n <= order; ++n)
    if (s[n] != 0)
      throw VerificationError(what + " fails at q^" + std::to_string(n) + " (coefficient " + to_pretty_string(s[n]) +
                              ")");
}

}  // namespace mdsum
