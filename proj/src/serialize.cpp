#include "mdsum/serialize.hpp"

#include <stdexcept>

namespace mdsum {

std::string real_to_text(const Real& x) { return x.str(40, std::ios_base::scientific); }

Json to_json(const QSeries& s) {
  Json coeffs = Json::array();
  for (int n = 1; n <= s.order(); ++n) coeffs.push_back(to_fraction_string(s[n]));
  return {{"order", s.order()}, {"constant", to_fraction_string(s.constant_term())}, {"coeffs", coeffs}};
}

QSeries qseries_from_json(const Json& j) {
  const int order = j.at("order").get<int>();
  const Json& coeffs = j.at("coeffs");
  if (order < 0 || coeffs.size() != static_cast<std::size_t>(order))
    throw std::invalid_argument("series JSON: coeffs must hold exactly order entries");
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(order) + 1);
  c.push_back(parse_rational(j.at("constant").get<std::string>()));
  for (const Json& x : coeffs) c.push_back(parse_rational(x.get<std::string>()));
  return QSeries(order, std::move(c));
}

Json to_json(const WordSum& w) {
  Json terms = Json::array();
  for (const auto& [word, coeff] : w.terms()) terms.push_back({{"parts", word.parts()}, {"coeff", to_fraction_string(coeff)}});
  return {{"terms", terms}};
}

namespace {

WordSum terms_from_json(const Json& terms) {
  WordSum w;
  for (const Json& t : terms) {
    const std::vector<int> parts = t.at("parts").get<std::vector<int>>();
    for (int p : parts)
      if (p < 1) throw std::invalid_argument("word JSON: parts must be positive");
    w.add(Composition(parts), parse_rational(t.at("coeff").get<std::string>()));
  }
  return w;
}

}  // namespace

WordSum word_sum_from_json(const Json& j) { return terms_from_json(j.at("terms")); }

Json to_json(const OnePolynomial& p) {
  Json powers = Json::array();
  for (const WordSum& w : p.powers) powers.push_back(to_json(w));
  return {{"powers", powers}};
}

OnePolynomial one_polynomial_from_json(const Json& j) {
  OnePolynomial p;
  for (const Json& w : j.at("powers")) p.powers.push_back(word_sum_from_json(w));
  return p;
}

Json to_json(const Relation& r) {
  return {{"weight", r.weight()},
          {"max_length", r.max_length()},
          {"terms", to_json(r.body())["terms"]},
          {"provenance", to_string(r.provenance())},
          {"verified_order", r.verified_order()}};
}

Relation relation_from_json(const Json& j) {
  WordSum body = terms_from_json(j.at("terms"));
  const Provenance p = parse_provenance(j.at("provenance").get<std::string>());
  const int order = j.at("verified_order").get<int>();
  if (body.weight() != j.at("weight").get<int>() || body.max_length() != j.at("max_length").get<int>())
    throw std::invalid_argument("relation JSON: weight or max_length disagrees with the terms");
  return p == Provenance::NumericKernel ? Relation::candidate(std::move(body), order)
                                        : Relation::proven(std::move(body), p, order);
}

Json to_json(const MzvValue& v) {
  return {{"index", v.index.parts()}, {"value", real_to_text(v.value)}, {"error_bound", real_to_text(v.error_bound)}};
}

MzvValue mzv_from_json(const Json& j) {
  return {Composition(j.at("index").get<std::vector<int>>()), Real(j.at("value").get<std::string>()),
          Real(j.at("error_bound").get<std::string>())};
}

Json to_json(const IdentityReport& r) {
  Json out = Json::array();
  for (const IdentityCheck& c : r.checks) {
    Json e = {{"identity", c.identity}, {"order", c.order}, {"pass", c.pass}};
    if (!c.pass) e["first_failing_coefficient"] = c.first_failing_coefficient;
    out.push_back(e);
  }
  return out;
}

IdentityReport identity_report_from_json(const Json& j) {
  IdentityReport r;
  for (const Json& e : j) {
    IdentityCheck c;
    c.identity = e.at("identity").get<std::string>();
    c.order = e.at("order").get<int>();
    c.pass = e.at("pass").get<bool>();
    c.first_failing_coefficient = e.value("first_failing_coefficient", -1);
    r.checks.push_back(c);
  }
  return r;
}

Json to_json(const DimensionTable& t) {
  Json out = Json::array();
  for (const auto& [key, cell] : t.cells) {
    Json e = {{"space", to_string(t.space)}, {"kind", to_string(t.kind)}, {"k", key.first}};
    e["l"] = key.second >= 0 ? Json(key.second) : Json(nullptr);
    e["value"] = cell.certainty == Certainty::Unknown ? Json(nullptr) : Json(cell.value);
    e["certainty"] = to_string(cell.certainty);
    out.push_back(e);
  }
  return out;
}

}  // namespace mdsum
