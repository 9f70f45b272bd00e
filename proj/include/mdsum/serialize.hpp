#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mdsum/linrel.hpp"
#include "mdsum/modular.hpp"
#include "mdsum/mzvlimit.hpp"
#include "mdsum/quasishuffle.hpp"
#include "mdsum/relation.hpp"

namespace mdsum {

using Json = nlohmann::json;

// Rationals travel as "num/den" strings (to_fraction_string / parse_rational).

/// {"order": N, "constant": "a/b", "coeffs": [...]}, coeffs[i] for q^{i+1}.
Json to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

/// {"terms": [{"parts": [...], "coeff": "a/b"}, ...]} in canonical order.
Json to_json(const WordSum& w);
WordSum word_sum_from_json(const Json& j);

/// {"powers": [WordSum, ...]}, index = power of T.
Json to_json(const OnePolynomial& p);
OnePolynomial one_polynomial_from_json(const Json& j);

/// {"weight", "max_length", "terms", "provenance", "verified_order"}.
Json to_json(const Relation& r);
/// Numeric-kernel relations come back as candidates, the rest as proven.
Relation relation_from_json(const Json& j);

/// {"index": [...], "value": "decimal", "error_bound": "decimal"}.
Json to_json(const MzvValue& v);
MzvValue mzv_from_json(const Json& j);

/// [{"identity", "order", "pass", "first_failing_coefficient"?}, ...];
/// the last key only for failing checks.
Json to_json(const IdentityReport& r);
IdentityReport identity_report_from_json(const Json& j);

/// [{"space", "kind", "k", "l", "value", "certainty"}, ...] with the CSV
/// columns; value is null for unknown cells, l for weight-only tables.
Json to_json(const DimensionTable& t);

/// Decimal text used for real values: 40 significant digits.
std::string real_to_text(const Real& x);

}  // namespace mdsum
