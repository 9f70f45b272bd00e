#pragma once

#include <string>
#include <vector>

#include "mdsum/relation.hpp"
#include "mdsum/wordsum.hpp"

namespace mdsum {

inline constexpr int kDefaultVerifyOrder = 120;

enum class DerivativeMethod { Len1Split, Len2ClosedForm, GeneralExtraction };
std::string to_string(DerivativeMethod m);

/// An expression for q d/dq [source] as a combination of brackets, checked
/// against the series when it is built.
struct DerivativeExpression {
  Composition source;
  WordSum expression;
  DerivativeMethod method;
  int split_first = 0;  // s_1 of the split for Len1Split
  int verified_order = 0;
};

/// d[s] for s = s1 + s2 - 2 from the product [s1][s2]:
/// C(s, s1-1) d[s] / s = [s1]*[s2] + C(s, s1-1)[s+1]
///                       - sum_{a+b=s+2} (C(a-1, s1-1) + C(a-1, s2-1)) [a,b].
/// Throws std::invalid_argument when s1 + s2 <= 2.
DerivativeExpression d_len1(int s1, int s2, int verify_order = kDefaultVerifyOrder);

/// Closed form for d[s1,s2].
DerivativeExpression d_len2(int s1, int s2, int verify_order = kDefaultVerifyOrder);

/// d[s] for any composition, from
/// d[s] = [2]*[s] - D(A) - sum_j D(B_j) + sum_i (l-i+1) s_i [.., s_i+1, ..]
/// where D(A) and D(B_j) are the first-order parts of the shifted generating
/// series.  Memoized per composition.  Throws VerificationError if the
/// result does not match q d/dq of the series.
DerivativeExpression d_general(const Composition& c, int verify_order = kDefaultVerifyOrder);

/// The expression part of d_general without verification.
WordSum d_general_expression(const Composition& c);

/// floor(k/2) - 1 relations of weight k obtained by comparing the length-one
/// expressions of d[k-2] from the splits s1 = 1..floor(k/2).
std::vector<Relation> split_relations(int k, int verify_order = kDefaultVerifyOrder);

/// d(w)*v + w*d(v) - d(w*v), all sides expanded with d_general, normalized.
/// The zero combination is returned unnormalized (empty body).
Relation leibniz_relations(const Composition& w, const Composition& v, int verify_order = kDefaultVerifyOrder);

/// d applied termwise through d_general.
WordSum derive(const WordSum& w);

}  // namespace mdsum
