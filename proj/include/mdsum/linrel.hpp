#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdsum/relation.hpp"
#include "mdsum/wordsum.hpp"

namespace mdsum {

/// Dense matrix over Q.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols);
  explicit ExactMatrix(std::vector<std::vector<Rational>> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::vector<Rational> row(int r) const;

  static ExactMatrix identity(int n);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by fraction-free (Bareiss) elimination after clearing the
/// denominators of each row.
int rank(const ExactMatrix& m);

/// Basis of {x : m x = 0} in reduced echelon form: each vector has its
/// leading (earliest) entry equal to 1 and zeros at the other vectors'
/// leading positions.
std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m);

/// Integer row echelon form built one row at a time, with rows kept
/// primitive (content divided out).  add() reports whether the row was
/// independent of the rows already present.
class IntegerEchelon {
 public:
  explicit IntegerEchelon(int cols) : cols_(cols) {}
  bool add(std::vector<Integer> row);
  int rank() const { return static_cast<int>(rows_.size()); }
  std::vector<std::vector<Integer>> basis() const;

 private:
  struct Row {
    std::vector<Integer> v;
    int pivot;
  };
  int cols_;
  std::vector<Row> rows_;  // ascending pivots
};

/// Primitive integer vector on the same line as the rational one (zero stays
/// zero).
std::vector<Integer> integer_row(const std::vector<Rational>& values);

enum class Space { MD, MDA };
enum class TableKind { Fil, Gr, FilWeight, GrWeight };
enum class Certainty { Exact, LowerBound, Unknown };

std::string to_string(Space s);
std::string to_string(TableKind k);
std::string to_string(Certainty c);
Space parse_space(const std::string& text);

struct DimensionCell {
  long value = 0;
  Certainty certainty = Certainty::Unknown;
};

/// Cells keyed by (k, l); weight-only tables use l = -1.
struct DimensionTable {
  Space space = Space::MDA;
  TableKind kind = TableKind::Fil;
  std::map<std::pair<int, int>, DimensionCell> cells;

  std::optional<DimensionCell> at(int k, int l) const;
  /// Rows "space,kind,k,l,value,certainty" after the header line.
  std::string to_csv(bool header = true) const;
};

/// Generators of Fil^{W,L}_{k,l}: non-empty compositions of weight <= k and
/// length <= l, admissible ones only for MDA.
std::vector<Composition> generators(Space space, int k, int l);

/// max(120, 2 * generator count).
int recommended_order(Space space, int k, int l);

/// 1 + rank of the coefficient rows (q^1..q^order) of the generators; the
/// 1 accounts for the constant.  A lower bound for dim Fil^{W,L}_{k,l}.
/// Throws std::invalid_argument when order < l(l+1)/2; writes a warning to
/// std::clog when order is below recommended_order.
long dim_lower_bound(Space space, int k, int l, int order);

/// All cells 0 <= l <= k <= max_k (l <= max_l) of the Fil table by rank,
/// each marked as a lower bound.  One incremental elimination per length.
DimensionTable fil_table(Space space, int max_k, int max_l, int order);

/// gr_{k,l} = Fil_{k,l} - Fil_{k-1,l} - Fil_{k,l-1} + Fil_{k-1,l-1}.
DimensionTable gr_from_fil(const DimensionTable& fil);

/// d'(k,l) = dim gr^{W,L}_{k,l}(MDA) from an MDA gr table.
std::map<std::pair<int, int>, long> dprime_from_gr(const DimensionTable& gr_mda);

struct DimensionTargets {
  int max_k = 8;
  int max_l = 8;
  Space space = Space::MDA;
  TableKind kind = TableKind::Fil;
  Certainty known = Certainty::Exact;  // certainty given to computable cells
};

/// Fil / gr tables (bigraded or weight-only) for MD or MDA from d'(k,l).
/// Cells needing a missing d' value are Unknown, never zero.
DimensionTable dims_from_dprime(const std::map<std::pair<int, int>, long>& dprime, const DimensionTargets& targets);

/// d'_k = dim gr^W_k(MDA) for k = 0..max_k from the full weight filtration
/// (rank of all admissible generators of weight <= k).
std::vector<long> dprime_by_weight(int max_k, int order);

/// Kernel vectors of the generator coefficient matrix, as candidate
/// relations normalized like every other relation.
std::vector<Relation> relation_search(Space space, int k, int l, int order);

/// Same, restricted to compositions of weight exactly k and length exactly l.
std::vector<Relation> homogeneous_relation_search(int k, int l, int order);

struct ConjectureReport {
  std::vector<Integer> expansion;     // coefficients of (1-x^2+x^4)/(1-2x^2-2x^3)
  std::vector<long> computed;         // d'_k supplied by the caller
  std::vector<int> mismatches;        // k with computed[k] != expansion[k]
  bool all_match() const { return mismatches.empty(); }
};

/// Compares computed d'_k with the series expansion; does not assert anything.
ConjectureReport conjecture_series_check(int max_k, const std::vector<long>& computed);

/// Expansion coefficients 0..max_k of (1-x^2+x^4)/(1-2x^2-2x^3).
std::vector<Integer> conjecture_expansion(int max_k);

/// Proven relations of weight <= max_k: split relations and Leibniz
/// relations for all pairs with weight sum <= max_k - 2.  With closure, also
/// their products with brackets and their derivatives up to weight max_k.
/// Every body is checked to verify_order.
std::vector<Relation> proven_relation_pool(int max_k, int verify_order = 60, bool closure = true);

/// Number of independent relations in gr^{W,L}_{k,l}(MDA) implied by the
/// given proven relations (after splitting them along powers of [1]).
std::map<std::pair<int, int>, long> derived_relation_counts(const std::vector<Relation>& pool, int max_k, int max_l);

/// Dimension of span(vectors) intersected with the coordinate subspace of
/// words satisfying inside.
long intersection_dimension(const std::vector<WordSum>& vectors, const std::function<bool(const Composition&)>& inside);

/// Marks Fil cells Exact where 1 + #generators minus the number of
/// independent proven relations supported on the generators equals the
/// computed lower bound.
void certify(DimensionTable& fil, const std::vector<Relation>& pool);

/// True if w lies in the Q-span of the relation bodies.
bool in_span(const WordSum& w, const std::vector<Relation>& relations);

}  // namespace mdsum
