#include "mdsum/linrel.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mdsum/brackets.hpp"
#include "mdsum/derivation.hpp"
#include "mdsum/parallel.hpp"
#include "mdsum/quasishuffle.hpp"

namespace mdsum {

namespace {

using RationalRow = std::vector<Rational>;

int first_nonzero(const std::vector<Integer>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return static_cast<int>(i);
  return -1;
}

void make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& x : v)
    if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Gauss-Jordan over Q; returns the nonzero rows, pivots ascending, leading 1.
std::vector<RationalRow> reduced_echelon(std::vector<RationalRow> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<Integer> series_row(const Composition& c, int order) {
  const QSeries s = bracket_series(c, order);
  std::vector<Rational> values(static_cast<std::size_t>(order));
  for (int n = 1; n <= order; ++n) values[n - 1] = s[n];
  return integer_row(values);
}

std::vector<std::vector<Integer>> series_rows(const std::vector<Composition>& gens, int order) {
  std::vector<std::vector<Integer>> rows(gens.size());
  parallel_for(gens.size(), [&](std::size_t i) { rows[i] = series_row(gens[i], order); });
  return rows;
}

int max_possible_length(Space space, int k, int l) {
  const int cap = space == Space::MDA ? std::max(0, k - 1) : k;
  return std::min(l, cap);
}

void check_order(Space space, int k, int l, int order) {
  const int len = max_possible_length(space, k, l);
  if (order < len * (len + 1) / 2)
    throw std::invalid_argument("order " + std::to_string(order) + " is below l(l+1)/2 for length " +
                                std::to_string(len));
  const int rec = recommended_order(space, k, l);
  if (order < rec)
    std::clog << "warning: order " << order << " is below the recommended " << rec << " for " << to_string(space)
              << " (" << k << "," << l << "); ranks are lower bounds\n";
}

std::vector<Relation> kernel_relations(const std::vector<Composition>& columns, int order) {
  if (columns.empty()) return {};
  ExactMatrix m(order, static_cast<int>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const QSeries s = bracket_series(columns[j], order);
    for (int n = 1; n <= order; ++n) m(n - 1, static_cast<int>(j)) = s[n];
  }
  std::vector<Relation> out;
  for (const auto& v : kernel_basis(m)) {
    WordSum body;
    for (std::size_t j = 0; j < columns.size(); ++j) body.add(columns[j], v[j]);
    body = body.normalized();
    require_zero_series(body, order, "kernel vector");
    out.push_back(Relation::candidate(std::move(body), order));
  }
  return out;
}

// Relations of MD split along powers of [1]; each coefficient is a relation in MDA.
std::vector<WordSum> admissible_pieces(const std::vector<Relation>& pool) {
  std::vector<WordSum> out;
  for (const auto& r : pool) {
    const OnePolynomial p = decompose_in_one(r.body());
    for (const auto& piece : p.powers)
      if (!piece.empty()) out.push_back(piece);
  }
  return out;
}

}  // namespace

ExactMatrix::ExactMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be non-negative");
}

ExactMatrix::ExactMatrix(std::vector<std::vector<Rational>> entries) {
  rows_ = static_cast<int>(entries.size());
  cols_ = entries.empty() ? 0 : static_cast<int>(entries.front().size());
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (auto& row : entries) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged matrix rows");
    for (auto& x : row) data_.push_back(std::move(x));
  }
}

std::vector<Rational> ExactMatrix::row(int r) const {
  const auto begin = data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_;
  return std::vector<Rational>(begin, begin + cols_);
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> integer_row(const std::vector<Rational>& values) {
  Integer den = 1;
  for (const auto& x : values) {
    Rational y = x;
    y.canonicalize();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), y.get_den_mpz_t());
  }
  std::vector<Integer> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    Rational y = values[i] * den;
    y.canonicalize();
    out[i] = y.get_num();
  }
  make_primitive(out);
  return out;
}

int rank(const ExactMatrix& m) {
  std::vector<std::vector<Integer>> a;
  a.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) a.push_back(integer_row(m.row(r)));
  const int rows = m.rows();
  const int cols = m.cols();
  Integer prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

bool IntegerEchelon::add(std::vector<Integer> v) {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row length does not match");
  make_primitive(v);
  Integer g, a, b;
  for (const Row& row : rows_) {
    const int p = row.pivot;
    if (v[p] == 0) continue;
    mpz_gcd(g.get_mpz_t(), row.v[p].get_mpz_t(), v[p].get_mpz_t());
    mpz_divexact(a.get_mpz_t(), row.v[p].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), v[p].get_mpz_t(), g.get_mpz_t());
    // v <- a v - b row
    if (a != 1)
      for (auto& x : v)
        if (x != 0) x *= a;
    for (int j = p; j < cols_; ++j)
      if (row.v[j] != 0) mpz_submul(v[j].get_mpz_t(), b.get_mpz_t(), row.v[j].get_mpz_t());
    make_primitive(v);
  }
  const int pivot = first_nonzero(v);
  if (pivot < 0) return false;
  if (v[pivot] < 0)
    for (auto& x : v) x = -x;
  auto it = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                             [](const Row& r, int p) { return r.pivot < p; });
  rows_.insert(it, Row{std::move(v), pivot});
  return true;
}

std::vector<std::vector<Integer>> IntegerEchelon::basis() const {
  std::vector<std::vector<Integer>> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.v);
  return out;
}

std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m) {
  const std::size_t cols = static_cast<std::size_t>(m.cols());
  IntegerEchelon echelon(m.cols());
  for (int r = 0; r < m.rows() && echelon.rank() < m.cols(); ++r) echelon.add(integer_row(m.row(r)));
  std::vector<RationalRow> rows;
  for (const auto& v : echelon.basis()) rows.emplace_back(v.begin(), v.end());
  rows = reduced_echelon(std::move(rows), cols);

  std::vector<int> pivot_row(cols, -1);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[i][c] != 0) {
        pivot_row[c] = static_cast<int>(i);
        break;
      }
  std::vector<RationalRow> kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot_row[f] >= 0) continue;
    RationalRow x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_row[c] >= 0) x[c] = -rows[pivot_row[c]][f];
    kernel.push_back(std::move(x));
  }
  return reduced_echelon(std::move(kernel), cols);
}

std::string to_string(Space s) { return s == Space::MD ? "MD" : "MDA"; }

std::string to_string(TableKind k) {
  switch (k) {
    case TableKind::Fil: return "Fil";
    case TableKind::Gr: return "gr";
    case TableKind::FilWeight: return "FilW";
    case TableKind::GrWeight: return "grW";
  }
  return "?";
}

std::string to_string(Certainty c) {
  switch (c) {
    case Certainty::Exact: return "exact";
    case Certainty::LowerBound: return "lower_bound";
    case Certainty::Unknown: return "unknown";
  }
  return "?";
}

Space parse_space(const std::string& text) {
  if (text == "MD" || text == "md") return Space::MD;
  if (text == "MDA" || text == "mda") return Space::MDA;
  throw std::invalid_argument("unknown space '" + text + "' (expected MD or MDA)");
}

std::optional<DimensionCell> DimensionTable::at(int k, int l) const {
  auto it = cells.find({k, l});
  if (it == cells.end()) return std::nullopt;
  return it->second;
}

std::string DimensionTable::to_csv(bool header) const {
  std::ostringstream out;
  if (header) out << "space,kind,k,l,value,certainty\n";
  for (const auto& [key, cell] : cells) {
    out << to_string(space) << ',' << to_string(kind) << ',' << key.first << ',';
    if (key.second >= 0) out << key.second;
    out << ',';
    if (cell.certainty != Certainty::Unknown) out << cell.value;
    out << ',' << to_string(cell.certainty) << '\n';
  }
  return out.str();
}

std::vector<Composition> generators(Space space, int k, int l) {
  return compositions_up_to(k, l, space == Space::MDA);
}

int recommended_order(Space space, int k, int l) {
  return std::max(120, 2 * static_cast<int>(generators(space, k, l).size()));
}

long dim_lower_bound(Space space, int k, int l, int order) {
  check_order(space, k, l, order);
  const auto gens = generators(space, k, l);
  IntegerEchelon echelon(order);
  for (const auto& row : series_rows(gens, order)) echelon.add(row);
  return 1 + echelon.rank();
}

DimensionTable fil_table(Space space, int max_k, int max_l, int order) {
  check_order(space, max_k, max_l, order);
  DimensionTable table{space, TableKind::Fil, {}};
  const auto all = generators(space, max_k, max_l);
  const auto rows = series_rows(all, order);
  for (int l = 0; l <= max_l; ++l) {
    IntegerEchelon echelon(order);
    std::size_t next = 0;
    for (int k = 0; k <= max_k; ++k) {
      for (; next < all.size() && all[next].weight() <= k; ++next)
        if (all[next].length() <= l) echelon.add(rows[next]);
      if (l <= k) table.cells[{k, l}] = {1 + echelon.rank(), Certainty::LowerBound};
    }
  }
  return table;
}

DimensionTable gr_from_fil(const DimensionTable& fil) {
  DimensionTable gr{fil.space, TableKind::Gr, {}};
  auto value = [&](int k, int l) -> std::optional<DimensionCell> {
    if (k < 0 || l < 0) return DimensionCell{0, Certainty::Exact};
    if (l > k) return fil.at(k, k);
    return fil.at(k, l);
  };
  for (const auto& [key, cell] : fil.cells) {
    const auto [k, l] = key;
    const auto a = value(k, l), b = value(k - 1, l), c = value(k, l - 1), d = value(k - 1, l - 1);
    DimensionCell out;
    if (!a || !b || !c || !d || a->certainty == Certainty::Unknown || b->certainty == Certainty::Unknown ||
        c->certainty == Certainty::Unknown || d->certainty == Certainty::Unknown) {
      out.certainty = Certainty::Unknown;
    } else {
      out.value = a->value - b->value - c->value + d->value;
      const bool exact = a->certainty == Certainty::Exact && b->certainty == Certainty::Exact &&
                         c->certainty == Certainty::Exact && d->certainty == Certainty::Exact;
      out.certainty = exact ? Certainty::Exact : Certainty::LowerBound;
    }
    gr.cells[key] = out;
  }
  return gr;
}

std::map<std::pair<int, int>, long> dprime_from_gr(const DimensionTable& gr_mda) {
  if (gr_mda.space != Space::MDA || gr_mda.kind != TableKind::Gr)
    throw std::invalid_argument("d' needs the bigraded gr table of MDA");
  std::map<std::pair<int, int>, long> out;
  for (const auto& [key, cell] : gr_mda.cells)
    if (cell.certainty != Certainty::Unknown) out[key] = cell.value;
  return out;
}

DimensionTable dims_from_dprime(const std::map<std::pair<int, int>, long>& dprime, const DimensionTargets& t) {
  using Value = std::optional<long>;
  auto dp = [&](int j, int i) -> Value {
    if (j < 0 || i < 0) return 0L;
    auto it = dprime.find({j, i});
    if (it != dprime.end()) return it->second;
    if (j == 0) return i == 0 ? Value() : Value(0L);
    if (i == 0 || i >= j) return 0L;  // no admissible word of that shape
    return std::nullopt;
  };
  auto sum = [](Value acc, Value x) -> Value {
    if (!acc || !x) return std::nullopt;
    return *acc + *x;
  };
  auto gr_md = [&](int k, int l) {
    Value acc = 0L;
    for (int j = 0; j <= k; ++j) acc = sum(acc, dp(k - j, l - j));
    return acc;
  };
  auto fil_w_mda = [&](int k) {
    Value acc = 0L;
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= j; ++i) acc = sum(acc, dp(j, i));
    return acc;
  };

  DimensionTable table{t.space, t.kind, {}};
  auto put = [&](int k, int l, Value v) {
    table.cells[{k, l}] = v ? DimensionCell{*v, t.known} : DimensionCell{0, Certainty::Unknown};
  };
  for (int k = 0; k <= t.max_k; ++k) {
    if (t.kind == TableKind::FilWeight || t.kind == TableKind::GrWeight) {
      Value v = 0L;
      if (t.space == Space::MDA) {
        if (t.kind == TableKind::GrWeight)
          for (int i = 0; i <= k; ++i) v = sum(v, dp(k, i));
        else
          v = fil_w_mda(k);
      } else {
        if (t.kind == TableKind::GrWeight)
          v = fil_w_mda(k);
        else
          for (int j = 0; j <= k; ++j) v = sum(v, fil_w_mda(j));
      }
      put(k, -1, v);
      continue;
    }
    for (int l = 0; l <= std::min(k, t.max_l); ++l) {
      Value v = 0L;
      if (t.space == Space::MDA) {
        if (t.kind == TableKind::Gr)
          v = dp(k, l);
        else
          for (int j = 0; j <= k; ++j)
            for (int i = 0; i <= l; ++i) v = sum(v, dp(j, i));
      } else {
        if (t.kind == TableKind::Gr)
          v = gr_md(k, l);
        else
          for (int j = 0; j <= k; ++j)
            for (int i = 0; i <= l; ++i) v = sum(v, gr_md(j, i));
      }
      put(k, l, v);
    }
  }
  return table;
}

std::vector<long> dprime_by_weight(int max_k, int order) {
  check_order(Space::MDA, max_k, max_k, order);
  const auto gens = generators(Space::MDA, max_k, max_k);
  const auto rows = series_rows(gens, order);
  IntegerEchelon echelon(order);
  std::vector<long> out{1};
  long previous = 1;
  std::size_t next = 0;
  for (int k = 1; k <= max_k; ++k) {
    for (; next < gens.size() && gens[next].weight() <= k; ++next) echelon.add(rows[next]);
    const long fil = 1 + echelon.rank();
    out.push_back(fil - previous);
    previous = fil;
  }
  return out;
}

std::vector<Relation> relation_search(Space space, int k, int l, int order) {
  check_order(space, k, l, order);
  return kernel_relations(generators(space, k, l), order);
}

std::vector<Relation> homogeneous_relation_search(int k, int l, int order) {
  if (order < l * (l + 1) / 2) throw std::invalid_argument("order is below l(l+1)/2");
  return kernel_relations(compositions(k, l, false), order);
}

std::vector<Integer> conjecture_expansion(int max_k) {
  // (1 - 2x^2 - 2x^3) A = 1 - x^2 + x^4
  std::vector<Integer> a(static_cast<std::size_t>(std::max(0, max_k + 1)));
  for (int n = 0; n <= max_k; ++n) {
    Integer v = n == 0 ? 1 : n == 2 ? -1 : n == 4 ? 1 : 0;
    if (n >= 2) v += 2 * a[n - 2];
    if (n >= 3) v += 2 * a[n - 3];
    a[n] = v;
  }
  return a;
}

ConjectureReport conjecture_series_check(int max_k, const std::vector<long>& computed) {
  ConjectureReport report;
  report.expansion = conjecture_expansion(max_k);
  report.computed = computed;
  const int n = std::min<int>(max_k + 1, static_cast<int>(computed.size()));
  for (int k = 0; k < n; ++k)
    if (report.expansion[k] != computed[k]) report.mismatches.push_back(k);
  return report;
}

std::vector<Relation> proven_relation_pool(int max_k, int verify_order, bool closure) {
  std::vector<Relation> pool;
  std::set<WordSum::Terms> seen;
  auto keep = [&](Relation r) {
    if (r.body().empty() || !seen.insert(r.body().terms()).second) return;
    pool.push_back(std::move(r));
  };
  for (int k = 4; k <= max_k; ++k)
    for (auto& r : split_relations(k, verify_order)) keep(std::move(r));
  const auto words = compositions_up_to(std::max(0, max_k - 3), max_k);
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i; j < words.size(); ++j)
      if (words[i].weight() + words[j].weight() + 2 <= max_k) keep(leibniz_relations(words[i], words[j], verify_order));
  if (!closure) return pool;

  const auto factors = compositions_up_to(std::max(0, max_k - 4), max_k);
  for (std::size_t n = 0; n < pool.size(); ++n) {
    const Relation r = pool[n];
    const int w = r.body().weight();
    for (const auto& c : factors) {
      if (w + c.weight() > max_k) break;
      WordSum body = quasi_shuffle(r.body(), WordSum(c)).normalized();
      require_zero_series(body, verify_order, "product relation");
      keep(Relation::proven(std::move(body), r.provenance(), verify_order));
    }
    if (w + 2 <= max_k) {
      WordSum body = derive(r.body()).normalized();
      require_zero_series(body, verify_order, "derived relation");
      keep(Relation::proven(std::move(body), r.provenance(), verify_order));
    }
  }
  return pool;
}

long intersection_dimension(const std::vector<WordSum>& vectors,
                            const std::function<bool(const Composition&)>& inside) {
  std::set<Composition> outside_words, inside_words;
  for (const auto& v : vectors)
    for (const auto& [word, c] : v.terms()) (inside(word) ? inside_words : outside_words).insert(word);
  std::map<Composition, int> column;
  int n = 0;
  for (const auto& w : outside_words) column[w] = n++;
  const int first_inside = n;
  for (const auto& w : inside_words) column[w] = n++;
  IntegerEchelon echelon(n);
  for (const auto& v : vectors) {
    std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
    for (const auto& [word, c] : v.terms()) row[column[word]] = c;
    echelon.add(integer_row(row));
  }
  long count = 0;
  for (const auto& row : echelon.basis())
    if (first_nonzero(row) >= first_inside) ++count;
  return count;
}

std::map<std::pair<int, int>, long> derived_relation_counts(const std::vector<Relation>& pool, int max_k, int max_l) {
  const auto pieces = admissible_pieces(pool);
  std::map<std::pair<int, int>, long> out;
  for (int k = 0; k <= max_k; ++k)
    for (int l = 0; l <= std::min(k, max_l); ++l) {
      const long all = intersection_dimension(
          pieces, [&](const Composition& c) { return c.weight() <= k && c.length() <= l; });
      const long lower = intersection_dimension(pieces, [&](const Composition& c) {
        return c.weight() <= k && c.length() <= l && (c.weight() < k || c.length() < l);
      });
      out[{k, l}] = all - lower;
    }
  return out;
}

void certify(DimensionTable& fil, const std::vector<Relation>& pool) {
  if (fil.kind != TableKind::Fil) throw std::invalid_argument("certify needs a bigraded Fil table");
  std::vector<WordSum> vectors;
  if (fil.space == Space::MDA) {
    vectors = admissible_pieces(pool);
  } else {
    for (const auto& r : pool) vectors.push_back(r.body());
  }
  for (auto& [key, cell] : fil.cells) {
    if (cell.certainty != Certainty::LowerBound) continue;
    const auto [k, l] = key;
    const long gens = static_cast<long>(generators(fil.space, k, l).size());
    const long relations = intersection_dimension(vectors, [&](const Composition& c) {
      return c.weight() <= k && c.length() <= l && (fil.space == Space::MD || c.admissible());
    });
    if (1 + gens - relations == cell.value) cell.certainty = Certainty::Exact;
  }
}

bool in_span(const WordSum& w, const std::vector<Relation>& relations) {
  std::vector<WordSum> vectors;
  for (const auto& r : relations) vectors.push_back(r.body());
  std::set<Composition> words;
  for (const auto& v : vectors)
    for (const auto& [word, c] : v.terms()) words.insert(word);
  for (const auto& [word, c] : w.terms())
    if (!words.count(word)) return false;
  std::map<Composition, int> column;
  int n = 0;
  for (const auto& word : words) column[word] = n++;
  auto to_row = [&](const WordSum& v) {
    std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
    for (const auto& [word, c] : v.terms()) row[column[word]] = c;
    return integer_row(row);
  };
  IntegerEchelon echelon(n);
  for (const auto& v : vectors) echelon.add(to_row(v));
  return w.empty() || !echelon.add(to_row(w));
}

}  // namespace mdsum
