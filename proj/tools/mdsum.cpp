#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mdsum/brackets.hpp"
#include "mdsum/derivation.hpp"
#include "mdsum/linrel.hpp"
#include "mdsum/mzvlimit.hpp"
#include "mdsum/parallel.hpp"
#include "mdsum/quasishuffle.hpp"
#include "mdsum/serialize.hpp"
#include "mdsum/suite.hpp"

using namespace mdsum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr int kExitCap = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw UsageError("unknown format '" + s + "' (text, json, csv)");
}

// built-in defaults, then MDSUM_* environment variables, then flags
struct Config {
  int default_order = 120;
  double mzv_target_error = 1e-10;
  std::string format = "text";
  int threads = 0;  // 0: MDSUM_THREADS or the hardware
};

template <class T>
T env_value(const char* name, T fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::istringstream in(raw);
  T value;
  if (!(in >> value) || !in.eof()) throw UsageError(std::string("bad value for ") + name + ": '" + raw + "'");
  return value;
}

Config config_from_environment() {
  Config c;
  c.default_order = env_value("MDSUM_ORDER", c.default_order);
  c.mzv_target_error = env_value("MDSUM_MZV_ERROR", c.mzv_target_error);
  c.format = env_value<std::string>("MDSUM_FORMAT", c.format);
  c.threads = env_value("MDSUM_THREADS", c.threads);
  return c;
}

Composition composition_arg(const std::string& text) {
  try {
    return parse_composition(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

void verification_line(bool ok, int order, const std::string& what) {
  std::cout << "check: " << what << (ok ? " agree" : " DISAGREE") << " through q^" << order << '\n';
}

int cmd_series(const std::string& parts, int order, Format fmt) {
  const Composition c = composition_arg(parts);
  const QSeries s = bracket_series(c, order);
  if (fmt == Format::Json) print_json(to_json(s));
  else std::cout << c.to_string() << " = " << s.to_string() << '\n';
  return kExitOk;
}

int cmd_product(const std::string& a, const std::string& b, int order, Format fmt) {
  const Composition x = composition_arg(a), y = composition_arg(b);
  const WordSum p = quasi_shuffle(x, y);
  const bool ok = evaluate(p, order) == bracket_series(x, order) * bracket_series(y, order);
  if (fmt == Format::Json) {
    print_json({{"product", to_json(p)}, {"verified", ok}, {"order", order}});
  } else {
    std::cout << x.to_string() << " * " << y.to_string() << " = " << p.to_string() << '\n';
    verification_line(ok, order, "product and series product");
  }
  return ok ? kExitOk : kExitVerification;
}

int cmd_derive(const std::string& parts, int order, Format fmt) {
  const Composition c = composition_arg(parts);
  const DerivativeExpression d = d_general(c, order);
  if (fmt == Format::Json) {
    print_json({{"derivative", to_json(d.expression)}, {"verified", true}, {"order", d.verified_order}});
  } else {
    std::cout << "d" << c.to_string() << " = " << d.expression.to_string() << '\n';
    verification_line(true, d.verified_order, "expression and q d/dq of the series");
  }
  return kExitOk;
}

int cmd_decompose(const std::string& parts, int order, Format fmt) {
  const Composition c = composition_arg(parts);
  const OnePolynomial p = decompose_in_one(c);
  const bool ok = p.evaluate(order) == bracket_series(c, order);
  if (fmt == Format::Json) {
    print_json({{"polynomial", to_json(p)}, {"verified", ok}, {"order", order}});
  } else {
    std::cout << c.to_string() << " = " << p.to_string() << "   (T = [1])\n";
    verification_line(ok, order, "polynomial and series");
  }
  return ok ? kExitOk : kExitVerification;
}

struct DimsOptions {
  std::string space = "mda";
  std::string kind = "fil";
  int max_weight = 6;
  int max_length = -1;
  std::optional<int> order;
  std::string out;
  double max_cells = 5e7;
  bool certify = false;
};

TableKind parse_kind(const std::string& s) {
  if (s == "fil") return TableKind::Fil;
  if (s == "gr") return TableKind::Gr;
  if (s == "filw") return TableKind::FilWeight;
  if (s == "grw") return TableKind::GrWeight;
  throw UsageError("unknown table kind '" + s + "' (fil, gr, filw, grw)");
}

DimensionTable weight_table(const DimensionTable& fil, TableKind kind, int max_k) {
  DimensionTable t{fil.space, kind, {}};
  for (int k = 0; k <= max_k; ++k) {
    const DimensionCell a = *fil.at(k, k);
    DimensionCell cell = a;
    if (kind == TableKind::GrWeight && k > 0) {
      const DimensionCell b = *fil.at(k - 1, k - 1);
      cell.value = a.value - b.value;
      cell.certainty = a.certainty == Certainty::Exact && b.certainty == Certainty::Exact ? Certainty::Exact
                                                                                          : Certainty::LowerBound;
    }
    t.cells[{k, -1}] = cell;
  }
  return t;
}

int cmd_dims(const DimsOptions& o, int default_order, Format fmt) {
  Space space;
  try {
    space = parse_space(o.space);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const TableKind kind = parse_kind(o.kind);
  if (o.max_weight < 0) throw UsageError("--max-weight must be non-negative");
  if (o.certify && space != Space::MDA) throw UsageError("--certify uses relations among admissible brackets: mda only");
  const bool weight_only = kind == TableKind::FilWeight || kind == TableKind::GrWeight;
  const int max_l = weight_only || o.max_length < 0 ? o.max_weight : o.max_length;
  const int order = o.order.value_or(std::max(default_order, recommended_order(space, o.max_weight, max_l)));
  const double cells = static_cast<double>(generators(space, o.max_weight, max_l).size()) * order;
  if (cells > o.max_cells) {
    std::ostringstream msg;
    msg << "the largest coefficient matrix has " << cells << " cells, above --max-cells " << o.max_cells;
    throw CapExceeded(msg.str());
  }
  DimensionTable fil = fil_table(space, o.max_weight, max_l, order);
  if (o.certify) certify(fil, proven_relation_pool(o.max_weight));
  DimensionTable table = kind == TableKind::Fil  ? fil
                         : kind == TableKind::Gr ? gr_from_fil(fil)
                                                 : weight_table(fil, kind, o.max_weight);
  const std::string text = fmt == Format::Json ? to_json(table).dump(2) + "\n" : table.to_csv();
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write " + o.out);
    f << text;
  }
  return kExitOk;
}

int cmd_relations(const std::string& space_text, int weight, int length, int order, bool homogeneous, Format fmt) {
  if (weight < 1 || length < 1) throw UsageError("--weight and --length must be positive");
  std::vector<Relation> found;
  if (homogeneous) {
    found = homogeneous_relation_search(weight, length, order);
  } else {
    Space space;
    try {
      space = parse_space(space_text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    found = relation_search(space, weight, length, order);
  }
  if (fmt == Format::Json) {
    Json out = Json::array();
    for (const Relation& r : found) out.push_back(to_json(r));
    print_json(out);
  } else {
    for (const Relation& r : found)
      std::cout << r.body().to_string() << " = 0   [" << to_string(r.status()) << ", " << to_string(r.provenance())
                << ", q^" << r.verified_order() << "]\n";
    std::cout << found.size() << " independent relation" << (found.size() == 1 ? "" : "s")
              << " (kernel vectors: candidates until proven)\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, const std::vector<int>& groups, Format fmt) {
  if (suite != "paper") throw UsageError("unknown suite '" + suite + "' (paper)");
  for (int g : groups)
    try {
      suite_group_title(g);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  Json out = Json::array();
  const SuiteCheck* first = nullptr;
  const auto result = run_suite(groups, [&](const SuiteGroup& g) {
    if (fmt == Format::Json) return;
    std::cout << (g.pass() ? "PASS" : "FAIL") << " " << g.id << " " << g.title << '\n';
    for (const SuiteCheck& c : g.checks)
      std::cout << "  " << (c.pass ? "ok    " : "FAILED") << (c.informational ? " (report) " : " ") << c.name
                << (c.detail.empty() || (c.pass && !c.informational) ? "" : ": " + c.detail) << '\n';
    std::cout.flush();
  });
  bool all = true;
  for (const SuiteGroup& g : result) {
    all = all && g.pass();
    if (!first) first = g.first_failure();
    Json checks = Json::array();
    for (const SuiteCheck& c : g.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"informational", c.informational}, {"detail", c.detail}});
    out.push_back({{"group", g.id}, {"title", g.title}, {"pass", g.pass()}, {"seconds", g.seconds}, {"checks", checks}});
  }
  if (fmt == Format::Json) print_json(out);
  if (!all) {
    std::cerr << "verification failed";
    if (first) std::cerr << ": " << first->name << (first->detail.empty() ? "" : " (" + first->detail + ")");
    std::cerr << '\n';
    return kExitVerification;
  }
  return kExitOk;
}

int cmd_mzv(const std::string& parts, double target, Format fmt) {
  const Composition c = composition_arg(parts);
  if (c.empty() || !c.admissible()) throw UsageError("zeta" + c.to_string() + " diverges: the first part must exceed 1");
  if (target < kMzvErrorFloor) throw UsageError("error target below the working precision");
  const MzvValue v = mzv(c, target);
  if (fmt == Format::Json) print_json(to_json(v));
  else std::cout << "zeta(" << parts << ") = " << to_decimal(v.value, 40) << " +- " << to_decimal(v.error_bound, 3) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Config config;
  try {
    config = config_from_environment();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Multiple divisor sums: q-series, products, derivatives, dimensions, relations and zeta values"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<int> order, threads;
  std::optional<std::string> format;
  app.add_option("--threads", threads, "worker threads (env MDSUM_THREADS)")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "text, json or csv (env MDSUM_FORMAT)");

  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--order", order, "truncation order (env MDSUM_ORDER, default 120)")->check(CLI::NonNegativeNumber);
  };

  std::string parts, other;
  auto* series = app.add_subcommand("series", "bracket series of a composition, e.g. 4,2");
  series->add_option("parts", parts)->required();
  add_order(series);

  auto* product = app.add_subcommand("product", "quasi-shuffle product of two compositions");
  product->add_option("w", parts)->required();
  product->add_option("v", other)->required();
  add_order(product);

  auto* derive = app.add_subcommand("derive", "q d/dq of a bracket as a combination of brackets");
  derive->add_option("parts", parts)->required();
  add_order(derive);

  auto* decompose = app.add_subcommand("decompose", "write a bracket as a polynomial in [1] over admissible brackets");
  decompose->add_option("parts", parts)->required();
  add_order(decompose);

  DimsOptions dims_opts;
  auto* dims = app.add_subcommand("dims", "dimension tables as CSV or JSON");
  dims->add_option("--space", dims_opts.space, "md or mda");
  dims->add_option("--kind", dims_opts.kind, "fil, gr, filw or grw");
  dims->add_option("--max-weight", dims_opts.max_weight)->check(CLI::NonNegativeNumber);
  dims->add_option("--max-length", dims_opts.max_length, "default: the maximal weight");
  dims->add_option("--order", dims_opts.order, "default: max(order, 2 x generators of the largest cell)");
  dims->add_option("--out", dims_opts.out, "write to a file instead of stdout");
  dims->add_option("--max-cells", dims_opts.max_cells, "cap on generators x order of the largest matrix");
  dims->add_flag("--certify", dims_opts.certify, "mark cells exact where proven relations close the gap");

  std::string rel_space = "mda";
  int rel_weight = 0, rel_length = 0;
  bool homogeneous = false;
  auto* relations = app.add_subcommand("relations", "kernel vectors of the coefficient matrix");
  relations->add_option("--weight", rel_weight)->required();
  relations->add_option("--length", rel_length)->required();
  relations->add_option("--space", rel_space, "md or mda");
  relations->add_flag("--homogeneous", homogeneous, "only words of exactly this weight and length");
  add_order(relations);

  std::string suite = "paper";
  std::vector<int> groups;
  auto* verify = app.add_subcommand("verify", "run the reference identity suite");
  verify->add_option("--suite", suite);
  verify->add_option("--group", groups, "restrict to these groups (1-10)");

  std::optional<double> mzv_error;
  auto* zeta = app.add_subcommand("mzv", "multiple zeta value, e.g. 3,1");
  zeta->add_option("parts", parts)->required();
  zeta->add_option("--error", mzv_error, "target error bound (env MDSUM_MZV_ERROR, default 1e-10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format fmt = parse_format(format.value_or(config.format));
    if (threads) config.threads = *threads;
    if (config.threads > 0) set_thread_count(config.threads);
    const int n = order.value_or(config.default_order);
    if (*series) return cmd_series(parts, n, fmt);
    if (*product) return cmd_product(parts, other, n, fmt);
    if (*derive) return cmd_derive(parts, n, fmt);
    if (*decompose) return cmd_decompose(parts, n, fmt);
    if (*dims) return cmd_dims(dims_opts, config.default_order, fmt);
    if (*relations) return cmd_relations(rel_space, rel_weight, rel_length, order.value_or(std::max(
                                                                                 config.default_order, 200)),
                                         homogeneous, fmt);
    if (*verify) return cmd_verify(suite, groups, fmt);
    if (*zeta) return cmd_mzv(parts, mzv_error.value_or(config.mzv_target_error), fmt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
