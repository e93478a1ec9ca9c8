#include "implcount/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

#include "implcount/bracketing.hpp"
#include "implcount/closed_forms.hpp"
#include "implcount/counting.hpp"
#include "implcount/errors.hpp"
#include "implcount/monoid.hpp"
#include "implcount/recurrence.hpp"

namespace implcount::cli {

namespace {

using nlohmann::json;

enum class Format { Plain, Csv, Json, Bfile };

const std::map<std::string, Format> kFormats{{"plain", Format::Plain},
                                             {"csv", Format::Csv},
                                             {"json", Format::Json},
                                             {"bfile", Format::Bfile}};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Semantics semantics_from_radix(int r) {
  return r == 2 ? Semantics::Classical2 : Semantics::Kleene3;
}

void reject_format(Format f, Format bad, const std::string& what) {
  if (f == bad) throw UsageError(what);
}

// Exact integers go into json as strings so that values beyond 64 bits
// round-trip unchanged.
std::string str(const mpz_class& z) { return z.get_str(); }
std::string str(const mpq_class& q) { return q.get_str(); }

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// Display order of the values: the column order of the implication table.
std::vector<TruthValue> display_values(Semantics sem) {
  if (sem == Semantics::Classical2) return {TruthValue::True, TruthValue::False};
  return {TruthValue::True, TruthValue::False, TruthValue::Unknown};
}

// ---------------------------------------------------------------------------

struct SeriesArgs {
  std::string name;
  int n = 10;
  Format format = Format::Plain;
};

int cmd_series(const SeriesArgs& a, std::ostream& out) {
  const auto which = parse_series_name(a.name);
  if (!which) throw UsageError("unknown series '" + a.name + "'");
  if (a.n < 1) throw UsageError("--n must be at least 1");
  const auto s = closed_form(*which, a.n);
  std::string label(name(*which));
  std::transform(label.begin(), label.end(), label.begin(),
                 [](unsigned char c) { return std::tolower(c); });

  switch (a.format) {
    case Format::Plain:
      for (int n = 1; n <= a.n; ++n) {
        out << (n > 1 ? " " : "") << s[n];
      }
      out << '\n';
      break;
    case Format::Bfile:
      for (int n = 1; n <= a.n; ++n) out << n << ' ' << s[n] << '\n';
      break;
    case Format::Csv:
      out << "n," << label << '\n';
      for (int n = 1; n <= a.n; ++n) out << n << ',' << s[n] << '\n';
      break;
    case Format::Json: {
      json j;
      j["series"] = label;
      j["order"] = a.n;
      json coeffs = json::array();
      for (int n = 1; n <= a.n; ++n) coeffs.push_back(str(s[n]));
      j["coefficients"] = coeffs;
      if (!is_count_series(*which)) j["constant_term"] = str(s[0]);
      write_json(out, j);
      break;
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct TableArgs {
  int n = 3;
  long long index = 0;
  int semantics = 3;
  Format format = Format::Plain;
};

int cmd_table(const TableArgs& a, const BruteBudget& budget,
              std::ostream& out) {
  reject_format(a.format, Format::Bfile, "table has no b-file form");
  const auto sem = semantics_from_radix(a.semantics);
  if (a.n < 1) throw UsageError("--n must be at least 1");
  budget.require(a.n, sem);
  const auto trees = enumerate_bracketings(a.n);
  if (a.index < 0 || static_cast<std::size_t>(a.index) >= trees.size()) {
    throw RangeError("tree index " + std::to_string(a.index) +
                     " out of range; valid indices are 0.." +
                     std::to_string(trees.size() - 1));
  }
  const auto& tree = trees[static_cast<std::size_t>(a.index)];
  const auto formula = tree.to_string();

  std::vector<std::pair<Valuation, TruthValue>> rows;
  Valuation v(static_cast<std::size_t>(a.n), TruthValue::False);
  do {
    rows.emplace_back(v, evaluate(tree, v, sem));
  } while (next_valuation(v, sem));

  if (a.format == Format::Json) {
    json j;
    j["n"] = a.n;
    j["index"] = a.index;
    j["semantics"] = std::string(name(sem));
    j["formula"] = formula;
    json jrows = json::array();
    for (const auto& [val, value] : rows) {
      json row = json::array();
      for (const auto x : val) row.push_back(to_int(x));
      row.push_back(to_int(value));
      jrows.push_back(row);
    }
    j["rows"] = jrows;
    write_json(out, j);
    return kSuccess;
  }

  const char sep = a.format == Format::Csv ? ',' : ' ';
  for (int i = 1; i <= a.n; ++i) out << 'p' << i << sep;
  out << formula << '\n';
  for (const auto& [val, value] : rows) {
    for (const auto x : val) out << to_int(x) << sep;
    out << to_int(value) << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  int n_max = 7;
  int order = 0;  // 0: same as n_max
  int semantics = 3;
  Format format = Format::Plain;
};

struct Triple {
  mpz_class t, f, u;
  friend bool operator==(const Triple&, const Triple&) = default;
};

json triple_json(const Triple& x, Semantics sem) {
  if (sem == Semantics::Classical2) return {{"r", str(x.t)}, {"s", str(x.f)}};
  return {{"t", str(x.t)}, {"f", str(x.f)}, {"u", str(x.u)}};
}

std::string triple_text(const Triple& x, Semantics sem) {
  std::ostringstream os;
  os << x.t << ' ' << x.f;
  if (sem == Semantics::Kleene3) os << ' ' << x.u;
  return os.str();
}

int cmd_verify(const VerifyArgs& a, const BruteBudget& budget,
               std::ostream& out) {
  reject_format(a.format, Format::Bfile,
                "verify reports several sequences; use plain, csv or json");
  if (a.n_max < 1) throw UsageError("--n must be at least 1");
  const int order = a.order == 0 ? a.n_max : a.order;
  if (order < a.n_max) throw UsageError("--order must be at least --n");
  const auto sem = semantics_from_radix(a.semantics);

  const SequenceTable table(sem, a.n_max);
  const auto t_series = closed_form(true_series(sem), order);
  const auto f_series = closed_form(false_series(sem), order);
  const auto u_series = sem == Semantics::Kleene3
                            ? closed_form(SeriesName::U, order)
                            : PowerSeries(order);

  struct Row {
    int n;
    std::optional<Triple> brute;
    Triple recurrence, closed;
    mpz_class total;
    bool agree;
  };
  std::vector<Row> rows;
  bool all_agree = true;
  for (int n = 1; n <= a.n_max; ++n) {
    Row row{n, std::nullopt, {}, {}, {}, true};
    if (n <= budget.max_n(sem)) {
      const auto b = brute_counts(n, sem, budget);
      row.brute = Triple{b.t, b.f, b.u};
    }
    const auto& rec = table.row(n);
    row.recurrence = {rec.t, rec.f, rec.u};
    row.total = rec.g;
    row.closed = {t_series[n].get_num(), f_series[n].get_num(),
                  u_series[n].get_num()};
    row.agree = row.recurrence == row.closed &&
                (!row.brute || *row.brute == row.recurrence) &&
                rec.consistent();
    all_agree = all_agree && row.agree;
    rows.push_back(std::move(row));
  }

  switch (a.format) {
    case Format::Plain: {
      const std::string cols = sem == Semantics::Kleene3 ? "t f u" : "r s";
      out << "n | brute " << cols << " | recurrence " << cols
          << " | closed form " << cols << " | agree\n";
      for (const auto& r : rows) {
        out << r.n << " | "
            << (r.brute ? triple_text(*r.brute, sem) : std::string("-"))
            << " | " << triple_text(r.recurrence, sem) << " | "
            << triple_text(r.closed, sem) << " | "
            << (r.agree ? "yes" : "NO") << '\n';
      }
      out << (all_agree ? "all paths agree" : "paths DISAGREE") << " for 1 <= n <= "
          << a.n_max << " (brute force through n = "
          << std::min(a.n_max, budget.max_n(sem)) << ")\n";
      break;
    }
    case Format::Csv:
      out << (sem == Semantics::Kleene3 ? "n,t,f,u,g" : "n,r,s,g") << '\n';
      for (const auto& r : rows) {
        out << r.n << ',' << r.recurrence.t << ',' << r.recurrence.f;
        if (sem == Semantics::Kleene3) out << ',' << r.recurrence.u;
        out << ',' << r.total << '\n';
      }
      break;
    case Format::Json: {
      json j;
      j["semantics"] = std::string(name(sem));
      j["n_max"] = a.n_max;
      j["order"] = order;
      j["all_agree"] = all_agree;
      json jrows = json::array();
      for (const auto& r : rows) {
        jrows.push_back({{"n", r.n},
                         {"brute", r.brute ? triple_json(*r.brute, sem)
                                           : json(nullptr)},
                         {"recurrence", triple_json(r.recurrence, sem)},
                         {"closed_form", triple_json(r.closed, sem)},
                         {"g", str(r.total)},
                         {"agree", r.agree}});
      }
      j["rows"] = jrows;
      write_json(out, j);
      break;
    }
    case Format::Bfile:
      break;
  }
  return all_agree ? kSuccess : kCounterexample;
}

// ---------------------------------------------------------------------------

struct MonoidArgs {
  int order = 40;
  int identity_order = 50;
  int k_max = 6;
  std::uint64_t seed = SampleSpec{}.seed;
  std::string tamper;
  Format format = Format::Plain;
};

GeneratorTamper parse_tamper(const std::string& text) {
  // generator:index[:delta]
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() < 2 || parts.size() > 3) {
    throw UsageError("--tamper expects generator:index[:delta]");
  }
  GeneratorTamper t;
  bool found = false;
  for (const auto g : {Generator::T, Generator::F, Generator::U, Generator::R,
                       Generator::S}) {
    std::string n(name(g));
    if (parts[0] == n || (parts[0].size() == 1 &&
                          std::toupper(static_cast<unsigned char>(parts[0][0])) == n[0])) {
      t.generator = g;
      found = true;
    }
  }
  if (!found) throw UsageError("unknown generator '" + parts[0] + "'");
  try {
    t.index = std::stoi(parts[1]);
    t.delta = parts.size() == 3 ? std::stol(parts[2]) : 1;
  } catch (const std::exception&) {
    throw UsageError("--tamper index and delta must be integers");
  }
  return t;
}

int cmd_monoid(const MonoidArgs& a, const BruteBudget& budget,
               std::ostream& out) {
  reject_format(a.format, Format::Bfile, "monoid has no b-file form");
  reject_format(a.format, Format::Csv, "monoid has no csv form");
  if (a.order < 2) throw UsageError("--order must be at least 2");
  if (a.identity_order < 1) throw UsageError("--identity-order must be >= 1");
  if (a.k_max < 2) throw UsageError("--kmax must be at least 2");

  MonoidSuiteConfig cfg;
  cfg.order = a.order;
  cfg.identity_order = a.identity_order;
  cfg.k_max = a.k_max;
  cfg.sample.seed = a.seed;
  cfg.partitions.budget = budget;
  if (!a.tamper.empty()) cfg.tamper = parse_tamper(a.tamper);

  const auto reports = run_monoid_suite(cfg);
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const auto& r) { return r.verified(); });

  if (a.format == Format::Json) {
    json j;
    j["order"] = a.order;
    j["identity_order"] = a.identity_order;
    j["k_max"] = a.k_max;
    j["seed"] = a.seed;
    j["all_verified"] = ok;
    json jr = json::array();
    for (const auto& r : reports) {
      json item{{"claim", r.claim},
                {"order", r.order},
                {"cases", r.cases},
                {"verified", r.verified()}};
      if (r.counterexample) {
        const auto& w = *r.counterexample;
        item["witness"] = {{"n", w.n},
                           {"subject", w.subject},
                           {"lhs", w.lhs},
                           {"relation", w.relation},
                           {"rhs", w.rhs}};
      }
      if (!r.note.empty()) item["note"] = r.note;
      jr.push_back(item);
    }
    j["reports"] = jr;
    write_json(out, j);
  } else {
    for (const auto& r : reports) out << r << '\n';
    const auto failed = std::count_if(reports.begin(), reports.end(),
                                      [](const auto& r) { return !r.verified(); });
    out << (ok ? "all claims verified"
               : std::to_string(failed) + " claim(s) with counterexamples")
        << '\n';
  }
  return ok ? kSuccess : kCounterexample;
}

// ---------------------------------------------------------------------------

struct ColorsArgs {
  int n = 4;
  int semantics = 2;
  Format format = Format::Plain;
};

int cmd_colors(const ColorsArgs& a, const BruteBudget& budget,
               std::ostream& out) {
  reject_format(a.format, Format::Bfile, "colors has no b-file form");
  const auto sem = semantics_from_radix(a.semantics);
  const auto classes = color_class_counts(a.n, sem, budget);
  const bool classical = sem == Semantics::Classical2;

  std::optional<PowerSeries> r, s;
  if (classical) {
    r = closed_form(SeriesName::R, a.n);
    s = closed_form(SeriesName::S, a.n);
  }
  const auto label = [](TruthValue v) { return v == TruthValue::True ? "R" : "S"; };
  const auto convolution = [&](TruthValue x, TruthValue y) {
    const auto& sx = x == TruthValue::True ? *r : *s;
    const auto& sy = y == TruthValue::True ? *r : *s;
    return (sx * sy)[a.n].get_num();
  };

  mpz_class total = 0;
  for (const auto& [cls, count] : classes) total += count;

  json jclasses = json::array();
  if (a.format == Format::Plain) {
    out << "left right count" << (classical ? " convolution" : "") << '\n';
  } else if (a.format == Format::Csv) {
    out << "left,right,count" << (classical ? ",convolution" : "") << '\n';
  }
  for (const auto x : display_values(sem)) {
    for (const auto y : display_values(sem)) {
      const auto& count = classes.at({x, y});
      switch (a.format) {
        case Format::Plain:
          out << to_int(x) << ' ' << to_int(y) << ' ' << count;
          if (classical) {
            out << ' ' << label(x) << label(y) << '=' << convolution(x, y);
          }
          out << '\n';
          break;
        case Format::Csv:
          out << to_int(x) << ',' << to_int(y) << ',' << count;
          if (classical) out << ',' << convolution(x, y);
          out << '\n';
          break;
        case Format::Json: {
          json item{{"left", to_int(x)}, {"right", to_int(y)},
                    {"count", str(count)}};
          if (classical) item["convolution"] = str(convolution(x, y));
          jclasses.push_back(item);
          break;
        }
        case Format::Bfile:
          break;
      }
    }
  }
  if (a.format == Format::Plain) out << "total " << total << '\n';
  if (a.format == Format::Json) {
    json j;
    j["n"] = a.n;
    j["semantics"] = std::string(name(sem));
    j["classes"] = jclasses;
    j["total"] = str(total);
    write_json(out, j);
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Truth tables of bracketed implications: counts, generating "
               "functions and monoid checks"};
  app.require_subcommand(1);

  int budget_n = 0;
  app.add_option("--budget", budget_n,
                 "Largest n enumerated by brute force (both logics)")
      ->envname("IMPLCOUNT_BUDGET")
      ->check(CLI::PositiveNumber);

  const auto add_format = [](CLI::App* sub, Format& f) {
    sub->add_option("--format", f, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };
  const auto add_semantics = [](CLI::App* sub, int& s) {
    sub->add_option("--semantics", s, "2 = classical, 3 = Kleene")
        ->check(CLI::IsMember({2, 3}));
  };

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Coefficients of a closed form");
  series->add_option("name", series_args.name, "t, f, u, g, r, s, g2 or i")
      ->required();
  series->add_option("--n,--order", series_args.n, "Number of coefficients")
      ->envname("IMPLCOUNT_ORDER");
  add_format(series, series_args.format);

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Truth table of one bracketing");
  table->add_option("--n", table_args.n, "Number of variables");
  table->add_option("--index", table_args.index, "Bracketing index");
  add_semantics(table, table_args.semantics);
  add_format(table, table_args.format);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Compare brute force, recurrence and closed forms");
  verify->add_option("--n", verify_args.n_max, "Largest n compared");
  verify->add_option("--order", verify_args.order,
                     "Closed-form truncation order (default: --n)")
      ->envname("IMPLCOUNT_ORDER");
  add_semantics(verify, verify_args.semantics);
  add_format(verify, verify_args.format);

  MonoidArgs monoid_args;
  auto* monoid = app.add_subcommand("monoid", "Run the monoid verification suites");
  monoid->add_option("--order", monoid_args.order,
                     "Order for bound, commutativity, associativity, ideal checks")
      ->envname("IMPLCOUNT_ORDER");
  monoid->add_option("--identity-order", monoid_args.identity_order,
                     "Order for power identities and partitions");
  monoid->add_option("--kmax", monoid_args.k_max, "Largest power in identities");
  monoid->add_option("--seed", monoid_args.seed, "Sampling seed");
  monoid->add_option("--tamper", monoid_args.tamper,
                     "Corrupt a generator coefficient: gen:index[:delta]")
      ->group("");
  add_format(monoid, monoid_args.format);

  ColorsArgs colors_args;
  auto* colors = app.add_subcommand("colors", "Root-split color classes");
  colors->add_option("--n", colors_args.n, "Number of variables");
  add_semantics(colors, colors_args.semantics);
  add_format(colors, colors_args.format);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  BruteBudget budget;
  if (budget_n > 0) budget = {budget_n, budget_n};

  try {
    if (series->parsed()) return cmd_series(series_args, out);
    if (table->parsed()) return cmd_table(table_args, budget, out);
    if (verify->parsed()) return cmd_verify(verify_args, budget, out);
    if (monoid->parsed()) return cmd_monoid(monoid_args, budget, out);
    if (colors->parsed()) return cmd_colors(colors_args, budget, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceError;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kCounterexample;
  }
  return kUsageError;
}

}  // namespace implcount::cli
