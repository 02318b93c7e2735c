#include "hnid/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hnid/errors.hpp"
#include "hnid/identities.hpp"
#include "hnid/limits.hpp"
#include "hnid/report.hpp"
#include "hnid/runner.hpp"

namespace hnid {

namespace {

using i64 = std::int64_t;

constexpr i64 kSafeNMax = 8;
constexpr i64 kSafeParamMax = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string suite = "all";
  i64 n_max = kSafeNMax;
  i64 param_max = kSafeParamMax;
  std::string format;
  std::string out_path;
  std::string ys = "10,100,1000,10000";
  bool unsafe_large = false;
  bool serial = false;
  bool exact = false;
  int table = 0;
  std::string target;
  std::vector<std::string> assignments;
};

void check_caps(const Options& o) {
  if (o.n_max < 0 || o.param_max < 0) throw UsageError("--n-max and --param-max must be >= 0");
  if (!o.unsafe_large && (o.n_max > kSafeNMax || o.param_max > kSafeParamMax)) {
    throw UsageError("--n-max above " + std::to_string(kSafeNMax) + " or --param-max above " +
                     std::to_string(kSafeParamMax) + " requires --unsafe-large");
  }
}

// "name=value" pairs with integer values.
i64 parse_integer(const std::string& what, const std::string& value) {
  std::size_t used = 0;
  i64 v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    throw UsageError("value of '" + what + "' is not an integer: '" + value + "'");
  }
  return v;
}

std::vector<i64> parse_ys(const std::string& text) {
  std::vector<i64> ys;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    ys.push_back(parse_integer("--ys", text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return ys;
}

Params parse_assignments(const std::vector<std::string>& items, std::string* text_value = nullptr,
                         const std::string& text_key = "") {
  Params p;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("expected name=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (text_value && key == text_key) {
      *text_value = value;
      continue;
    }
    const i64 v = parse_integer(key, value);
    if (p.contains(key)) throw UsageError("parameter '" + key + "' given twice");
    p[key] = v;
  }
  return p;
}

i64 take_n(Params& p) {
  auto it = p.find("n");
  if (it == p.end()) throw UsageError("missing n=<value>");
  const i64 n = it->second;
  p.erase(it);
  return n;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty() || o.out_path == "-") {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + o.out_path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("failed writing '" + o.out_path + "'");
}

std::string render_verify_markdown(const VerificationReport& r) {
  std::ostringstream os;
  os << "# Verification: " << r.suite << "\n\n"
     << "generated_at: " << r.generated_at << "\n\n"
     << "| total | passed | failed | skipped |\n|---|---|---|---|\n"
     << "| " << r.summary.total << " | " << r.summary.passed << " | " << r.summary.failed << " | "
     << r.summary.skipped << " |\n";
  if (r.summary.failed > 0) {
    os << "\n## Failed cells\n\n| record | params | n | lhs | rhs | reason |\n|---|---|---|---|---|---|\n";
    for (const auto& c : r.cells) {
      if (c.status != CellStatus::kFail) continue;
      os << "| " << c.cell.record_id << " | " << format_params(c.cell.params) << " | " << c.cell.n
         << " | " << c.lhs << " | " << c.rhs << " | " << c.reason;
      if (c.amended_pass) os << (*c.amended_pass ? " (amended form holds)" : " (amended form fails)");
      os << " |\n";
    }
  }
  return os.str();
}

int cmd_verify(const Options& o, std::ostream& out) {
  check_caps(o);
  const auto suite = parse_suite(o.suite);
  if (!suite) throw UsageError("unknown suite '" + o.suite + "'");
  const std::string format = o.format.empty() ? "json" : o.format;
  if (format != "json" && format != "markdown") throw UsageError("unknown format '" + format + "'");
  const auto cells = enumerate_cells(*suite, {o.n_max, o.param_max, o.unsafe_large});
  auto results = o.serial ? run_serial(cells) : run_parallel(cells);
  const VerificationReport report = make_report(o.suite, std::move(results));
  emit(o, format == "json" ? render_json(report) : render_verify_markdown(report), out);
  return report.summary.failed == 0 ? kExitOk : kExitFailures;
}

int cmd_table(const Options& o, std::ostream& out) {
  check_caps(o);
  if (o.table != 1 && o.table != 2) throw UsageError("table must be 1 or 2");
  const std::string format = o.format.empty() ? "markdown" : o.format;
  if (format != "json" && format != "markdown") throw UsageError("unknown format '" + format + "'");
  const auto rows = build_table(o.table, o.n_max);
  emit(o, format == "json" ? table_to_json(o.table, rows).dump(2) + "\n"
                           : render_table_markdown(o.table, rows),
       out);
  const bool all_pass = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
  return all_pass ? kExitOk : kExitFailures;
}

int cmd_derive(const Options& o, std::ostream& out) {
  Params params = parse_assignments(o.assignments);
  const i64 n = take_n(params);
  const BinomialFamily& fam = lookup_family(o.target);
  const DerivationResult d = derive_via_d0(o.target, params, n);

  std::ostringstream os;
  os << "family " << fam.id << " (" << fam.citation.location << "; " << fam.citation.source << ")\n"
     << "params " << (params.empty() ? std::string("-") : format_params(params)) << ", n=" << n
     << ", evaluated at x = 0 + eps\n"
     << "  lhs = " << d.lhs << "\n"
     << "  rhs = " << d.rhs << "\n"
     << "value parts: " << d.lhs.value() << " vs " << d.rhs.value() << " -> "
     << (d.value_match ? "match" : "MISMATCH") << "\n"
     << "deriv parts: " << d.lhs.deriv() << " vs " << d.rhs.deriv() << " -> "
     << (d.deriv_match ? "match" : "MISMATCH") << "\n";
  bool theorem_ok = true;
  const CheckResult t = check_identity(fam.derived_theorem, params, n);
  theorem_ok = t.equal;
  os << "derived " << fam.derived_theorem << ": lhs = " << t.lhs << ", rhs = " << t.rhs << " -> "
     << (t.equal ? "equal" : "NOT EQUAL") << "\n";
  emit(o, os.str(), out);
  return d.value_match && d.deriv_match && theorem_ok ? kExitOk : kExitFailures;
}

int cmd_limits(const Options& o, std::ostream& out) {
  if (o.target != "reflex") throw UsageError("unknown limits preset '" + o.target + "' (expected reflex)");
  std::string weights_name = "unit";
  Params params = parse_assignments(o.assignments, &weights_name, "weights");
  const i64 n = take_n(params);
  const i64 mu = params.contains("mu") ? params.at("mu") : 0;
  const i64 nu = params.contains("nu") ? params.at("nu") : 0;
  params.erase("mu");
  params.erase("nu");
  if (!params.empty()) throw UsageError("unknown parameter '" + params.begin()->first + "'");
  if (n < 0) throw UsageError("n must be >= 0");
  if (!o.unsafe_large && n > kSafeNMax) throw UsageError("n above 8 requires --unsafe-large");

  std::vector<MonicRationalWeight> weights;
  if (weights_name == "unit") {
    weights = unit_weights(n);
  } else if (weights_name == "binomial") {
    weights = binomial_ratio_weights(n);
  } else {
    throw UsageError("unknown weights '" + weights_name + "' (expected unit or binomial)");
  }
  const ReflectionFamily fam = reflex_family(mu, nu);
  const std::vector<i64> ys = parse_ys(o.ys);
  const DecayReport r = o.serial ? decay_probe(fam, weights, n, ys)
                                 : decay_probe_parallel(fam, weights, n, ys);

  std::ostringstream os;
  os << fam.name << ", weights=" << weights_name << ", n=" << n << "\n";
  for (std::size_t i = 0; i < r.ys.size(); ++i) {
    const double approx = r.values[i].raw().get_d();
    os << "  y=" << r.ys[i] << "  S ~ " << std::scientific << std::setprecision(6) << approx
       << std::defaultfloat;
    if (o.exact) os << "  exact " << r.values[i];
    os << "\n";
  }
  os << "criterion: |S(y)| strictly decreasing along ys (all-zero counts as converged)\n";
  if (r.converged) {
    os << "verdict: converged (all values exactly 0)\n";
  } else {
    os << "verdict: " << (r.monotone_decreasing_magnitude ? "decreasing" : "NOT decreasing") << "\n";
  }
  emit(o, os.str(), out);
  return r.ok() ? kExitOk : kExitFailures;
}

int cmd_manifest(const Options& o, std::ostream& out) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& rec : registry()) {
    nlohmann::ordered_json e;
    e["id"] = rec.id;
    e["kind"] = std::string(to_string(rec.kind));
    e["location"] = rec.citation.location;
    e["note"] = rec.citation.source;
    e["params"] = rec.param_names;
    auto& cs = e["constraints"] = nlohmann::ordered_json::array();
    for (const auto& c : rec.constraints) cs.push_back(c.name);
    if (rec.disputed) e["disputed"] = *rec.disputed;
    j.push_back(std::move(e));
  }
  emit(o, j.dump(2) + "\n", out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact verification of harmonic-number identities", "hnid"};
  app.require_subcommand(1);

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", o.out_path, "Write output to this path instead of stdout");
  };
  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--n-max", o.n_max, "Largest n (default 8)");
    sub->add_option("--param-max", o.param_max, "Largest parameter value (default 3)");
    sub->add_flag("--unsafe-large", o.unsafe_large, "Allow grids beyond the documented bounds");
  };

  auto* verify = app.add_subcommand("verify", "Run a verification suite and write a report");
  verify->add_option("--suite", o.suite, "theorems|table1|table2|families|xi|all");
  verify->add_option("--format", o.format, "json (default) or markdown");
  verify->add_flag("--serial", o.serial, "Use the serial reference runner");
  add_caps(verify);
  add_output(verify);

  auto* table = app.add_subcommand("table", "Render Table I or II with sample values");
  table->add_option("which", o.table, "1 or 2")->required();
  table->add_option("--format", o.format, "markdown (default) or json");
  add_caps(table);
  add_output(table);

  auto* derive = app.add_subcommand("derive", "Show the D0 derivation of one family instance");
  derive->add_option("family", o.target, "Family id, e.g. chu, ps_mu, dd_1, wh_5")->required();
  derive->add_option("assignments", o.assignments, "name=value pairs including n");
  add_output(derive);

  auto* limits = app.add_subcommand("limits", "Run an exact decay probe");
  limits->add_option("preset", o.target, "Family preset (reflex)")->required();
  limits->add_option("assignments", o.assignments, "mu=, nu=, n=, weights=unit|binomial");
  limits->add_option("--ys", o.ys, "Comma-separated increasing y values");
  limits->add_flag("--serial", o.serial, "Evaluate the ys serially");
  limits->add_flag("--exact", o.exact, "Also print the exact rational values");
  limits->add_flag("--unsafe-large", o.unsafe_large, "Allow n above 8");
  add_output(limits);

  auto* manifest_cmd = app.add_subcommand("manifest", "List every record with its source location");
  add_output(manifest_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(o, out);
    if (*table) return cmd_table(o, out);
    if (*derive) return cmd_derive(o, out);
    if (*limits) return cmd_limits(o, out);
    if (*manifest_cmd) return cmd_manifest(o, out);
  } catch (const ConstraintViolation& e) {
    err << "error: constraint violated: " << e.constraint() << " (" << e.what() << ")\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotFound& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace hnid
