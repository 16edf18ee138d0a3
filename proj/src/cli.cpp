#include "isoconst/cli.hpp"

#include "isoconst/relations.hpp"
#include "isoconst/report.hpp"
#include "isoconst/symmetric_plane.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace isoconst::cli {

namespace {

/// Bad flag combination or value detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string norm;
  std::string constant;
  double param = std::nan("");
  GridConfig grid;
  std::string format;
  std::string out = "-";
  bool closed_form = false;
  std::vector<double> axes;
  std::vector<std::string> battery;
  std::string over;
  double from = std::nan("");
  double to = std::nan("");
  double step = std::nan("");
  bool include_inf = false;
  std::string data;
  std::string x_label;
  std::string y_label;
};

int default_workers() {
  const char* env = std::getenv(kWorkersEnv);
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) {
    throw UsageError(std::string(kWorkersEnv) + " must be an integer in [1, 1024]");
  }
  return static_cast<int>(v);
}

LabeledNorm resolve(const std::string& source) {
  if (source.empty()) throw UsageError("--norm is required");
  if (report::is_builtin(source)) {
    try {
      return report::builtin_norm(source);
    } catch (const report::SourceError& e) {
      throw UsageError(e.what());
    }
  }
  return report::parse_norm_file(source);
}

ConstantKind constant_of_name(const std::string& name) {
  try {
    return parse_constant_kind(name, 0.0);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ConstantKind constant_of(const Options& o) {
  if (o.constant.empty()) throw UsageError("--constant is required");
  try {
    const ConstantKind probe = constant_of_name(o.constant);
    if (probe.has_param() && std::isnan(o.param)) {
      throw UsageError("--param is required for constant '" + o.constant + "'");
    }
    return parse_constant_kind(o.constant, std::isnan(o.param) ? 0.0 : o.param);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void check_grid(const GridConfig& g) {
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string format_or(const Options& o, const std::string& fallback,
                      std::initializer_list<const char*> allowed) {
  const std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  throw UsageError("--format '" + f + "' is not supported by this command");
}

std::string render(const std::vector<report::Record>& records, const std::string& format) {
  return format == "csv" ? report::to_csv_text(records) : report::to_json_text(records);
}

std::vector<double> sweep_values(const Options& o) {
  if (std::isnan(o.from) || std::isnan(o.to) || std::isnan(o.step)) {
    throw UsageError("a sweep needs --from, --to and --step");
  }
  if (!(o.from <= o.to) || !(o.step > 0.0)) {
    throw UsageError("sweep range needs from <= to and step > 0");
  }
  const auto n = static_cast<long>(std::floor((o.to - o.from) / o.step + 1e-9));
  if (n > 100000) throw UsageError("sweep has more than 100000 rows");
  std::vector<double> values;
  for (long k = 0; k <= n; ++k) values.push_back(std::min(o.to, o.from + k * o.step));
  return values;
}

struct Sweep {
  std::string parameter_name;
  std::string value_name;
  std::vector<report::SweepRow> rows;
};

Sweep run_sweep(const Options& o) {
  if (o.constant.empty()) throw UsageError("--constant is required");
  const std::vector<double> values = sweep_values(o);
  Sweep s;
  if (o.over == "p") {
    const ConstantKind kind = constant_of(o);
    s.parameter_name = "p";
    s.value_name = kind.name();
    for (double p : values) {
      if (p < 1.0) throw UsageError("p-sweep values must be >= 1");
    }
    std::vector<double> ps = values;
    if (o.include_inf) ps.push_back(kLpInfinity);
    for (double p : ps) s.rows.push_back({p, estimate(NormSpec::lp(p), kind, o.grid).value});
    return s;
  }
  if (!o.over.empty()) throw UsageError("--over accepts only 'p'");
  const ConstantKind probe = constant_of_name(o.constant);
  if (!probe.has_param()) {
    throw UsageError("sweeping '" + o.constant + "' needs --over p; only gamma and delta take a parameter");
  }
  const NormSpec spec = resolve(o.norm).second;
  s.parameter_name = probe.tag == ConstantTag::Gamma ? "t" : "eps";
  s.value_name = probe.name();
  std::vector<ConstantKind> kinds;
  for (double v : values) {
    try {
      kinds.push_back(parse_constant_kind(o.constant, v));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  for (const ConstantKind& k : kinds) s.rows.push_back({k.param, estimate(spec, k, o.grid).value});
  return s;
}

int cmd_compute(const Options& o, std::ostream& out) {
  const ConstantKind kind = constant_of(o);
  const std::string format = format_or(o, "json", {"json", "csv"});
  const auto [label, spec] = resolve(o.norm);
  Estimate e;
  if (o.closed_form) {
    if (kind.tag != ConstantTag::Omega) throw UsageError("--closed-form applies only to omega");
    Vec2 e1 = Vec2::UnitX(), e2 = Vec2::UnitY();
    if (!o.axes.empty()) {
      e1 = Vec2(o.axes[0], o.axes[1]);
      e2 = Vec2(o.axes[2], o.axes[3]);
    }
    e = omega_closed_form(spec, check_axes(spec, e1, e2), o.grid);
  } else {
    e = estimate(spec, kind, o.grid);
  }
  report::write_output(o.out, render({report::estimate_record(label, e)}, format), out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::string format = format_or(o, "table", {"table", "json", "csv"});
  if (o.battery.empty()) throw UsageError("--battery is required (default or norm sources)");
  std::vector<LabeledNorm> norms;
  for (const std::string& b : o.battery) {
    if (b == "default") {
      for (auto& n : default_battery()) norms.push_back(std::move(n));
    } else {
      norms.push_back(resolve(b));
    }
  }
  const auto reports = run_battery(norms, o.grid);
  std::string text;
  if (format == "table") {
    text = report::relation_table(reports);
  } else {
    std::vector<report::Record> records;
    for (const auto& r : reports) records.push_back(report::relation_record(r));
    text = render(records, format);
  }
  report::write_output(o.out, text, out);
  return all_asserted_pass(reports) ? kExitOk : kExitRelationFailure;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const std::string format = format_or(o, "csv", {"csv", "json"});
  const Sweep s = run_sweep(o);
  std::vector<report::Record> records;
  for (const auto& row : s.rows) records.push_back(report::sweep_record(s.parameter_name, row));
  if (format == "csv") {
    // Header names the swept parameter; the value column is always "value".
    report::write_output(o.out, report::to_csv_text(records), out);
  } else {
    report::write_output(o.out, report::Record(records).dump(2) + "\n", out);
  }
  return kExitOk;
}

int cmd_plot(const Options& o, std::ostream& out) {
  format_or(o, "svg", {"svg"});
  std::string svg;
  if (!o.data.empty()) {
    std::ifstream in(o.data);
    if (!in) throw report::SourceError("cannot read sweep data '" + o.data + "'");
    std::ostringstream text;
    text << in.rdbuf();
    const std::string header = text.str().substr(0, text.str().find(','));
    svg = report::svg_sweep(report::parse_sweep_csv(text.str()),
                            o.x_label.empty() ? header : o.x_label,
                            o.y_label.empty() ? "value" : o.y_label);
  } else if (!std::isnan(o.from)) {
    const Sweep s = run_sweep(o);
    svg = report::svg_sweep(s.rows, o.x_label.empty() ? s.parameter_name : o.x_label,
                            o.y_label.empty() ? s.value_name : o.y_label);
  } else {
    const auto [label, spec] = resolve(o.norm);
    std::optional<Witness> witness;
    std::string title = label;
    if (!o.constant.empty()) {
      const Estimate e = estimate(spec, constant_of(o), o.grid);
      witness = e.witness;
      title += "  " + e.constant.name() + " = " + report::format12(report::round12(e.value));
    }
    svg = report::svg_unit_ball(spec, title, witness);
  }
  report::write_output(o.out, svg, out);
  return kExitOk;
}

int cmd_list_norms(std::ostream& out) {
  out << "builtin:l1         lp(1), the taxicab norm\n"
      << "builtin:l2         lp(2), the Euclidean norm\n"
      << "builtin:linf       lp(inf), the max norm\n"
      << "builtin:lp?p=<v>   lp(v) for any v >= 1 or v = inf\n"
      << "builtin:hex        hexagonal l_inf / l_1 mixed norm\n"
      << "\nNorm files are JSON objects with \"kind\" one of:\n"
      << "  {\"kind\":\"lp\",\"p\":1.5}            p may also be \"inf\"\n"
      << "  {\"kind\":\"polyhedral\",\"functionals\":[[1,0],[0,1],[-1,0],[0,-1]]}\n"
      << "  {\"kind\":\"hex_linf_l1\"}\n"
      << "  {\"kind\":\"affine_image\",\"base\":{...},\"matrix\":[[2,1],[0,1]]}\n"
      << "An optional \"label\" string names the norm in reports.\n";
  return kExitOk;
}

void add_grid_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--grid", o.grid.theta_grid, "Angle samples over a full turn (even, >= 64)")
      ->capture_default_str();
  cmd->add_option("--radius-grid", o.grid.radius_grid, "Radii for searches over the unit ball")
      ->capture_default_str();
  cmd->add_option("--refine-tol", o.grid.refine_tol, "Golden-section stopping width")
      ->capture_default_str();
  cmd->add_option("--workers", o.grid.workers,
                  std::string("Worker threads (default from ") + kWorkersEnv + ", else 1)")
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Output path, - for standard output")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.grid.workers = default_workers();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Isosceles-orthogonality constants of normed planes"};
  app.name("isoconst");
  app.require_subcommand(1);
  app.footer(std::string("Environment: ") + kWorkersEnv +
             " sets the default --workers value.\n"
             "Exit codes: 0 success, 1 relation failure, 2 computation or I/O error, 64 usage error.");

  auto* compute = app.add_subcommand("compute", "Estimate one constant on one norm");
  compute->add_option("--norm", o.norm, "Norm file or builtin label")->required();
  compute->add_option("--constant", o.constant,
                      "omega, omega-prime, james, schaffer, cnj, gamma, delta, d, br")
      ->required();
  compute->add_option("--param", o.param, "t for gamma, eps for delta");
  compute->add_option("--format", o.format, "json or csv");
  compute->add_flag("--closed-form", o.closed_form, "Use the symmetric-plane reduction (omega only)");
  compute->add_option("--axes", o.axes, "Axes e1x e1y e2x e2y for --closed-form")->expected(4);
  add_grid_options(compute, o);

  auto* verify = app.add_subcommand("verify", "Check every relation on a battery of norms");
  verify->add_option("--battery", o.battery, "'default' and/or norm sources")->required();
  verify->add_option("--format", o.format, "table, json or csv");
  add_grid_options(verify, o);

  auto* sweep = app.add_subcommand("sweep", "Tabulate a constant over a parameter range");
  sweep->add_option("--norm", o.norm, "Norm file or builtin label (not used with --over p)");
  sweep->add_option("--constant", o.constant, "gamma or delta, or any constant with --over p")
      ->required();
  sweep->add_option("--over", o.over, "'p' to sweep the lp family");
  sweep->add_option("--from", o.from, "Range start")->required();
  sweep->add_option("--to", o.to, "Range end")->required();
  sweep->add_option("--step", o.step, "Range step")->required();
  sweep->add_flag("--include-inf", o.include_inf, "Append p = inf to a p-sweep");
  sweep->add_option("--format", o.format, "csv or json");
  add_grid_options(sweep, o);

  auto* plot = app.add_subcommand("plot", "Write an SVG of a unit ball or a sweep");
  plot->add_option("--norm", o.norm, "Norm file or builtin label");
  plot->add_option("--constant", o.constant, "Draw this constant's witness, or sweep it");
  plot->add_option("--param", o.param, "t for gamma, eps for delta");
  plot->add_option("--data", o.data, "Sweep CSV to chart");
  plot->add_option("--over", o.over, "'p' to sweep the lp family");
  plot->add_option("--from", o.from, "Sweep start");
  plot->add_option("--to", o.to, "Sweep end");
  plot->add_option("--step", o.step, "Sweep step");
  plot->add_flag("--include-inf", o.include_inf, "Append p = inf to a p-sweep");
  plot->add_option("--x-label", o.x_label, "Chart x-axis label");
  plot->add_option("--y-label", o.y_label, "Chart y-axis label");
  plot->add_option("--format", o.format, "svg");
  add_grid_options(plot, o);

  auto* list = app.add_subcommand("list-norms", "List builtin norms and the file format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    check_grid(o.grid);
    if (compute->parsed()) return cmd_compute(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (plot->parsed()) return cmd_plot(o, out);
    if (list->parsed()) return cmd_list_norms(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputeError;
  }
  return kExitUsage;
}

}  // namespace isoconst::cli
