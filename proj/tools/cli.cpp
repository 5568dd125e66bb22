#include "cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "geninv/compose.hpp"
#include "geninv/inverse.hpp"
#include "geninv/io.hpp"
#include "geninv/properties.hpp"
#include "geninv/sampling.hpp"

namespace geninv {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kViolations = 3;

struct Options {
  std::string path;
  std::string path_b;
  bool minus = false;
  bool plus = false;
  std::string at;
  bool left = false;
  bool right = false;
  bool lemma4 = false;
  std::string lemma5;
  std::uint64_t seed = 42;
  std::size_t cases = 100;
  std::string only;
  std::size_t n = 0;
  std::string xmin;
  std::string xmax;
  std::size_t points = 101;
  bool exact = false;
};

PiecewiseMonotone load(const std::string& path) { return io::parse_function(io::read_text(path)); }

int cmd_validate(const Options& o, std::ostream& out) {
  out << io::emit(load(o.path)) << '\n';
  return kOk;
}

int cmd_invert(const Options& o, std::ostream& out) {
  const Side side = o.minus ? Side::Minus : Side::Plus;
  out << io::emit(invert(load(o.path), side)) << '\n';
  return kOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const ExtPiecewise f = io::parse_ext_function(io::read_text(o.path));
  const Rational y = parse_rational(o.at);
  const ExtReal v = o.left ? f.left_limit(y) : o.right ? f.right_limit(y) : f.eval(y);
  out << to_string(v) << '\n';
  return kOk;
}

int cmd_compose(const Options& o, std::ostream& out) {
  const PiecewiseMonotone f = load(o.path);
  std::vector<CompositionReport> reports;
  if (o.lemma4) {
    for (Side side : {Side::Plus, Side::Minus}) reports.push_back(predict_T_after_inv(f, side));
    for (Side side : {Side::Plus, Side::Minus}) reports.push_back(predict_inv_after_T(f, side));
  } else {
    auto [outer, inner] = predict_one_sided(f, o.lemma5 == "right" ? Continuity::Right : Continuity::Left);
    reports.push_back(std::move(outer));
    reports.push_back(std::move(inner));
  }
  io::json doc{{"reports", io::json::array()}};
  std::size_t mismatches = 0;
  for (const auto& r : reports) {
    mismatches += r.mismatches.size();
    doc["reports"].push_back(io::to_json(r));
  }
  doc["mismatches"] = mismatches;
  out << doc.dump(2) << '\n';
  return mismatches == 0 ? kOk : kViolations;
}

int cmd_check(const Options& o, std::ostream& out) {
  GeneratorConfig config;
  config.seed = o.seed;
  std::optional<std::string_view> only;
  if (!o.only.empty()) {
    if (!is_known_property(o.only)) throw Error(Errc::UnknownProperty, "no property named '" + o.only + "'");
    only = o.only;
  }
  const auto results = run_suite(config, o.cases, only);
  io::json doc{{"seed", o.seed}, {"cases", o.cases}, {"results", io::json::array()}};
  std::size_t violations = 0;
  for (const auto& r : results) {
    violations += r.violation_count;
    doc["results"].push_back(io::to_json(r));
  }
  doc["violations"] = violations;
  out << doc.dump(2) << '\n';
  return violations == 0 ? kOk : kViolations;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const CdfSpec cdf = validate_cdf(load(o.path));
  io::write_samples(out, sample(cdf, o.n, o.seed, o.plus ? Side::Plus : Side::Minus));
  return kOk;
}

int cmd_ecdf(const Options& o, std::ostream& out) {
  std::istringstream in(io::read_text(o.path));
  const auto samples = io::read_samples(in);
  out << io::emit(ecdf(samples).function()) << '\n';
  return kOk;
}

int cmd_ks(const Options& o, std::ostream& out) {
  const CdfSpec a = validate_cdf(load(o.path));
  const CdfSpec b = validate_cdf(load(o.path_b));
  out << to_string(ks_distance(a, b)) << '\n';
  return kOk;
}

int cmd_plotdata(const Options& o, std::ostream& out) {
  const PiecewiseMonotone f = load(o.path);
  const Rational a = parse_rational(o.xmin);
  const Rational b = parse_rational(o.xmax);
  if (a > b) throw Error(Errc::InvalidConfig, "empty range: xmin " + o.xmin + " > xmax " + o.xmax);
  std::vector<Rational> xs;
  const Rational steps(static_cast<unsigned long>(std::max<std::size_t>(o.points, 2) - 1));
  for (std::size_t i = 0; i < o.points; ++i) {
    xs.push_back(o.points == 1 ? a : a + (b - a) * Rational(static_cast<unsigned long>(i)) / steps);
  }
  for (const auto& bp : f.breakpoints()) {
    if (a <= bp.x && bp.x <= b) xs.push_back(bp.x);
  }
  std::ranges::sort(xs);
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  auto cell = [&](const Rational& v) {
    if (o.exact) return to_string(v);
    std::ostringstream ss;
    ss << std::setprecision(12) << to_double(v);
    return ss.str();
  };
  out << "# x\tf(x)\tf(x-)\tf(x+)\n";
  for (const auto& x : xs) {
    out << cell(x) << '\t' << cell(f.eval(x)) << '\t' << cell(f.left_limit(x)) << '\t' << cell(f.right_limit(x))
        << '\n';
  }
  return kOk;
}

void report_error(std::ostream& err, const char* code, const std::string& message) {
  err << io::json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized inverses of nondecreasing piecewise-affine functions", "geninv"};
  app.require_subcommand(1);
  Options o;

  auto* validate_cmd = app.add_subcommand("validate", "check a function file and print its canonical form");
  validate_cmd->add_option("file", o.path, "function file ('-' for stdin)")->required();

  auto* invert_cmd = app.add_subcommand("invert", "print T+ (default) or T-");
  invert_cmd->add_option("file", o.path)->required();
  auto* plus_flag = invert_cmd->add_flag("--plus", o.plus, "right-continuous inverse inf{x : T(x) > y}");
  invert_cmd->add_flag("--minus", o.minus, "left-continuous inverse inf{x : T(x) >= y}")->excludes(plus_flag);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a function, or one of its one-sided limits");
  eval_cmd->add_option("file", o.path)->required();
  eval_cmd->add_option("--at", o.at, "point (rational literal)")->required();
  auto* left_flag = eval_cmd->add_flag("--left", o.left, "left limit");
  eval_cmd->add_flag("--right", o.right, "right limit")->excludes(left_flag);

  auto* compose_cmd = app.add_subcommand("compose", "compare T∘T± and T±∘T with their predicted form");
  compose_cmd->add_option("file", o.path)->required();
  auto* l4 = compose_cmd->add_flag("--check-lemma4", o.lemma4, "general predictions");
  auto* l5 = compose_cmd->add_option("--check-lemma5", o.lemma5, "one-sided predictions")
                 ->check(CLI::IsMember({"right", "left"}));
  l4->excludes(l5);

  auto* check_cmd = app.add_subcommand("check", "run the property suite on generated functions");
  check_cmd->add_option("--seed", o.seed, "generator seed")->envname("GENINV_SEED");
  check_cmd->add_option("--cases", o.cases, "number of generated functions");
  check_cmd->add_option("--only", o.only, "run a single property");

  auto* sample_cmd = app.add_subcommand("sample", "inverse-transform sampling through F-");
  sample_cmd->add_option("file", o.path, "CDF file")->required();
  sample_cmd->add_option("--n", o.n, "number of draws")->required();
  sample_cmd->add_option("--seed", o.seed, "draw seed")->envname("GENINV_SEED");
  sample_cmd->add_flag("--plus", o.plus, "sample through F+ instead");

  auto* ecdf_cmd = app.add_subcommand("ecdf", "empirical CDF of a sample file");
  ecdf_cmd->add_option("file", o.path, "one value per line")->required();

  auto* ks_cmd = app.add_subcommand("ks", "exact Kolmogorov-Smirnov distance between two CDFs");
  ks_cmd->add_option("a", o.path)->required();
  ks_cmd->add_option("b", o.path_b)->required();

  auto* plot_cmd = app.add_subcommand("plotdata", "TSV rows x, f(x), f(x-), f(x+) including every breakpoint");
  plot_cmd->add_option("file", o.path)->required();
  plot_cmd->add_option("--xmin", o.xmin)->required();
  plot_cmd->add_option("--xmax", o.xmax)->required();
  plot_cmd->add_option("--points", o.points, "evenly spaced grid points")->check(CLI::PositiveNumber);
  plot_cmd->add_flag("--exact", o.exact, "print rationals instead of decimals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    report_error(err, "UsageError", e.what());
    return kUsage;
  }

  if (compose_cmd->parsed() && !o.lemma4 && o.lemma5.empty()) {
    report_error(err, "UsageError", "compose needs --check-lemma4 or --check-lemma5 right|left");
    return kUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (invert_cmd->parsed()) return cmd_invert(o, out);
    if (eval_cmd->parsed()) return cmd_eval(o, out);
    if (compose_cmd->parsed()) return cmd_compose(o, out);
    if (check_cmd->parsed()) return cmd_check(o, out);
    if (sample_cmd->parsed()) return cmd_sample(o, out);
    if (ecdf_cmd->parsed()) return cmd_ecdf(o, out);
    if (ks_cmd->parsed()) return cmd_ks(o, out);
    if (plot_cmd->parsed()) return cmd_plotdata(o, out);
  } catch (const Error& e) {
    report_error(err, errc_name(e.code()), e.detail());
    return kUsage;
  }
  return kUsage;
}

}  // namespace geninv
