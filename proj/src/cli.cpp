#include "ifc/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>

#include "ifc/calculus.hpp"
#include "ifc/errors.hpp"
#include "ifc/expr.hpp"
#include "ifc/json.hpp"
#include "ifc/trend.hpp"

namespace ifc::cli {
namespace {

using nlohmann::json;

constexpr const char* kOperatorHelp =
    "Operators: + is IFN addition, - subtraction, * multiplication, / division.\n"
    "Functions of the IFN variable X: X, X^k, k*F, (u,v)+F.\n"
    "Numbers may be written as fractions, e.g. (5/9,3/7).";

struct Options {
  double tolerance = kTolerance;
  bool csv = false;
  bool json_out = false;

  std::string expr;
  std::string at;
  std::string phi;
  std::string gamma;
  std::string x;
  std::string y;
  std::string form = "add";
  std::string kind;
  std::string alpha;
  std::string path;
  std::string trend_phi;
  std::size_t resolution = 50;
  std::size_t samples = 50;
};

std::string csv_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

json result(const std::string& command, json inputs, json output, json diagnostics) {
  return json{{"command", command},
              {"inputs", std::move(inputs)},
              {"output", std::move(output)},
              {"diagnostics", std::move(diagnostics)}};
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

void emit_points(std::ostream& out, const Options& o, const std::string& command, json inputs,
                 const std::vector<IFN>& points) {
  if (o.json_out) {
    emit(out, result(command, std::move(inputs),
                     json{{"points", points}, {"count", points.size()}}, json::object()));
    return;
  }
  out << "u,v\n";
  for (const IFN& p : points) out << csv_number(p.u()) << ',' << csv_number(p.v()) << '\n';
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Evaluation ev = evaluate(parse(o.expr));
  json inputs{{"expr", o.expr}};
  json diagnostics{{"fallbacks", ev.fallbacks}};
  json output;
  if (const IFN* a = std::get_if<IFN>(&ev.value)) {
    if (!o.at.empty()) throw TypeMismatchError("--at applies only to functions of X");
    diagnostics["kind"] = "ifn";
    output = *a;
  } else {
    const IFF& phi = std::get<IFF>(ev.value);
    diagnostics["kind"] = "iff";
    diagnostics["function"] = phi.describe();
    if (o.at.empty()) {
      output = json{{"function", phi.describe()}};
    } else {
      inputs["at"] = o.at;
      output = eval(phi, parse_ifn(o.at));
    }
  }
  emit(out, result("eval", std::move(inputs), std::move(output), std::move(diagnostics)));
  return kSuccess;
}

int cmd_mvt(const Options& o, std::ostream& out) {
  const IFF phi = parse_iff(o.phi);
  const IFN x = parse_ifn(o.x);
  const IFN y = parse_ifn(o.y);
  const MeanValueResult r = add_mvt_solve(phi, x, y);
  const CmvtReport check = add_mvt_check(phi, x, y, o.tolerance);
  emit(out, result("mvt", json{{"phi", o.phi}, {"X", x}, {"Y", y}}, r,
                   json{{"identity_check", check}}));
  return kSuccess;
}

int report_check(const std::string& command, json inputs, const CmvtReport& r,
                 std::ostream& out) {
  emit(out, result(command, std::move(inputs), r, json{{"passed", r.passed}}));
  return r.passed ? kSuccess : kCheckFailed;
}

int cmd_cmvt(const Options& o, std::ostream& out) {
  const IFF phi = parse_iff(o.phi);
  const IFF gamma = parse_iff(o.gamma);
  const IFN x = parse_ifn(o.x);
  const IFN y = parse_ifn(o.y);
  const CmvtReport r = o.form == "mul" ? mul_cmvt_check(phi, gamma, x, y, o.tolerance)
                                       : add_cmvt_check(phi, gamma, x, y, o.tolerance);
  return report_check(
      "cmvt", json{{"phi", o.phi}, {"gamma", o.gamma}, {"X", x}, {"Y", y}, {"form", o.form}}, r,
      out);
}

int cmd_rolle(const Options& o, std::ostream& out) {
  const IFF phi = parse_iff(o.phi);
  const IFN x = parse_ifn(o.x);
  const IFN y = parse_ifn(o.y);
  return report_check("rolle", json{{"phi", o.phi}, {"X", x}, {"Y", y}},
                      rolle_check(phi, x, y, o.tolerance), out);
}

int cmd_derive(const Options& o, std::ostream& out) {
  const IFF phi = parse_iff(o.phi);
  const IFN x = parse_ifn(o.x);
  const DerivativeValue d = o.form == "mul" ? mul_derivative(phi, x) : add_derivative(phi, x);
  emit(out, result("derive", json{{"phi", o.phi}, {"X", x}, {"form", o.form}}, d,
                   json{{"is_valid_ifn", d.is_valid_ifn}}));
  return kSuccess;
}

int cmd_region(const Options& o, std::ostream& out) {
  const Region kind = (o.kind == "add" || o.kind == "S+") ? Region::Add : Region::Sub;
  const IFN alpha = parse_ifn(o.alpha);
  emit_points(out, o, "region",
              json{{"kind", kind == Region::Add ? "add" : "sub"},
                   {"alpha", alpha},
                   {"resolution", o.resolution}},
              region_grid(kind, alpha, o.resolution));
  return kSuccess;
}

int cmd_curve(const Options& o, std::ostream& out) {
  const IFN alpha = parse_ifn(o.alpha);
  emit_points(out, o, "curve", json{{"alpha", alpha}, {"samples", o.samples}},
              lambda_curve(alpha, o.samples));
  return kSuccess;
}

int cmd_trend(const Options& o, std::ostream& out) {
  std::ifstream in(o.path);
  if (!in) throw InputError("cannot open " + o.path);
  const std::vector<Observation> rows = read_trend_csv(in);
  std::optional<IFF> phi;
  if (!o.trend_phi.empty()) phi = parse_iff(o.trend_phi);
  const TrendReport report = analyze_trend(rows, phi);

  if (o.csv) {
    out << "t_from,t_to,du,dv,fallback_used,classification";
    if (phi) out << ",derivative_u,derivative_v";
    out << '\n';
    for (const TrendStep& s : report.steps) {
      out << csv_number(s.t_from) << ',' << csv_number(s.t_to) << ','
          << csv_number(s.difference.value.u()) << ',' << csv_number(s.difference.value.v())
          << ',' << (s.difference.fallback_used ? "true" : "false") << ','
          << to_string(s.classification);
      if (phi) {
        if (s.derivative) {
          out << ',' << csv_number(s.derivative->value.u) << ','
              << csv_number(s.derivative->value.v);
        } else {
          out << ",,";
        }
      }
      out << '\n';
    }
    return kSuccess;
  }

  json steps = json::array();
  for (const TrendStep& s : report.steps) {
    json step{{"t_from", round15(s.t_from)},
              {"t_to", round15(s.t_to)},
              {"difference", s.difference.value},
              {"fallback_used", s.difference.fallback_used},
              {"classification", to_string(s.classification)}};
    if (phi) step["derivative"] = s.derivative ? json(*s.derivative) : json(nullptr);
    if (s.note) step["note"] = *s.note;
    steps.push_back(std::move(step));
  }
  json inputs{{"csv", o.path}};
  if (phi) inputs["phi"] = o.trend_phi;
  emit(out, result("trend", std::move(inputs),
                   json{{"steps", std::move(steps)},
                        {"summary",
                         {{"increasing", report.increasing},
                          {"not-comparable", report.not_comparable}}}},
                   json{{"rows", rows.size()}, {"experimental", true}}));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intuitionistic fuzzy calculus engine: IFN arithmetic, derivatives of\n"
               "intuitionistic fuzzy functions, mean-value points and identity checks.\n" +
               std::string(kOperatorHelp)};
  app.name(args.empty() ? "ifcalc" : args.front());
  app.require_subcommand(1);
  Options o;
  app.add_option("--tolerance", o.tolerance, "Gap allowed by identity checks")
      ->default_val(kTolerance)
      ->check(CLI::PositiveNumber);

  auto add_format = [&o](CLI::App* sub) {
    auto* j = sub->add_flag("--json", o.json_out, "Emit a JSON result line");
    auto* c = sub->add_flag("--csv", o.csv, "Emit CSV");
    j->excludes(c);
  };

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an IFN expression or build a function");
  eval_cmd->add_option("expr", o.expr, "Expression, e.g. \"(0.6,0.3)-(0.1,0.7)\"")->required();
  eval_cmd->add_option("--at", o.at, "Evaluate a function of X at this IFN");

  auto* mvt_cmd = app.add_subcommand("mvt", "Solve for the addition mean-value point X0");
  mvt_cmd->add_option("phi", o.phi, "Function of X, e.g. \"X^2\"")->required();
  mvt_cmd->add_option("X", o.x, "Lower endpoint IFN")->required();
  mvt_cmd->add_option("Y", o.y, "Upper endpoint IFN")->required();

  auto* cmvt_cmd = app.add_subcommand("cmvt", "Check the Cauchy mean value identity");
  cmvt_cmd->add_option("phi", o.phi)->required();
  cmvt_cmd->add_option("gamma", o.gamma)->required();
  cmvt_cmd->add_option("X", o.x)->required();
  cmvt_cmd->add_option("Y", o.y)->required();
  cmvt_cmd->add_option("--form", o.form, "add or mul")->check(CLI::IsMember({"add", "mul"}));

  auto* rolle_cmd = app.add_subcommand("rolle", "Check that a function with phi(X) = phi(Y) has "
                                                "secant derivative (0,1)");
  rolle_cmd->add_option("phi", o.phi)->required();
  rolle_cmd->add_option("X", o.x)->required();
  rolle_cmd->add_option("Y", o.y)->required();

  auto* derive_cmd = app.add_subcommand("derive", "Point derivative of a function of X");
  derive_cmd->add_option("phi", o.phi)->required();
  derive_cmd->add_option("X", o.x)->required();
  derive_cmd->add_option("--form", o.form, "add or mul")->check(CLI::IsMember({"add", "mul"}));

  auto* region_cmd = app.add_subcommand("region", "Grid points of S+(alpha) or S-(alpha)");
  region_cmd->add_option("kind", o.kind, "add (S+) or sub (S-)")
      ->required()
      ->check(CLI::IsMember({"add", "sub", "S+", "S-"}));
  region_cmd->add_option("alpha", o.alpha)->required();
  region_cmd->add_option("--resolution", o.resolution, "Grid divisions per axis")
      ->check(CLI::PositiveNumber);
  add_format(region_cmd);

  auto* curve_cmd = app.add_subcommand("curve", "Sample the curve of lambda*alpha");
  curve_cmd->add_option("alpha", o.alpha)->required();
  curve_cmd->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  add_format(curve_cmd);

  auto* trend_cmd = app.add_subcommand(
      "trend", "(experimental) Stepwise differences and order classification of a t,u,v CSV");
  trend_cmd->add_option("file", o.path, "CSV file with header t,u,v")->required();
  trend_cmd->add_option("--phi", o.trend_phi, "Function whose secant derivative is reported");
  add_format(trend_cmd);

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend());
    if (!rest.empty()) rest.pop_back();
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*eval_cmd) return cmd_eval(o, out);
    if (*mvt_cmd) return cmd_mvt(o, out);
    if (*cmvt_cmd) return cmd_cmvt(o, out);
    if (*rolle_cmd) return cmd_rolle(o, out);
    if (*derive_cmd) return cmd_derive(o, out);
    if (*region_cmd) return cmd_region(o, out);
    if (*curve_cmd) return cmd_curve(o, out);
    if (*trend_cmd) return cmd_trend(o, out);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  } catch (const TypeMismatchError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionError;
  }
  return kUsageError;
}

}  // namespace ifc::cli
