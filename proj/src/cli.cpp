#include "nadyn/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "nadyn/crucial.hpp"
#include "nadyn/degeneration.hpp"
#include "nadyn/equidist.hpp"
#include "nadyn/error.hpp"
#include "nadyn/parse.hpp"
#include "nadyn/report.hpp"

namespace nadyn {

namespace {

struct Options {
  std::string map;
  std::string point = "gauss";
  std::string target;
  std::string direction;
  std::string start;
  int nmax = kDefaultLevels;
  std::string t_list = "1e-3";
  int n = 12;
  double eps = kDefaultEps;
  std::string hypothesis = "auto";
  std::string z0;
  bool pretty = false;
  bool json = true;
};

double parse_double(const std::string& s) {
  size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw Error(ErrorKind::InvalidArgument, "not a number: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

Json slopes_json(const RationalMapK& phi, const TypeIIPoint& xi, const std::vector<DirectionClass>& classes) {
  IntrinsicReduction r = intrinsic_data(phi, xi);
  ResultantFunction f(phi);
  Json out = Json::array();
  for (const auto& cls : classes) {
    SlopeReport s = slope_rhs(r, cls);
    if (!std::holds_alternative<Factor>(cls)) s.measured = slope_measured(f, xi, cls);
    out.push_back(to_json(s));
  }
  return out;
}

Json with_point(const TypeIIPoint& p) {
  Json j;
  j["point"] = to_json(p);
  return j;
}

Json execute(const std::string& verb, const Options& o) {
  RationalMapK phi = parse_map(o.map);
  TypeIIPoint xi = parse_point(o.point);
  if (verb == "reduce") {
    TypeIIPoint target = o.target.empty() ? xi : parse_point(o.target);
    Json j = with_point(xi);
    j["target"] = to_json(target);
    Json red = to_json(reduction_between(phi, xi, target));
    for (auto& [k, v] : red.items()) j[k] = v;
    return j;
  }
  if (verb == "depths") {
    IntrinsicReduction r = intrinsic_data(phi, xi);
    Json j = with_point(xi);
    j["depths"] = to_json(r.depths);
    j["deg_h"] = r.depths.total();
    return j;
  }
  if (verb == "intrinsic") return to_json(intrinsic_data(phi, xi));
  if (verb == "ordres" || verb == "hypres") {
    ResultantFunction f(phi);
    Json j;
    j["ord_res"] = to_string(f.ord_res(xi));
    j["hyp_res"] = to_string(f.hyp_res(xi));
    if (verb == "hypres") j["hyp_res_direct"] = to_string(hyp_res_direct(phi, xi));
    j["point"] = to_json(xi);
    return j;
  }
  if (verb == "slope") {
    std::vector<DirectionClass> classes;
    if (o.direction.empty()) {
      classes = probe_classes(intrinsic_data(phi, xi));
    } else {
      classes.push_back(parse_direction(o.direction, xi).cls);
    }
    Json j = with_point(xi);
    j["slopes"] = slopes_json(phi, xi, classes);
    return j;
  }
  if (verb == "semistable") {
    IntrinsicReduction r = intrinsic_data(phi, xi);
    Json j = with_point(xi);
    j["verdict"] = to_string(semistability(r));
    j["slopes"] = slopes_json(phi, xi, probe_classes(r));
    return j;
  }
  if (verb == "minlocus") {
    MinLocusResult m = o.start.empty() ? min_locus(phi) : min_locus(phi, parse_point(o.start));
    Json j = to_json(m);
    j["ord_res"] = to_string(ord_res(phi, m.minimizer));
    return j;
  }
  if (verb == "equidist") return to_json(depth_sequence(phi, xi, o.nmax));
  // degcheck
  std::vector<Complex> ts;
  for (const auto& s : split(o.t_list, ',')) ts.emplace_back(parse_double(s), 0.0);
  std::optional<DirectionMeasure> hyp;
  if (o.hypothesis != "auto") {
    Json parsed;
    try {
      parsed = Json::parse(o.hypothesis);
      hyp = measure_from_json(parsed);
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::InvalidArgument, std::string("bad hypothesis JSON: ") + e.what());
    }
  }
  CPoint z0 = CPoint::at(kDefaultStart);
  if (!o.z0.empty()) {
    if (o.z0 == "inf") {
      z0 = CPoint::infinity();
    } else {
      auto parts = split(o.z0, ',');
      if (parts.size() != 2) throw Error(ErrorKind::InvalidArgument, "--z0 expects re,im or inf");
      z0 = CPoint::at(Complex(parse_double(parts[0]), parse_double(parts[1])));
    }
  }
  return to_json(degeneration_report(phi, ts, o.n, o.eps, hyp, z0));
}

}  // namespace

CliResult run(const std::vector<std::string>& args) {
  CLI::App app{"Reductions, resultant functions and depth equidistribution of rational maps over Q(t).", "nadyn"};
  app.require_subcommand(1);
  Options o;

  struct Verb {
    const char* name;
    const char* help;
  };
  const Verb verbs[] = {
      {"reduce", "coefficient reduction between two charts"},
      {"depths", "depth divisor at a point"},
      {"intrinsic", "intrinsic reduction at a point"},
      {"ordres", "ordRes and hypRes at a point"},
      {"hypres", "hypRes by both routes"},
      {"slope", "directional slopes of hypRes"},
      {"minlocus", "descend to the minimal resultant locus"},
      {"semistable", "GIT verdict at a point"},
      {"equidist", "normalized depth measures of iterates"},
      {"degcheck", "sample complex specializations and compare"},
  };
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("--map", o.map, "rational map in z over Q(t)")->required();
    sub->add_flag("--pretty", o.pretty, "indented JSON");
    sub->add_flag("--json", o.json, "JSON output (default)");
    std::string name = v.name;
    if (name != "minlocus" && name != "degcheck") sub->add_option("--point", o.point, "gauss or a=<scalar>;s=<rational>");
    if (name == "reduce") sub->add_option("--target", o.target, "target chart point (default: --point)");
    if (name == "slope") sub->add_option("--direction", o.direction, "inf | res=q | factor=poly | toward:point");
    if (name == "minlocus") sub->add_option("--start", o.start, "starting point (default gauss)");
    if (name == "equidist") sub->add_option("--nmax", o.nmax, "number of levels")->check(CLI::PositiveNumber);
    if (name == "degcheck") {
      sub->add_option("--t", o.t_list, "comma-separated t values");
      sub->add_option("--n", o.n, "pullback depth")->check(CLI::NonNegativeNumber);
      sub->add_option("--eps", o.eps, "chordal radius")->check(CLI::PositiveNumber);
      sub->add_option("--hypothesis", o.hypothesis, "auto or a measure as JSON");
      sub->add_option("--z0", o.z0, "start point re,im or inf");
    }
  }

  std::vector<const char*> argv{"nadyn"};
  for (const auto& a : args) argv.push_back(a.c_str());
  CliResult res;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    res.exit_code = code == 0 ? 0 : 1;
    res.err = out.str() + err.str();
    return res;
  }

  std::string verb = app.get_subcommands().front()->get_name();
  Json j;
  try {
    j = execute(verb, o);
  } catch (const Error& e) {
    res.exit_code = is_usage_error(e.kind()) ? 1 : 2;
    j = Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
  }
  res.out = j.dump(o.pretty ? 2 : -1) + "\n";
  return res;
}

}  // namespace nadyn
