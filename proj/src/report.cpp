#include "nadyn/report.hpp"

#include <cstdio>

#include "nadyn/error.hpp"
#include "nadyn/parse.hpp"

namespace nadyn {

namespace {

Json with_class(const DirectionClass& c, Json extra) {
  Json j = to_json(c);
  for (auto& [k, v] : extra.items()) j[k] = v;
  return j;
}

Json complex_json(Complex z) { return Json::array({round12(z.real()), round12(z.imag())}); }

Json cpoint_json(const CPoint& p) {
  if (p.inf) return "inf";
  return complex_json(p.z);
}

}  // namespace

double round12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const TypeIIPoint& p) {
  Json j;
  j["a"] = to_string(p.center());
  j["s"] = to_string(p.exponent());
  return j;
}

Json to_json(const DirectionClass& c) {
  Json j;
  if (const auto* f = std::get_if<Finite>(&c)) {
    j["class"] = "finite";
    j["value"] = to_string(f->value);
  } else if (const auto* f = std::get_if<Factor>(&c)) {
    j["class"] = "factor";
    j["poly"] = poly_to_string(f->poly);
  } else {
    j["class"] = "inf";
  }
  return j;
}

DirectionClass class_from_json(const Json& j) {
  std::string kind = j.at("class").get<std::string>();
  if (kind == "inf") return Infinity{};
  if (kind == "finite") return Finite{parse_rational(j.at("value").get<std::string>())};
  if (kind == "factor") return class_from_poly(parse_residue_poly(j.at("poly").get<std::string>()));
  throw Error(ErrorKind::InvalidArgument, "unknown class kind '" + kind + "'");
}

Json to_json(const DepthDivisor& d) {
  Json parts = Json::array();
  if (d.inf_mult > 0) parts.push_back(with_class(Infinity{}, {{"depth", d.inf_mult}, {"mass", d.inf_mult}}));
  for (const auto& p : d.parts) {
    parts.push_back(with_class(class_from_poly(p.poly), {{"depth", p.mult}, {"mass", p.mult * p.poly.degree()}}));
  }
  return parts;
}

Json to_json(const CoeffReduction& r) {
  Json j;
  j["degree"] = r.degree;
  j["num"] = to_string(r.num_form);
  j["den"] = to_string(r.den_form);
  j["gcd"] = to_string(r.gcd_form);
  j["tilde_num"] = to_string(r.tilde_num);
  j["tilde_den"] = to_string(r.tilde_den);
  j["tilde_degree"] = r.tilde_degree;
  j["constant"] = r.is_constant() ? Json(to_string(r.constant_value())) : Json(nullptr);
  return j;
}

Json to_json(const IntrinsicReduction& r) {
  Json j;
  j["point"] = to_json(r.at);
  j["fixes_point"] = r.fixes_point;
  if (r.fixes_point) {
    j["tangent"] = {{"num", to_string(r.tangent_num)}, {"den", to_string(r.tangent_den)}};
    j["image_direction"] = nullptr;
  } else {
    j["tangent"] = nullptr;
    j["image_direction"] = to_json(*r.image_direction);
  }
  j["depths"] = to_json(r.depths);
  j["deg_h"] = r.depths.total();
  j["local_degree"] = r.local_degree ? Json(*r.local_degree) : Json(nullptr);
  j["totally_invariant"] = r.totally_invariant;
  return j;
}

Json to_json(const SlopeReport& s) {
  return with_class(s.direction.cls, {{"dep", s.dep},
                                      {"fixed", s.fixed},
                                      {"rhs", to_string(s.rhs)},
                                      {"measured", s.measured ? Json(to_string(*s.measured)) : Json(nullptr)}});
}

Json to_json(const MinLocusResult& m) {
  Json j;
  j["minimizer"] = to_json(m.minimizer);
  j["verdict"] = to_string(m.verdict);
  j["unique"] = m.unique;
  j["hyp_res"] = to_string(m.min_hyp_res);
  Json trail = Json::array();
  for (const auto& s : m.trail) {
    trail.push_back({{"from", to_json(s.from)}, {"direction", to_json(s.cls)}, {"step", to_string(s.step)}});
  }
  j["trail"] = trail;
  Json flat = Json::array();
  for (const auto& c : m.flat_directions) flat.push_back(to_json(c));
  j["flat_directions"] = flat;
  return j;
}

Json to_json(const DirectionMeasure& m) {
  Json atoms = Json::array();
  for (const auto& a : m.atoms) atoms.push_back(with_class(a.cls, {{"mass", to_string(a.mass)}}));
  Json j;
  j["atoms"] = atoms;
  j["point_mass"] = m.point_mass ? Json(to_string(*m.point_mass)) : Json(nullptr);
  return j;
}

DirectionMeasure measure_from_json(const Json& j) {
  DirectionMeasure m;
  for (const auto& a : j.at("atoms")) {
    m.atoms.push_back({class_from_json(a), parse_rational(a.at("mass").get<std::string>())});
  }
  if (j.contains("point_mass") && !j["point_mass"].is_null()) {
    m.point_mass = parse_rational(j["point_mass"].get<std::string>());
  }
  return m;
}

Json to_json(const ConvergenceReport& r) {
  Json levels = Json::array();
  for (size_t i = 0; i < r.levels.size(); ++i) {
    Json level;
    level["n"] = r.levels[i];
    Json m = to_json(r.measures[i]);
    level["atoms"] = m["atoms"];
    level["point_mass"] = m["point_mass"];
    levels.push_back(level);
  }
  Json tv = Json::array();
  for (const auto& x : r.tv_steps) tv.push_back(to_string(x));
  Json j;
  j["levels"] = levels;
  j["tv"] = tv;
  j["predicted"] = r.predicted ? to_json(*r.predicted) : Json("unknown");
  switch (r.match) {
    case Match::Yes:
      j["match"] = true;
      break;
    case Match::No:
      j["match"] = false;
      break;
    case Match::NotApplicable:
      j["match"] = "n/a";
      break;
  }
  return j;
}

Json to_json(const DegenerationReport& r) {
  Json predicted = Json::array();
  for (const auto& p : r.predicted) {
    Json centers = Json::array();
    for (const auto& c : p.centers) centers.push_back(cpoint_json(c));
    predicted.push_back(with_class(p.cls, {{"targets", centers}, {"mass", to_string(p.mass)}}));
  }
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json masses = Json::array();
    for (double m : row.masses) masses.push_back(round12(m));
    rows.push_back({{"t", complex_json(row.t)}, {"masses", masses}});
  }
  Json j;
  j["hypothesis"] = r.hypothesis_source;
  j["predicted"] = predicted;
  j["results"] = rows;
  j["max_discrepancy"] = round12(r.max_discrepancy);
  return j;
}

}  // namespace nadyn
