#include "nadyn/respoly.hpp"

#include <algorithm>

#include "nadyn/error.hpp"

namespace nadyn {

namespace {

std::string rational_text(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string monomial_term(const Rational& mag, const std::string& vars) {
  if (vars.empty()) return rational_text(mag);
  if (mag == 1) return vars;
  return rational_text(mag) + "*" + vars;
}

void append_term(std::string& out, const Rational& c, const std::string& vars) {
  bool neg = sgn(c) < 0;
  std::string body = monomial_term(neg ? Rational(-c) : c, vars);
  if (out.empty()) {
    out = neg ? "-" + body : body;
  } else {
    out += (neg ? "-" : "+") + body;
  }
}

std::string power_text(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 0) return p;
  QPoly g = gcd(p, p.derivative());
  return (p / g).monic();
}

}  // namespace

HomogeneousForm::HomogeneousForm(int degree, QPoly dehomogenized)
    : degree_(degree), poly_(std::move(dehomogenized)) {
  if (degree_ < 0 || poly_.degree() > degree_) {
    throw Error(ErrorKind::InvalidArgument, "form coefficients exceed the declared degree");
  }
}

HomogeneousForm HomogeneousForm::from_coeffs(const std::vector<Rational>& coeffs) {
  if (coeffs.empty()) throw Error(ErrorKind::InvalidArgument, "a form needs at least one coefficient");
  return HomogeneousForm(static_cast<int>(coeffs.size()) - 1, QPoly(coeffs));
}

std::string to_string(const HomogeneousForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= f.degree(); ++i) {
    Rational c = f.coeff(i);
    if (is_zero(c)) continue;
    std::string x0 = power_text("X0", f.degree() - i);
    std::string x1 = power_text("X1", i);
    std::string vars = x0.empty() ? x1 : (x1.empty() ? x0 : x0 + "*" + x1);
    append_term(out, c, vars);
  }
  return out;
}

HomogeneousForm homogeneous_gcd(const HomogeneousForm& f, const HomogeneousForm& g) {
  if (f.degree() != g.degree()) {
    throw Error(ErrorKind::InvalidArgument, "homogeneous_gcd needs forms of equal degree");
  }
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::BothFormsZero, "both reduced forms vanish");
  if (f.is_zero()) return HomogeneousForm(g.degree(), g.dehomogenized().monic());
  if (g.is_zero()) return HomogeneousForm(f.degree(), f.dehomogenized().monic());
  int m = std::min(f.inf_mult(), g.inf_mult());
  QPoly h = gcd(f.dehomogenized(), g.dehomogenized());
  return HomogeneousForm(m + h.degree(), h);
}

HomogeneousForm divide_exact(const HomogeneousForm& f, const HomogeneousForm& g) {
  auto [q, r] = divmod(f.dehomogenized(), g.dehomogenized());
  if (!r.is_zero() || f.degree() < g.degree()) {
    throw Error(ErrorKind::InvalidArgument, "form division is not exact");
  }
  return HomogeneousForm(f.degree() - g.degree(), q);
}

int DepthDivisor::total() const {
  int sum = inf_mult;
  for (const auto& p : parts) sum += p.mult * p.poly.degree();
  return sum;
}

int DepthDivisor::max_depth() const {
  int m = inf_mult;
  for (const auto& p : parts) m = std::max(m, p.mult);
  return m;
}

DepthDivisor squarefree_decomposition(const HomogeneousForm& h) {
  if (h.is_zero()) throw Error(ErrorKind::InvalidArgument, "squarefree decomposition of the zero form");
  DepthDivisor out;
  out.inf_mult = h.inf_mult();
  QPoly f = h.dehomogenized().monic();
  if (f.degree() <= 0) return out;
  // Yun's algorithm (characteristic 0).
  QPoly fp = f.derivative();
  QPoly a0 = gcd(f, fp);
  QPoly b = f / a0;
  QPoly c = fp / a0;
  QPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    QPoly a = gcd(b, d);
    if (a.degree() > 0) out.parts.push_back({a, i});
    b = b / a;
    c = d / a;
    d = c - b.derivative();
  }
  return out;
}

DirectionClass class_from_poly(const QPoly& p) {
  if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "a direction class needs a nonconstant polynomial");
  QPoly m = p.monic();
  if (!is_squarefree(m)) throw Error(ErrorKind::InvalidArgument, "factor classes must be squarefree");
  if (m.degree() == 1) return Finite{-m.coeff(0)};
  return Factor{m};
}

QPoly class_poly(const DirectionClass& c) {
  if (const auto* f = std::get_if<Finite>(&c)) return QPoly(std::vector<Rational>{-f->value, Rational(1)});
  if (const auto* f = std::get_if<Factor>(&c)) return f->poly;
  throw Error(ErrorKind::InvalidArgument, "the infinity class has no polynomial");
}

int class_size(const DirectionClass& c) {
  if (const auto* f = std::get_if<Factor>(&c)) return f->poly.degree();
  return 1;
}

std::string to_string(const DirectionClass& c) {
  if (const auto* f = std::get_if<Finite>(&c)) return "res=" + rational_text(f->value);
  if (const auto* f = std::get_if<Factor>(&c)) return "factor=" + poly_to_string(f->poly);
  return "inf";
}

bool is_squarefree(const QPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

int depth_at(const DepthDivisor& d, const DirectionClass& c) {
  if (std::holds_alternative<Infinity>(c)) return d.inf_mult;
  if (const auto* f = std::get_if<Finite>(&c)) {
    for (const auto& part : d.parts) {
      if (is_zero(part.poly.eval(f->value))) return part.mult;
    }
    return 0;
  }
  const QPoly& p = std::get<Factor>(c).poly;
  for (const auto& part : d.parts) {
    QPoly g = gcd(part.poly, p);
    if (g.degree() <= 0) continue;
    if (g.degree() != p.degree()) {
      throw Error(ErrorKind::AmbiguousClass,
                  "class " + poly_to_string(p) + " straddles depth parts; refine it by gcds first");
    }
    return part.mult;
  }
  return 0;
}

int class_mass(const DepthDivisor& d, const DirectionClass& c) { return class_size(c) * depth_at(d, c); }

std::vector<QPoly> coprime_basis(std::vector<QPoly> polys) {
  std::vector<QPoly> basis;
  std::vector<QPoly> work;
  for (auto& p : polys) {
    if (p.degree() >= 1) work.push_back(squarefree_part(p));
  }
  while (!work.empty()) {
    QPoly q = work.back().monic();
    work.pop_back();
    if (q.degree() < 1) continue;
    bool split = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      QPoly g = gcd(basis[i], q);
      if (g.degree() < 1) continue;
      if (g == basis[i] && g == q) {
        split = true;
        break;
      }
      QPoly b = basis[i];
      basis.erase(basis.begin() + static_cast<long>(i));
      work.push_back(g);
      work.push_back(b / g);
      work.push_back(q / g);
      split = true;
      break;
    }
    if (!split) basis.push_back(q);
  }
  std::sort(basis.begin(), basis.end(), poly_less);
  return basis;
}

ClassRefinement refine_classes(const DepthDivisor& first, const DepthDivisor& second) {
  ClassRefinement out;
  if (first.inf_mult > 0 || second.inf_mult > 0) {
    out.classes.emplace_back(Infinity{});
    out.mass_first.push_back(first.inf_mult);
    out.mass_second.push_back(second.inf_mult);
  }
  std::vector<QPoly> polys;
  for (const auto& p : first.parts) polys.push_back(p.poly);
  for (const auto& p : second.parts) polys.push_back(p.poly);
  for (const auto& b : coprime_basis(std::move(polys))) {
    DirectionClass c = class_from_poly(b);
    out.mass_first.push_back(class_mass(first, c));
    out.mass_second.push_back(class_mass(second, c));
    out.classes.push_back(std::move(c));
  }
  return out;
}

std::string poly_to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (is_zero(c)) continue;
    append_term(out, c, power_text(var, i));
  }
  return out;
}

}  // namespace nadyn
