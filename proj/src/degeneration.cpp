#include "nadyn/degeneration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nadyn/error.hpp"

namespace nadyn {

namespace {

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

// sum |c_i| max(1, |z|)^i
double coefficient_scale(const std::vector<Complex>& c, Complex z) {
  double r = std::max(1.0, std::abs(z));
  double acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * r + std::abs(c[i]);
  return acc;
}

std::vector<Complex> to_complex(const QPoly& p) {
  std::vector<Complex> out;
  for (const auto& c : p.coeffs()) out.emplace_back(c.get_d(), 0.0);
  return out;
}

std::string point_text(const CPoint& p) {
  if (p.inf) return "inf";
  return "(" + std::to_string(p.z.real()) + "," + std::to_string(p.z.imag()) + ")";
}

// log |det| of a square complex matrix; -inf when singular.
double log_abs_det(std::vector<std::vector<Complex>> m) {
  size_t n = m.size();
  double acc = 0;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    if (m[piv][col] == Complex(0)) return -INFINITY;
    std::swap(m[piv], m[col]);
    acc += std::log(std::abs(m[col][col]));
    for (size_t r = col + 1; r < n; ++r) {
      Complex f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return acc;
}

}  // namespace

double chordal(const CPoint& a, const CPoint& b) {
  if (a.inf && b.inf) return 0;
  if (a.inf) return 1 / std::sqrt(1 + std::norm(b.z));
  if (b.inf) return 1 / std::sqrt(1 + std::norm(a.z));
  return std::abs(a.z - b.z) / std::sqrt((1 + std::norm(a.z)) * (1 + std::norm(b.z)));
}

CPoint ComplexMap::operator()(const CPoint& p) const {
  if (p.inf) {
    if (den.back() == Complex(0)) return CPoint::infinity();
    return CPoint::at(num.back() / den.back());
  }
  Complex n = horner(num, p.z), d = horner(den, p.z);
  if (d == Complex(0)) return CPoint::infinity();
  return CPoint::at(n / d);
}

ComplexMap specialize(const RationalMapK& f, Complex t0) {
  ComplexMap g;
  auto eval = [&](const KScalar& x) -> Complex {
    KScalar c = x.compact();
    Complex u = c.level() == 1 ? t0 : std::pow(t0, 1.0 / c.level());
    std::vector<Complex> dc = to_complex(c.den());
    Complex d = horner(dc, u);
    if (std::abs(d) <= 1e-13 * coefficient_scale(dc, u)) {
      throw Error(ErrorKind::CoefficientPole, "coefficient " + to_string(x) + " has a pole at the given t");
    }
    return horner(to_complex(c.num()), u) / d;
  };
  for (const auto& c : f.num()) g.num.push_back(eval(c));
  for (const auto& c : f.den()) g.den.push_back(eval(c));
  if (t0 == Complex(0) || std::abs(t0) >= 1) {
    throw Error(ErrorKind::InvalidArgument, "specialization needs 0 < |t| < 1");
  }
  size_t d = static_cast<size_t>(g.degree());
  double scale = 0;
  for (const auto* v : {&g.num, &g.den}) {
    for (const auto& c : *v) scale = std::max(scale, std::abs(c));
  }
  std::vector<std::vector<Complex>> m(2 * d, std::vector<Complex>(2 * d, Complex(0)));
  for (size_t r = 0; r < d; ++r) {
    for (size_t j = 0; j <= d; ++j) {
      m[r][r + j] = g.num[d - j] / scale;
      m[d + r][r + j] = g.den[d - j] / scale;
    }
  }
  if (log_abs_det(m) < std::log(kConditioningFloor)) {
    throw Error(ErrorKind::IllConditioned, "resultant of the specialized map is below the conditioning floor");
  }
  return g;
}

std::optional<std::vector<Complex>> polynomial_roots(const std::vector<Complex>& coeffs, double tol) {
  std::vector<Complex> c = coeffs;
  while (!c.empty() && c.back() == Complex(0)) c.pop_back();
  if (c.size() < 2) return std::vector<Complex>{};
  size_t k = c.size() - 1;
  Complex lead = c.back();
  for (auto& x : c) x /= lead;
  if (k == 1) return std::vector<Complex>{-c[0]};

  std::vector<Complex> dc(k);
  for (size_t i = 1; i <= k; ++i) dc[i - 1] = c[i] * static_cast<double>(i);
  double radius = std::abs(c[0]) > 0 ? std::pow(std::abs(c[0]), 1.0 / static_cast<double>(k)) : 1.0;
  std::vector<Complex> z(k);
  for (size_t i = 0; i < k; ++i) {
    z[i] = std::polar(radius, 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k) + 0.4);
  }
  for (int iter = 0; iter < 1000; ++iter) {
    bool settled = true;
    for (size_t i = 0; i < k; ++i) {
      Complex p = horner(c, z[i]);
      if (p == Complex(0)) continue;
      Complex ratio = p / horner(dc, z[i]);
      Complex repulsion(0);
      for (size_t j = 0; j < k; ++j) {
        if (j != i && z[j] != z[i]) repulsion += 1.0 / (z[i] - z[j]);
      }
      Complex w = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[i] -= w;
      if (std::abs(w) > 1e-15 * std::max(1.0, std::abs(z[i]))) settled = false;
    }
    if (settled) break;
  }
  for (const auto& r : z) {
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) return std::nullopt;
    if (std::abs(horner(c, r)) > tol * coefficient_scale(c, r)) return std::nullopt;
  }
  return z;
}

std::vector<CPoint> pullback_sample(const ComplexMap& g, CPoint z0, int n, double tol) {
  const int d = g.degree();
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "pullback depth must be >= 0");
  double count = std::pow(static_cast<double>(d), n);
  if (count > static_cast<double>(kSampleCap)) {
    throw Error(ErrorKind::SampleCapExceeded, std::to_string(d) + "^" + std::to_string(n) + " samples exceed the cap");
  }
  auto preimages = [&](const CPoint& w, std::vector<CPoint>& out) {
    std::vector<Complex> poly(g.den);
    if (!w.inf) {
      for (size_t i = 0; i < poly.size(); ++i) poly[i] = g.num[i] - w.z * g.den[i];
    }
    while (!poly.empty() && poly.back() == Complex(0)) poly.pop_back();
    if (poly.empty()) return false;
    auto roots = polynomial_roots(poly, tol);
    if (!roots) return false;
    for (const auto& r : *roots) out.push_back(CPoint::at(r));
    for (size_t i = roots->size(); i < static_cast<size_t>(d); ++i) out.push_back(CPoint::infinity());
    return true;
  };
  std::string failure;
  for (int attempt = 0; attempt < 8; ++attempt) {
    CPoint start = z0;
    if (attempt > 0) {
      Complex nudge = std::polar(1e-3 * attempt, static_cast<double>(attempt));
      start = z0.inf ? CPoint::at(1e6 * (1.0 + nudge)) : CPoint::at(z0.z * (1.0 + nudge) + nudge);
    }
    std::vector<CPoint> current{start};
    bool ok = true;
    for (int level = 1; level <= n && ok; ++level) {
      std::vector<CPoint> next;
      next.reserve(current.size() * static_cast<size_t>(d));
      for (const auto& w : current) {
        if (!preimages(w, next)) {
          failure = "level " + std::to_string(level) + ", target " + point_text(w);
          ok = false;
          break;
        }
      }
      current = std::move(next);
    }
    if (ok) return current;
  }
  throw Error(ErrorKind::RootFindingFailed, "root finding failed at " + failure);
}

std::vector<AtomEstimate> atom_estimate(const std::vector<CPoint>& points,
                                        const std::vector<std::vector<CPoint>>& targets, double eps) {
  if (!(eps > 0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  for (size_t i = 0; i < targets.size(); ++i) {
    for (size_t j = i + 1; j < targets.size(); ++j) {
      for (const auto& a : targets[i]) {
        for (const auto& b : targets[j]) {
          if (chordal(a, b) < 2 * eps) {
            throw Error(ErrorKind::TargetsOverlap, "targets " + point_text(a) + " and " + point_text(b) +
                                                       " are closer than 2*eps");
          }
        }
      }
    }
  }
  std::vector<AtomEstimate> out;
  for (const auto& set : targets) {
    long hits = 0;
    for (const auto& p : points) {
      for (const auto& c : set) {
        if (chordal(p, c) <= eps) {
          ++hits;
          break;
        }
      }
    }
    double mass = points.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(points.size());
    out.push_back({set, eps, mass});
  }
  return out;
}

std::vector<PredictedTarget> targets_from_measure(const DirectionMeasure& m) {
  std::vector<PredictedTarget> out;
  for (const auto& atom : m.atoms) {
    PredictedTarget t{atom.cls, {}, atom.mass};
    if (std::holds_alternative<Infinity>(atom.cls)) {
      t.centers.push_back(CPoint::infinity());
    } else if (const auto* f = std::get_if<Finite>(&atom.cls)) {
      t.centers.push_back(CPoint::at(Complex(f->value.get_d(), 0)));
    } else {
      auto roots = polynomial_roots(to_complex(std::get<Factor>(atom.cls).poly), kDefaultTol);
      if (!roots) throw Error(ErrorKind::RootFindingFailed, "roots of " + to_string(atom.cls));
      for (const auto& r : *roots) t.centers.push_back(CPoint::at(r));
    }
    out.push_back(std::move(t));
  }
  return out;
}

DegenerationReport degeneration_report(const RationalMapK& f, const std::vector<Complex>& t_values, int n, double eps,
                                       const std::optional<DirectionMeasure>& hypothesis, CPoint z0) {
  TypeIIPoint g = TypeIIPoint::gauss();
  if (totally_invariant(f, g)) {
    throw Error(ErrorKind::TotallyInvariantPoint,
                "the Gauss point is totally invariant, so the family has no degeneration to detect");
  }
  if (t_values.empty()) throw Error(ErrorKind::InvalidArgument, "no t values given");
  DegenerationReport rep;
  DirectionMeasure h;
  if (hypothesis) {
    h = *hypothesis;
    rep.hypothesis_source = "given";
  } else if (auto p = predicted_limit(f, g)) {
    h = *p;
    rep.hypothesis_source = "predicted_limit";
  } else {
    rep.hypothesis_source = "depth_sequence";
    int levels = 1;
    long deg = f.degree();
    while (levels < kDefaultLevels && deg * f.degree() <= kDefaultDegreeCap) {
      deg *= f.degree();
      ++levels;
    }
    h = depth_sequence(f, g, levels).measures.back();
  }
  rep.predicted = targets_from_measure(h);
  std::vector<std::vector<CPoint>> sets;
  for (const auto& t : rep.predicted) sets.push_back(t.centers);

  size_t smallest = 0;
  for (size_t i = 0; i < t_values.size(); ++i) {
    if (std::abs(t_values[i]) < std::abs(t_values[smallest])) smallest = i;
  }
  for (size_t i = 0; i < t_values.size(); ++i) {
    ComplexMap gt = specialize(f, t_values[i]);
    auto sample = pullback_sample(gt, z0, n);
    DegenerationRow row{t_values[i], {}};
    for (const auto& e : atom_estimate(sample, sets, eps)) row.masses.push_back(e.mass);
    if (i == smallest) {
      for (size_t k = 0; k < row.masses.size(); ++k) {
        rep.max_discrepancy = std::max(rep.max_discrepancy, std::abs(row.masses[k] - rep.predicted[k].mass.get_d()));
      }
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace nadyn
