#pragma once

// Complex specializations f_t of a family over Q(t), sampling of the
// measure of maximal entropy by iterated pullback, and comparison of
// sampled atoms with the non-archimedean prediction at the Gauss point.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "nadyn/equidist.hpp"
#include "nadyn/redux.hpp"

namespace nadyn {

using Complex = std::complex<double>;

/// A point of P^1(C).
struct CPoint {
  Complex z;
  bool inf = false;

  static CPoint at(Complex z) { return {z, false}; }
  static CPoint infinity() { return {Complex(0), true}; }
};

/// |z - w| / sqrt((1 + |z|^2)(1 + |w|^2)), with values in [0, 1].
double chordal(const CPoint& a, const CPoint& b);

struct ComplexMap {
  std::vector<Complex> num;  // b_0..b_d
  std::vector<Complex> den;  // a_0..a_d
  int degree() const { return static_cast<int>(num.size()) - 1; }
  CPoint operator()(const CPoint& p) const;
};

constexpr double kConditioningFloor = 1e-100;

/// Evaluates every coefficient at t = t0 (principal branch of t^(1/N)).
/// Throws CoefficientPole, InvalidArgument (t0 = 0 or |t0| >= 1), and
/// IllConditioned.
ComplexMap specialize(const RationalMapK& f, Complex t0);

/// Roots of sum c_i z^i with multiplicity (Aberth-Ehrlich). Returns
/// nullopt when the iteration does not reach relative backward error tol.
std::optional<std::vector<Complex>> polynomial_roots(const std::vector<Complex>& coeffs, double tol);

constexpr long kSampleCap = 1L << 16;
constexpr double kDefaultTol = 1e-12;
constexpr double kDefaultEps = 0.1;
inline const Complex kDefaultStart{1.0, 1.0 / 3.0};

/// The d^n points of g^-n(z0), with multiplicity.
std::vector<CPoint> pullback_sample(const ComplexMap& g, CPoint z0, int n, double tol = kDefaultTol);

struct AtomEstimate {
  std::vector<CPoint> centers;  // one target set
  double radius = 0;
  double mass = 0;
};

/// Fraction of the sample within chordal eps of each target (a target
/// set is a union of balls). Throws TargetsOverlap when balls of
/// different targets meet.
std::vector<AtomEstimate> atom_estimate(const std::vector<CPoint>& points,
                                        const std::vector<std::vector<CPoint>>& targets, double eps);

struct PredictedTarget {
  DirectionClass cls;
  std::vector<CPoint> centers;
  Rational mass;
};

/// Direction atoms at the Gauss point turned into targets in P^1(C):
/// Finite(c) -> c, Infinity -> infinity, Factor(p) -> the roots of p.
std::vector<PredictedTarget> targets_from_measure(const DirectionMeasure& m);

struct DegenerationRow {
  Complex t;
  std::vector<double> masses;  // per predicted target
};

struct DegenerationReport {
  std::vector<PredictedTarget> predicted;
  std::vector<DegenerationRow> rows;
  double max_discrepancy = 0;  // at the smallest |t|
  std::string hypothesis_source;  // predicted_limit | depth_sequence | given
};

/// The hypothesis defaults to predicted_limit at the Gauss point, falling
/// back to the last depth measure when that is Unknown.
DegenerationReport degeneration_report(const RationalMapK& f, const std::vector<Complex>& t_values, int n,
                                       double eps = kDefaultEps,
                                       const std::optional<DirectionMeasure>& hypothesis = std::nullopt,
                                       CPoint z0 = CPoint::at(kDefaultStart));

}  // namespace nadyn
