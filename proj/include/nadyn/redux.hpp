#pragma once

// Rational maps over K and their reductions.
//
// A map is stored by the coefficients b_0..b_d / a_0..a_d of
// phi(z) = sum b_i z^i / sum a_i z^i. Reductions at a type II point xi are
// read from phi conjugated by the canonical chart of xi. Valuations of the
// conjugated coefficients are computed with the t^s factors kept symbolic,
// so points with arbitrary rational exponents never force a base change.

#include <optional>
#include <vector>

#include "nadyn/berkspace.hpp"
#include "nadyn/respoly.hpp"
#include "nadyn/scalars.hpp"

namespace nadyn {

using KPoly = Poly<KScalar>;

class RationalMapK {
 public:
  /// No resultant check; callers guarantee the pair has no common root.
  static RationalMapK unchecked(std::vector<KScalar> num, std::vector<KScalar> den);

  int degree() const { return static_cast<int>(num_.size()) - 1; }
  const std::vector<KScalar>& num() const { return num_; }
  const std::vector<KScalar>& den() const { return den_; }

  /// Equality in P^(2d+1)(K): coefficient vectors proportional.
  friend bool operator==(const RationalMapK& x, const RationalMapK& y);

 private:
  RationalMapK(std::vector<KScalar> num, std::vector<KScalar> den);

  std::vector<KScalar> num_;
  std::vector<KScalar> den_;
};

/// Validated construction: equal lengths d+1 with d >= 1 and a nonzero
/// Sylvester resultant; otherwise DegenerateMap.
RationalMapK make_map(std::vector<KScalar> num, std::vector<KScalar> den);

/// Resultant of sum f_i z^i and sum g_i z^i taken with formal degree
/// d = f.size() - 1 = g.size() - 1 (the homogeneous resultant).
KScalar sylvester_resultant(const std::vector<KScalar>& f, const std::vector<KScalar>& g);

/// ord of the resultant of the map's coefficient pair.
Rational ord_resultant(const RationalMapK& phi);

/// phi o psi.
RationalMapK compose(const RationalMapK& phi, const RationalMapK& psi);

constexpr long kDefaultDegreeCap = 4096;

/// phi^n; refuses d^n > degree_cap with IterationCapExceeded.
RationalMapK iterate(const RationalMapK& phi, int n, long degree_cap = kDefaultDegreeCap);

/// M^-1 o phi o M.
RationalMapK conjugate(const Mobius& m, const RationalMapK& phi);

struct CoefficientPair {
  std::vector<KScalar> num;
  std::vector<KScalar> den;
};

/// phi's coefficients scaled by t^(-min ord): all in K°, one a unit.
CoefficientPair minimal_lift(const RationalMapK& phi);

struct CoeffReduction {
  int degree = 0;
  HomogeneousForm num_form;  // reduced numerator sum b^_i X0^(d-i) X1^i
  HomogeneousForm den_form;
  HomogeneousForm gcd_form;  // H
  HomogeneousForm tilde_num;  // num_form / H
  HomogeneousForm tilde_den;
  int tilde_degree = 0;  // d - deg H

  bool is_constant() const { return tilde_degree == 0; }
  /// Value of the constant reduction (only when is_constant()).
  ResScalar constant_value() const;
};

CoeffReduction coeff_reduction(const RationalMapK& phi);

/// Valuation data of one coefficient: ord (nullopt for 0) and leading
/// coefficient.
struct ValuedCoeff {
  std::optional<Rational> ord;
  Rational lead;
};

struct ValuedPair {
  std::vector<ValuedCoeff> num;
  std::vector<ValuedCoeff> den;

  /// Minimum ord over all coefficients.
  Rational min_ord() const;
};

CoeffReduction reduce_valued(const ValuedPair& pair);

/// Caches the translations phi(w + a) needed to read phi through charts.
/// Not thread-safe; use one instance per thread.
class ChartedMap {
 public:
  explicit ChartedMap(RationalMapK phi);

  const RationalMapK& map() const { return phi_; }
  int degree() const { return phi_.degree(); }

  /// Coefficients of phi(w + a) (numerator and denominator).
  const CoefficientPair& translated(const KScalar& a) const;

  /// Valuations of chart(target)^-1 o phi o chart(source).
  ValuedPair valuations(const TypeIIPoint& source, const TypeIIPoint& target) const;

  /// Valuations of chart(xi)^-1 o phi o chart(xi) where xi = (a, s) is given
  /// by any (possibly non-canonical) center.
  ValuedPair conjugate_valuations(const KScalar& center, const Rational& exponent) const;

  CoeffReduction reduction(const TypeIIPoint& source, const TypeIIPoint& target) const;

 private:
  RationalMapK phi_;
  mutable std::vector<std::pair<KScalar, CoefficientPair>> cache_;
};

/// Coefficient reduction of chart(target)^-1 o phi o chart(source).
CoeffReduction reduction_between(const RationalMapK& phi, const TypeIIPoint& source, const TypeIIPoint& target);

struct IntrinsicReduction {
  TypeIIPoint at;
  int degree = 0;
  bool fixes_point = false;
  HomogeneousForm tangent_num;  // when fixes_point
  HomogeneousForm tangent_den;
  std::optional<DirectionClass> image_direction;  // when !fixes_point
  DepthDivisor depths;
  std::optional<int> local_degree;  // when fixes_point
  bool totally_invariant = false;
  CoeffReduction reduction;
};

IntrinsicReduction intrinsic_data(const RationalMapK& phi, const TypeIIPoint& xi);
IntrinsicReduction intrinsic_data(const ChartedMap& phi, const TypeIIPoint& xi);

/// Whether the intrinsic reduction maps the class to itself. Factor classes
/// are fixed all-or-none; a class whose roots split throws AmbiguousClass.
bool is_fixed_class(const IntrinsicReduction& r, const DirectionClass& cls);

/// Dehomogenized fixed-point polynomial tilde_num(z) - z tilde_den(z) of a
/// fixing reduction (the zero polynomial for the identity).
QPoly fixed_point_poly(const IntrinsicReduction& r);

int depth(const RationalMapK& phi, const TypeIIPoint& xi, const Direction& v);
bool is_fixed_direction(const RationalMapK& phi, const TypeIIPoint& xi, const Direction& v);

}  // namespace nadyn
