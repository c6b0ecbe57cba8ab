#pragma once

// Binary forms over the residue field Q, their gcd, squarefree
// decompositions, and depth lookups per direction class.
//
// Direction classes at a type II point are P^1(Qbar) up to Galois action:
// a rational residue, infinity, or a squarefree factor standing for all of
// its (conjugate) roots at once. No factorization over Q is ever needed.

#include <string>
#include <variant>
#include <vector>

#include "nadyn/poly.hpp"
#include "nadyn/rational.hpp"

namespace nadyn {

/// c_0..c_d of X0^(d-i) X1^i, stored as the dehomogenized polynomial
/// sum c_i z^i together with the declared degree d.
class HomogeneousForm {
 public:
  HomogeneousForm() = default;
  HomogeneousForm(int degree, QPoly dehomogenized);
  static HomogeneousForm from_coeffs(const std::vector<Rational>& coeffs);

  int degree() const { return degree_; }
  const QPoly& dehomogenized() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  Rational coeff(int i) const { return poly_.coeff(i); }
  /// Multiplicity of [0:1] (z = infinity), i.e. the X0-power.
  int inf_mult() const { return degree_ - poly_.degree(); }

  friend bool operator==(const HomogeneousForm&, const HomogeneousForm&) = default;

 private:
  int degree_ = 0;
  QPoly poly_;
};

/// "X0^2+X1^2"-style text.
std::string to_string(const HomogeneousForm& f);

/// GCD with the dehomogenized part monic; GCD(0, A) = A (normalized).
HomogeneousForm homogeneous_gcd(const HomogeneousForm& f, const HomogeneousForm& g);

/// Exact quotient f / g; g must divide f.
HomogeneousForm divide_exact(const HomogeneousForm& f, const HomogeneousForm& g);

struct DepthPart {
  QPoly poly;  // monic, squarefree, degree >= 1
  int mult = 0;
  friend bool operator==(const DepthPart&, const DepthPart&) = default;
};

struct DepthDivisor {
  std::vector<DepthPart> parts;  // pairwise coprime, increasing mult
  int inf_mult = 0;

  /// sum of mult*deg + inf_mult, i.e. deg H.
  int total() const;
  /// Largest root multiplicity over P^1(Qbar), 0 when empty.
  int max_depth() const;
  friend bool operator==(const DepthDivisor&, const DepthDivisor&) = default;
};

DepthDivisor squarefree_decomposition(const HomogeneousForm& h);

struct Finite {
  Rational value;
  friend bool operator==(const Finite&, const Finite&) = default;
};
struct Infinity {
  friend bool operator==(const Infinity&, const Infinity&) = default;
};
struct Factor {
  QPoly poly;  // monic, squarefree, degree >= 2
  friend bool operator==(const Factor&, const Factor&) = default;
};

using DirectionClass = std::variant<Finite, Infinity, Factor>;

/// Normalizes p (monic) into a class: degree 1 gives Finite, degree >= 2
/// gives Factor. Throws InvalidArgument if p is constant or not squarefree.
DirectionClass class_from_poly(const QPoly& p);

/// z - c for Finite(c), the factor itself for Factor; Infinity has none.
QPoly class_poly(const DirectionClass& c);

/// Number of P^1(Qbar) directions the class stands for.
int class_size(const DirectionClass& c);

std::string to_string(const DirectionClass& c);

bool is_squarefree(const QPoly& p);

/// Per-root depth of the class. A Factor class meeting two different
/// multiplicities (including 0) throws AmbiguousClass.
int depth_at(const DepthDivisor& d, const DirectionClass& c);

/// class_size(c) * depth_at(d, c): the class's share of the divisor.
int class_mass(const DepthDivisor& d, const DirectionClass& c);

/// Pairwise coprime monic squarefree refinement of the given polynomials
/// (constants are dropped).
std::vector<QPoly> coprime_basis(std::vector<QPoly> polys);

struct ClassRefinement {
  std::vector<DirectionClass> classes;
  std::vector<int> mass_first;
  std::vector<int> mass_second;
};

/// Common refinement of the classes of two divisors with per-class masses.
/// Infinity is its own class whenever either divisor charges it.
ClassRefinement refine_classes(const DepthDivisor& first, const DepthDivisor& second);

/// "z^2+1"-style text with rational coefficients.
std::string poly_to_string(const QPoly& p, const std::string& var = "z");

}  // namespace nadyn
