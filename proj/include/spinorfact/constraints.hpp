#pragma once

#include <string>
#include <vector>

#include "spinorfact/mpoly.hpp"
#include "spinorfact/polynomial.hpp"

namespace spinorfact {

/// The 16 even blades in canonical order; unknown k of a right-zero
/// candidate is the coefficient of kEvenBlades[k].
std::vector<BladeIndex> even_blades();

/// Unknown names "h[1]", "h[e12]", ... in unknown order.
std::vector<std::string> unknown_names();

/// The candidate h = sum_k x_k e_k as a multivector with polynomial
/// coefficients.
Multivector<MPoly> symbolic_even_element();

enum class EquationSource {
  Remainder,     // r1 h + r0 = 0
  ZeroOfM,       // M(h) = 0
  SpinorLinear,  // h + rev(h) real
  SpinorLeft,    // h rev(h) real
  SpinorRight,   // rev(h) h real
  Injected,
};

const char* to_string(EquationSource source);

struct Equation {
  MPoly poly;  // poly == 0
  EquationSource source;
  std::string blade;  // component the equation was projected on
  int degree() const { return poly.degree(); }
};

/// Where one raw component equation ended up after filtering.
struct ComponentRecord {
  EquationSource source;
  std::string blade;
  int degree;              // -1 for an identically zero component
  int representative = -1; // index into linear or quadratic, -1 if dropped as zero
  Rational scale = 0;      // component == scale * representative
};

struct ConstraintSystem {
  SpinorPolynomial<Rational> motion;
  RealPolynomial<Rational> m;  // monic square root of the norm polynomial
  SpinorPolynomial<Rational> remainder;
  std::vector<Equation> linear;
  std::vector<Equation> quadratic;
  std::size_t raw_equations = 0;      // component equations before filtering
  std::size_t zero_dropped = 0;       // identically zero components
  std::size_t duplicates_merged = 0;  // equal to an earlier one up to scale
  std::vector<ComponentRecord> components;
};

/// Right-factor system for a quadratic spinor polynomial C: the component
/// equations of r1 h + r0 = 0, M(h) = 0 and the spinor conditions on t - h,
/// with zero equations dropped and scale-duplicates merged.
ConstraintSystem build_constraint_system(const SpinorPolynomial<Rational>& c);

/// Affine solution space particular + span(basis) of the linear equations.
struct LinearSolution {
  Multivector<Rational> particular;
  std::vector<Multivector<Rational>> basis;
  std::vector<std::string> parameters;

  std::size_t dimension() const { return basis.size(); }
  Multivector<Rational> at(const std::vector<Rational>& params) const;
  /// particular + sum u_k basis_k with symbolic parameters u_k.
  Multivector<MPoly> symbolic() const;
};

/// Exact Gauss-Jordan reduction of the linear part. Throws
/// InconsistentLinearSystem when no solution exists.
LinearSolution solve_linear(const ConstraintSystem& cs);

/// Re-expresses the same affine space with a caller-chosen particular point
/// and basis. Throws OutOfRange unless the two spaces coincide exactly.
LinearSolution reparametrize(const ConstraintSystem& cs, const LinearSolution& lin,
                             const Multivector<Rational>& particular,
                             const std::vector<Multivector<Rational>>& basis,
                             const std::vector<std::string>& parameters);

/// Whether h satisfies every linear equation of the system.
bool satisfies_linear(const ConstraintSystem& cs, const Multivector<Rational>& h);
/// Whether h satisfies every equation of the system.
bool satisfies_all(const ConstraintSystem& cs, const Multivector<Rational>& h);

/// The quadratic equations restricted to the linear solution space: distinct
/// nonzero residual polynomials in the parameters, up to rational scale.
std::vector<MPoly> reduce_quadratics(const ConstraintSystem& cs, const LinearSolution& lin);

/// Solution variety of the full system: an affine space plus the residual
/// polynomial conditions on its parameters.
struct Variety {
  LinearSolution affine;
  std::vector<MPoly> residuals;
  int closure_rounds = 0;  // rounds that absorbed linear residuals
};

/// solve_linear followed by reduce_quadratics, absorbing residuals of degree
/// one into the affine part until only genuinely nonlinear ones remain.
/// Throws InconsistentLinearSystem when a constant residual appears.
Variety solve_variety(const ConstraintSystem& cs);

}  // namespace spinorfact
