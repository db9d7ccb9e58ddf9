#include "spinorfact/constraints.hpp"

#include <algorithm>

#include "spinorfact/linalg.hpp"

namespace spinorfact {

std::vector<BladeIndex> even_blades() {
  std::vector<BladeIndex> out;
  for (auto m : kBladeOrder)
    if (BladeIndex(m).grade() % 2 == 0) out.emplace_back(m);
  return out;
}

std::vector<std::string> unknown_names() {
  std::vector<std::string> names;
  for (auto b : even_blades()) names.push_back("h[" + b.name() + "]");
  return names;
}

Multivector<MPoly> symbolic_even_element() {
  Multivector<MPoly> h;
  auto blades = even_blades();
  for (std::size_t k = 0; k < blades.size(); ++k) h[blades[k]] = MPoly::variable(k);
  return h;
}

const char* to_string(EquationSource source) {
  switch (source) {
    case EquationSource::Remainder: return "remainder";
    case EquationSource::ZeroOfM: return "zero-of-M";
    case EquationSource::SpinorLinear: return "spinor-condition";
    case EquationSource::SpinorLeft: return "spinor-condition";
    case EquationSource::SpinorRight: return "spinor-condition";
    case EquationSource::Injected: return "injected";
  }
  return "unknown";
}

namespace {

Multivector<MPoly> lift(const Multivector<Rational>& a) {
  return a.map([](const Rational& q) { return MPoly(q); });
}

}  // namespace

ConstraintSystem build_constraint_system(const SpinorPolynomial<Rational>& c) {
  ConstraintSystem cs;
  cs.motion = c;
  auto norm = norm_poly(c);
  auto root = monic_square_root(norm);
  if (!root || root->degree() != c.degree())
    throw Error(ErrorKind::NormNotSquare, "norm polynomial is not the square of a real polynomial of degree deg C");
  cs.m = *root;
  cs.remainder = divmod_real(c, cs.m).remainder;

  const auto h = symbolic_even_element();
  const auto hr = reverse(h);

  struct Source {
    Multivector<MPoly> expr;
    EquationSource tag;
    bool skip_scalar;
  };
  // M(h) = sum m_k h^k, M central.
  Multivector<MPoly> m_of_h;
  Multivector<MPoly> power(MPoly(1));
  for (const auto& mk : cs.m.coefficients()) {
    m_of_h += power * MPoly(mk);
    power = power * h;
  }
  std::vector<Source> sources = {
      {lift(cs.remainder[1]) * h + lift(cs.remainder[0]), EquationSource::Remainder, false},
      {m_of_h, EquationSource::ZeroOfM, false},
      {h + hr, EquationSource::SpinorLinear, true},
      {h * hr, EquationSource::SpinorLeft, true},
      {hr * h, EquationSource::SpinorRight, true},
  };

  for (const auto& src : sources) {
    for (auto mask : kBladeOrder) {
      BladeIndex b(mask);
      if (src.skip_scalar && mask == 0) continue;
      ++cs.raw_equations;
      const MPoly& poly = src.expr[b];
      ComponentRecord rec{src.tag, b.name(), poly.degree()};
      if (poly.is_zero()) {
        ++cs.zero_dropped;
        cs.components.push_back(std::move(rec));
        continue;
      }
      auto& bucket = rec.degree <= 1 ? cs.linear : cs.quadratic;
      for (std::size_t k = 0; k < bucket.size(); ++k) {
        if (auto r = proportionality(poly, bucket[k].poly)) {
          rec.representative = static_cast<int>(k);
          rec.scale = *r;
          break;
        }
      }
      if (rec.representative >= 0) {
        ++cs.duplicates_merged;
      } else {
        rec.representative = static_cast<int>(bucket.size());
        rec.scale = 1;
        bucket.push_back(Equation{poly, src.tag, b.name()});
      }
      cs.components.push_back(std::move(rec));
    }
  }
  return cs;
}

Multivector<Rational> LinearSolution::at(const std::vector<Rational>& params) const {
  auto h = particular;
  for (std::size_t k = 0; k < basis.size(); ++k) h += basis[k] * params.at(k);
  return h;
}

Multivector<MPoly> LinearSolution::symbolic() const {
  auto h = lift(particular);
  for (std::size_t k = 0; k < basis.size(); ++k) h += lift(basis[k]) * MPoly::variable(k);
  return h;
}

namespace {

std::vector<Rational> to_unknowns(const Multivector<Rational>& h) {
  std::vector<Rational> x;
  for (auto b : even_blades()) x.push_back(h[b]);
  return x;
}

Multivector<Rational> from_unknowns(const std::vector<Rational>& x) {
  Multivector<Rational> h;
  auto blades = even_blades();
  for (std::size_t k = 0; k < blades.size(); ++k) h[blades[k]] = x[k];
  return h;
}

linalg::Matrix<Rational> linear_matrix(const ConstraintSystem& cs, std::vector<Rational>& rhs) {
  const std::size_t n = even_blades().size();
  linalg::Matrix<Rational> a;
  rhs.clear();
  for (const auto& eq : cs.linear) {
    std::vector<Rational> row(n);
    for (std::size_t k = 0; k < n; ++k) row[k] = eq.poly.linear_coefficient(k);
    a.push_back(std::move(row));
    rhs.push_back(-eq.poly.constant());
  }
  return a;
}

}  // namespace

LinearSolution solve_linear(const ConstraintSystem& cs) {
  const std::size_t n = even_blades().size();
  std::vector<Rational> rhs;
  auto a = linear_matrix(cs, rhs);
  auto sol = linalg::solve(a, rhs, n);
  if (!sol) throw Error(ErrorKind::InconsistentLinearSystem, "no linear right factor exists: linear equations are inconsistent");
  LinearSolution out;
  out.particular = from_unknowns(sol->particular);
  for (std::size_t k = 0; k < sol->basis.size(); ++k) {
    out.basis.push_back(from_unknowns(sol->basis[k]));
    out.parameters.push_back("u" + std::to_string(k));
  }
  return out;
}

bool satisfies_linear(const ConstraintSystem& cs, const Multivector<Rational>& h) {
  auto x = to_unknowns(h);
  return std::all_of(cs.linear.begin(), cs.linear.end(), [&](const Equation& e) { return e.poly.evaluate(x) == 0; });
}

bool satisfies_all(const ConstraintSystem& cs, const Multivector<Rational>& h) {
  auto x = to_unknowns(h);
  return satisfies_linear(cs, h) &&
         std::all_of(cs.quadratic.begin(), cs.quadratic.end(), [&](const Equation& e) { return e.poly.evaluate(x) == 0; });
}

LinearSolution reparametrize(const ConstraintSystem& cs, const LinearSolution& lin,
                             const Multivector<Rational>& particular,
                             const std::vector<Multivector<Rational>>& basis,
                             const std::vector<std::string>& parameters) {
  if (basis.size() != lin.basis.size() || parameters.size() != basis.size())
    throw Error(ErrorKind::OutOfRange, "reparametrization has the wrong dimension");
  if (!satisfies_linear(cs, particular))
    throw Error(ErrorKind::OutOfRange, "particular point does not solve the linear equations");
  const std::size_t n = even_blades().size();
  linalg::Matrix<Rational> rows;
  for (const auto& b : lin.basis) rows.push_back(to_unknowns(b));
  const auto old_rank = linalg::rank(rows, n);
  for (const auto& b : basis) rows.push_back(to_unknowns(b));
  linalg::Matrix<Rational> fresh;
  for (const auto& b : basis) fresh.push_back(to_unknowns(b));
  if (linalg::rank(rows, n) != old_rank || linalg::rank(fresh, n) != old_rank)
    throw Error(ErrorKind::OutOfRange, "basis does not span the homogeneous solution space");
  return {particular, basis, parameters};
}

std::vector<MPoly> reduce_quadratics(const ConstraintSystem& cs, const LinearSolution& lin) {
  const auto sym = lin.symbolic();
  std::vector<MPoly> values;
  for (auto b : even_blades()) values.push_back(sym[b]);
  std::vector<MPoly> residuals;
  std::vector<MPoly> keys;
  for (const auto& eq : cs.quadratic) {
    auto r = eq.poly.substitute(values);
    if (r.is_zero()) continue;
    auto key = r.monic();
    if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
    keys.push_back(key);
    residuals.push_back(std::move(r));
  }
  return residuals;
}

Variety solve_variety(const ConstraintSystem& cs) {
  Variety v{solve_linear(cs), {}, 0};
  for (;;) {
    v.residuals = reduce_quadratics(cs, v.affine);
    std::vector<const MPoly*> linear;
    for (const auto& r : v.residuals) {
      if (r.degree() == 0)
        throw Error(ErrorKind::InconsistentLinearSystem, "no right factor exists: constant residual");
      if (r.degree() == 1) linear.push_back(&r);
    }
    if (linear.empty()) return v;

    const std::size_t dim = v.affine.dimension();
    linalg::Matrix<Rational> a;
    std::vector<Rational> rhs;
    for (const MPoly* r : linear) {
      std::vector<Rational> row(dim);
      for (std::size_t k = 0; k < dim; ++k) row[k] = r->linear_coefficient(k);
      a.push_back(std::move(row));
      rhs.push_back(-r->constant());
    }
    auto sol = linalg::solve(a, rhs, dim);
    if (!sol) throw Error(ErrorKind::InconsistentLinearSystem, "no right factor exists: linear residuals are inconsistent");

    LinearSolution next;
    next.particular = v.affine.at(sol->particular);
    for (std::size_t k = 0; k < sol->basis.size(); ++k) {
      Multivector<Rational> b;
      for (std::size_t i = 0; i < dim; ++i) b += v.affine.basis[i] * sol->basis[k][i];
      next.basis.push_back(std::move(b));
      next.parameters.push_back("u" + std::to_string(k));
    }
    v.affine = std::move(next);
    ++v.closure_rounds;
  }
}

}  // namespace spinorfact
