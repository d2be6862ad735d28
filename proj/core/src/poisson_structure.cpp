#include "poissonkit/poisson_structure.hpp"

#include <stdexcept>

#include "poissonkit/errors.hpp"

namespace poissonkit {

PoissonStructure certify(PolyMultivector pi) {
  if (pi.degree() != 2) throw std::invalid_argument("certify expects a bivector");
  const PolyMultivector self = schouten(pi, pi);
  if (!self.is_zero()) {
    const auto& [key, coeff] = *self.terms().begin();
    throw NotPoisson(to_string(PolyMultivector::term(pi.ambient_dim(), key.monomial, key.indices, coeff)));
  }
  return PoissonStructure(std::move(pi));
}

PolyMultivector lie_poisson_bivector(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  PolyMultivector pi(n, 2);
  for (const auto& [key, coeffs] : g.brackets()) {
    for (const auto& [k, c] : coeffs) {
      Exponents e(n, 0);
      e[k] = 1;
      pi.add_term(std::move(e), {key.first, key.second}, -c);
    }
  }
  return pi;
}

PoissonStructure from_lie_algebra(const LieAlgebra& g) {
  try {
    return certify(lie_poisson_bivector(g));
  } catch (const NotPoisson& e) {
    throw InvariantBreach(std::string("Lie-Poisson bivector failed certification: ") + e.what());
  }
}

void require_fixed_point(const PolyMultivector& pi, std::span<const Rational> x0) {
  const PolyMultivector at = evaluate(pi, x0);
  if (!at.is_zero()) {
    const auto& [key, coeff] = *at.terms().begin();
    throw NotAFixedPoint("pi^{" + std::to_string(key.indices[0] + 1) + "," +
                         std::to_string(key.indices[1] + 1) + "}(x0) = " + to_string(coeff));
  }
}

LieAlgebra isotropy_at(const PoissonStructure& p, std::span<const Rational> x0) {
  const PolyMultivector& pi = p.bivector();
  require_fixed_point(pi, x0);
  const std::size_t n = pi.ambient_dim();
  StructureMap brackets;
  for (std::size_t k = 0; k < n; ++k) {
    const PolyMultivector slope = evaluate(partial(pi, k), x0);
    for (const auto& [key, c] : slope.terms()) {
      brackets[{key.indices[0], key.indices[1]}][k] = -c;
    }
  }
  try {
    return LieAlgebra(n, {}, brackets);
  } catch (const JacobiViolation& e) {
    throw InvariantBreach(std::string("linearization of a Poisson structure is not Lie: ") + e.what());
  }
}

bool is_linear_at(const PolyMultivector& pi, std::span<const Rational> x0) {
  const PolyMultivector local = translate(pi, x0);
  const auto d = local.homogeneous_degree();
  return local.is_zero() || (d && *d == 1);
}

}  // namespace poissonkit
