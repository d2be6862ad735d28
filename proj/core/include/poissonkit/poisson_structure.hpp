#pragma once

#include <cstddef>
#include <span>

#include "poissonkit/lie_algebra.hpp"
#include "poissonkit/multivector.hpp"
#include "poissonkit/rational.hpp"

namespace poissonkit {

/// A bivector with [pi, pi] = 0 verified exactly. Only certify() creates one.
class PoissonStructure {
 public:
  const PolyMultivector& bivector() const { return pi_; }
  std::size_t ambient_dim() const { return pi_.ambient_dim(); }

  friend PoissonStructure certify(PolyMultivector pi);

 private:
  explicit PoissonStructure(PolyMultivector pi) : pi_(std::move(pi)) {}
  PolyMultivector pi_;
};

/// Throws NotPoisson naming the first nonzero term of [pi, pi], or
/// std::invalid_argument if pi is not a bivector.
PoissonStructure certify(PolyMultivector pi);

/// Lie-Poisson bivector on g*: pi^{ij}(x) = -sum_k c^k_{ij} x_k.
PolyMultivector lie_poisson_bivector(const LieAlgebra& g);
PoissonStructure from_lie_algebra(const LieAlgebra& g);

/// Isotropy algebra at a zero x0: c^k_{ij} = -(d pi^{ij} / d x_k)(x0).
/// Throws NotAFixedPoint if pi(x0) != 0.
LieAlgebra isotropy_at(const PoissonStructure& p, std::span<const Rational> x0);

/// Throws NotAFixedPoint if pi(x0) != 0.
void require_fixed_point(const PolyMultivector& pi, std::span<const Rational> x0);

/// True if pi, written around x0, has only degree-1 coefficients (or is zero).
bool is_linear_at(const PolyMultivector& pi, std::span<const Rational> x0);

}  // namespace poissonkit
