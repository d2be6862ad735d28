#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poissonkit/ce_complex.hpp"
#include "poissonkit/lie_algebra.hpp"
#include "poissonkit/multivector.hpp"
#include "poissonkit/poisson_structure.hpp"
#include "poissonkit/rational.hpp"

namespace poissonkit {

/// pi_t = pi0 + t pi1 with pi1 constant, [pi1, pi1] = 0 and [pi0, pi1] = 0,
/// so every member of the family is Poisson.
class Pencil {
 public:
  /// Throws IncompatiblePencil if pi1 is not a constant bivector or
  /// [pi0, pi1] != 0.
  Pencil(PoissonStructure pi0, PolyMultivector pi1);

  const PoissonStructure& base() const { return pi0_; }
  const PolyMultivector& direction() const { return pi1_; }
  std::size_t ambient_dim() const { return pi0_.ambient_dim(); }

  PolyMultivector at(const Rational& t) const;

 private:
  PoissonStructure pi0_;
  PolyMultivector pi1_;
};

/// Constant bivector with components pi1^{ij} = c(e_i, e_j).
PolyMultivector constant_bivector(const CeCochain& c);

/// pi0 = Lie-Poisson structure of g, pi1 = constant bivector of c.
/// Throws NotACocycle unless d c = 0.
Pencil pencil_from_cocycle(const LieAlgebra& g, const CeCochain& c);

struct ZeroSet {
  bool empty = true;
  std::optional<Vector> particular;
  std::vector<Vector> kernel_basis;
};

/// Exact zero set of pi_t for a linear base: solves pi0(x) = -t pi1
/// componentwise. Throws NotLinear.
ZeroSet pencil_zero_set(const Pencil& p, const Rational& t);

/// True when pi_t has no zero for every t != 0: the system pi0(x) = -t pi1
/// is then inconsistent independently of t. Throws NotLinear.
bool zero_set_empty_for_all_nonzero_t(const Pencil& p);

enum class Verdict { Stable, UnstableWitness, Inconclusive };

std::string to_string(Verdict v);

struct StabilityVerdict {
  Verdict tag;
  LieAlgebra isotropy;
  std::size_t h2_dim;
  std::optional<Pencil> witness;
  /// t values at which the witness zero set was solved exactly and found empty.
  std::vector<Rational> certified_t;
  bool empty_for_all_nonzero_t = false;
  std::string notes;
};

/// Sample values used to certify an instability witness.
const std::vector<Rational>& witness_sample_t();

/// Stable when H^2 of the isotropy algebra vanishes; otherwise an
/// instability pencil for exactly linear structures, else Inconclusive.
/// The witness pencil lives in coordinates centered at x0.
/// Throws NotAFixedPoint.
StabilityVerdict classify_fixed_point(const PoissonStructure& p, std::span<const Rational> x0);

/// dim H^k_pi(M, {x0}), via the isotropy algebra. Throws NotAFixedPoint.
std::size_t relative_cohomology_at_point(const PoissonStructure& p, std::span<const Rational> x0,
                                         std::size_t k);

struct TrackPoint {
  double t;
  std::optional<std::vector<double>> zero;
  double residual;
};

struct TrackOptions {
  double residual_tolerance = 1e-10;
  int max_iterations = 100;
};

/// Damped Gauss-Newton continuation of a zero of pi_t along t_grid.
/// The first grid point starts from x_start, later ones from the last accepted
/// zero. A zero is reported when the residual norm is below tolerance and it
/// lies within ball_radius of x_start. Throws std::invalid_argument for an
/// unsorted or negative grid, a nonpositive radius or a dimension mismatch.
std::vector<TrackPoint> track_zero_numeric(const Pencil& p, std::span<const double> t_grid,
                                           std::span<const double> x_start, double ball_radius,
                                           const TrackOptions& options = {});

}  // namespace poissonkit
