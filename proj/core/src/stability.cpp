#include "poissonkit/stability.hpp"

#include <stdexcept>

#include "poissonkit/errors.hpp"
#include "poissonkit/sparse_matrix.hpp"

namespace poissonkit {

namespace {

// Rows: pairs i<j in k_subsets order; columns: coordinates. Entry = coefficient
// of x_k in pi^{ij}.
SparseMatrix linear_component_matrix(const PolyMultivector& pi) {
  const std::size_t n = pi.ambient_dim();
  const auto d = pi.homogeneous_degree();
  if (!pi.is_zero() && (!d || *d != 1)) throw NotLinear();
  const auto pairs = k_subsets(n, 2);
  const auto row_of = index_of(pairs);
  SparseMatrixBuilder a(pairs.size(), n);
  for (const auto& [key, c] : pi.terms()) {
    std::size_t var = 0;
    while (key.monomial[var] == 0) ++var;
    a.add(row_of.at(key.indices), var, c);
  }
  return a.build();
}

Vector constant_components(const PolyMultivector& pi1) {
  const auto pairs = k_subsets(pi1.ambient_dim(), 2);
  const auto row_of = index_of(pairs);
  Vector out(pairs.size());
  for (const auto& [key, c] : pi1.terms()) out[row_of.at(key.indices)] = c;
  return out;
}

}  // namespace

Pencil::Pencil(PoissonStructure pi0, PolyMultivector pi1) : pi0_(std::move(pi0)), pi1_(std::move(pi1)) {
  if (pi1_.degree() != 2 || pi1_.ambient_dim() != pi0_.ambient_dim()) {
    throw IncompatiblePencil("direction must be a bivector on the same space");
  }
  if (!pi1_.has_constant_coefficients()) throw IncompatiblePencil("direction must have constant coefficients");
  if (!schouten(pi1_, pi1_).is_zero()) throw IncompatiblePencil("[pi1, pi1] != 0");
  if (!schouten(pi0_.bivector(), pi1_).is_zero()) throw IncompatiblePencil("[pi0, pi1] != 0");
}

PolyMultivector Pencil::at(const Rational& t) const { return pi0_.bivector() + t * pi1_; }

PolyMultivector constant_bivector(const CeCochain& c) {
  if (c.degree() != 2) throw std::invalid_argument("constant_bivector expects a degree-2 cochain");
  const std::size_t n = c.algebra_dim();
  PolyMultivector pi(n, 2);
  for (const auto& [idx, v] : c.coefficients()) pi.add_term(Exponents(n, 0), idx, v);
  return pi;
}

Pencil pencil_from_cocycle(const LieAlgebra& g, const CeCochain& c) {
  if (c.degree() != 2 || c.algebra_dim() != g.dim()) {
    throw std::invalid_argument("pencil_from_cocycle expects a 2-cochain on g");
  }
  if (!ce_differential(g, c).is_zero()) throw NotACocycle();
  try {
    return Pencil(from_lie_algebra(g), constant_bivector(c));
  } catch (const IncompatiblePencil& e) {
    throw InvariantBreach(std::string("cocycle did not give a compatible pencil: ") + e.what());
  }
}

ZeroSet pencil_zero_set(const Pencil& p, const Rational& t) {
  const SparseMatrix a = linear_component_matrix(p.base().bivector());
  Vector rhs = constant_components(p.direction());
  for (auto& v : rhs) v *= -t;

  ZeroSet z;
  z.particular = solve(a, rhs);
  z.empty = !z.particular.has_value();
  if (!z.empty) z.kernel_basis = nullspace_basis(a);
  return z;
}

bool zero_set_empty_for_all_nonzero_t(const Pencil& p) {
  const SparseMatrix a = linear_component_matrix(p.base().bivector());
  Vector rhs = constant_components(p.direction());
  for (auto& v : rhs) v = -v;
  return !solve(a, rhs).has_value();
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable: return "Stable";
    case Verdict::UnstableWitness: return "UnstableWitness";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const std::vector<Rational>& witness_sample_t() {
  static const std::vector<Rational> samples{Rational(1), Rational(-1), Rational(1, 2),
                                             Rational(-1, 2), Rational(2), Rational(-2)};
  return samples;
}

StabilityVerdict classify_fixed_point(const PoissonStructure& p, std::span<const Rational> x0) {
  LieAlgebra g = isotropy_at(p, x0);
  const CeCohomology h2 = ce_cohomology(g, 2);
  const std::size_t h2_dim = h2.dim;

  StabilityVerdict v{Verdict::Inconclusive, g, h2_dim, std::nullopt, {}, false, {}};
  if (h2_dim == 0) {
    v.tag = Verdict::Stable;
    v.notes = "Stable by Theorem (H^2 = 0 criterion): H^2 of the isotropy algebra vanishes.";
    if (is_semisimple(g)) v.notes += " The isotropy algebra is semisimple (second Whitehead lemma).";
    return v;
  }

  if (!is_linear_at(p.bivector(), x0)) {
    v.notes = "Inconclusive: H^2 of the isotropy algebra is nonzero, but the structure is not linear "
              "around the point; H^2 = 0 is shown necessary only for linear structures.";
    return v;
  }

  Pencil pencil = pencil_from_cocycle(g, h2.representatives.front());
  for (const auto& t : witness_sample_t()) {
    if (!pencil_zero_set(pencil, t).empty) {
      throw InvariantBreach("witness pencil has a zero at t = " + to_string(t));
    }
    v.certified_t.push_back(t);
  }
  v.empty_for_all_nonzero_t = zero_set_empty_for_all_nonzero_t(pencil);
  if (!v.empty_for_all_nonzero_t) throw InvariantBreach("witness cocycle is a coboundary");
  v.witness = std::move(pencil);
  v.tag = Verdict::UnstableWitness;
  v.notes = "Unstable (linear case: stable iff H^2 = 0): the pencil pi0 + t*pi1 built from the first "
            "H^2 representative has no zero for any t != 0. Coordinates are centered at the point.";
  return v;
}

std::size_t relative_cohomology_at_point(const PoissonStructure& p, std::span<const Rational> x0,
                                         std::size_t k) {
  return ce_cohomology(isotropy_at(p, x0), k).dim;
}

}  // namespace poissonkit
