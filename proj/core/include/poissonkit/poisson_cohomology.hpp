#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "poissonkit/combinatorics.hpp"
#include "poissonkit/multivector.hpp"
#include "poissonkit/poisson_structure.hpp"
#include "poissonkit/sparse_matrix.hpp"

namespace poissonkit {

/// Basis of k-vector fields with homogeneous coefficients of degree d:
/// index = tuple_position * monomials.size() + monomial_position.
class GradedBasis {
 public:
  GradedBasis(std::size_t n, std::size_t k, std::size_t d);

  std::size_t size() const { return tuples_.size() * monomials_.size(); }
  std::size_t index_of(const TermKey& key) const;
  PolyMultivector element(std::size_t i) const;
  PolyMultivector combine(const Vector& coords) const;
  /// Throws std::invalid_argument if `a` has terms outside this piece.
  Vector coordinates(const PolyMultivector& a) const;

 private:
  std::size_t n_, k_, d_;
  std::vector<IndexTuple> tuples_;
  std::vector<Exponents> monomials_;
  std::map<IndexTuple, std::size_t> tuple_pos_;
  std::map<Exponents, std::size_t> monomial_pos_;
};

/// Coefficient degree h shared by all terms of pi (h = 1 for pi = 0).
/// Throws NonHomogeneous.
std::size_t homogeneity_degree(const PoissonStructure& p);

/// Matrix of theta -> [theta, pi] from the (k, d) piece to the
/// (k+1, d+h-1) piece (an empty codomain when d+h-1 < 0).
SparseMatrix poisson_differential_matrix(const PoissonStructure& p, std::size_t k, std::size_t d);

struct GradedCohomology {
  std::size_t poly_degree;
  std::size_t dim;
  std::vector<PolyMultivector> representatives;
};

/// Formal Poisson cohomology, one homogeneous polynomial degree at a time,
/// for d = 0..d_max.
std::vector<GradedCohomology> formal_poisson_cohomology(const PoissonStructure& p, std::size_t k,
                                                        std::size_t d_max);

/// A polynomial vector field X of coefficient degree <= degree_cap with
/// [X, pi] = pi, if one exists.
std::optional<PolyMultivector> exactness_witness(const PoissonStructure& p, std::size_t degree_cap);

/// -sum x_i d_i.
PolyMultivector negative_euler_field(std::size_t n);

}  // namespace poissonkit
