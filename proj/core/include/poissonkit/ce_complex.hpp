#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poissonkit/combinatorics.hpp"
#include "poissonkit/lie_algebra.hpp"
#include "poissonkit/rational.hpp"
#include "poissonkit/sparse_matrix.hpp"

namespace poissonkit {

/// Alternating k-form on g with trivial coefficients, in the basis
/// e*_{i_1} ^ ... ^ e*_{i_k} (i_1 < ... < i_k). Evaluation convention:
/// (e*_I)(e_{i_1}, ..., e_{i_k}) = 1.
class CeCochain {
 public:
  CeCochain(std::size_t algebra_dim, std::size_t degree);

  /// Vector coordinates in the lexicographic k-subset basis.
  static CeCochain from_vector(std::size_t algebra_dim, std::size_t degree, const Vector& coords);
  Vector to_vector() const;

  std::size_t algebra_dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const std::map<IndexTuple, Rational>& coefficients() const { return coeffs_; }

  /// Sets the coefficient of e*_I; `indices` may be unsorted (sign applied).
  void set(IndexTuple indices, const Rational& value);
  Rational coefficient(const IndexTuple& sorted_indices) const;
  /// c(e_i, e_j) for a degree-2 cochain, any order of i, j.
  Rational pair(std::size_t i, std::size_t j) const;

  bool is_zero() const { return coeffs_.empty(); }
  CeCochain operator-() const;

  friend bool operator==(const CeCochain&, const CeCochain&) = default;

 private:
  std::size_t dim_;
  std::size_t degree_;
  std::map<IndexTuple, Rational> coeffs_;
};

std::string to_string(const CeCochain& c, const std::vector<std::string>& names);

/// Matrix of d: L^k g* -> L^{k+1} g*,
///   (dc)(x_0..x_k) = sum_{p<q} (-1)^{p+q} c([x_p,x_q], x_0..^p..^q..x_k).
/// Rows and columns follow k_subsets() order. Throws std::out_of_range for k > dim.
SparseMatrix ce_differential_matrix(const StructureConstants& c, std::size_t k);
SparseMatrix ce_differential_matrix(const LieAlgebra& g, std::size_t k);

CeCochain ce_differential(const LieAlgebra& g, const CeCochain& c);

struct CeCohomology {
  std::size_t degree;
  std::size_t dim;
  /// Cocycles in canonical form modulo coboundaries; their classes form a basis.
  std::vector<CeCochain> representatives;
};

/// Zero for k > dim.
CeCohomology ce_cohomology(const LieAlgebra& g, std::size_t k);

/// xi with d(xi) = c, if c is a coboundary. Throws std::invalid_argument unless
/// c has degree 2.
std::optional<CeCochain> coboundary_witness(const LieAlgebra& g, const CeCochain& c);

/// Shared by the CE and Poisson complexes: kernel of `outgoing` modulo the
/// image of `incoming` (incoming may have zero columns). Returns canonical
/// representatives, one per independent class.
std::vector<Vector> cohomology_representatives(const SparseMatrix& outgoing,
                                               const SparseMatrix& incoming);

}  // namespace poissonkit
