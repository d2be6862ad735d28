#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poissonkit/rational.hpp"

namespace poissonkit {

/// Brackets [e_i, e_j] for i < j, each a sparse vector k -> c^k_{ij}.
using StructureMap = std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>>;

/// Dense, unchecked structure constants c^k_{ij} with antisymmetry built in.
/// Used directly only where a possibly non-Lie bracket must be examined.
class StructureConstants {
 public:
  /// Throws std::out_of_range / std::invalid_argument for malformed keys.
  StructureConstants(std::size_t dim, const StructureMap& brackets);

  std::size_t dim() const { return dim_; }
  /// c^k_{ij} for any i, j (c^k_{ji} = -c^k_{ij}, c^k_{ii} = 0).
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  struct Violation {
    std::size_t i, j, k, l;
    Rational residual;
  };
  /// First (i < j < k, l) with a nonzero Jacobiator component.
  std::optional<Violation> jacobi_violation() const;

  StructureMap to_map() const;

 private:
  std::size_t dim_;
  std::vector<Rational> c_;
};

/// Finite-dimensional Lie algebra over Q; the Jacobi identity is verified on
/// construction.
class LieAlgebra {
 public:
  /// Throws JacobiViolation, std::out_of_range (index) or std::invalid_argument
  /// (shape). Empty `basis_names` means e1..en.
  LieAlgebra(std::size_t dim, std::vector<std::string> basis_names, const StructureMap& brackets);

  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return constants_.dim(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const StructureConstants& constants() const { return constants_; }
  const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_(i, j, k);
  }
  /// Nonzero brackets with i < j, canonical order.
  StructureMap brackets() const { return constants_.to_map(); }

  Vector bracket(const Vector& x, const Vector& y) const;

  /// Matrix of ad(e_i): column m holds [e_i, e_m].
  std::vector<Vector> ad(std::size_t i) const;

 private:
  std::vector<std::string> names_;
  StructureConstants constants_;
};

/// Identical dimension and structure constants (names are ignored).
bool same_structure(const LieAlgebra& a, const LieAlgebra& b);

/// K(i,j) = trace(ad e_i o ad e_j).
std::vector<Vector> killing_form(const LieAlgebra& g);

/// Cartan's criterion: the Killing form is nondegenerate.
bool is_semisimple(const LieAlgebra& g);

}  // namespace poissonkit
