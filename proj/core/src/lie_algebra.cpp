#include "poissonkit/lie_algebra.hpp"

#include <stdexcept>

#include "poissonkit/errors.hpp"
#include "poissonkit/sparse_matrix.hpp"

namespace poissonkit {

StructureConstants::StructureConstants(std::size_t dim, const StructureMap& brackets)
    : dim_(dim), c_(dim * dim * dim) {
  for (const auto& [key, coeffs] : brackets) {
    const auto [i, j] = key;
    if (i >= dim || j >= dim) {
      throw std::out_of_range("bracket index (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") out of range for dimension " + std::to_string(dim));
    }
    if (i >= j) {
      throw std::invalid_argument("bracket keys must satisfy i < j, got (" + std::to_string(i) +
                                  ", " + std::to_string(j) + ")");
    }
    for (const auto& [k, v] : coeffs) {
      if (k >= dim) throw std::out_of_range("bracket coefficient index " + std::to_string(k) + " out of range");
      c_[(i * dim + j) * dim + k] = v;
      c_[(j * dim + i) * dim + k] = -v;
    }
  }
}

std::optional<StructureConstants::Violation> StructureConstants::jacobi_violation() const {
  const auto& c = *this;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      for (std::size_t k = j + 1; k < dim_; ++k) {
        for (std::size_t l = 0; l < dim_; ++l) {
          Rational sum;
          for (std::size_t m = 0; m < dim_; ++m) {
            sum += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
          }
          if (sum != 0) return Violation{i, j, k, l, sum};
        }
      }
    }
  }
  return std::nullopt;
}

StructureMap StructureConstants::to_map() const {
  StructureMap out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        if ((*this)(i, j, k) != 0) out[{i, j}][k] = (*this)(i, j, k);
      }
    }
  }
  return out;
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> basis_names,
                       const StructureMap& brackets)
    : names_(std::move(basis_names)), constants_(dim, brackets) {
  if (names_.empty()) {
    for (std::size_t i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i + 1));
  }
  if (names_.size() != dim) throw std::invalid_argument("basis name count does not match dimension");
  if (auto v = constants_.jacobi_violation()) {
    throw JacobiViolation(v->i, v->j, v->k, v->l, to_string(v->residual));
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim, {}, {}); }

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("bracket: dimension mismatch");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0 || i == j) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (constants_(i, j, k) != 0) out[k] += w * constants_(i, j, k);
      }
    }
  }
  return out;
}

std::vector<Vector> LieAlgebra::ad(std::size_t i) const {
  const std::size_t n = dim();
  std::vector<Vector> m(n, Vector(n));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t row = 0; row < n; ++row) m[row][col] = constants_(i, col, row);
  }
  return m;
}

bool same_structure(const LieAlgebra& a, const LieAlgebra& b) {
  return a.dim() == b.dim() && a.brackets() == b.brackets();
}

std::vector<Vector> killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Vector> k(n, Vector(n));
  // trace(ad_i ad_j) = sum_{a,b} c^a_{i b} c^b_{j a}
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational t;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) t += g.structure_constant(i, b, a) * g.structure_constant(j, a, b);
      }
      k[i][j] = t;
      k[j][i] = t;
    }
  }
  return k;
}

bool is_semisimple(const LieAlgebra& g) {
  return g.dim() > 0 && rank(SparseMatrix::from_dense(killing_form(g))) == g.dim();
}

}  // namespace poissonkit
