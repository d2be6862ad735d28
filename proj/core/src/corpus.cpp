#include "poissonkit/corpus.hpp"

#include <stdexcept>

#include "poissonkit/sparse_matrix.hpp"

namespace poissonkit::corpus {

namespace {

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.size;
  ComplexMatrix out = ComplexMatrix::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational re, im;
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t ik = i * n + k, kj = k * n + j;
        re += a.re[ik] * b.re[kj] - a.im[ik] * b.im[kj] - (b.re[ik] * a.re[kj] - b.im[ik] * a.im[kj]);
        im += a.re[ik] * b.im[kj] + a.im[ik] * b.re[kj] - (b.re[ik] * a.im[kj] + b.im[ik] * a.re[kj]);
      }
      out.re[i * n + j] = re;
      out.im[i * n + j] = im;
    }
  }
  return out;
}

Vector flatten(const ComplexMatrix& m) {
  Vector v = m.re;
  v.insert(v.end(), m.im.begin(), m.im.end());
  return v;
}

ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j, const Rational& re, const Rational& im) {
  ComplexMatrix m = ComplexMatrix::zero(n);
  m.re[i * n + j] = re;
  m.im[i * n + j] = im;
  return m;
}

ComplexMatrix plus(ComplexMatrix a, const ComplexMatrix& b) {
  for (std::size_t i = 0; i < a.re.size(); ++i) {
    a.re[i] += b.re[i];
    a.im[i] += b.im[i];
  }
  return a;
}

}  // namespace

ComplexMatrix ComplexMatrix::zero(std::size_t size) {
  return ComplexMatrix{size, Vector(size * size), Vector(size * size)};
}

LieAlgebra matrix_lie_algebra(const std::vector<ComplexMatrix>& basis, std::vector<std::string> names) {
  const std::size_t dim = basis.size();
  if (dim == 0) return LieAlgebra(0, std::move(names), {});
  // Columns of `coords` are the flattened basis matrices.
  std::vector<Vector> rows(2 * basis.front().size * basis.front().size, Vector(dim));
  for (std::size_t c = 0; c < dim; ++c) {
    const Vector v = flatten(basis[c]);
    for (std::size_t r = 0; r < v.size(); ++r) rows[r][c] = v[r];
  }
  const SparseMatrix coords = SparseMatrix::from_dense(rows);
  if (rank(coords) != dim) throw std::invalid_argument("matrix basis is linearly dependent");

  StructureMap brackets;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      const auto x = solve(coords, flatten(commutator(basis[i], basis[j])));
      if (!x) throw std::invalid_argument("matrix span is not closed under the commutator");
      for (std::size_t k = 0; k < dim; ++k) {
        if ((*x)[k] != 0) brackets[{i, j}][k] = (*x)[k];
      }
    }
  }
  return LieAlgebra(dim, std::move(names), brackets);
}

LieAlgebra abelian(std::size_t n) { return LieAlgebra::abelian(n); }

LieAlgebra heisenberg3() { return LieAlgebra(3, {"x", "y", "z"}, {{{0, 1}, {{2, Rational(1)}}}}); }

LieAlgebra aff1() { return LieAlgebra(2, {"a", "b"}, {{{0, 1}, {{1, Rational(1)}}}}); }

LieAlgebra so3() {
  return LieAlgebra(3, {"e1", "e2", "e3"},
                    {{{0, 1}, {{2, Rational(1)}}}, {{1, 2}, {{0, Rational(1)}}}, {{0, 2}, {{1, Rational(-1)}}}});
}

LieAlgebra sl2() {
  return LieAlgebra(3, {"h", "e", "f"},
                    {{{0, 1}, {{1, Rational(2)}}}, {{0, 2}, {{2, Rational(-2)}}}, {{1, 2}, {{0, Rational(1)}}}});
}

LieAlgebra so4() {
  std::vector<ComplexMatrix> basis;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = j + 1; k < 4; ++k) {
      basis.push_back(plus(unit(4, j, k, 1, 0), unit(4, k, j, -1, 0)));
      names.push_back("L" + std::to_string(j + 1) + std::to_string(k + 1));
    }
  }
  return matrix_lie_algebra(basis, std::move(names));
}

LieAlgebra su3() {
  std::vector<ComplexMatrix> basis;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = j + 1; k < 3; ++k) {
      basis.push_back(plus(unit(3, j, k, 1, 0), unit(3, k, j, -1, 0)));
      names.push_back("A" + std::to_string(j + 1) + std::to_string(k + 1));
    }
  }
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = j + 1; k < 3; ++k) {
      basis.push_back(plus(unit(3, j, k, 0, 1), unit(3, k, j, 0, 1)));
      names.push_back("S" + std::to_string(j + 1) + std::to_string(k + 1));
    }
  }
  basis.push_back(plus(unit(3, 0, 0, 0, 1), unit(3, 1, 1, 0, -1)));
  names.push_back("H1");
  basis.push_back(plus(unit(3, 1, 1, 0, 1), unit(3, 2, 2, 0, -1)));
  names.push_back("H2");
  return matrix_lie_algebra(basis, std::move(names));
}

std::vector<Entry> all() {
  std::vector<Entry> out;
  for (std::size_t n = 1; n <= 4; ++n) out.push_back({"abelian" + std::to_string(n), abelian(n)});
  out.push_back({"heisenberg3", heisenberg3()});
  out.push_back({"aff1", aff1()});
  out.push_back({"so3", so3()});
  out.push_back({"sl2", sl2()});
  out.push_back({"so4", so4()});
  out.push_back({"su3", su3()});
  return out;
}

}  // namespace poissonkit::corpus
