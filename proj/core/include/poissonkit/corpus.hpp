#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "poissonkit/lie_algebra.hpp"
#include "poissonkit/rational.hpp"

namespace poissonkit::corpus {

/// Square matrix over Q(i), row-major.
struct ComplexMatrix {
  std::size_t size;
  Vector re;
  Vector im;

  static ComplexMatrix zero(std::size_t size);
};

/// Linear span of `basis` under the commutator, with structure constants
/// found by exact decomposition. Throws std::invalid_argument if the span is
/// not closed or the basis is dependent.
LieAlgebra matrix_lie_algebra(const std::vector<ComplexMatrix>& basis, std::vector<std::string> names);

LieAlgebra abelian(std::size_t n);
/// [e1,e2] = e3.
LieAlgebra heisenberg3();
/// [e1,e2] = e2.
LieAlgebra aff1();
/// [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
LieAlgebra so3();
/// basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2();
/// Real antisymmetric 4x4 matrices, basis E_jk - E_kj (j < k).
LieAlgebra so4();
/// Traceless anti-Hermitian 3x3 matrices, basis E_jk - E_kj, i(E_jk + E_kj)
/// (j < k), i(E_11 - E_22), i(E_22 - E_33).
LieAlgebra su3();

struct Entry {
  std::string name;
  LieAlgebra algebra;
};

/// abelian1..abelian4, heisenberg3, aff1, so3, sl2, so4, su3.
std::vector<Entry> all();

}  // namespace poissonkit::corpus
