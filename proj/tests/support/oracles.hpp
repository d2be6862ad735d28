#pragma once

// Independent reference computations for tests. Nothing here may call the
// library routine it is used to check.

#include <cstddef>
#include <vector>

#include "poissonkit/lie_algebra.hpp"
#include "poissonkit/multivector.hpp"
#include "poissonkit/rational.hpp"

namespace poissonkit::oracle {

/// Textbook dense Gaussian elimination over Q.
std::size_t dense_rank(std::vector<Vector> rows);

/// dim H^k(g) for k = 0..n, building each differential on alternating
/// functions evaluated over all (k+1)-tuples (not only increasing ones).
std::vector<std::size_t> ce_dims_bruteforce(const StructureConstants& c);

/// Schouten bracket of two multivectors of degree >= 1 via the decomposable
/// formula: each term is split into vector fields and the double sum
/// sum (-1)^{i+j} [X_i, Y_j] ^ ... is expanded with Lie brackets of vector
/// fields computed from scratch.
PolyMultivector schouten_decomposable(const PolyMultivector& a, const PolyMultivector& b);

/// dim of the relative Poisson cohomology at a fixed point x0, degrees 0..n:
/// the complex of constant multivectors d_I with theta -> [theta, pi](x0),
/// brackets taken with schouten_decomposable.
std::vector<std::size_t> point_leaf_cohomology_dims(const PolyMultivector& pi, const Vector& x0);

/// Jacobi identity of {f,g} = pi(df, dg) checked on all coordinate triples.
bool poisson_bracket_jacobi_holds(const PolyMultivector& pi);

}  // namespace poissonkit::oracle
