#include <gtest/gtest.h>

#include "oracles.hpp"
#include "poissonkit/ce_complex.hpp"
#include "poissonkit/corpus.hpp"
#include "poissonkit/errors.hpp"
#include "poissonkit/poisson_cohomology.hpp"
#include "random.hpp"

namespace poissonkit {
namespace {

using PM = PolyMultivector;

PM d(std::size_t n, IndexTuple idx) { return PM::basis(n, std::move(idx)); }
Function x(std::size_t n, std::size_t i) { return Function::coordinate(n, i); }

TEST(Certify, Examples) {
  EXPECT_NO_THROW(certify(lie_poisson_bivector(corpus::so3())));
  EXPECT_NO_THROW(certify(d(4, {0, 1}) + Rational(3) * d(4, {2, 3}) - d(4, {0, 3})));
  const PM bad = times(x(3, 1), d(3, {0, 1})) + d(3, {1, 2});
  try {
    certify(bad);
    FAIL() << "expected NotPoisson";
  } catch (const NotPoisson& e) {
    EXPECT_FALSE(e.witness_term.empty());
  }
  EXPECT_THROW(certify(d(3, {0})), std::invalid_argument);
}

TEST(FromLieAlgebra, Examples) {
  EXPECT_TRUE(from_lie_algebra(LieAlgebra::abelian(3)).bivector().is_zero());
  const PM expected_so3 =
      -(times(x(3, 2), d(3, {0, 1})) + times(x(3, 0), d(3, {1, 2})) + times(x(3, 1), d(3, {2, 0})));
  EXPECT_EQ(from_lie_algebra(corpus::so3()).bivector(), expected_so3);
  EXPECT_EQ(from_lie_algebra(corpus::aff1()).bivector(), -times(x(2, 1), d(2, {0, 1})));
}

TEST(Isotropy, RoundTripOnCorpus) {
  for (const auto& [name, g] : corpus::all()) {
    const Vector origin(g.dim());
    EXPECT_TRUE(same_structure(isotropy_at(from_lie_algebra(g), origin), g)) << name;
  }
}

TEST(Isotropy, TranslatedLinearStructure) {
  const LieAlgebra g = corpus::sl2();
  const Vector shift{1, Rational(-1, 2), 3};
  const Vector minus{-1, Rational(1, 2), -3};
  // pi(x) = pi_lin(x - shift) vanishes at shift with isotropy g.
  const PoissonStructure p = certify(translate(lie_poisson_bivector(g), minus));
  EXPECT_TRUE(same_structure(isotropy_at(p, shift), g));
}

TEST(Isotropy, QuadraticZeroGivesAbelian) {
  const PoissonStructure p = certify(times(wedge(x(2, 0), x(2, 0)), d(2, {0, 1})));
  const Vector origin(2);
  EXPECT_TRUE(isotropy_at(p, origin).brackets().empty());
}

TEST(Isotropy, RejectsNonFixedPoint) {
  const Vector point{0, 0, 1};
  EXPECT_THROW(isotropy_at(from_lie_algebra(corpus::so3()), point), NotAFixedPoint);
}

TEST(PoissonDifferential, ZeroStructure) {
  const PoissonStructure zero = certify(PM(3, 2));
  for (std::size_t k = 0; k <= 3; ++k) {
    for (std::size_t deg = 0; deg <= 2; ++deg) EXPECT_TRUE(poisson_differential_matrix(zero, k, deg).is_zero());
  }
}

TEST(PoissonDifferential, ConstantsAreCasimirs) {
  const auto p = from_lie_algebra(corpus::so3());
  const SparseMatrix m = poisson_differential_matrix(p, 0, 0);
  EXPECT_EQ(m.cols(), 1u);
  EXPECT_TRUE(m.is_zero());
}

TEST(PoissonDifferential, RejectsNonHomogeneous) {
  const PoissonStructure p = certify(d(2, {0, 1}) + times(x(2, 0), d(2, {0, 1})));
  EXPECT_THROW(poisson_differential_matrix(p, 1, 0), NonHomogeneous);
  EXPECT_THROW(formal_poisson_cohomology(p, 2, 1), NonHomogeneous);
}

TEST(PoissonDifferential, SquaresToZeroOnRandomStructures) {
  testing::Rng rng(201);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const PoissonStructure p = testing::random_homogeneous_poisson(rng, n);
    const std::size_t h = homogeneity_degree(p);
    for (std::size_t k = 0; k + 1 <= n; ++k) {
      for (std::size_t deg = 0; deg <= 2; ++deg) {
        if (deg + h == 0) continue;
        const SparseMatrix first = poisson_differential_matrix(p, k, deg);
        const SparseMatrix second = poisson_differential_matrix(p, k + 1, deg + h - 1);
        EXPECT_TRUE((second * first).is_zero());
      }
    }
  }
}

TEST(PoissonDifferential, LinearStructuresPreserveGrading) {
  const auto p = from_lie_algebra(corpus::heisenberg3());
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t deg = 0; deg <= 2; ++deg) {
      const SparseMatrix m = poisson_differential_matrix(p, k, deg);
      EXPECT_EQ(m.rows(), GradedBasis(3, k + 1, deg).size());
      EXPECT_EQ(m.cols(), GradedBasis(3, k, deg).size());
    }
  }
}

TEST(PoissonDifferential, HamiltonianFieldsAreCocycles) {
  testing::Rng rng(202);
  for (const auto& [name, g] : corpus::all()) {
    if (g.dim() > 4) continue;
    const PM pi = lie_poisson_bivector(g);
    for (int trial = 0; trial < 5; ++trial) {
      const Function f = testing::random_field<VectorKind>(rng, g.dim(), 0, 3, 4);
      EXPECT_TRUE(schouten(schouten(f, pi), pi).is_zero()) << name;
    }
  }
}

TEST(FormalCohomology, ZeroStructureCountsEverything) {
  const PoissonStructure zero = certify(PM(3, 2));
  for (std::size_t k = 0; k <= 3; ++k) {
    const auto pieces = formal_poisson_cohomology(zero, k, 2);
    for (const auto& piece : pieces) {
      EXPECT_EQ(piece.dim, binomial(3, k) * monomials_of_degree(3, piece.poly_degree).size());
    }
  }
  EXPECT_EQ(formal_poisson_cohomology(certify(PM(2, 2)), 2, 0).front().dim, 1u);
}

TEST(FormalCohomology, ConstantPieceMatchesCe) {
  for (const auto& [name, g] : corpus::all()) {
    if (g.dim() > 6) continue;
    const auto p = from_lie_algebra(g);
    for (std::size_t k = 0; k <= std::min<std::size_t>(g.dim(), 3); ++k) {
      EXPECT_EQ(formal_poisson_cohomology(p, k, 0).front().dim, ce_cohomology(g, k).dim) << name << " k=" << k;
    }
  }
  const auto so3 = formal_poisson_cohomology(from_lie_algebra(corpus::so3()), 2, 0).front();
  EXPECT_EQ(so3.dim, oracle::ce_dims_bruteforce(corpus::so3().constants())[2]);
  EXPECT_EQ(so3.dim, 0u);
}

TEST(FormalCohomology, RepresentativesAreCocycles) {
  const auto p = from_lie_algebra(corpus::heisenberg3());
  for (const auto& piece : formal_poisson_cohomology(p, 1, 2)) {
    for (const auto& rep : piece.representatives) EXPECT_TRUE(schouten(rep, p.bivector()).is_zero());
  }
}

TEST(Exactness, LinearStructures) {
  for (const auto& [name, g] : corpus::all()) {
    const auto p = from_lie_algebra(g);
    const auto w = exactness_witness(p, 1);
    ASSERT_TRUE(w.has_value()) << name;
    EXPECT_EQ(schouten(*w, p.bivector()), p.bivector()) << name;
    EXPECT_EQ(schouten(negative_euler_field(g.dim()), p.bivector()), p.bivector()) << name;
  }
}

TEST(Exactness, ZeroAndSymplectic) {
  const auto zero = exactness_witness(certify(PM(2, 2)), 0);
  ASSERT_TRUE(zero.has_value());
  EXPECT_TRUE(zero->is_zero());

  const auto symplectic = certify(d(2, {0, 1}));
  EXPECT_EQ(schouten(-times(x(2, 0), d(2, {0})), symplectic.bivector()), symplectic.bivector());
  const auto w = exactness_witness(symplectic, 1);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(schouten(*w, symplectic.bivector()), symplectic.bivector());
  EXPECT_FALSE(exactness_witness(symplectic, 0).has_value());
}

}  // namespace
}  // namespace poissonkit
