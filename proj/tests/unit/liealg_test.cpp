#include <gtest/gtest.h>

#include "oracles.hpp"
#include "poissonkit/ce_complex.hpp"
#include "poissonkit/corpus.hpp"
#include "poissonkit/errors.hpp"
#include "random.hpp"

namespace poissonkit {
namespace {

std::vector<Vector> to_rows(std::vector<std::vector<int>> m) {
  std::vector<Vector> out;
  for (auto& r : m) out.emplace_back(r.begin(), r.end());
  return out;
}

TEST(LieAlgebra, AcceptsAbelianAndSo3) {
  EXPECT_TRUE(LieAlgebra::abelian(2).brackets().empty());
  const LieAlgebra g = corpus::so3();
  EXPECT_EQ(g.dim(), 3u);
  EXPECT_EQ(g.structure_constant(2, 0, 1), 1);  // [e3, e1] = e2
}

TEST(LieAlgebra, CyclicSignFlipIsStillLie) {
  // [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=-e2: each Jacobi term is [l e_k, e_k] = 0.
  const LieAlgebra g(3, {}, {{{0, 1}, {{2, Rational(1)}}}, {{1, 2}, {{0, Rational(1)}}}, {{0, 2}, {{1, Rational(1)}}}});
  EXPECT_TRUE(is_semisimple(g));
}

TEST(LieAlgebra, ReportsFirstJacobiViolation) {
  // [e1,e2]=e3, [e1,e3]=e1: Jacobiator(e1,e2,e3) = -e3.
  try {
    LieAlgebra(3, {}, {{{0, 1}, {{2, Rational(1)}}}, {{0, 2}, {{0, Rational(1)}}}});
    FAIL() << "expected JacobiViolation";
  } catch (const JacobiViolation& e) {
    EXPECT_EQ(e.i, 0u);
    EXPECT_EQ(e.j, 1u);
    EXPECT_EQ(e.k, 2u);
    EXPECT_EQ(e.l, 2u);
    EXPECT_EQ(e.residual, "-1");
  }
}

TEST(LieAlgebra, RejectsMalformedKeys) {
  EXPECT_THROW(LieAlgebra(2, {}, {{{1, 0}, {{0, Rational(1)}}}}), std::invalid_argument);
  EXPECT_THROW(LieAlgebra(2, {}, {{{0, 2}, {{0, Rational(1)}}}}), std::out_of_range);
  EXPECT_THROW(LieAlgebra(2, {}, {{{0, 1}, {{5, Rational(1)}}}}), std::out_of_range);
  EXPECT_THROW(LieAlgebra(2, {"only-one"}, {}), std::invalid_argument);
}

TEST(Bracket, Examples) {
  const LieAlgebra g = corpus::so3();
  EXPECT_EQ(g.bracket({1, 0, 0}, {0, 1, 0}), (Vector{0, 0, 1}));
  const Vector x{Rational(1, 2), -3, 2};
  EXPECT_TRUE(is_zero(g.bracket(x, x)));
  EXPECT_TRUE(is_zero(LieAlgebra::abelian(3).bracket(x, {1, 1, 1})));
  EXPECT_THROW(g.bracket({1, 0}, x), std::invalid_argument);
}

TEST(KillingForm, HandComputedValues) {
  EXPECT_EQ(killing_form(LieAlgebra::abelian(3)), to_rows({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(killing_form(corpus::so3()), to_rows({{-2, 0, 0}, {0, -2, 0}, {0, 0, -2}}));
  EXPECT_EQ(killing_form(corpus::aff1()), to_rows({{1, 0}, {0, 0}}));
  // sl2 in (h, e, f): K = [[8,0,0],[0,0,4],[0,4,0]].
  EXPECT_EQ(killing_form(corpus::sl2()), to_rows({{8, 0, 0}, {0, 0, 4}, {0, 4, 0}}));
}

TEST(Semisimple, Examples) {
  EXPECT_TRUE(is_semisimple(corpus::so3()));
  EXPECT_FALSE(is_semisimple(LieAlgebra::abelian(1)));
  EXPECT_FALSE(is_semisimple(LieAlgebra::abelian(4)));
  EXPECT_FALSE(is_semisimple(corpus::heisenberg3()));
  EXPECT_TRUE(is_semisimple(corpus::sl2()));
  EXPECT_TRUE(is_semisimple(corpus::so4()));
  EXPECT_TRUE(is_semisimple(corpus::su3()));
  EXPECT_FALSE(is_semisimple(corpus::aff1()));
}

TEST(CeDifferential, Examples) {
  for (std::size_t k = 0; k <= 3; ++k) EXPECT_TRUE(ce_differential_matrix(LieAlgebra::abelian(3), k).is_zero());
  const SparseMatrix d1 = ce_differential_matrix(corpus::aff1(), 1);
  EXPECT_EQ(d1.to_dense(), to_rows({{0, -1}}));
  EXPECT_THROW(ce_differential_matrix(corpus::aff1(), 3), std::out_of_range);
}

TEST(CeDifferential, SquaresToZeroOnCorpus) {
  for (const auto& [name, g] : corpus::all()) {
    for (std::size_t k = 0; k + 1 <= g.dim(); ++k) {
      EXPECT_TRUE((ce_differential_matrix(g, k + 1) * ce_differential_matrix(g, k)).is_zero()) << name << " k=" << k;
    }
  }
}

TEST(CeDifferential, SquaresToZeroOnRandomAlgebras) {
  testing::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const LieAlgebra g = testing::random_lie_algebra(rng, 5);
    for (std::size_t k = 0; k + 1 <= g.dim(); ++k) {
      EXPECT_TRUE((ce_differential_matrix(g, k + 1) * ce_differential_matrix(g, k)).is_zero());
    }
  }
}

TEST(CeDifferential, JacobiFailureBreaksSquare) {
  testing::Rng rng(11);
  int broken = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const LieAlgebra g = testing::random_lie_algebra(rng, 4);
    if (g.dim() < 3) continue;
    StructureMap s = g.brackets();
    const auto pairs = k_subsets(g.dim(), 2);
    const auto& pr = pairs[rng() % pairs.size()];
    s[{pr[0], pr[1]}][rng() % g.dim()] += testing::random_nonzero(rng);
    const StructureConstants perturbed(g.dim(), s);
    if (!perturbed.jacobi_violation()) continue;
    ++broken;
    bool nonzero_somewhere = false;
    for (std::size_t k = 0; k + 1 <= g.dim(); ++k) {
      if (!(ce_differential_matrix(perturbed, k + 1) * ce_differential_matrix(perturbed, k)).is_zero()) {
        nonzero_somewhere = true;
      }
    }
    EXPECT_TRUE(nonzero_somewhere);
  }
  EXPECT_GT(broken, 20);
}

TEST(CeCohomology, AbelianIsExteriorAlgebra) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(ce_cohomology(LieAlgebra::abelian(n), k).dim, binomial(n, k));
  }
}

TEST(CeCohomology, So3AndHeisenberg) {
  const auto so3 = corpus::so3();
  EXPECT_EQ(ce_cohomology(so3, 0).dim, 1u);
  EXPECT_EQ(ce_cohomology(so3, 1).dim, 0u);
  EXPECT_EQ(ce_cohomology(so3, 2).dim, 0u);
  EXPECT_EQ(ce_cohomology(so3, 3).dim, 1u);

  const auto h3 = corpus::heisenberg3();
  const std::vector<std::size_t> expected = oracle::ce_dims_bruteforce(h3.constants());
  EXPECT_EQ(expected, (std::vector<std::size_t>{1, 2, 2, 1}));
  for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(ce_cohomology(h3, k).dim, expected[k]);
}

TEST(CeCohomology, MatchesBruteForceOnRandomAlgebras) {
  testing::Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const LieAlgebra g = testing::random_lie_algebra(rng, 4);
    const auto expected = oracle::ce_dims_bruteforce(g.constants());
    long euler = 0;
    for (std::size_t k = 0; k <= g.dim(); ++k) {
      const auto h = ce_cohomology(g, k);
      EXPECT_EQ(h.dim, expected[k]);
      euler += (k % 2 == 0 ? 1 : -1) * static_cast<long>(h.dim);
    }
    EXPECT_EQ(euler, 0);
  }
}

TEST(CeCohomology, RepresentativesAreIndependentCocycles) {
  for (const auto& [name, g] : corpus::all()) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(g.dim(), 3); ++k) {
      const auto h = ce_cohomology(g, k);
      RowSpace span(binomial(g.dim(), k));
      const SparseMatrix incoming = ce_differential_matrix(g, k - 1);
      const SparseMatrix cols = incoming.transpose();
      for (std::size_t c = 0; c < cols.rows(); ++c) {
        Vector v(binomial(g.dim(), k));
        for (const auto& [r, x] : cols.row(c)) v[r] = x;
        span.insert(v);
      }
      for (const auto& rep : h.representatives) {
        EXPECT_TRUE(ce_differential(g, rep).is_zero()) << name;
        EXPECT_TRUE(span.insert(rep.to_vector())) << name << ": dependent class";
      }
    }
  }
}

TEST(CeCohomology, Whitehead) {
  for (const auto& g : {corpus::so3(), corpus::sl2(), corpus::so4(), corpus::su3()}) {
    ASSERT_TRUE(is_semisimple(g));
    EXPECT_EQ(ce_cohomology(g, 1).dim, 0u);
    EXPECT_EQ(ce_cohomology(g, 2).dim, 0u);
  }
}

TEST(CoboundaryWitness, Examples) {
  const auto aff = corpus::aff1();
  const CeCochain zero(2, 2);
  EXPECT_EQ(coboundary_witness(aff, zero), CeCochain(2, 1));

  CeCochain c(2, 2);
  c.set({0, 1}, 1);
  CeCochain expected(2, 1);
  expected.set({1}, -1);
  EXPECT_EQ(coboundary_witness(aff, c), expected);

  EXPECT_FALSE(coboundary_witness(LieAlgebra::abelian(2), c).has_value());
  EXPECT_THROW(coboundary_witness(aff, CeCochain(2, 1)), std::invalid_argument);
}

TEST(CoboundaryWitness, ExistsIffClassVanishes) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const LieAlgebra g = testing::random_lie_algebra(rng, 5);
    if (g.dim() < 2) continue;
    const auto h2 = ce_cohomology(g, 2);
    Vector xi(g.dim());
    for (auto& x : xi) x = testing::random_rational(rng);
    Vector c = ce_differential_matrix(g, 1).apply(xi);
    bool trivial_class = true;
    for (const auto& rep : h2.representatives) {
      const Rational a = testing::random_rational(rng);
      if (a != 0) trivial_class = false;
      const Vector r = rep.to_vector();
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += a * r[i];
    }
    const CeCochain cochain = CeCochain::from_vector(g.dim(), 2, c);
    const auto w = coboundary_witness(g, cochain);
    EXPECT_EQ(w.has_value(), trivial_class);
    if (w) EXPECT_EQ(ce_differential(g, *w), cochain);
  }
}

TEST(CeCochain, SetHandlesOrderAndRepeats) {
  CeCochain c(3, 2);
  c.set({2, 0}, 5);
  EXPECT_EQ(c.coefficient({0, 2}), -5);
  EXPECT_EQ(c.pair(2, 0), 5);
  EXPECT_THROW(c.set({1, 1}, 1), std::invalid_argument);
  EXPECT_THROW(c.set({0, 3}, 1), std::out_of_range);
}

}  // namespace
}  // namespace poissonkit
