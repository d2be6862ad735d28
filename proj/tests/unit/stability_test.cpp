#include <gtest/gtest.h>

#include <cmath>

#include "poissonkit/ce_complex.hpp"
#include "poissonkit/corpus.hpp"
#include "poissonkit/errors.hpp"
#include "poissonkit/stability.hpp"
#include "random.hpp"

namespace poissonkit {
namespace {

using PM = PolyMultivector;

PM d(std::size_t n, IndexTuple idx) { return PM::basis(n, std::move(idx)); }

CeCochain cochain(std::size_t dim, std::size_t degree, std::vector<std::pair<IndexTuple, Rational>> terms) {
  CeCochain c(dim, degree);
  for (auto& [idx, v] : terms) c.set(idx, v);
  return c;
}

Vector add(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

TEST(Pencil, Validation) {
  const PoissonStructure so3 = from_lie_algebra(corpus::so3());
  const PoissonStructure so3_plus_line = from_lie_algebra(testing::direct_sum(corpus::so3(), LieAlgebra::abelian(1)));
  EXPECT_THROW(Pencil(so3_plus_line, d(4, {0, 3})), IncompatiblePencil);
  EXPECT_NO_THROW(Pencil(so3, d(3, {0, 1})));
  EXPECT_THROW(Pencil(so3, times(Function::coordinate(3, 0), d(3, {0, 1}))), IncompatiblePencil);
  EXPECT_THROW(Pencil(so3, d(3, {0})), IncompatiblePencil);
  const PoissonStructure zero = certify(PM(4, 2));
  EXPECT_NO_THROW(Pencil(zero, d(4, {0, 1}) + d(4, {2, 3})));
}

TEST(Pencil, FromCocycle) {
  const LieAlgebra so3 = corpus::so3();
  const CeCochain xi = cochain(3, 1, {{{0}, 1}});
  const Pencil p = pencil_from_cocycle(so3, ce_differential(so3, xi));
  EXPECT_EQ(p.direction(), constant_bivector(ce_differential(so3, xi)));
  for (const Rational t : {Rational(-1), Rational(1, 2), Rational(1), Rational(2)}) {
    EXPECT_NO_THROW(certify(p.at(t)));
  }

  const LieAlgebra g = testing::direct_sum(so3, LieAlgebra::abelian(1));
  EXPECT_THROW(pencil_from_cocycle(g, cochain(4, 2, {{{0, 3}, 1}})), NotACocycle);
}

TEST(Pencil, ConstantBivectorComponents) {
  const CeCochain c = cochain(3, 2, {{{1, 0}, 2}, {{1, 2}, Rational(1, 3)}});
  EXPECT_EQ(constant_bivector(c), Rational(-2) * d(3, {0, 1}) + Rational(1, 3) * d(3, {1, 2}));
}

TEST(ZeroSet, CoboundaryPencilOnSo3) {
  const LieAlgebra so3 = corpus::so3();
  const CeCochain xi = cochain(3, 1, {{{0}, 1}, {{2}, -2}});
  const Pencil p = pencil_from_cocycle(so3, ce_differential(so3, xi));
  for (const Rational t : {Rational(1), Rational(-3, 2), Rational(0)}) {
    const ZeroSet z = pencil_zero_set(p, t);
    ASSERT_FALSE(z.empty);
    EXPECT_TRUE(z.kernel_basis.empty());
    const Vector expected{-t, 0, 2 * t};
    EXPECT_EQ(*z.particular, expected);
  }
  EXPECT_FALSE(zero_set_empty_for_all_nonzero_t(p));
}

TEST(ZeroSet, AbelianPlane) {
  const Pencil p(certify(PM(2, 2)), d(2, {0, 1}));
  EXPECT_TRUE(pencil_zero_set(p, 1).empty);
  EXPECT_TRUE(pencil_zero_set(p, Rational(-1, 5)).empty);
  const ZeroSet all = pencil_zero_set(p, 0);
  ASSERT_FALSE(all.empty);
  EXPECT_EQ(all.kernel_basis.size(), 2u);
  EXPECT_TRUE(zero_set_empty_for_all_nonzero_t(p));
}

TEST(ZeroSet, RejectsNonLinearBase) {
  const PoissonStructure quad = certify(times(wedge(Function::coordinate(2, 0), Function::coordinate(2, 0)), d(2, {0, 1})));
  const Pencil p(quad, PM(2, 2));
  EXPECT_THROW(pencil_zero_set(p, 1), NotLinear);
  EXPECT_THROW(zero_set_empty_for_all_nonzero_t(p), NotLinear);
}

TEST(ZeroSet, MatchesCoboundaryWitnessOnRandomAlgebras) {
  testing::Rng rng(301);
  int unstable = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const LieAlgebra g = testing::random_lie_algebra(rng, 5);
    if (g.dim() < 2) continue;
    const CeCohomology h2 = ce_cohomology(g, 2);
    Vector coords(binomial(g.dim(), 2));
    for (const auto& rep : h2.representatives) {
      const Rational s = testing::random_rational(rng);
      const Vector r = rep.to_vector();
      for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += s * r[i];
    }
    Vector xi(g.dim());
    for (auto& v : xi) v = testing::random_rational(rng);
    coords = add(coords, ce_differential(g, CeCochain::from_vector(g.dim(), 1, xi)).to_vector());
    const CeCochain c = CeCochain::from_vector(g.dim(), 2, coords);
    const Pencil p = pencil_from_cocycle(g, c);
    const bool exact = coboundary_witness(g, -c).has_value();
    EXPECT_EQ(pencil_zero_set(p, 1).empty, !exact);
    EXPECT_EQ(zero_set_empty_for_all_nonzero_t(p), !exact);
    if (!exact) ++unstable;
  }
  EXPECT_GT(unstable, 0);
}

TEST(Classify, So3IsStable) {
  const Vector origin(3);
  const StabilityVerdict v = classify_fixed_point(from_lie_algebra(corpus::so3()), origin);
  EXPECT_EQ(v.tag, Verdict::Stable);
  EXPECT_EQ(v.h2_dim, 0u);
  EXPECT_FALSE(v.witness.has_value());
  EXPECT_EQ(to_string(v.tag), "Stable");
}

TEST(Classify, AbelianPlaneIsUnstable) {
  const Vector origin(2);
  const StabilityVerdict v = classify_fixed_point(certify(PM(2, 2)), origin);
  ASSERT_EQ(v.tag, Verdict::UnstableWitness);
  EXPECT_EQ(v.h2_dim, 1u);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(v.witness->base().bivector().is_zero());
  EXPECT_EQ(v.witness->direction(), d(2, {0, 1}));
  EXPECT_EQ(v.certified_t, witness_sample_t());
  EXPECT_TRUE(v.empty_for_all_nonzero_t);
}

TEST(Classify, QuadraticIsInconclusive) {
  const PoissonStructure quad = certify(times(wedge(Function::coordinate(2, 0), Function::coordinate(2, 0)), d(2, {0, 1})));
  const Vector origin(2);
  const StabilityVerdict v = classify_fixed_point(quad, origin);
  EXPECT_EQ(v.tag, Verdict::Inconclusive);
  EXPECT_EQ(v.h2_dim, 1u);
  EXPECT_FALSE(v.witness.has_value());
}

TEST(Classify, WitnessesOnCorpus) {
  for (const auto& [name, g] : corpus::all()) {
    const Vector origin(g.dim());
    const StabilityVerdict v = classify_fixed_point(from_lie_algebra(g), origin);
    EXPECT_EQ(v.h2_dim, ce_cohomology(g, 2).dim) << name;
    if (v.h2_dim == 0) {
      EXPECT_EQ(v.tag, Verdict::Stable) << name;
      continue;
    }
    ASSERT_EQ(v.tag, Verdict::UnstableWitness) << name;
    ASSERT_TRUE(v.witness.has_value());
    for (const Rational& t : witness_sample_t()) {
      EXPECT_NO_THROW(certify(v.witness->at(t))) << name;
      EXPECT_TRUE(pencil_zero_set(*v.witness, t).empty) << name;
    }
  }
}

TEST(Classify, OffOriginFixedPoint) {
  const LieAlgebra g = corpus::heisenberg3();
  const Vector shift{2, -1, Rational(1, 3)};
  const Vector minus{-2, 1, Rational(-1, 3)};
  const PoissonStructure p = certify(translate(lie_poisson_bivector(g), minus));
  const StabilityVerdict v = classify_fixed_point(p, shift);
  EXPECT_EQ(v.tag, Verdict::UnstableWitness);
  EXPECT_EQ(v.h2_dim, 2u);
  const Vector elsewhere{0, 0, 1};
  EXPECT_THROW(classify_fixed_point(from_lie_algebra(corpus::so3()), elsewhere), NotAFixedPoint);
}

TEST(RelativeCohomology, MatchesIsotropy) {
  const Vector origin(3);
  EXPECT_EQ(relative_cohomology_at_point(from_lie_algebra(corpus::so3()), origin, 2), 0u);
  EXPECT_EQ(relative_cohomology_at_point(from_lie_algebra(corpus::so3()), origin, 3), 1u);
  EXPECT_EQ(relative_cohomology_at_point(from_lie_algebra(corpus::heisenberg3()), origin, 2), 2u);
}

TEST(Track, So3CoboundaryPencil) {
  const LieAlgebra so3 = corpus::so3();
  const CeCochain xi = cochain(3, 1, {{{1}, 1}});
  const Pencil p = pencil_from_cocycle(so3, ce_differential(so3, xi));
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(0.1 * i);
  const std::vector<double> start(3, 0.0);
  const auto track = track_zero_numeric(p, grid, start, 5.0);
  ASSERT_EQ(track.size(), grid.size());
  for (const auto& point : track) {
    ASSERT_TRUE(point.zero.has_value()) << point.t;
    EXPECT_NEAR((*point.zero)[0], 0.0, 1e-8);
    EXPECT_NEAR((*point.zero)[1], -point.t, 1e-8);
    EXPECT_NEAR((*point.zero)[2], 0.0, 1e-8);
    EXPECT_LT(point.residual, 1e-10);
  }
}

TEST(Track, AbelianPlaneLosesZero) {
  const Pencil p(certify(PM(2, 2)), d(2, {0, 1}));
  const std::vector<double> grid{0.0, 0.25, 0.5, 1.0};
  const std::vector<double> start(2, 0.0);
  const auto track = track_zero_numeric(p, grid, start, 1.0);
  ASSERT_EQ(track.size(), 4u);
  EXPECT_TRUE(track[0].zero.has_value());
  for (std::size_t i = 1; i < track.size(); ++i) {
    EXPECT_FALSE(track[i].zero.has_value());
    EXPECT_NEAR(track[i].residual, grid[i], 1e-12);
  }
}

TEST(Track, SingleGridPoint) {
  const Pencil p = pencil_from_cocycle(corpus::so3(), CeCochain(3, 2));
  const std::vector<double> grid{0.0};
  const std::vector<double> start(3, 0.0);
  const auto track = track_zero_numeric(p, grid, start, 1.0);
  ASSERT_EQ(track.size(), 1u);
  ASSERT_TRUE(track[0].zero.has_value());
  EXPECT_EQ(track[0].residual, 0.0);
}

TEST(Track, RejectsBadArguments) {
  const Pencil p(certify(PM(2, 2)), d(2, {0, 1}));
  const std::vector<double> start(2, 0.0);
  const std::vector<double> unsorted{0.5, 0.1};
  const std::vector<double> negative{-0.1, 0.0};
  const std::vector<double> fine{0.0};
  const std::vector<double> short_start(1, 0.0);
  EXPECT_THROW(track_zero_numeric(p, unsorted, start, 1.0), std::invalid_argument);
  EXPECT_THROW(track_zero_numeric(p, negative, start, 1.0), std::invalid_argument);
  EXPECT_THROW(track_zero_numeric(p, fine, start, 0.0), std::invalid_argument);
  EXPECT_THROW(track_zero_numeric(p, fine, short_start, 1.0), std::invalid_argument);
}

}  // namespace
}  // namespace poissonkit
