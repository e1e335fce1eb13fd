#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qca/matcore.hpp"
#include "qca/models.hpp"
#include "random_gen.hpp"

namespace qca {
namespace {

const Complex kI{0.0, 1.0};

TEST(Bracket, SelfBracketVanishes) {
  std::mt19937_64 rng(1);
  const ComplexMatrix x = testing::random_skew(4, rng);
  EXPECT_EQ(bracket(x, x).norm(), 0.0);
}

TEST(Bracket, HalfPaulis) {
  // [i sx/2, i sy/2] = -(1/4)(2i sz) = -i sz/2, worked by hand.
  const ComplexMatrix got = bracket(0.5 * kI * pauli::x(), 0.5 * kI * pauli::y());
  ComplexMatrix want(2, 2);
  want << -0.5 * kI, 0.0, 0.0, 0.5 * kI;
  EXPECT_LT((got - want).norm(), 1e-15);
}

TEST(Bracket, IdentityCommutes) {
  std::mt19937_64 rng(2);
  const ComplexMatrix y = testing::random_complex(3, 3, rng);
  EXPECT_EQ(bracket(ComplexMatrix::Identity(3, 3), y).norm(), 0.0);
}

TEST(Bracket, ShapeMismatchThrows) {
  EXPECT_THROW(bracket(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(3, 3)), ShapeError);
  EXPECT_THROW(bracket(ComplexMatrix::Zero(2, 3), ComplexMatrix::Zero(2, 3)), ShapeError);
}

TEST(Bracket, JacobiIdentity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const ComplexMatrix x = testing::random_skew(n, rng);
    const ComplexMatrix y = testing::random_skew(n, rng);
    const ComplexMatrix z = testing::random_skew(n, rng);
    const ComplexMatrix jac =
        bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    EXPECT_LE(jac.norm(), 1e-10 * x.norm() * y.norm() * z.norm());
  }
}

TEST(Bracket, SkewInSkewOut) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const ComplexMatrix r = bracket(testing::random_skew(n, rng), testing::random_skew(n, rng));
    EXPECT_LE((r + r.adjoint()).norm(), 1e-12 * r.norm() + 1e-14);
  }
}

TEST(HsInner, PauliValues) {
  EXPECT_NEAR(hs_inner(kI * pauli::x(), kI * pauli::y()), 0.0, 1e-15);
  EXPECT_NEAR(hs_inner(kI * pauli::z(), kI * pauli::z()), 2.0, 1e-15);
}

TEST(HsInner, SelfIsSquaredFrobenius) {
  std::mt19937_64 rng(5);
  const ComplexMatrix x = testing::random_complex(3, 3, rng);
  EXPECT_NEAR(hs_inner(x, x), x.squaredNorm(), 1e-12);
  EXPECT_GE(hs_inner(x, x), 0.0);
}

TEST(HsInner, SymmetricAndMatchesCoordinates) {
  std::mt19937_64 rng(6);
  const ComplexMatrix x = testing::random_complex(4, 4, rng);
  const ComplexMatrix y = testing::random_complex(4, 4, rng);
  EXPECT_NEAR(hs_inner(x, y), hs_inner(y, x), 1e-12);
  EXPECT_NEAR(hs_inner(x, y), real_coords(x).dot(real_coords(y)), 1e-12);
  EXPECT_THROW(hs_inner(x, ComplexMatrix::Zero(2, 2)), ShapeError);
}

TEST(SkewProject, FixedPointsAndKernel) {
  std::mt19937_64 rng(7);
  const ComplexMatrix s = testing::random_skew(3, rng);
  const ComplexMatrix h = testing::random_hermitian(3, rng);
  EXPECT_LT((skew_project(s) - s).norm(), 1e-15);
  EXPECT_LT(skew_project(h).norm(), 1e-15);
  const ComplexMatrix x = testing::random_complex(3, 3, rng);
  EXPECT_LT((skew_project(skew_project(x)) - skew_project(x)).norm(), 1e-15);
}

TEST(SkewProject, Diagonal) {
  ComplexMatrix x(2, 2);
  x << Complex(1, 1), 0.0, 0.0, Complex(1, -1);
  ComplexMatrix want(2, 2);
  want << kI, 0.0, 0.0, -kI;
  EXPECT_LT((skew_project(x) - want).norm(), 1e-15);
}

TEST(ValidatedSkew, AcceptsNoiseRefusesHermitian) {
  std::mt19937_64 rng(8);
  const ComplexMatrix s = testing::random_skew(3, rng);
  const ComplexMatrix noisy = s + 1e-12 * testing::random_complex(3, 3, rng);
  const ComplexMatrix cleaned = validated_skew(noisy);
  EXPECT_LT((cleaned + cleaned.adjoint()).norm(), 1e-15);
  EXPECT_THROW(validated_skew(testing::random_hermitian(3, rng)), ValidationError);
}

TEST(NumericalRank, PauliDirections) {
  const std::vector<ComplexMatrix> v{kI * pauli::x(), kI * pauli::y(), kI * pauli::z()};
  EXPECT_EQ(numerical_rank(v), 3);
}

TEST(NumericalRank, Collinear) {
  const ComplexMatrix x = kI * pauli::x();
  const std::vector<ComplexMatrix> v{x, 2.0 * x};
  EXPECT_EQ(numerical_rank(v), 1);
}

TEST(NumericalRank, ExampleSp2Basis) {
  const LieBasis b = example_sp2_basis();
  EXPECT_EQ(numerical_rank(b.elements()), 10);
}

TEST(NumericalRank, EmptyListIsPrecondition) {
  const std::vector<ComplexMatrix> empty;
  EXPECT_THROW(numerical_rank(empty), PreconditionError);
}

TEST(NumericalRank, PermutationAndScalingInvariant) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> scale(-5.0, 5.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<ComplexMatrix> v;
    const int k = 1 + trial % 6;
    for (int i = 0; i < k; ++i) {
      v.push_back(testing::random_skew(n, rng));
    }
    // Add dependent combinations so that the rank is below the count.
    v.push_back(v[0] - 3.0 * v.back());
    const int base = numerical_rank(v);
    std::shuffle(v.begin(), v.end(), rng);
    EXPECT_EQ(numerical_rank(v), base);
    for (auto& m : v) {
      double s = scale(rng);
      if (std::abs(s) < 1e-3) s = 1.0;
      m *= s;
    }
    EXPECT_EQ(numerical_rank(v), base);
  }
}

TEST(ExpmSkew, ZeroIsIdentity) {
  EXPECT_LT((expm_skew(ComplexMatrix::Zero(3, 3)) - ComplexMatrix::Identity(3, 3)).norm(), 1e-15);
}

TEST(ExpmSkew, DiagonalOracle) {
  const ComplexMatrix u = expm_skew(kI * std::numbers::pi * pauli::z() / 2.0);
  ComplexMatrix want(2, 2);
  want << kI, 0.0, 0.0, -kI;
  EXPECT_LT((u - want).norm(), 1e-14);
}

TEST(ExpmSkew, InverseAndUnitarity) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 6;
    const ComplexMatrix s = testing::random_skew(n, rng);
    const ComplexMatrix u = expm_skew(s);
    EXPECT_LT((u * expm_skew(-s) - ComplexMatrix::Identity(n, n)).norm(), 1e-10);
    Eigen::JacobiSVD<ComplexMatrix> svd(u);
    EXPECT_GE(svd.singularValues().minCoeff(), 1.0 - 1e-10);
    EXPECT_LE(svd.singularValues().maxCoeff(), 1.0 + 1e-10);
  }
}

TEST(ExpmSkew, RefusesNonSkew) {
  EXPECT_THROW(expm_skew(pauli::x()), ValidationError);
}

TEST(Haar, ScalarCaseHasUnitModulus) {
  const ComplexMatrix u = haar_random_unitary(1, 42);
  ASSERT_EQ(u.rows(), 1);
  EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-15);
}

TEST(Haar, UnitaryAndDeterministic) {
  for (int n = 1; n <= 8; ++n) {
    const ComplexMatrix u = haar_random_unitary(n, 1234 + static_cast<std::uint64_t>(n));
    EXPECT_LT(unitarity_defect(u), 1e-10);
    EXPECT_EQ(u, haar_random_unitary(n, 1234 + static_cast<std::uint64_t>(n)));
  }
  EXPECT_NE(haar_random_unitary(3, 1), haar_random_unitary(3, 2));
}

TEST(Haar, FirstMomentVanishes) {
  // E[U_00] = 0 and E[|U_00|^2] = 1/n under Haar measure.
  const int n = 3;
  const int samples = 4000;
  Complex mean{0.0, 0.0};
  double second = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Complex u00 = haar_random_unitary(n, static_cast<std::uint64_t>(s))(0, 0);
    mean += u00;
    second += std::norm(u00);
  }
  mean /= samples;
  second /= samples;
  EXPECT_LT(std::abs(mean), 0.05);
  EXPECT_NEAR(second, 1.0 / n, 0.02);
}

TEST(StateVector, Validation) {
  ComplexVector v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(StateVector{v}, ValidationError);
  const StateVector s = StateVector::normalized(v);
  EXPECT_NEAR(s.amplitudes().norm(), 1.0, 1e-15);
  EXPECT_THROW(StateVector::normalized(ComplexVector::Zero(3)), ValidationError);
}

}  // namespace
}  // namespace qca
