#include <gtest/gtest.h>

#include <numbers>

#include "entwit/operators.hpp"
#include "entwit/states.hpp"
#include "test_support.hpp"

namespace {

using namespace entwit;
namespace t = entwit::test_support;

const Complex I{0.0, 1.0};

std::vector<Complex> fock(std::size_t d, std::size_t n) {
  std::vector<Complex> v(d);
  v[n] = 1.0;
  return v;
}

std::vector<Complex> mat_vec(const ComplexMatrix& m, const std::vector<Complex>& v) {
  std::vector<Complex> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

TEST(Annihilation, LowersOneToZero) {
  EXPECT_EQ(mat_vec(annihilation(2), fock(2, 1)), fock(2, 0));
  EXPECT_THROW(annihilation(1), std::invalid_argument);
}

TEST(Annihilation, NumberOperator) {
  const std::size_t d = 7;
  const ComplexMatrix n = creation(d) * annihilation(d);
  for (std::size_t k = 0; k < d; ++k) EXPECT_NEAR(std::abs(n(k, k) - double(k)), 0.0, 1e-12);
}

TEST(Annihilation, CanonicalCommutatorFailsOnlyAtTopLevel) {
  const std::size_t d = 6;
  const ComplexMatrix c = commutator(annihilation(d), creation(d));
  for (std::size_t k = 0; k + 1 < d; ++k) EXPECT_NEAR(std::abs(c(k, k) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(c(d - 1, d - 1).real(), 1.0 - double(d), 1e-12);
}

TEST(Quadratures, HermitianAndVacuumMoments) {
  const QuadraturePair q = quadratures(10);
  EXPECT_TRUE(q.x.is_hermitian(1e-12));
  EXPECT_TRUE(q.p.is_hermitian(1e-12));
  const QuantumState vac = QuantumState::pure({10}, fock(10, 0));
  EXPECT_NEAR(expectation(q.x * q.x, vac).real(), 0.5, 1e-12);
  EXPECT_NEAR(expectation(q.p * q.p, vac).real(), 0.5, 1e-12);
}

TEST(Quadratures, VacuumSaturatesProductBound) {
  const std::size_t d = 6;
  const QuadraturePair q = quadratures(d);
  const QuantumState vac = fock_pair_superposition(std::vector<double>{1.0}, d);
  const double s1 = std::sqrt(variance(kron(q.x, q.p), vac));
  const double s2 = std::sqrt(variance(kron(q.p, q.x), vac));
  EXPECT_NEAR(s1 * s2, 0.25, 1e-12);
}

// Normal-ordered expansion of x_a^2 p_b^2 checked against the direct matrix product.
TEST(Quadratures, NormalOrderedExpansion) {
  const std::size_t d = 8;
  const QuadraturePair q = quadratures(d);
  const ComplexMatrix a = annihilation(d), ad = creation(d), id = ComplexMatrix::identity({d});
  const ComplexMatrix na = 2.0 * (ad * a) + id;
  const ComplexMatrix sq = a * a + ad * ad;
  const ComplexMatrix expansion = 0.25 * (kron(na, na) - kron(sq, sq) + kron(sq, na) - kron(na, sq));
  const ComplexMatrix direct = kron(q.x * q.x, q.p * q.p);
  const std::vector<double> c = psi2_coefficients(0.95);
  const QuantumState psi = fock_pair_superposition(c, d);
  const double c0 = c[0], c1 = c[1];
  EXPECT_NEAR(expectation(direct, psi).real(), 0.25 + 6 * c1 * c1 - c0 * c1, 1e-12);
  EXPECT_NEAR(expectation(expansion, psi).real(), expectation(direct, psi).real(), 1e-12);
}

TEST(SpinOps, SquaresAndAnticommutator) {
  const SpinOps s = spin_ops();
  for (const ComplexMatrix* m : {&s.sx, &s.sy, &s.sz}) EXPECT_EQ(max_abs_diff(*m * *m, s.s0), 0.0);
  EXPECT_EQ(anticommutator(s.sx, s.sy).max_abs(), 0.0);
}

TEST(SpinOps, CyclicCommutators) {
  const SpinOps s = spin_ops();
  EXPECT_EQ(max_abs_diff(commutator(s.sx, s.sy), 2.0 * I * s.sz), 0.0);
  EXPECT_EQ(max_abs_diff(commutator(s.sy, s.sz), 2.0 * I * s.sx), 0.0);
  EXPECT_EQ(max_abs_diff(commutator(s.sz, s.sx), 2.0 * I * s.sy), 0.0);
}

TEST(RotatedSpin, EndpointsAndCommutator) {
  const SpinOps s = spin_ops();
  EXPECT_LE(max_abs_diff(rotated_spin(0.0), s.sx), 1e-16);
  EXPECT_LE(max_abs_diff(rotated_spin(std::numbers::pi / 2), s.sy), 1e-16);
  t::Rng rng(31);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int k = 0; k < 100; ++k) {
    const double th = u(rng), th2 = u(rng);
    const ComplexMatrix r = rotated_spin(th);
    EXPECT_TRUE(r.is_hermitian(1e-12));
    EXPECT_LE(max_abs_diff(r * r, s.s0), 1e-12);
    EXPECT_LE(max_abs_diff(commutator(r, rotated_spin(th2)), 2.0 * I * std::sin(th2 - th) * s.sz), 1e-12);
  }
}

TEST(BlockSpin, ReducesToSpinAtTwo) {
  const BlockSpin b = block_spin(2);
  const SpinOps s = spin_ops();
  EXPECT_EQ(max_abs_diff(b.x, s.sx), 0.0);
  EXPECT_EQ(max_abs_diff(b.y, s.sy), 0.0);
  EXPECT_EQ(max_abs_diff(b.z, s.sz), 0.0);
  EXPECT_THROW(block_spin(5), std::invalid_argument);
}

TEST(BlockSpin, AlgebraAtSix) {
  const BlockSpin b = block_spin(6);
  const ComplexMatrix id = ComplexMatrix::identity({6});
  EXPECT_EQ(max_abs_diff(commutator(b.x, b.y), 2.0 * I * b.z), 0.0);
  for (const ComplexMatrix* m : {&b.x, &b.y, &b.z}) {
    EXPECT_TRUE(m->is_hermitian(1e-12));
    EXPECT_EQ(max_abs_diff(*m * *m, id), 0.0);
  }
}

TEST(BlockSpin, DistinctBlocksCommute) {
  const std::size_t d = 8;
  const BlockSpin b = block_spin(d);
  auto restrict_to = [&](const ComplexMatrix& m, std::size_t block) {
    ComplexMatrix out(Dims{d});
    for (std::size_t i = 2 * block; i < 2 * block + 2; ++i)
      for (std::size_t j = 2 * block; j < 2 * block + 2; ++j) out(i, j) = m(i, j);
    return out;
  };
  for (std::size_t m = 0; m < d / 2; ++m)
    for (std::size_t n = 0; n < d / 2; ++n) {
      if (m == n) continue;
      EXPECT_EQ(commutator(restrict_to(b.x, m), restrict_to(b.y, n)).max_abs(), 0.0);
    }
}

TEST(BuiltinOperator, NamesAndDimensionChecks) {
  EXPECT_EQ(max_abs_diff(builtin_operator("sz", 2), spin_ops().sz), 0.0);
  EXPECT_EQ(max_abs_diff(builtin_operator("x", 5), quadratures(5).x), 0.0);
  EXPECT_EQ(max_abs_diff(builtin_operator("blocky", 4), block_spin(4).y), 0.0);
  EXPECT_THROW(builtin_operator("sx", 3), std::invalid_argument);
  EXPECT_THROW(builtin_operator("nope", 2), std::invalid_argument);
}

}  // namespace
