#pragma once

// Fixed-seed generators and dense reference computations shared by the tests.

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "entwit/hilbert.hpp"

namespace entwit::test_support {

using Rng = std::mt19937_64;
using DenseMatrix = Eigen::MatrixXcd;

inline std::vector<Complex> random_vector(Rng& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> v(n);
  for (Complex& x : v) x = {g(rng), g(rng)};
  return v;
}

inline std::vector<Complex> random_unit_vector(Rng& rng, std::size_t n) {
  std::vector<Complex> v = random_vector(rng, n);
  double norm2 = 0.0;
  for (const Complex& x : v) norm2 += std::norm(x);
  const double inv = 1.0 / std::sqrt(norm2);
  for (Complex& x : v) x *= inv;
  return v;
}

inline std::vector<double> random_real_unit(Rng& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> v(n);
  double norm2 = 0.0;
  for (double& x : v) {
    x = g(rng);
    norm2 += x * x;
  }
  for (double& x : v) x /= std::sqrt(norm2);
  return v;
}

inline ComplexMatrix random_hermitian(Rng& rng, std::size_t d) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(Dims{d});
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < d; ++j) {
      m(i, j) = {g(rng), g(rng)};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

inline QuantumState random_pure(Rng& rng, std::size_t d) { return QuantumState::pure({d}, random_unit_vector(rng, d)); }

// Convex mixture of `terms` random pure product states on d_a x d_b.
inline QuantumState random_product_mixture(Rng& rng, std::size_t d_a, std::size_t d_b, std::size_t terms) {
  std::vector<QuantumState> parts;
  std::vector<double> weights;
  std::uniform_real_distribution<double> u(0.05, 1.0);
  double total = 0.0;
  for (std::size_t k = 0; k < terms; ++k) {
    parts.push_back(tensor(random_pure(rng, d_a), random_pure(rng, d_b)));
    weights.push_back(u(rng));
    total += weights.back();
  }
  for (double& w : weights) w /= total;
  if (terms == 1) return parts.front();
  return mix(parts, weights);
}

inline DenseMatrix dense(const ComplexMatrix& m) {
  DenseMatrix out(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m(i, j);
  return out;
}

inline DenseMatrix dense_density(const QuantumState& s) {
  if (!s.is_pure()) return dense(s.density());
  Eigen::VectorXcd psi(s.dimension());
  for (std::size_t i = 0; i < s.dimension(); ++i) psi(i) = s.amplitudes()[i];
  return psi * psi.adjoint();
}

// tr(rho A) via dense Eigen products; independent of the library's mode products.
inline Complex dense_expectation(const DenseMatrix& a, const QuantumState& s) { return (dense_density(s) * a).trace(); }

inline double dense_variance(const DenseMatrix& a, const QuantumState& s) {
  const double m = dense_expectation(a, s).real();
  return dense_expectation(a * a, s).real() - m * m;
}

inline DenseMatrix dense_kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace entwit::test_support
