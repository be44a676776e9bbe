#pragma once

// Dense complex linear algebra over composite (tensor-product) Hilbert spaces.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace entwit {

using Complex = std::complex<double>;
// Local factor dimensions of a composite space; their product is the total dimension.
using Dims = std::vector<std::size_t>;

std::size_t total_dimension(const Dims& dims);

struct Tolerances {
  double hermitian = 1e-10;
  double norm = 1e-12;
  // Smallest admissible density-matrix eigenvalue.
  double eigenvalue_floor = 1e-10;
  // Variances below zero but above -variance_error are rounding and clamp to 0.
  double variance_error = 1e-6;
};

// Square matrix acting on the space described by dims(); entries are row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  // Zero matrix.
  explicit ComplexMatrix(Dims dims);
  ComplexMatrix(Dims dims, std::vector<Complex> entries);

  static ComplexMatrix identity(Dims dims);
  // Single-factor matrix from nested rows, e.g. {{0, 1}, {1, 0}}.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  const Dims& dims() const { return dims_; }
  std::size_t size() const { return side_; }

  Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * side_ + col]; }
  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * side_ + col]; }

  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> entries() { return entries_; }
  std::span<const Complex> row(std::size_t r) const { return {entries_.data() + r * side_, side_}; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;
  bool is_hermitian(double tol = 1e-10) const;
  // Same entries reinterpreted on a different factorization of the same total dimension.
  ComplexMatrix with_dims(Dims dims) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

 private:
  Dims dims_;
  std::size_t side_ = 0;
  std::vector<Complex> entries_;
};

// max |A_ij - B_ij|; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matrix_power(const ComplexMatrix& a, unsigned exponent);

// Pure (amplitude vector) or mixed (density matrix) state on a composite space.
// Constructors validate the invariants; a pure state is never silently turned
// into a density matrix.
class QuantumState {
 public:
  enum class Kind { pure, mixed };

  static QuantumState pure(Dims dims, std::vector<Complex> amplitudes, const Tolerances& tol = {});
  static QuantumState mixed(ComplexMatrix density, const Tolerances& tol = {});

  Kind kind() const { return kind_; }
  bool is_pure() const { return kind_ == Kind::pure; }
  const Dims& dims() const { return dims_; }
  std::size_t dimension() const { return total_dimension(dims_); }

  // Throws std::logic_error on a mixed state.
  std::span<const Complex> amplitudes() const;
  // Throws std::logic_error on a pure state.
  const ComplexMatrix& density() const;
  // |psi><psi| for pure states, the stored density otherwise.
  ComplexMatrix to_density() const;

 private:
  QuantumState() = default;

  Kind kind_ = Kind::pure;
  Dims dims_;
  std::vector<Complex> amplitudes_;
  ComplexMatrix density_;
};

// Product state of two states on disjoint factors; pure iff both inputs are pure.
QuantumState tensor(const QuantumState& a, const QuantumState& b);

Complex expectation(const ComplexMatrix& op, const QuantumState& state);
double variance(const ComplexMatrix& op, const QuantumState& state, const Tolerances& tol = {});

// Convex combination sum_n w_n rho_n; pure inputs enter as projectors.
QuantumState mix(std::span<const QuantumState> states, std::span<const double> weights, const Tolerances& tol = {});

// Tensor product O_1 (x) ... (x) O_n of single-factor operators, kept factorized.
// Expectations are evaluated by contracting one factor at a time, so the full
// operator is never materialized.
class ProductOperator {
 public:
  ProductOperator() = default;
  explicit ProductOperator(std::vector<ComplexMatrix> factors);

  const std::vector<ComplexMatrix>& factors() const { return factors_; }
  std::size_t arity() const { return factors_.size(); }
  Dims dims() const;

  ComplexMatrix to_matrix() const;
  ProductOperator adjoint() const;
  bool is_hermitian(double tol = 1e-10) const;

  // Factorwise product: (A (x) B)(C (x) D) = AC (x) BD.
  friend ProductOperator operator*(const ProductOperator& lhs, const ProductOperator& rhs);

 private:
  std::vector<ComplexMatrix> factors_;
};

// Linear combination of product operators.
class OperatorSum {
 public:
  using Term = std::pair<Complex, ProductOperator>;

  OperatorSum() = default;
  OperatorSum(ProductOperator op) { terms_.emplace_back(Complex{1.0, 0.0}, std::move(op)); }  // NOLINT
  OperatorSum(std::initializer_list<Term> terms) : terms_(terms) {}

  const std::vector<Term>& terms() const { return terms_; }
  ComplexMatrix to_matrix() const;

  OperatorSum& operator+=(const OperatorSum& other);
  OperatorSum& operator-=(const OperatorSum& other);
  OperatorSum& operator*=(Complex scale);
  friend OperatorSum operator+(OperatorSum lhs, const OperatorSum& rhs) { return lhs += rhs; }
  friend OperatorSum operator-(OperatorSum lhs, const OperatorSum& rhs) { return lhs -= rhs; }
  friend OperatorSum operator*(Complex s, OperatorSum op) { return op *= s; }
  friend OperatorSum operator*(const OperatorSum& lhs, const OperatorSum& rhs);

 private:
  std::vector<Term> terms_;
};

OperatorSum power(const OperatorSum& op, unsigned exponent);

Complex expectation(const ProductOperator& op, const QuantumState& state);
Complex expectation(const OperatorSum& op, const QuantumState& state);
// Factors must be Hermitian.
double variance(const ProductOperator& op, const QuantumState& state, const Tolerances& tol = {});

}  // namespace entwit
