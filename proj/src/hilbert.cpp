#include "entwit/hilbert.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "entwit/error.hpp"
#include "entwit/kernels.hpp"

namespace entwit {
namespace {

std::string dims_to_string(const Dims& dims) {
  std::string out = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(dims[i]);
  }
  return out + "]";
}

void require_same_dims(const Dims& a, const Dims& b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dims " + dims_to_string(a) + " vs " + dims_to_string(b));
  }
}

void require_finite(std::span<const Complex> values, const char* what) {
  for (const Complex& z : values) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
  }
}

bool is_exact_identity(const ComplexMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != (i == j ? Complex{1.0, 0.0} : Complex{})) return false;
    }
  }
  return true;
}

// out = (I (x) op (x) I) in, where op acts on factor `axis` of `dims` and every
// row of the tensor carries `trailing` extra contiguous entries (a density
// matrix's column index, for instance).
void apply_factor(const ComplexMatrix& op, std::size_t axis, const Dims& dims, std::size_t trailing,
                  std::span<const Complex> in, std::span<Complex> out) {
  const std::size_t d = dims[axis];
  std::size_t outer = 1;
  for (std::size_t k = 0; k < axis; ++k) outer *= dims[k];
  std::size_t inner = trailing;
  for (std::size_t k = axis + 1; k < dims.size(); ++k) inner *= dims[k];

  if (inner == 1) {
    for (std::size_t o = 0; o < outer; ++o) {
      const std::span<const Complex> block = in.subspan(o * d, d);
      for (std::size_t i = 0; i < d; ++i) out[o * d + i] = kernels::dotu(op.row(i), block);
    }
    return;
  }
  std::fill(out.begin(), out.end(), Complex{});
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t i = 0; i < d; ++i) {
      std::span<Complex> dst = out.subspan((o * d + i) * inner, inner);
      for (std::size_t j = 0; j < d; ++j) {
        const Complex coef = op(i, j);
        if (coef == Complex{}) continue;
        kernels::axpy(coef, in.subspan((o * d + j) * inner, inner), dst);
      }
    }
  }
}

// Applies every non-identity factor of `op` to `data` in place.
void apply_product(const ProductOperator& op, const Dims& dims, std::size_t trailing, std::vector<Complex>& data) {
  std::vector<Complex> scratch(data.size());
  for (std::size_t k = 0; k < op.arity(); ++k) {
    const ComplexMatrix& f = op.factors()[k];
    if (is_exact_identity(f)) continue;
    apply_factor(f, k, dims, trailing, data, scratch);
    data.swap(scratch);
  }
}

void require_operator_on(const Dims& op_dims, const QuantumState& state) {
  require_same_dims(op_dims, state.dims(), "operator/state");
}

std::vector<Complex> matvec(const ComplexMatrix& m, std::span<const Complex> v) {
  std::vector<Complex> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = kernels::dotu(m.row(i), v);
  return out;
}

double finish_variance(double second_moment, double mean, const Tolerances& tol) {
  const double v = second_moment - mean * mean;
  if (v < -tol.variance_error) {
    throw std::domain_error("variance is negative beyond rounding (" + std::to_string(v) + ")");
  }
  return std::max(v, 0.0);
}

}  // namespace

std::size_t total_dimension(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(Dims dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("ComplexMatrix: empty dims");
  for (std::size_t d : dims_) {
    if (d == 0) throw std::invalid_argument("ComplexMatrix: zero factor dimension");
  }
  side_ = total_dimension(dims_);
  entries_.assign(side_ * side_, Complex{});
}

ComplexMatrix::ComplexMatrix(Dims dims, std::vector<Complex> entries) : ComplexMatrix(std::move(dims)) {
  if (entries.size() != side_ * side_) {
    throw DimensionMismatch("ComplexMatrix: " + std::to_string(entries.size()) + " entries for side " +
                            std::to_string(side_));
  }
  require_finite(entries, "ComplexMatrix");
  entries_ = std::move(entries);
}

ComplexMatrix ComplexMatrix::identity(Dims dims) {
  ComplexMatrix m(std::move(dims));
  for (std::size_t i = 0; i < m.side_; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw DimensionMismatch("ComplexMatrix::from_rows: matrix is not square");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return ComplexMatrix({n}, std::move(entries));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dims_);
  for (std::size_t i = 0; i < side_; ++i) {
    for (std::size_t j = 0; j < side_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < side_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double best = 0.0;
  for (const Complex& z : entries_) best = std::max(best, std::abs(z));
  return best;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (std::size_t i = 0; i < side_; ++i) {
    for (std::size_t j = i; j < side_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    }
  }
  return true;
}

ComplexMatrix ComplexMatrix::with_dims(Dims dims) const {
  if (total_dimension(dims) != side_) {
    throw DimensionMismatch("with_dims: " + dims_to_string(dims) + " does not factor side " + std::to_string(side_));
  }
  return ComplexMatrix(std::move(dims), entries_);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dims(dims_, other.dims_, "matrix sum");
  kernels::axpy(Complex{1.0, 0.0}, other.entries_, entries_);
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dims(dims_, other.dims_, "matrix difference");
  kernels::axpy(Complex{-1.0, 0.0}, other.entries_, entries_);
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dims(lhs.dims(), rhs.dims(), "matrix product");
  const std::size_t n = lhs.size();
  ComplexMatrix out(lhs.dims());
  for (std::size_t i = 0; i < n; ++i) {
    std::span<Complex> dst = out.entries().subspan(i * n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex coef = lhs(i, k);
      if (coef == Complex{}) continue;
      kernels::axpy(coef, rhs.row(k), dst);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dims(a.dims(), b.dims(), "max_abs_diff");
  return kernels::max_abs_diff(a.entries(), b.entries());
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  ComplexMatrix out(std::move(dims));
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na * nb;
  for (std::size_t i1 = 0; i1 < na; ++i1) {
    for (std::size_t j1 = 0; j1 < na; ++j1) {
      const Complex coef = a(i1, j1);
      if (coef == Complex{}) continue;
      for (std::size_t i2 = 0; i2 < nb; ++i2) {
        kernels::axpy(coef, b.row(i2), out.entries().subspan((i1 * nb + i2) * n + j1 * nb, nb));
      }
    }
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dims(a.dims(), b.dims(), "commutator");
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dims(a.dims(), b.dims(), "anticommutator");
  return a * b + b * a;
}

ComplexMatrix matrix_power(const ComplexMatrix& a, unsigned exponent) {
  ComplexMatrix result = ComplexMatrix::identity(a.dims());
  for (unsigned k = 0; k < exponent; ++k) result = result * a;
  return result;
}

// ---------------------------------------------------------------------------
// QuantumState

QuantumState QuantumState::pure(Dims dims, std::vector<Complex> amplitudes, const Tolerances& tol) {
  if (dims.empty()) throw InvalidState("pure state: empty dims");
  for (std::size_t d : dims) {
    if (d == 0) throw InvalidState("pure state: zero factor dimension");
  }
  if (amplitudes.size() != total_dimension(dims)) {
    throw DimensionMismatch("pure state: " + std::to_string(amplitudes.size()) + " amplitudes for dims " +
                            dims_to_string(dims));
  }
  require_finite(amplitudes, "pure state");
  const double norm = std::sqrt(kernels::dotc(amplitudes, amplitudes).real());
  if (std::abs(norm - 1.0) > tol.norm) {
    throw InvalidState("pure state: norm " + std::to_string(norm) + " differs from 1");
  }
  QuantumState s;
  s.kind_ = Kind::pure;
  s.dims_ = std::move(dims);
  s.amplitudes_ = std::move(amplitudes);
  return s;
}

QuantumState QuantumState::mixed(ComplexMatrix density, const Tolerances& tol) {
  if (!density.is_hermitian(tol.norm)) throw InvalidState("density matrix is not Hermitian");
  const Complex tr = density.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > tol.norm) {
    throw InvalidState("density matrix trace " + std::to_string(tr.real()) + " differs from 1");
  }
  const auto n = static_cast<Eigen::Index>(density.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = density(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InvalidState("density matrix eigen-decomposition failed");
  if (solver.eigenvalues().minCoeff() < -tol.eigenvalue_floor) {
    throw InvalidState("density matrix has eigenvalue " + std::to_string(solver.eigenvalues().minCoeff()));
  }
  QuantumState s;
  s.kind_ = Kind::mixed;
  s.dims_ = density.dims();
  s.density_ = std::move(density);
  return s;
}

std::span<const Complex> QuantumState::amplitudes() const {
  if (kind_ != Kind::pure) throw std::logic_error("amplitudes() on a mixed state");
  return amplitudes_;
}

const ComplexMatrix& QuantumState::density() const {
  if (kind_ != Kind::mixed) throw std::logic_error("density() on a pure state");
  return density_;
}

ComplexMatrix QuantumState::to_density() const {
  if (kind_ == Kind::mixed) return density_;
  ComplexMatrix rho(dims_);
  const std::size_t n = amplitudes_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rho(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
  }
  return rho;
}

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
  if (a.is_pure() && b.is_pure()) {
    Dims dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    std::vector<Complex> amps;
    amps.reserve(a.dimension() * b.dimension());
    for (const Complex& x : a.amplitudes()) {
      for (const Complex& y : b.amplitudes()) amps.push_back(x * y);
    }
    return QuantumState::pure(std::move(dims), std::move(amps));
  }
  return QuantumState::mixed(kron(a.to_density(), b.to_density()));
}

Complex expectation(const ComplexMatrix& op, const QuantumState& state) {
  require_operator_on(op.dims(), state);
  if (state.is_pure()) {
    const auto w = matvec(op, state.amplitudes());
    return kernels::dotc(state.amplitudes(), w);
  }
  // tr(rho A) = sum_ij rho_ij A_ji = sum_ji conj(rho_ji) A_ji, using rho = rho^dagger.
  return kernels::dotc(state.density().entries(), op.entries());
}

double variance(const ComplexMatrix& op, const QuantumState& state, const Tolerances& tol) {
  require_operator_on(op.dims(), state);
  if (!op.is_hermitian(tol.hermitian)) throw NotHermitian("variance: operator is not Hermitian");
  if (state.is_pure()) {
    const auto w = matvec(op, state.amplitudes());
    const double mean = kernels::dotc(state.amplitudes(), w).real();
    return finish_variance(kernels::dotc(w, w).real(), mean, tol);
  }
  const double mean = expectation(op, state).real();
  return finish_variance(expectation(op * op, state).real(), mean, tol);
}

QuantumState mix(std::span<const QuantumState> states, std::span<const double> weights, const Tolerances& tol) {
  if (states.empty()) throw InvalidState("mix: no states");
  if (states.size() != weights.size()) throw DimensionMismatch("mix: states and weights differ in length");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw InvalidState("mix: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol.norm) throw InvalidState("mix: weights sum to " + std::to_string(sum));
  ComplexMatrix rho(states.front().dims());
  for (std::size_t k = 0; k < states.size(); ++k) {
    require_same_dims(states[k].dims(), rho.dims(), "mix");
    if (weights[k] == 0.0) continue;
    const ComplexMatrix part = states[k].to_density();
    kernels::axpy(Complex{weights[k], 0.0}, part.entries(), rho.entries());
  }
  return QuantumState::mixed(std::move(rho), tol);
}

// ---------------------------------------------------------------------------
// ProductOperator / OperatorSum

ProductOperator::ProductOperator(std::vector<ComplexMatrix> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("ProductOperator: no factors");
  for (const ComplexMatrix& f : factors_) {
    if (f.dims().size() != 1) throw DimensionMismatch("ProductOperator: factors must act on a single subsystem");
  }
}

Dims ProductOperator::dims() const {
  Dims out;
  for (const ComplexMatrix& f : factors_) out.push_back(f.size());
  return out;
}

ComplexMatrix ProductOperator::to_matrix() const {
  ComplexMatrix m = factors_.front();
  for (std::size_t k = 1; k < factors_.size(); ++k) m = kron(m, factors_[k]);
  return m;
}

ProductOperator ProductOperator::adjoint() const {
  std::vector<ComplexMatrix> out;
  out.reserve(factors_.size());
  for (const ComplexMatrix& f : factors_) out.push_back(f.adjoint());
  return ProductOperator(std::move(out));
}

bool ProductOperator::is_hermitian(double tol) const {
  return std::all_of(factors_.begin(), factors_.end(), [tol](const ComplexMatrix& f) { return f.is_hermitian(tol); });
}

ProductOperator operator*(const ProductOperator& lhs, const ProductOperator& rhs) {
  require_same_dims(lhs.dims(), rhs.dims(), "product operator multiplication");
  std::vector<ComplexMatrix> out;
  out.reserve(lhs.arity());
  for (std::size_t k = 0; k < lhs.arity(); ++k) out.push_back(lhs.factors()[k] * rhs.factors()[k]);
  return ProductOperator(std::move(out));
}

ComplexMatrix OperatorSum::to_matrix() const {
  if (terms_.empty()) throw std::logic_error("OperatorSum::to_matrix on an empty sum");
  ComplexMatrix m(terms_.front().second.to_matrix().dims());
  for (const auto& [coef, op] : terms_) kernels::axpy(coef, op.to_matrix().entries(), m.entries());
  return m;
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

OperatorSum& OperatorSum::operator-=(const OperatorSum& other) {
  for (const auto& [coef, op] : other.terms_) terms_.emplace_back(-coef, op);
  return *this;
}

OperatorSum& OperatorSum::operator*=(Complex scale) {
  for (auto& term : terms_) term.first *= scale;
  return *this;
}

OperatorSum operator*(const OperatorSum& lhs, const OperatorSum& rhs) {
  OperatorSum out;
  for (const auto& [c1, p1] : lhs.terms()) {
    for (const auto& [c2, p2] : rhs.terms()) out += OperatorSum{{c1 * c2, p1 * p2}};
  }
  return out;
}

OperatorSum power(const OperatorSum& op, unsigned exponent) {
  if (op.terms().empty()) throw std::invalid_argument("power of an empty operator sum");
  if (exponent == 0) {
    std::vector<ComplexMatrix> ids;
    for (std::size_t d : op.terms().front().second.dims()) ids.push_back(ComplexMatrix::identity({d}));
    return OperatorSum(ProductOperator(std::move(ids)));
  }
  OperatorSum result = op;
  for (unsigned k = 1; k < exponent; ++k) result = result * op;
  return result;
}

Complex expectation(const ProductOperator& op, const QuantumState& state) {
  require_operator_on(op.dims(), state);
  if (state.is_pure()) {
    std::vector<Complex> w(state.amplitudes().begin(), state.amplitudes().end());
    apply_product(op, state.dims(), 1, w);
    return kernels::dotc(state.amplitudes(), w);
  }
  const ComplexMatrix& rho = state.density();
  std::vector<Complex> w(rho.entries().begin(), rho.entries().end());
  apply_product(op, state.dims(), rho.size(), w);
  Complex tr{};
  for (std::size_t i = 0; i < rho.size(); ++i) tr += w[i * rho.size() + i];
  return tr;
}

Complex expectation(const OperatorSum& op, const QuantumState& state) {
  Complex total{};
  for (const auto& [coef, term] : op.terms()) total += coef * expectation(term, state);
  return total;
}

double variance(const ProductOperator& op, const QuantumState& state, const Tolerances& tol) {
  require_operator_on(op.dims(), state);
  if (!op.is_hermitian(tol.hermitian)) throw NotHermitian("variance: product operator has a non-Hermitian factor");
  if (state.is_pure()) {
    std::vector<Complex> w(state.amplitudes().begin(), state.amplitudes().end());
    apply_product(op, state.dims(), 1, w);
    const double mean = kernels::dotc(state.amplitudes(), w).real();
    return finish_variance(kernels::dotc(w, w).real(), mean, tol);
  }
  const double mean = expectation(op, state).real();
  return finish_variance(expectation(op * op, state).real(), mean, tol);
}

}  // namespace entwit
