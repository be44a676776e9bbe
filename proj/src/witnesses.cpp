#include "entwit/witnesses.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "entwit/error.hpp"
#include "entwit/operators.hpp"
#include "entwit/states.hpp"

namespace entwit {
namespace {

void require_bipartite(const OperatorQuadruple& ops, const QuantumState& state, const WitnessOptions& opt) {
  if (state.dims().size() != 2) {
    throw DimensionMismatch("bipartite condition needs a two-factor state, got " +
                            std::to_string(state.dims().size()) + " factors");
  }
  const Dims da{state.dims()[0]};
  const Dims db{state.dims()[1]};
  const std::pair<const ComplexMatrix*, const Dims*> checks[] = {
      {&ops.a, &da}, {&ops.a_prime, &da}, {&ops.b, &db}, {&ops.b_prime, &db}};
  for (const auto& [m, d] : checks) {
    if (m->dims() != *d) throw DimensionMismatch("operator does not act on its factor of the state");
    if (!m->is_hermitian(opt.hilbert.hermitian)) throw NotHermitian("witness operators must be Hermitian");
  }
}

ProductOperator lift(const ComplexMatrix& a, const ComplexMatrix& b) { return ProductOperator({a, b}); }

void finish(WitnessReport& r, const WitnessOptions& opt) { r.violated = r.delta > opt.tolerance; }

// <[A,A'] (x) [B,B']>, stored in the details map as well.
Complex commutator_product(const OperatorQuadruple& ops, const QuantumState& state, WitnessReport& r) {
  const Complex c = expectation(lift(commutator(ops.a, ops.a_prime), commutator(ops.b, ops.b_prime)), state);
  r.details["re<[A,A'][B,B']>"] = c.real();
  r.details["im<[A,A'][B,B']>"] = c.imag();
  return c;
}

double real_expectation(const OperatorSum& op, const QuantumState& state) { return expectation(op, state).real(); }

}  // namespace

WitnessReport variance_product(const OperatorQuadruple& ops, const QuantumState& state, const WitnessOptions& opt) {
  require_bipartite(ops, state, opt);
  WitnessReport r;
  r.name = "variance_product";
  const ProductOperator ab = lift(ops.a, ops.b);
  const ProductOperator apbp = lift(ops.a_prime, ops.b_prime);
  const double s1 = std::sqrt(variance(ab, state, opt.hilbert));
  const double s2 = std::sqrt(variance(apbp, state, opt.hilbert));
  r.details["<AB>"] = expectation(ab, state).real();
  r.details["<A'B'>"] = expectation(apbp, state).real();
  r.details["sigma_AB"] = s1;
  r.details["sigma_A'B'"] = s2;
  r.lhs = s1 * s2;
  r.rhs = 0.25 * std::abs(commutator_product(ops, state, r));
  r.delta = r.rhs - r.lhs;
  if (r.lhs >= opt.ratio_guard) r.ratio = r.rhs / r.lhs;
  finish(r, opt);
  return r;
}

WitnessReport variance_sum(const OperatorQuadruple& ops, const QuantumState& state, const WitnessOptions& opt) {
  require_bipartite(ops, state, opt);
  WitnessReport r;
  r.name = "variance_sum";
  const ProductOperator ab = lift(ops.a, ops.b);
  const ProductOperator apbp = lift(ops.a_prime, ops.b_prime);
  const double v1 = variance(ab, state, opt.hilbert);
  const double v2 = variance(apbp, state, opt.hilbert);
  r.details["<AB>"] = expectation(ab, state).real();
  r.details["<A'B'>"] = expectation(apbp, state).real();
  r.details["var_AB"] = v1;
  r.details["var_A'B'"] = v2;
  r.lhs = v1 + v2;
  r.rhs = 0.5 * std::abs(commutator_product(ops, state, r));
  r.delta = r.rhs - r.lhs;
  finish(r, opt);
  return r;
}

WitnessReport multipartite(std::span<const ComplexMatrix> as, std::span<const ComplexMatrix> a_primes,
                           const QuantumState& state, const WitnessOptions& opt) {
  const std::size_t n = state.dims().size();
  if (n < 2) throw DimensionMismatch("multipartite condition needs at least two factors");
  if (as.size() != n || a_primes.size() != n) {
    throw DimensionMismatch("multipartite: expected " + std::to_string(n) + " operators per list, got " +
                            std::to_string(as.size()) + " and " + std::to_string(a_primes.size()));
  }
  std::vector<ComplexMatrix> commutators;
  for (std::size_t k = 0; k < n; ++k) {
    for (const ComplexMatrix* m : {&as[k], &a_primes[k]}) {
      if (m->dims() != Dims{state.dims()[k]}) throw DimensionMismatch("multipartite: operator/factor mismatch");
      if (!m->is_hermitian(opt.hilbert.hermitian)) throw NotHermitian("witness operators must be Hermitian");
    }
    commutators.push_back(commutator(as[k], a_primes[k]));
  }
  WitnessReport r;
  r.name = "multipartite";
  const ProductOperator all_a(std::vector<ComplexMatrix>(as.begin(), as.end()));
  const ProductOperator all_ap(std::vector<ComplexMatrix>(a_primes.begin(), a_primes.end()));
  const double s1 = std::sqrt(variance(all_a, state, opt.hilbert));
  const double s2 = std::sqrt(variance(all_ap, state, opt.hilbert));
  const Complex c = expectation(ProductOperator(std::move(commutators)), state);
  r.details["<A1..An>"] = expectation(all_a, state).real();
  r.details["<A'1..A'n>"] = expectation(all_ap, state).real();
  r.details["sigma_A1..An"] = s1;
  r.details["sigma_A'1..A'n"] = s2;
  r.details["re<prod [Ak,A'k]>"] = c.real();
  r.details["im<prod [Ak,A'k]>"] = c.imag();
  r.lhs = s1 * s2;
  r.rhs = std::abs(c) / std::ldexp(1.0, static_cast<int>(n));
  r.delta = r.rhs - r.lhs;
  if (r.lhs >= opt.ratio_guard) r.ratio = r.rhs / r.lhs;
  finish(r, opt);
  return r;
}

WitnessReport ramanujan_witness(const OperatorQuadruple& ops, const QuantumState& state, unsigned exponent,
                                const WitnessOptions& opt) {
  if (exponent != 2 && exponent != 4) throw std::invalid_argument("ramanujan condition holds only for power 2 or 4");
  require_bipartite(ops, state, opt);
  const OperatorSum ab = lift(ops.a, ops.b);
  const OperatorSum abp = lift(ops.a, ops.b_prime);
  const OperatorSum apb = lift(ops.a_prime, ops.b);
  const OperatorSum apbp = lift(ops.a_prime, ops.b_prime);

  WitnessReport r;
  r.name = "ramanujan_" + std::to_string(exponent);
  r.details["<AB>"] = real_expectation(ab, state);
  r.details["<AB'>"] = real_expectation(abp, state);
  r.details["<A'B>"] = real_expectation(apb, state);
  r.details["<A'B'>"] = real_expectation(apbp, state);

  const double e_ab = r.details["<AB>"];
  const double e_abp = r.details["<AB'>"];
  const double e_apb = r.details["<A'B>"];
  const double e_apbp = r.details["<A'B'>"];
  const double n = exponent;
  r.lhs = std::pow(e_ab + e_abp + e_apb, n) + std::pow(e_abp + e_apb + e_apbp, n) + std::pow(e_ab - e_apbp, n);

  const double r1 = real_expectation(power(abp - apb, exponent), state);
  const double r2 = real_expectation(power(apb + apbp + ab, exponent), state);
  const double r3 = real_expectation(power(apbp + ab + abp, exponent), state);
  r.details["<(AB'-A'B)^n>"] = r1;
  r.details["<(A'B+A'B'+AB)^n>"] = r2;
  r.details["<(A'B'+AB+AB')^n>"] = r3;
  r.rhs = r1 + r2 + r3;
  r.delta = r.lhs - r.rhs;
  finish(r, opt);
  return r;
}

WitnessReport uffink(const OperatorQuadruple& ops, const QuantumState& state, const WitnessOptions& opt) {
  require_bipartite(ops, state, opt);
  WitnessReport r;
  r.name = "uffink";
  const OperatorSum ab = lift(ops.a, ops.b);
  const OperatorSum abp = lift(ops.a, ops.b_prime);
  const OperatorSum apb = lift(ops.a_prime, ops.b);
  const OperatorSum apbp = lift(ops.a_prime, ops.b_prime);
  r.details["<AB>"] = real_expectation(ab, state);
  r.details["<AB'>"] = real_expectation(abp, state);
  r.details["<A'B>"] = real_expectation(apb, state);
  r.details["<A'B'>"] = real_expectation(apbp, state);
  const double u = r.details["<AB>"] - r.details["<A'B'>"];
  const double v = r.details["<AB'>"] + r.details["<A'B>"];
  r.lhs = u * u + v * v;
  const ComplexMatrix sa = ops.a * ops.a + ops.a_prime * ops.a_prime;
  const ComplexMatrix sb = ops.b * ops.b + ops.b_prime * ops.b_prime;
  r.rhs = expectation(lift(sa, sb), state).real();
  r.details["<(A^2+A'^2)(B^2+B'^2)>"] = r.rhs;
  r.delta = r.lhs - r.rhs;
  finish(r, opt);
  return r;
}

WitnessReport four_variance(const OperatorQuadruple& ops, const QuantumState& state, const WitnessOptions& opt) {
  require_bipartite(ops, state, opt);
  WitnessReport r;
  r.name = "four_variance";
  const std::pair<const char*, ProductOperator> terms[] = {
      {"AB", lift(ops.a, ops.b)},
      {"AB'", lift(ops.a, ops.b_prime)},
      {"A'B", lift(ops.a_prime, ops.b)},
      {"A'B'", lift(ops.a_prime, ops.b_prime)},
  };
  r.lhs = 0.0;
  for (const auto& [label, op] : terms) {
    const double v = variance(op, state, opt.hilbert);
    r.details[std::string("<") + label + ">"] = expectation(op, state).real();
    r.details[std::string("var_") + label] = v;
    r.lhs += v;
  }
  r.rhs = std::abs(commutator_product(ops, state, r));
  r.delta = r.rhs - r.lhs;
  finish(r, opt);
  return r;
}

double heisenberg_floor(const OperatorQuadruple& ops, const QuantumState& state, const WitnessOptions& opt) {
  require_bipartite(ops, state, opt);
  const OperatorSum ab = lift(ops.a, ops.b);
  const OperatorSum apbp = lift(ops.a_prime, ops.b_prime);
  return 0.5 * std::abs(expectation(ab * apbp - apbp * ab, state));
}

SchmidtWitness schmidt_optimal_witness(Complex alpha, Complex beta, const WitnessOptions& opt) {
  const QuantumState state = schmidt_pair(alpha, beta);
  SchmidtWitness w;
  w.theta = -std::arg(alpha);
  w.eta = std::arg(beta);
  w.theta_prime = w.theta + std::numbers::pi / 2;
  w.eta_prime = w.eta + std::numbers::pi / 2;
  w.operators = {rotated_spin(w.theta), rotated_spin(w.theta_prime), rotated_spin(w.eta), rotated_spin(w.eta_prime)};
  w.report = variance_product(w.operators, state, opt);
  w.report.name = "schmidt_optimal";
  return w;
}

Condition parse_condition(std::string_view name) {
  if (name == "variance_product") return Condition::variance_product;
  if (name == "variance_sum") return Condition::variance_sum;
  if (name == "multipartite") return Condition::multipartite;
  if (name == "ramanujan") return Condition::ramanujan;
  if (name == "uffink") return Condition::uffink;
  if (name == "four_variance") return Condition::four_variance;
  throw std::invalid_argument("unknown condition '" + std::string(name) + "'");
}

std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::variance_product:
      return "variance_product";
    case Condition::variance_sum:
      return "variance_sum";
    case Condition::multipartite:
      return "multipartite";
    case Condition::ramanujan:
      return "ramanujan";
    case Condition::uffink:
      return "uffink";
    case Condition::four_variance:
      return "four_variance";
  }
  return "unknown";
}

}  // namespace entwit
