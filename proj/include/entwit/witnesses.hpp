#pragma once

// Entanglement conditions: inequalities that every separable state satisfies.
// Each evaluation returns a WitnessReport whose delta is positive exactly when
// the state violates the condition (which certifies entanglement).

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "entwit/hilbert.hpp"

namespace entwit {

struct WitnessReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double delta = 0.0;
  // Violation ratio (commutator bound over the dispersion product); only for
  // variance_product and multipartite, absent when the denominator vanishes.
  std::optional<double> ratio;
  bool violated = false;
  // Intermediate expectation values, enough to recompute lhs and rhs.
  std::map<std::string, double> details;
};

struct WitnessOptions {
  double tolerance = 1e-9;
  // Denominators below this leave the ratio undefined.
  double ratio_guard = 1e-12;
  Tolerances hilbert;
};

// A, A' act on the first factor, B, B' on the second.
struct OperatorQuadruple {
  ComplexMatrix a;
  ComplexMatrix a_prime;
  ComplexMatrix b;
  ComplexMatrix b_prime;
};

// sigma_AB sigma_A'B' >= |<[A,A'] (x) [B,B']>| / 4
WitnessReport variance_product(const OperatorQuadruple& ops, const QuantumState& state, const WitnessOptions& opt = {});

// sigma^2_AB + sigma^2_A'B' >= |<[A,A'] (x) [B,B']>| / 2
WitnessReport variance_sum(const OperatorQuadruple& ops, const QuantumState& state, const WitnessOptions& opt = {});

// sigma_{A1..An} sigma_{A'1..A'n} >= |<[A1,A'1] (x) ... (x) [An,A'n]>| / 2^n
// Operator k acts on factor k of the state.
WitnessReport multipartite(std::span<const ComplexMatrix> as, std::span<const ComplexMatrix> a_primes,
                           const QuantumState& state, const WitnessOptions& opt = {});

// Ramanujan-identity condition for power 2 or 4:
//   <AB+AB'+A'B>^n + <AB'+A'B+A'B'>^n + <AB-A'B'>^n
//     <= <(AB'-A'B)^n> + <(A'B+A'B'+AB)^n> + <(A'B'+AB+AB')^n>
WitnessReport ramanujan_witness(const OperatorQuadruple& ops, const QuantumState& state, unsigned exponent,
                                const WitnessOptions& opt = {});

// <AB - A'B'>^2 + <AB' + A'B>^2 <= <(A^2 + A'^2) (x) (B^2 + B'^2)>
WitnessReport uffink(const OperatorQuadruple& ops, const QuantumState& state, const WitnessOptions& opt = {});

// sigma^2_AB + sigma^2_AB' + sigma^2_A'B + sigma^2_A'B' >= |<[A,A'] (x) [B,B']>|
WitnessReport four_variance(const OperatorQuadruple& ops, const QuantumState& state, const WitnessOptions& opt = {});

// |<[A (x) B, A' (x) B']>| / 2, the Robertson lower bound on sigma_AB sigma_A'B'
// that holds for every state. Exposed for comparison only; nothing is pruned on it.
double heisenberg_floor(const OperatorQuadruple& ops, const QuantumState& state, const WitnessOptions& opt = {});

// Rotated-spin operators at angles theta = -arg(alpha), eta = arg(beta),
// theta' = theta + pi/2, eta' = eta + pi/2, evaluated with variance_product on
// alpha|00> + beta|11>.
struct SchmidtWitness {
  OperatorQuadruple operators;
  double theta = 0.0;
  double theta_prime = 0.0;
  double eta = 0.0;
  double eta_prime = 0.0;
  WitnessReport report;
};

SchmidtWitness schmidt_optimal_witness(Complex alpha, Complex beta, const WitnessOptions& opt = {});

// Uniform dispatch used by the command-line front end.
enum class Condition { variance_product, variance_sum, multipartite, ramanujan, uffink, four_variance };

// Accepts the enum spellings above; throws std::invalid_argument otherwise.
Condition parse_condition(std::string_view name);
std::string_view condition_name(Condition c);

}  // namespace entwit
