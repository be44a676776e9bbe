#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "entwit/hilbert.hpp"

namespace entwit {

// sum_n c_n |2n, 2n> on two modes with cutoff D; needs |c| = 1 and 2N + 1 <= D.
QuantumState fock_pair_superposition(std::span<const double> coeffs, std::size_t cutoff);

// (c0, sqrt(1 - c0^2)), the two-term truncation c0|00> + c1|22>.
std::vector<double> psi2_coefficients(double c0);

// p |psi><psi| + (1 - p)|00><00| with |psi> from fock_pair_superposition.
QuantumState vacuum_mixture(double p, std::span<const double> coeffs, std::size_t cutoff);

// sqrt(1 - lambda^2) sum_n lambda^n |n, n>, truncated at the cutoff and renormalized.
// The cutoff must leave a tail lambda^(2D) below 1e-12.
QuantumState squeezed_vacuum(double lambda, std::size_t cutoff);

// Smallest even cutoff D >= 2 with lambda^(2D) < 1e-12.
std::size_t squeezed_cutoff(double lambda);
// Cutoff 2N + 4 for a Fock-pair superposition with N + 1 coefficients: large
// enough that x^2 and p^2 never reach the truncated top level.
std::size_t fock_pair_cutoff(std::size_t num_coeffs);

// (|0...0> + |1...1>)/sqrt(2) on n >= 2 qubits.
QuantumState bell(std::size_t parties);

// alpha|00> + beta|11>; |alpha|^2 + |beta|^2 = 1.
QuantumState schmidt_pair(Complex alpha, Complex beta);

// Declarative description of one of the state families above.
struct FockPairParams {
  std::vector<double> coeffs;
};
struct Psi2Params {
  double c0 = 1.0;
};
struct VacuumMixtureParams {
  double p = 0.0;
  std::vector<double> coeffs;
};
struct SqueezedParams {
  double lambda = 0.0;
};
struct BellParams {
  std::size_t parties = 2;
};
struct SchmidtParams {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};
};

using StateParams =
    std::variant<FockPairParams, Psi2Params, VacuumMixtureParams, SqueezedParams, BellParams, SchmidtParams>;

struct StateSpec {
  StateParams params;
  // Fock cutoff for the bosonic families; the family default is used when absent.
  std::optional<std::size_t> cutoff;
};

// "fock_pair", "psi2", "vacuum_mixture", "squeezed", "bell" or "schmidt".
std::string_view family_name(const StateSpec& spec);
// Effective cutoff (explicit or family default); nullopt for qubit families.
std::optional<std::size_t> resolved_cutoff(const StateSpec& spec);
QuantumState build_state(const StateSpec& spec);

}  // namespace entwit
