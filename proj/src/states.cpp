#include "entwit/states.hpp"

#include <cmath>
#include <string>

#include "entwit/error.hpp"

namespace entwit {
namespace {

constexpr double kNormTol = 1e-12;
constexpr double kTailBound = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

QuantumState fock_pair_superposition(std::span<const double> coeffs, std::size_t cutoff) {
  if (coeffs.empty()) throw InvalidState("fock_pair_superposition: no coefficients");
  double norm2 = 0.0;
  for (double c : coeffs) norm2 += c * c;
  if (std::abs(std::sqrt(norm2) - 1.0) > kNormTol) {
    throw InvalidState("fock_pair_superposition: coefficient norm " + std::to_string(std::sqrt(norm2)) + " != 1");
  }
  const std::size_t top = 2 * (coeffs.size() - 1);
  if (top + 1 > cutoff) {
    throw InvalidState("fock_pair_superposition: cutoff " + std::to_string(cutoff) + " cannot hold level " +
                       std::to_string(top));
  }
  std::vector<Complex> amps(cutoff * cutoff);
  for (std::size_t n = 0; n < coeffs.size(); ++n) amps[(2 * n) * cutoff + 2 * n] = coeffs[n];
  return QuantumState::pure({cutoff, cutoff}, std::move(amps));
}

std::vector<double> psi2_coefficients(double c0) {
  if (!(c0 >= 0.0 && c0 <= 1.0)) throw InvalidState("psi2: c0 must lie in [0, 1]");
  return {c0, std::sqrt(1.0 - c0 * c0)};
}

QuantumState vacuum_mixture(double p, std::span<const double> coeffs, std::size_t cutoff) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidState("vacuum_mixture: p must lie in [0, 1]");
  const QuantumState psi = fock_pair_superposition(coeffs, cutoff);
  const double one[] = {1.0};
  const QuantumState vacuum = fock_pair_superposition(one, cutoff);
  const QuantumState parts[] = {psi, vacuum};
  const double weights[] = {p, 1.0 - p};
  return mix(parts, weights);
}

std::size_t squeezed_cutoff(double lambda) {
  if (!(std::abs(lambda) < 1.0)) throw InvalidState("squeezed: |lambda| must be below 1");
  std::size_t d = 2;
  while (std::pow(std::abs(lambda), 2.0 * static_cast<double>(d)) >= kTailBound) d += 2;
  return d;
}

std::size_t fock_pair_cutoff(std::size_t num_coeffs) {
  if (num_coeffs == 0) throw InvalidState("fock_pair: no coefficients");
  return 2 * (num_coeffs - 1) + 4;
}

QuantumState squeezed_vacuum(double lambda, std::size_t cutoff) {
  if (!(std::abs(lambda) < 1.0)) throw InvalidState("squeezed: |lambda| must be below 1");
  if (cutoff < 1) throw InvalidState("squeezed: cutoff must be positive");
  if (std::pow(std::abs(lambda), 2.0 * static_cast<double>(cutoff)) >= kTailBound) {
    throw InvalidState("squeezed: cutoff " + std::to_string(cutoff) + " leaves a truncation tail above 1e-12");
  }
  std::vector<Complex> amps(cutoff * cutoff);
  const double scale = std::sqrt(1.0 - lambda * lambda);
  double power = 1.0;
  double norm2 = 0.0;
  for (std::size_t n = 0; n < cutoff; ++n) {
    amps[n * cutoff + n] = scale * power;
    norm2 += scale * power * scale * power;
    power *= lambda;
  }
  const double renorm = 1.0 / std::sqrt(norm2);
  for (Complex& a : amps) a *= renorm;
  return QuantumState::pure({cutoff, cutoff}, std::move(amps));
}

QuantumState bell(std::size_t parties) {
  if (parties < 2) throw InvalidState("bell: needs at least two parties");
  if (parties > 24) throw InvalidState("bell: too many parties for a dense state vector");
  const std::size_t dim = std::size_t{1} << parties;
  std::vector<Complex> amps(dim);
  amps.front() = 1.0 / std::sqrt(2.0);
  amps.back() = 1.0 / std::sqrt(2.0);
  return QuantumState::pure(Dims(parties, 2), std::move(amps));
}

QuantumState schmidt_pair(Complex alpha, Complex beta) {
  const double norm2 = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm2 - 1.0) > kNormTol) {
    throw InvalidState("schmidt_pair: |alpha|^2 + |beta|^2 = " + std::to_string(norm2) + " != 1");
  }
  return QuantumState::pure({2, 2}, {alpha, 0.0, 0.0, beta});
}

std::string_view family_name(const StateSpec& spec) {
  return std::visit(Overloaded{
                        [](const FockPairParams&) { return std::string_view("fock_pair"); },
                        [](const Psi2Params&) { return std::string_view("psi2"); },
                        [](const VacuumMixtureParams&) { return std::string_view("vacuum_mixture"); },
                        [](const SqueezedParams&) { return std::string_view("squeezed"); },
                        [](const BellParams&) { return std::string_view("bell"); },
                        [](const SchmidtParams&) { return std::string_view("schmidt"); },
                    },
                    spec.params);
}

std::optional<std::size_t> resolved_cutoff(const StateSpec& spec) {
  return std::visit(Overloaded{
                        [&](const FockPairParams& p) -> std::optional<std::size_t> {
                          return spec.cutoff.value_or(fock_pair_cutoff(p.coeffs.size()));
                        },
                        [&](const Psi2Params&) -> std::optional<std::size_t> {
                          return spec.cutoff.value_or(fock_pair_cutoff(2));
                        },
                        [&](const VacuumMixtureParams& p) -> std::optional<std::size_t> {
                          return spec.cutoff.value_or(fock_pair_cutoff(p.coeffs.size()));
                        },
                        [&](const SqueezedParams& p) -> std::optional<std::size_t> {
                          return spec.cutoff.value_or(squeezed_cutoff(p.lambda));
                        },
                        [](const BellParams&) -> std::optional<std::size_t> { return std::nullopt; },
                        [](const SchmidtParams&) -> std::optional<std::size_t> { return std::nullopt; },
                    },
                    spec.params);
}

QuantumState build_state(const StateSpec& spec) {
  const auto cutoff = resolved_cutoff(spec);
  return std::visit(Overloaded{
                        [&](const FockPairParams& p) { return fock_pair_superposition(p.coeffs, *cutoff); },
                        [&](const Psi2Params& p) { return fock_pair_superposition(psi2_coefficients(p.c0), *cutoff); },
                        [&](const VacuumMixtureParams& p) { return vacuum_mixture(p.p, p.coeffs, *cutoff); },
                        [&](const SqueezedParams& p) { return squeezed_vacuum(p.lambda, *cutoff); },
                        [](const BellParams& p) { return bell(p.parties); },
                        [](const SchmidtParams& p) { return schmidt_pair(p.alpha, p.beta); },
                    },
                    spec.params);
}

}  // namespace entwit
