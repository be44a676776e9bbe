#pragma once

// Quadratic form of the dispersion product on Fock-pair superpositions, its
// tridiagonal matrix, and the scans that turn its spectrum into violation values.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace entwit {

// Real symmetric tridiagonal matrix; offdiag[n] couples rows n and n+1.
struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t size() const { return diag.size(); }
  double max_abs() const;
  std::vector<double> apply(std::span<const double> v) const;
};

struct Eigenpair {
  double value = 0.0;
  // Unit norm, first nonzero component positive.
  std::vector<double> vector;
};

struct ScanResult {
  std::vector<double> grid;
  std::vector<double> values;
  double argbest = 0.0;
  double best = 0.0;
};

// diag[n] = 2n(2n+1), offdiag[n] = -(n+1)(2n+1)/2 for n = 0..N.
TridiagonalMatrix c_matrix(std::size_t n_max);

// sum_n 2n(2n+1) c_n^2 - (n+1)(2n+1) c_n c_{n+1}, evaluated term by term.
double quadratic_form(std::span<const double> coeffs);

// Number of eigenvalues strictly below x (Sturm sequence sign count).
std::size_t count_eigenvalues_below(const TridiagonalMatrix& m, double x);

// Smallest eigenvalue by Sturm bisection to width tol, eigenvector by inverse iteration,
// value polished by the Rayleigh quotient when it stays inside the bracket.
Eigenpair min_eigenvalue(const TridiagonalMatrix& m, double tol = 1e-10);

// (1/4) / (1/4 + p lambda_min); throws std::domain_error when the denominator is not positive.
double vmax_from_lambda(double lambda_min, double p = 1.0);

// Violation of the two-term state c0|00> + c1|22>, c1 = sqrt(1 - c0^2).
double psi2_objective(double c0);

// Uniform interior grid over c0 in (0, 1), then golden-section refinement of
// the best bracket to 1e-6. The refined optimum is merged into grid/values.
ScanResult psi2_scan(std::size_t grid_size);

// lambda_min(C_N) for each N, evaluated concurrently and returned in input order.
// The default bisection width is tight enough to resolve the monotone approach
// to the limit, whose successive steps shrink below 1e-10.
std::vector<std::pair<std::size_t, double>> convergence_study(std::span<const std::size_t> sizes, double tol = 1e-14);

}  // namespace entwit
