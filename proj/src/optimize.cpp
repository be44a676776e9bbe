#include "entwit/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>
#include <string>

namespace entwit {
namespace {

// Banded LU with partial pivoting of a general tridiagonal matrix (the
// LAPACK gttrf/gtts2 scheme). Row swaps introduce a second superdiagonal.
class TridiagonalLU {
 public:
  TridiagonalLU(std::vector<double> sub, std::vector<double> diag, std::vector<double> super, double pivot_floor)
      : dl_(std::move(sub)), d_(std::move(diag)), du_(std::move(super)), ipiv_(d_.size()) {
    const std::size_t n = d_.size();
    du2_.assign(n > 2 ? n - 2 : 0, 0.0);
    for (std::size_t i = 0; i < n; ++i) ipiv_[i] = i;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (d_[i] != 0.0) {
          const double fact = dl_[i] / d_[i];
          dl_[i] = fact;
          d_[i + 1] -= fact * du_[i];
        }
      } else {
        const double fact = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = fact;
        const double temp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = temp - fact * d_[i + 1];
        if (i + 2 < n) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -fact * du_[i + 1];
        }
        ipiv_[i] = i + 1;
      }
    }
    // Exact singularity only happens when the shift hits the eigenvalue; nudge it.
    for (double& p : d_) {
      if (std::abs(p) < pivot_floor) p = std::copysign(pivot_floor, p == 0.0 ? 1.0 : p);
    }
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = d_.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (ipiv_[i] == i) {
        b[i + 1] -= dl_[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl_[i] * b[i];
      }
    }
    b[n - 1] /= d_[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
    for (std::size_t k = n; k-- > 2;) {
      const std::size_t i = k - 2;
      b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
    }
  }

 private:
  std::vector<double> dl_;
  std::vector<double> d_;
  std::vector<double> du_;
  std::vector<double> du2_;
  std::vector<std::size_t> ipiv_;
};

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double residual_inf(const TridiagonalMatrix& m, std::span<const double> v, double lambda) {
  const auto mv = m.apply(v);
  double r = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) r = std::max(r, std::abs(mv[i] - lambda * v[i]));
  return r;
}

void validate(const TridiagonalMatrix& m) {
  if (m.diag.empty()) throw std::invalid_argument("tridiagonal matrix is empty");
  if (m.offdiag.size() + 1 != m.diag.size()) throw std::invalid_argument("tridiagonal: offdiag must have size n-1");
  for (double x : m.diag) {
    if (!std::isfinite(x)) throw std::invalid_argument("tridiagonal: non-finite entry");
  }
  for (double x : m.offdiag) {
    if (!std::isfinite(x)) throw std::invalid_argument("tridiagonal: non-finite entry");
  }
}

}  // namespace

double TridiagonalMatrix::max_abs() const {
  double best = 0.0;
  for (double x : diag) best = std::max(best, std::abs(x));
  for (double x : offdiag) best = std::max(best, std::abs(x));
  return best;
}

std::vector<double> TridiagonalMatrix::apply(std::span<const double> v) const {
  const std::size_t n = diag.size();
  if (v.size() != n) throw std::invalid_argument("tridiagonal apply: length mismatch");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = diag[i] * v[i];
    if (i > 0) s += offdiag[i - 1] * v[i - 1];
    if (i + 1 < n) s += offdiag[i] * v[i + 1];
    out[i] = s;
  }
  return out;
}

TridiagonalMatrix c_matrix(std::size_t n_max) {
  TridiagonalMatrix m;
  m.diag.resize(n_max + 1);
  m.offdiag.resize(n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const double k = static_cast<double>(n);
    m.diag[n] = 2.0 * k * (2.0 * k + 1.0);
    if (n < n_max) m.offdiag[n] = -(k + 1.0) * (2.0 * k + 1.0) / 2.0;
  }
  return m;
}

double quadratic_form(std::span<const double> coeffs) {
  double q = 0.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const double k = static_cast<double>(n);
    q += 2.0 * k * (2.0 * k + 1.0) * coeffs[n] * coeffs[n];
    if (n + 1 < coeffs.size()) q -= (k + 1.0) * (2.0 * k + 1.0) * coeffs[n] * coeffs[n + 1];
  }
  return q;
}

std::size_t count_eigenvalues_below(const TridiagonalMatrix& m, double x) {
  double max_e2 = 1.0;
  for (double e : m.offdiag) max_e2 = std::max(max_e2, e * e);
  const double pivmin = std::numeric_limits<double>::min() * max_e2;
  std::size_t count = 0;
  double q = m.diag[0] - x;
  for (std::size_t i = 0;; ++i) {
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    if (i + 1 == m.diag.size()) break;
    q = (m.diag[i + 1] - x) - m.offdiag[i] * m.offdiag[i] / q;
  }
  return count;
}

Eigenpair min_eigenvalue(const TridiagonalMatrix& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("min_eigenvalue: tol must be positive");
  validate(m);
  const std::size_t n = m.size();

  // Gershgorin interval.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(m.offdiag[i - 1]);
    if (i + 1 < n) radius += std::abs(m.offdiag[i]);
    lo = std::min(lo, m.diag[i] - radius);
    hi = std::max(hi, m.diag[i] + radius);
  }
  lo -= tol;
  hi += tol;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_eigenvalues_below(m, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  Eigenpair out;
  out.value = 0.5 * (lo + hi);

  if (n == 1) {
    out.vector = {1.0};
    return out;
  }

  const double scale = std::max(m.max_abs(), 1.0);
  const double shift = out.value - 1e-12;
  std::vector<double> sub = m.offdiag;
  std::vector<double> super = m.offdiag;
  std::vector<double> diag = m.diag;
  for (double& d : diag) d -= shift;
  const TridiagonalLU lu(std::move(sub), std::move(diag), std::move(super),
                         std::numeric_limits<double>::epsilon() * scale);

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double best_residual = std::numeric_limits<double>::infinity();
  std::vector<double> best = v;
  for (int iter = 0; iter < 8; ++iter) {
    lu.solve(v);
    const double nv = norm2(v);
    for (double& x : v) x /= nv;
    const double r = residual_inf(m, v, out.value);
    if (r < best_residual) {
      best_residual = r;
      best = v;
    } else if (iter >= 1) {
      break;
    }
    if (iter >= 1 && r <= tol * scale * 1e-3) break;
  }
  const auto first = std::find_if(best.begin(), best.end(), [](double x) { return x != 0.0; });
  if (first != best.end() && *first < 0.0) {
    for (double& x : best) x = -x;
  }
  // The Rayleigh quotient of the refined vector is accurate to the squared residual,
  // well beyond the bisection bracket; keep it only when it stays inside the bracket.
  const std::vector<double> mv = m.apply(best);
  double rq = 0.0;
  for (std::size_t i = 0; i < n; ++i) rq += best[i] * mv[i];
  if (rq >= lo - tol && rq <= hi + tol) out.value = rq;
  out.vector = std::move(best);
  return out;
}

double vmax_from_lambda(double lambda_min, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("vmax_from_lambda: p must lie in [0, 1]");
  const double denom = 0.25 + p * lambda_min;
  if (!(denom > 0.0)) {
    throw std::domain_error("vmax_from_lambda: 1/4 + p*lambda_min = " + std::to_string(denom) + " is not positive");
  }
  return 0.25 / denom;
}

double psi2_objective(double c0) {
  if (!(c0 >= 0.0 && c0 <= 1.0)) throw std::domain_error("psi2_objective: c0 must lie in [0, 1]");
  const double c1 = std::sqrt(1.0 - c0 * c0);
  return 0.25 / (0.25 + 6.0 * c1 * c1 - c0 * c1);
}

ScanResult psi2_scan(std::size_t grid_size) {
  if (grid_size < 3) throw std::invalid_argument("psi2_scan: grid_size must be at least 3");
  ScanResult r;
  r.grid.resize(grid_size);
  r.values.resize(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    r.grid[i] = static_cast<double>(i + 1) / static_cast<double>(grid_size + 1);
    r.values[i] = psi2_objective(r.grid[i]);
  }
  const std::size_t k = static_cast<std::size_t>(std::max_element(r.values.begin(), r.values.end()) - r.values.begin());

  // Golden-section maximization on the bracket around the best grid point.
  double a = k == 0 ? 0.0 : r.grid[k - 1];
  double b = k + 1 == grid_size ? 1.0 : r.grid[k + 1];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = psi2_objective(x1);
  double f2 = psi2_objective(x2);
  while (b - a > 1e-6) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = psi2_objective(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = psi2_objective(x1);
    }
  }
  const double refined = 0.5 * (a + b);
  const double refined_value = psi2_objective(refined);

  if (refined_value > r.values[k]) {
    const auto pos = std::lower_bound(r.grid.begin(), r.grid.end(), refined);
    if (pos == r.grid.end() || *pos != refined) {
      const auto offset = pos - r.grid.begin();
      r.grid.insert(pos, refined);
      r.values.insert(r.values.begin() + offset, refined_value);
    }
    r.argbest = refined;
    r.best = refined_value;
  } else {
    r.argbest = r.grid[k];
    r.best = r.values[k];
  }
  return r;
}

std::vector<std::pair<std::size_t, double>> convergence_study(std::span<const std::size_t> sizes, double tol) {
  if (sizes.empty()) throw std::invalid_argument("convergence_study: no truncations given");
  if (!std::is_sorted(sizes.begin(), sizes.end())) {
    throw std::invalid_argument("convergence_study: truncations must be ascending");
  }
  std::vector<std::future<double>> jobs;
  jobs.reserve(sizes.size());
  for (std::size_t n : sizes) {
    jobs.push_back(std::async(std::launch::async, [n, tol] { return min_eigenvalue(c_matrix(n), tol).value; }));
  }
  std::vector<std::pair<std::size_t, double>> out;
  out.reserve(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) out.emplace_back(sizes[i], jobs[i].get());
  return out;
}

}  // namespace entwit
