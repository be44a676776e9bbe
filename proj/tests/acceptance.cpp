// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <numbers>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "entwit/operators.hpp"
#include "entwit/optimize.hpp"
#include "entwit/polyid.hpp"
#include "entwit/states.hpp"
#include "entwit/witnesses.hpp"
#include "test_support.hpp"

namespace {

using namespace entwit;
namespace t = entwit::test_support;

struct Verdict {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.ok = false;
    v.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (v.ok && secs >= budget_s) {
    v.ok = false;
    v.note = fmt("runtime %.3f s exceeds %.0f s", secs, budget_s);
  }
  if (!v.ok) ++failures;
  std::printf("%s [%d] %s (%.3f s, budget %.0f s)%s%s\n", v.ok ? "PASS" : "FAIL", id, title, secs, budget_s,
              v.note.empty() ? "" : ": ", v.note.c_str());
  std::fflush(stdout);
}

bool near(double x, double target, double tol) { return std::abs(x - target) <= tol; }

OperatorQuadruple random_quadruple(t::Rng& rng, std::size_t d) {
  return {t::random_hermitian(rng, d), t::random_hermitian(rng, d), t::random_hermitian(rng, d),
          t::random_hermitian(rng, d)};
}

double sigma_product(const QuadraturePair& q, const QuantumState& s) {
  return std::sqrt(variance(ProductOperator({q.x, q.p}), s)) * std::sqrt(variance(ProductOperator({q.p, q.x}), s));
}

}  // namespace

int main() {
  criterion(1, "lambda_min and V_max at N = 200 via `cmatrix --n 200`", 1.0, [] {
    Verdict v;
    std::ostringstream out, err;
    const int code = cli::run({"cmatrix", "--n", "200"}, out, err);
    v.require(code == 0, "cli exit " + std::to_string(code) + ": " + err.str());
    if (code != 0) return v;
    const auto doc = nlohmann::json::parse(out.str());
    const double lambda = doc["results"]["lambda_min"].get<double>();
    const double vmax = doc["results"]["V_max"].get<double>();
    v.require(near(lambda, -0.04495, 5e-4), fmt("lambda_min = %.8f", lambda));
    v.require(near(vmax, 1.2192, 1e-3), fmt("V_max = %.6f", vmax));
    v.note = v.ok ? fmt("lambda_min = %.8f, V_max = %.6f", lambda, vmax) : v.note;
    return v;
  });

  criterion(2, "psi2 scan maximum", 1.0, [] {
    Verdict v;
    const ScanResult s = psi2_scan(200);
    v.require(near(s.best, 1.197, 2e-3), fmt("best V = %.6f", s.best));
    v.require(near(s.argbest, 0.997, 2e-3), fmt("argbest c0 = %.6f", s.argbest));
    v.note = v.ok ? fmt("V = %.6f at c0 = %.6f", s.best, s.argbest) : v.note;
    return v;
  });

  criterion(3, "mixture law sigma_xp sigma_px = 1/4 + p Q(c) at D = 16", 5.0, [] {
    Verdict v;
    const Eigenpair e = min_eigenvalue(c_matrix(5));
    const std::size_t d = 16;
    const QuadraturePair q = quadratures(d);
    const double qf = quadratic_form(e.vector);
    double worst = 0.0;
    for (double p : {0.1, 0.5, 1.0}) {
      const double numeric = sigma_product(q, vacuum_mixture(p, e.vector, d));
      worst = std::max(worst, std::abs(numeric - (0.25 + p * qf)));
      v.require(vmax_from_lambda(e.value, p) > 1.0, fmt("V_max(%.2f) <= 1", p));
    }
    v.require(worst <= 1e-9, fmt("max deviation %.3e", worst));
    for (double p = 0.01; p <= 1.0; p += 0.01) v.require(vmax_from_lambda(e.value, p) > 1.0, fmt("V_max(%.2f) <= 1", p));
    if (v.ok) v.note = fmt("max deviation %.3e", worst);
    return v;
  });

  criterion(4, "squeezed vacuum V = ((1+l^2)/(1-l^2))^2 at the tail-rule cutoff", 10.0, [] {
    Verdict v;
    double worst = 0.0;
    for (double lambda : {0.1, 0.3, 0.5, 0.7}) {
      const std::size_t d = squeezed_cutoff(lambda);
      const BlockSpin s = block_spin(d);
      const WitnessReport r = variance_product({s.x, s.y, s.x, s.y}, squeezed_vacuum(lambda, d));
      const double l2 = lambda * lambda;
      const double closed = std::pow((1 + l2) / (1 - l2), 2);
      v.require(r.ratio.has_value(), fmt("V absent at lambda = %.1f", lambda));
      if (r.ratio) worst = std::max(worst, std::abs(*r.ratio - closed));
    }
    v.require(worst <= 1e-6, fmt("max deviation %.3e", worst));
    if (v.ok) v.note = fmt("max deviation %.3e", worst);
    return v;
  });

  criterion(5, "Schmidt family: 50 random pairs violate, product pair does not", 1.0, [] {
    Verdict v;
    t::Rng rng(5005);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const auto c = t::random_unit_vector(rng, 2);
      const SchmidtWitness w = schmidt_optimal_witness(c[0], c[1]);
      const double ab2 = std::norm(c[0] * c[1]);
      v.require(w.report.violated, "pair " + std::to_string(k) + " not violated");
      worst = std::max(worst, std::abs(w.report.lhs * w.report.lhs - (1 - 4 * ab2) * (1 - 4 * ab2)));
    }
    v.require(worst <= 1e-9, fmt("lhs^2 deviation %.3e", worst));
    v.require(!schmidt_optimal_witness(1.0, 0.0).report.violated, "alpha*beta = 0 reported violated");
    v.require(!schmidt_optimal_witness(0.0, Complex(0.0, 1.0)).report.violated, "alpha*beta = 0 reported violated");
    if (v.ok) v.note = fmt("lhs^2 deviation %.3e", worst);
    return v;
  });

  criterion(6, "Bell checks: Ramanujan (6,2), (18,2); multipartite n = 2, 4, 6", 2.0, [] {
    Verdict v;
    const SpinOps s = spin_ops();
    const OperatorQuadruple q{s.sx, s.sy, s.sx, s.sy};
    const WitnessReport r2 = ramanujan_witness(q, bell(2), 2);
    const WitnessReport r4 = ramanujan_witness(q, bell(2), 4);
    v.require(near(r2.lhs, 6, 1e-9) && near(r2.rhs, 2, 1e-9), fmt("n=2 gives (%.9f, %.9f)", r2.lhs, r2.rhs));
    v.require(near(r4.lhs, 18, 1e-9) && near(r4.rhs, 2, 1e-9), fmt("n=4 gives (%.9f, %.9f)", r4.lhs, r4.rhs));
    for (std::size_t n : {2u, 4u, 6u}) {
      const std::vector<ComplexMatrix> xs(n, s.sx), ys(n, s.sy);
      const WitnessReport m = multipartite(xs, ys, bell(n));
      v.require(near(m.lhs, 0, 1e-9) && near(m.rhs, 1, 1e-9),
                "n=" + std::to_string(n) + fmt(" gives (%.3e, %.9f)", m.lhs, m.rhs));
    }
    return v;
  });

  criterion(7, "identity suite: complex_norm, ramanujan n = 2, 4 true; n = 1, 3 false", 1.0, [] {
    using namespace polyid;
    Verdict v;
    v.require(verify(IdentityName::complex_norm), "complex_norm false");
    v.require(verify(IdentityName::ramanujan, 2), "ramanujan 2 false");
    v.require(verify(IdentityName::ramanujan, 4), "ramanujan 4 false");
    v.require(!verify(IdentityName::ramanujan, 1), "ramanujan 1 true");
    v.require(!verify(IdentityName::ramanujan, 3), "ramanujan 3 true");
    return v;
  });

  criterion(8, "separability soundness sweep: 200 mixtures, all conditions, tol 1e-9", 60.0, [] {
    Verdict v;
    t::Rng rng(8008);
    std::size_t evaluated = 0;
    double worst = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < 200; ++k) {
      const std::size_t d = k % 2 == 0 ? 2 : 8;
      const QuantumState s = t::random_product_mixture(rng, d, d, 1 + k % 5);
      const OperatorQuadruple q = random_quadruple(rng, d);
      const std::vector<ComplexMatrix> as{q.a, q.b}, aps{q.a_prime, q.b_prime};
      for (const WitnessReport& r : {variance_product(q, s), variance_sum(q, s), multipartite(as, aps, s),
                                     ramanujan_witness(q, s, 2), ramanujan_witness(q, s, 4), uffink(q, s),
                                     four_variance(q, s)}) {
        ++evaluated;
        worst = std::max(worst, r.delta);
        v.require(!r.violated, r.name + " violated on sample " + std::to_string(k) + fmt(" (delta %.3e)", r.delta));
      }
    }
    if (v.ok) v.note = std::to_string(evaluated) + " reports, max delta " + fmt("%.3e", worst);
    return v;
  });

  criterion(9, "oracle equivalence: quadratic_form vs numeric sigma product, 50 random c, N <= 6", 30.0, [] {
    Verdict v;
    t::Rng rng(9009);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const std::size_t n = 1 + k % 6;
      const std::vector<double> c = t::random_real_unit(rng, n + 1);
      const std::size_t d = 2 * n + 4;
      const double numeric = sigma_product(quadratures(d), fock_pair_superposition(c, d));
      worst = std::max(worst, std::abs(numeric - (0.25 + quadratic_form(c))));
    }
    v.require(worst <= 1e-9, fmt("max deviation %.3e", worst));
    if (v.ok) v.note = fmt("max deviation %.3e", worst);
    return v;
  });

  criterion(10, "product-state variance bound sigma_AB >= sigma_A sigma_B, 500 samples", 10.0, [] {
    Verdict v;
    t::Rng rng(10010);
    double worst = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 500; ++k) {
      const std::size_t da = 2 + k % 4, db = 2 + (k / 4) % 4;
      auto local = [&](std::size_t d, bool mixed) {
        if (!mixed) return t::random_pure(rng, d);
        return mix(std::vector<QuantumState>{t::random_pure(rng, d), t::random_pure(rng, d)}, std::vector<double>{0.35, 0.65});
      };
      const QuantumState a = local(da, k % 3 == 0);
      const QuantumState b = local(db, k % 5 == 0);
      const ComplexMatrix ha = t::random_hermitian(rng, da), hb = t::random_hermitian(rng, db);
      const double sab = std::sqrt(variance(ProductOperator({ha, hb}), tensor(a, b)));
      const double gap = sab - std::sqrt(variance(ha, a)) * std::sqrt(variance(hb, b));
      worst = std::min(worst, gap);
      v.require(gap >= -1e-9, fmt("sample gap %.3e", gap));
    }
    if (v.ok) v.note = fmt("min gap %.3e", worst);
    return v;
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
