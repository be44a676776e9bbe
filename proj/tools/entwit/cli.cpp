#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "entwit/json_io.hpp"
#include "entwit/operators.hpp"
#include "entwit/optimize.hpp"
#include "entwit/polyid.hpp"
#include "entwit/states.hpp"
#include "entwit/witnesses.hpp"

namespace entwit::cli {
namespace {

using nlohmann::json;

// Raised for argument combinations CLI11 cannot express; maps to exit 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Document {
  json inputs = json::object();
  json results = json::object();
  json cutoffs = json::object();
};

json tolerances_json() {
  const WitnessOptions opt;
  return {{"witness", opt.tolerance},
          {"ratio_guard", opt.ratio_guard},
          {"hermitian", opt.hilbert.hermitian},
          {"norm", opt.hilbert.norm},
          {"eigenvalue_floor", opt.hilbert.eigenvalue_floor},
          {"variance_error", opt.hilbert.variance_error}};
}

std::vector<double> normalized(std::vector<double> c) {
  double norm2 = 0.0;
  for (double x : c) norm2 += x * x;
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) throw std::invalid_argument("coefficients must not all be zero");
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& x : c) x *= inv;
  return c;
}

Complex to_complex(const std::vector<double>& v) { return {v.at(0), v.at(1)}; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

// --- subcommands -----------------------------------------------------------

struct CmatrixArgs {
  std::size_t n = 0;
  double p = 1.0;
  double tol = 1e-10;
};

Document run_cmatrix(const CmatrixArgs& a) {
  Document d;
  d.inputs = {{"n", a.n}, {"p", a.p}, {"tol", a.tol}};
  const TridiagonalMatrix c = c_matrix(a.n);
  const Eigenpair e = min_eigenvalue(c, a.tol);
  const std::size_t head = std::min<std::size_t>(e.vector.size(), 8);
  const std::vector<double> residual = c.apply(e.vector);
  double res = 0.0;
  for (std::size_t i = 0; i < residual.size(); ++i) res = std::max(res, std::abs(residual[i] - e.value * e.vector[i]));
  d.results = {{"lambda_min", e.value},
               {"eigenvector_head", std::vector<double>(e.vector.begin(), e.vector.begin() + static_cast<long>(head))},
               {"residual", res},
               {"V_max", vmax_from_lambda(e.value, a.p)}};
  d.cutoffs = {{"N", a.n}, {"matrix_size", c.size()}};
  return d;
}

Document run_psi2(std::size_t grid) {
  Document d;
  d.inputs = {{"scan", grid}};
  d.results = to_json(psi2_scan(grid));
  return d;
}

struct MixtureArgs {
  double p = 0.0;
  std::vector<double> coeffs;
  std::optional<std::size_t> cutoff;
};

Document run_mixture(const MixtureArgs& a) {
  Document d;
  d.inputs = {{"p", a.p}, {"coeffs", a.coeffs}};
  d.inputs["cutoff"] = a.cutoff ? json(*a.cutoff) : json(nullptr);
  const std::vector<double> c = normalized(a.coeffs);
  const std::size_t cutoff = a.cutoff.value_or(fock_pair_cutoff(c.size()));
  const QuantumState rho = vacuum_mixture(a.p, c, cutoff);
  const QuadraturePair q = quadratures(cutoff);
  const WitnessReport r = variance_product({q.x, q.p, q.p, q.x}, rho);
  const double qf = quadratic_form(c);
  d.results = {{"report", to_json(r)},
               {"normalized_coeffs", c},
               {"quadratic_form", qf},
               {"predicted_lhs", 0.25 + a.p * qf}};
  d.cutoffs = {{"D", cutoff}, {"rule", a.cutoff ? "explicit" : "2N+4"}};
  return d;
}

struct SqueezedArgs {
  double lambda = 0.0;
  std::optional<std::size_t> cutoff;
};

Document run_squeezed(const SqueezedArgs& a) {
  Document d;
  d.inputs = {{"lambda", a.lambda}};
  d.inputs["cutoff"] = a.cutoff ? json(*a.cutoff) : json(nullptr);
  const std::size_t cutoff = a.cutoff.value_or(squeezed_cutoff(a.lambda));
  const QuantumState psi = squeezed_vacuum(a.lambda, cutoff);
  const BlockSpin s = block_spin(cutoff);
  const WitnessReport r = variance_product({s.x, s.y, s.x, s.y}, psi);
  const double l2 = a.lambda * a.lambda;
  const double closed = std::pow((1.0 + l2) / (1.0 - l2), 2);
  d.results = {{"report", to_json(r)}, {"closed_form_V", closed}};
  d.results["abs_error"] = r.ratio ? json(std::abs(*r.ratio - closed)) : json(nullptr);
  d.cutoffs = {{"D", cutoff}, {"rule", a.cutoff ? "explicit" : "tail"}};
  return d;
}

struct BellArgs {
  std::size_t parties = 2;
  std::string condition;
  unsigned n = 2;
};

Document run_bell(const BellArgs& a) {
  Document d;
  d.inputs = {{"parties", a.parties}, {"condition", a.condition}, {"n", a.n}};
  const QuantumState state = bell(a.parties);
  const SpinOps s = spin_ops();
  WitnessReport r;
  if (a.condition == "variance") {
    const std::vector<ComplexMatrix> xs(a.parties, s.sx);
    const std::vector<ComplexMatrix> ys(a.parties, s.sy);
    r = multipartite(xs, ys, state);
  } else {
    if (a.parties != 2) throw UsageError("--condition " + a.condition + " requires --parties 2");
    const OperatorQuadruple ops{s.sx, s.sy, s.sx, s.sy};
    r = a.condition == "ramanujan" ? ramanujan_witness(ops, state, a.n) : uffink(ops, state);
  }
  d.results = {{"report", to_json(r)}};
  return d;
}

struct SchmidtArgs {
  std::vector<double> alpha;
  std::vector<double> beta;
};

Document run_schmidt(const SchmidtArgs& a) {
  Document d;
  d.inputs = {{"alpha", a.alpha}, {"beta", a.beta}};
  const SchmidtWitness w = schmidt_optimal_witness(to_complex(a.alpha), to_complex(a.beta));
  d.results = {{"report", to_json(w.report)},
               {"theta", w.theta},
               {"theta_prime", w.theta_prime},
               {"eta", w.eta},
               {"eta_prime", w.eta_prime}};
  return d;
}

Document run_identity(const std::string& name, unsigned n) {
  Document d;
  const polyid::IdentityName id = polyid::parse_identity_name(name);
  d.inputs = {{"name", name}};
  if (id == polyid::IdentityName::ramanujan) d.inputs["n"] = n;
  const polyid::Verification v = polyid::verify_detailed(id, n);
  d.results = {{"valid", v.symbolic}, {"agreeing_points", v.agreeing_points}, {"points", v.points}};
  return d;
}

Document run_eval(const std::string& lhs, const std::string& rhs) {
  Document d;
  d.inputs = {{"expr_lhs", lhs}, {"expr_rhs", rhs}};
  auto parse_side = [](const std::string& text, const char* side) {
    try {
      return polyid::parse(text);
    } catch (const polyid::ParseError& e) {
      throw std::invalid_argument(std::string(side) + ": " + e.what());
    }
  };
  const polyid::Polynomial p = polyid::expand(*parse_side(lhs, "--expr-lhs"));
  const polyid::Polynomial q = polyid::expand(*parse_side(rhs, "--expr-rhs"));
  polyid::Polynomial diff = p;
  diff -= q;
  d.results = {{"equal", polyid::equal(p, q)},
               {"lhs_expanded", polyid::to_string(p)},
               {"rhs_expanded", polyid::to_string(q)},
               {"difference", polyid::to_string(diff)}};
  return d;
}

struct WitnessArgs {
  std::string state;
  std::string ops;
  std::string condition;
};

ComplexMatrix operator_from(const json& spec, const char* key, std::size_t dim) {
  if (!spec.contains(key) || !spec.at(key).is_string()) {
    throw std::invalid_argument(std::string("ops: '") + key + "' must name a builtin operator");
  }
  return builtin_operator(spec.at(key).get<std::string>(), dim);
}

std::vector<ComplexMatrix> operator_list(const json& spec, const char* key, const Dims& dims) {
  if (!spec.contains(key) || !spec.at(key).is_array()) {
    throw std::invalid_argument(std::string("ops: '") + key + "' must be an array of operator names");
  }
  const json& names = spec.at(key);
  if (names.size() != dims.size()) {
    throw std::invalid_argument(std::string("ops: '") + key + "' needs one operator per subsystem (" +
                                std::to_string(dims.size()) + ")");
  }
  std::vector<ComplexMatrix> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!names[i].is_string()) throw std::invalid_argument(std::string("ops: '") + key + "' entries must be strings");
    out.push_back(builtin_operator(names[i].get<std::string>(), dims[i]));
  }
  return out;
}

Document run_witness(const WitnessArgs& a) {
  Document d;
  const StateSpec spec = state_spec_from_json(read_json_file(a.state));
  const json ops = read_json_file(a.ops);
  if (!ops.is_object()) throw std::invalid_argument("ops file must hold a JSON object");
  const Condition cond = parse_condition(a.condition);
  d.inputs = {{"state", to_json(spec)}, {"ops", ops}, {"condition", a.condition}};

  const QuantumState state = build_state(spec);
  const Dims& dims = state.dims();
  WitnessReport r;
  if (cond == Condition::multipartite) {
    r = multipartite(operator_list(ops, "As", dims), operator_list(ops, "A_primes", dims), state);
  } else {
    if (dims.size() != 2) throw std::invalid_argument("condition '" + a.condition + "' needs a bipartite state");
    const OperatorQuadruple q{operator_from(ops, "A", dims[0]), operator_from(ops, "A_prime", dims[0]),
                              operator_from(ops, "B", dims[1]), operator_from(ops, "B_prime", dims[1])};
    switch (cond) {
      case Condition::variance_product:
        r = variance_product(q, state);
        break;
      case Condition::variance_sum:
        r = variance_sum(q, state);
        break;
      case Condition::ramanujan: {
        const json n = ops.value("n", json(2));
        if (!n.is_number_unsigned()) throw std::invalid_argument("ops: 'n' must be 2 or 4");
        r = ramanujan_witness(q, state, n.get<unsigned>());
        break;
      }
      case Condition::uffink:
        r = uffink(q, state);
        break;
      case Condition::four_variance:
        r = four_variance(q, state);
        break;
      case Condition::multipartite:
        break;
    }
  }
  d.results = {{"report", to_json(r)}};
  if (const auto cutoff = resolved_cutoff(spec)) d.cutoffs = {{"D", *cutoff}, {"rule", spec.cutoff ? "explicit" : "default"}};
  return d;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement conditions from convexity: states, witnesses, identities", "entwit"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kVersion);

  std::string command;
  std::function<Document()> action;
  auto bind = [&](CLI::App* sub, std::function<Document()> fn) {
    sub->callback([&command, &action, sub, fn = std::move(fn)] {
      command = sub->get_name();
      action = fn;
    });
  };

  CmatrixArgs cm;
  auto* cmatrix = app.add_subcommand("cmatrix", "Minimum eigenvalue of the truncated C matrix and V_max(p)");
  cmatrix->add_option("--n", cm.n, "Truncation N (matrix size N+1)")->required()->check(CLI::PositiveNumber);
  cmatrix->add_option("--p", cm.p, "Mixture weight p in [0, 1]")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  cmatrix->add_option("--tol", cm.tol, "Bisection tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  bind(cmatrix, [&] { return run_cmatrix(cm); });

  std::size_t grid = 0;
  auto* psi2 = app.add_subcommand("psi2", "Scan the two-coefficient state over c0");
  psi2->add_option("--scan", grid, "Number of interior grid points (>= 3)")->required()->check(CLI::Range(3, 1000000));
  bind(psi2, [&] { return run_psi2(grid); });

  MixtureArgs mx;
  auto* mixture = app.add_subcommand("mixture", "Variance-product report for the vacuum mixture");
  mixture->add_option("--p", mx.p, "Weight of the superposition, in [0, 1]")->required()->check(CLI::Range(0.0, 1.0));
  mixture->add_option("--coeffs", mx.coeffs, "Coefficients c0,c1,... (normalized before use)")
      ->required()
      ->delimiter(',');
  mixture->add_option("--cutoff", mx.cutoff, "Fock cutoff D (default 2N+4)")->check(CLI::PositiveNumber);
  bind(mixture, [&] { return run_mixture(mx); });

  SqueezedArgs sq;
  auto* squeezed = app.add_subcommand("squeezed", "Two-mode squeezed vacuum against block-spin operators");
  squeezed->add_option("--lambda", sq.lambda, "Squeezing parameter, |lambda| < 1")->required();
  squeezed->add_option("--cutoff", sq.cutoff, "Even Fock cutoff D (default from the tail rule)")
      ->check(CLI::PositiveNumber);
  bind(squeezed, [&] { return run_squeezed(sq); });

  BellArgs bl;
  auto* bellc = app.add_subcommand("bell", "Conditions evaluated on the n-party GHZ state");
  bellc->add_option("--parties", bl.parties, "Number of qubits (2..24)")->required()->check(CLI::Range(2, 24));
  bellc->add_option("--condition", bl.condition, "variance | ramanujan | uffink")
      ->required()
      ->check(CLI::IsMember({"variance", "ramanujan", "uffink"}));
  bellc->add_option("--n", bl.n, "Ramanujan power (2 or 4)")->capture_default_str()->check(CLI::IsMember({2, 4}));
  bind(bellc, [&] { return run_bell(bl); });

  SchmidtArgs sc;
  auto* schmidt = app.add_subcommand("schmidt", "Optimal rotated-spin witness for alpha|00> + beta|11>");
  schmidt->add_option("--alpha", sc.alpha, "re,im")->required()->delimiter(',')->expected(2);
  schmidt->add_option("--beta", sc.beta, "re,im")->required()->delimiter(',')->expected(2);
  bind(schmidt, [&] { return run_schmidt(sc); });

  std::string id_name;
  unsigned id_n = 2;
  auto* identity = app.add_subcommand("identity", "Verify a builtin polynomial identity exactly");
  identity->add_option("--name", id_name, "complex_norm | ramanujan")
      ->required()
      ->check(CLI::IsMember({"complex_norm", "ramanujan"}));
  identity->add_option("--n", id_n, "Power for the ramanujan identity")
      ->capture_default_str()
      ->check(CLI::Range(1, 64));
  bind(identity, [&] { return run_identity(id_name, id_n); });

  std::string lhs, rhs;
  auto* eval = app.add_subcommand("eval", "Decide equality of two polynomials in a, a', b, b'");
  eval->add_option("--expr-lhs", lhs, "Left expression")->required();
  eval->add_option("--expr-rhs", rhs, "Right expression")->required();
  bind(eval, [&] { return run_eval(lhs, rhs); });

  WitnessArgs wa;
  auto* witness = app.add_subcommand("witness", "Evaluate a condition on a state file with an operator file");
  witness->add_option("--state", wa.state, "State spec JSON file")->required();
  witness->add_option("--ops", wa.ops, "Operator spec JSON file")->required();
  witness->add_option("--condition", wa.condition,
                      "variance_product | variance_sum | multipartite | ramanujan | uffink | four_variance")
      ->required()
      ->check(CLI::IsMember(
          {"variance_product", "variance_sum", "multipartite", "ramanujan", "uffink", "four_variance"}));
  bind(witness, [&] { return run_witness(wa); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const CLI::App* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "entwit: " << e.what() << "\n";
    err << "Run with --help for usage.\n";
    return kUsageError;
  }

  Document doc;
  try {
    doc = action();
  } catch (const UsageError& e) {
    err << "entwit " << command << ": " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "entwit " << command << ": " << e.what() << "\n";
    return kComputationError;
  }

  json report = {{"command", command},
                 {"inputs", std::move(doc.inputs)},
                 {"results", std::move(doc.results)},
                 {"meta", {{"version", kVersion}, {"tolerances", tolerances_json()}, {"cutoffs", std::move(doc.cutoffs)}}}};
  round_numbers(report);
  out << report.dump(2) << "\n";
  return kOk;
}

}  // namespace entwit::cli
