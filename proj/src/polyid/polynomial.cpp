#include <algorithm>
#include <numeric>
#include <sstream>

#include "entwit/polyid.hpp"

namespace entwit::polyid {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string_view binary_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::sum:
      return " + ";
    case BinaryOp::difference:
      return " - ";
    case BinaryOp::product:
      return "*";
  }
  return "?";
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

std::string_view variable_name(Variable v) {
  switch (v) {
    case Variable::a:
      return "a";
    case Variable::a_prime:
      return "a'";
    case Variable::b:
      return "b";
    case Variable::b_prime:
      return "b'";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Expression tree

ExprPtr make_variable(Variable v) { return std::make_shared<const Expr>(Expr{v}); }

ExprPtr make_integer(BigInt value) {
  if (value < 0) throw std::invalid_argument("integer literals are non-negative; use make_negate");
  return std::make_shared<const Expr>(Expr{std::move(value)});
}

ExprPtr make_negate(ExprPtr operand) { return std::make_shared<const Expr>(Expr{Negate{std::move(operand)}}); }

ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr{Binary{op, std::move(lhs), std::move(rhs)}});
}

ExprPtr make_power(ExprPtr base, unsigned exponent) {
  return std::make_shared<const Expr>(Expr{Power{std::move(base), exponent}});
}

bool structurally_equal(const Expr& x, const Expr& y) {
  if (x.node.index() != y.node.index()) return false;
  return std::visit(Overloaded{
                        [&](const Variable& v) { return v == std::get<Variable>(y.node); },
                        [&](const BigInt& i) { return i == std::get<BigInt>(y.node); },
                        [&](const Negate& n) { return structurally_equal(*n.operand, *std::get<Negate>(y.node).operand); },
                        [&](const Binary& b) {
                          const auto& o = std::get<Binary>(y.node);
                          return b.op == o.op && structurally_equal(*b.lhs, *o.lhs) && structurally_equal(*b.rhs, *o.rhs);
                        },
                        [&](const Power& p) {
                          const auto& o = std::get<Power>(y.node);
                          return p.exponent == o.exponent && structurally_equal(*p.base, *o.base);
                        },
                    },
                    x.node);
}

std::string to_string(const Expr& e) {
  return std::visit(Overloaded{
                        [](const Variable& v) { return std::string(variable_name(v)); },
                        [](const BigInt& i) { return i.str(); },
                        [](const Negate& n) { return "-(" + to_string(*n.operand) + ")"; },
                        [](const Binary& b) {
                          return "(" + to_string(*b.lhs) + std::string(binary_symbol(b.op)) + to_string(*b.rhs) + ")";
                        },
                        [](const Power& p) { return "(" + to_string(*p.base) + ")^" + std::to_string(p.exponent); },
                    },
                    e.node);
}

Rational evaluate(const Expr& e, const Point& at) {
  return std::visit(Overloaded{
                        [&](const Variable& v) { return at[static_cast<std::size_t>(v)]; },
                        [](const BigInt& i) { return Rational(i); },
                        [&](const Negate& n) { return Rational(-evaluate(*n.operand, at)); },
                        [&](const Binary& b) {
                          const Rational l = evaluate(*b.lhs, at);
                          const Rational r = evaluate(*b.rhs, at);
                          switch (b.op) {
                            case BinaryOp::sum:
                              return Rational(l + r);
                            case BinaryOp::difference:
                              return Rational(l - r);
                            case BinaryOp::product:
                              break;
                          }
                          return Rational(l * r);
                        },
                        [&](const Power& p) { return rational_pow(evaluate(*p.base, at), p.exponent); },
                    },
                    e.node);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  p.add_term(Exponents{}, c);
  return p;
}

Polynomial Polynomial::variable(Variable v) {
  Polynomial p;
  Exponents e{};
  e[static_cast<std::size_t>(v)] = 1;
  p.add_term(e, 1);
  return p;
}

unsigned Polynomial::degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0U));
  return best;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  Polynomial out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      Exponents e;
      for (std::size_t k = 0; k < kNumVariables; ++k) e[k] = e1[k] + e2[k];
      out.add_term(e, c1 * c2);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational Polynomial::evaluate(const Point& at) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t k = 0; k < kNumVariables; ++k) {
      if (e[k] != 0) term *= rational_pow(at[k], e[k]);
    }
    total += term;
  }
  return total;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  // Highest exponent vectors first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string monomial;
    for (std::size_t k = 0; k < kNumVariables; ++k) {
      if (e[k] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += variable_name(static_cast<Variable>(k));
      if (e[k] > 1) monomial += "^" + std::to_string(e[k]);
    }
    if (monomial.empty()) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += monomial;
    } else {
      out += rational_to_string(mag) + "*" + monomial;
    }
  }
  return out;
}

Polynomial expand(const Expr& e) {
  return std::visit(Overloaded{
                        [](const Variable& v) { return Polynomial::variable(v); },
                        [](const BigInt& i) { return Polynomial::constant(Rational(i)); },
                        [](const Negate& n) { return -expand(*n.operand); },
                        [](const Binary& b) {
                          Polynomial l = expand(*b.lhs);
                          const Polynomial r = expand(*b.rhs);
                          switch (b.op) {
                            case BinaryOp::sum:
                              return l += r;
                            case BinaryOp::difference:
                              return l -= r;
                            case BinaryOp::product:
                              break;
                          }
                          return l *= r;
                        },
                        [](const Power& p) { return expand(*p.base).pow(p.exponent); },
                    },
                    e.node);
}

bool equal(const Polynomial& p, const Polynomial& q) { return p == q; }

}  // namespace entwit::polyid
