#pragma once

// Exact polynomial identities in the four commuting scalars a, a', b, b'.
//
// Expressions are parsed from a small arithmetic grammar, expanded into sparse
// polynomials with arbitrary-precision rational coefficients, and compared term
// by term. The identities behind the Uffink and Ramanujan conditions ship as
// builtins.

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace entwit::polyid {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Fixed variable order a, a', b, b'.
enum class Variable : std::size_t { a = 0, a_prime = 1, b = 2, b_prime = 3 };
inline constexpr std::size_t kNumVariables = 4;

std::string_view variable_name(Variable v);

using Point = std::array<Rational, kNumVariables>;

// ---------------------------------------------------------------------------
// Expression tree. Nodes are immutable and shared.

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Negate {
  ExprPtr operand;
};
enum class BinaryOp { sum, difference, product };
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Power {
  ExprPtr base;
  unsigned exponent;
};

struct Expr {
  std::variant<Variable, BigInt, Negate, Binary, Power> node;
};

ExprPtr make_variable(Variable v);
ExprPtr make_integer(BigInt value);
ExprPtr make_negate(ExprPtr operand);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_power(ExprPtr base, unsigned exponent);

bool structurally_equal(const Expr& x, const Expr& y);

// Re-parses to a structurally equal tree.
std::string to_string(const Expr& e);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar (whitespace-insensitive):
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?
//   exponent:= primary ('^' exponent)?        -- must fold to a non-negative integer
//   primary := variable | integer | '(' expr ')'
//   variable:= a | a' | b | b'
ExprPtr parse(std::string_view text);

// Exact evaluation at a rational point.
Rational evaluate(const Expr& e, const Point& at);

// ---------------------------------------------------------------------------
// Polynomials

using Exponents = std::array<unsigned, kNumVariables>;

class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational>;

  Polynomial() = default;
  static Polynomial constant(const Rational& c);
  static Polynomial variable(Variable v);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.terms_ == y.terms_; }

  Polynomial pow(unsigned exponent) const;
  Rational evaluate(const Point& at) const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  // Zero coefficients are never stored.
  Terms terms_;
};

// Human-readable canonical form, e.g. "a^2*b^2 - 2*a*a'*b*b' + a'^2*b'^2".
std::string to_string(const Polynomial& p);

Polynomial expand(const Expr& e);
bool equal(const Polynomial& p, const Polynomial& q);

// ---------------------------------------------------------------------------
// Builtin identities

enum class IdentityName { complex_norm, ramanujan };

// "complex_norm" or "ramanujan"; throws std::invalid_argument otherwise.
IdentityName parse_identity_name(std::string_view name);
std::string_view identity_name(IdentityName name);

struct Identity {
  ExprPtr lhs;
  ExprPtr rhs;
};

// complex_norm: (ab - a'b')^2 + (ab' + a'b)^2 = (a^2 + a'^2)(b^2 + b'^2); n is ignored.
// ramanujan:    the three-term power-n identity; n >= 1, validity decided by verify().
Identity builtin_identity(IdentityName name, unsigned n = 0);

struct Verification {
  bool symbolic = false;
  // Number of random points (out of `points`) where both sides agreed.
  std::size_t agreeing_points = 0;
  std::size_t points = 0;
};

// Exact expansion of lhs - rhs plus an evaluation cross-check at random
// rational points. Throws std::logic_error if the two routes disagree.
Verification verify_detailed(IdentityName name, unsigned n = 0, std::size_t points = 20, unsigned seed = 20091);
bool verify(IdentityName name, unsigned n = 0);

}  // namespace entwit::polyid
