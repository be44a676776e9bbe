#include <random>

#include "entwit/polyid.hpp"

namespace entwit::polyid {

IdentityName parse_identity_name(std::string_view name) {
  if (name == "complex_norm") return IdentityName::complex_norm;
  if (name == "ramanujan") return IdentityName::ramanujan;
  throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

std::string_view identity_name(IdentityName name) {
  return name == IdentityName::complex_norm ? "complex_norm" : "ramanujan";
}

Identity builtin_identity(IdentityName name, unsigned n) {
  if (name == IdentityName::complex_norm) {
    return {parse("(a*b - a'*b')^2 + (a*b' + a'*b)^2"), parse("(a^2 + a'^2)*(b^2 + b'^2)")};
  }
  if (n < 1) throw std::invalid_argument("ramanujan identity needs a power n >= 1");
  const std::string k = std::to_string(n);
  return {
      parse("(a*b + a*b' + a'*b)^" + k + " + (a*b' + a'*b + a'*b')^" + k + " + (a*b - a'*b')^" + k),
      parse("(a'*b + a'*b' + a*b)^" + k + " + (a'*b' + a*b + a*b')^" + k + " + (a*b' - a'*b)^" + k),
  };
}

Verification verify_detailed(IdentityName name, unsigned n, std::size_t points, unsigned seed) {
  const Identity id = builtin_identity(name, n);
  Verification v;
  v.symbolic = equal(expand(*id.lhs), expand(*id.rhs));
  v.points = points;

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> numerator(-50, 50);
  std::uniform_int_distribution<int> denominator(1, 20);
  for (std::size_t i = 0; i < points; ++i) {
    Point at;
    for (Rational& x : at) x = Rational(numerator(rng), denominator(rng));
    if (evaluate(*id.lhs, at) == evaluate(*id.rhs, at)) ++v.agreeing_points;
  }
  if (v.symbolic && v.agreeing_points != points) {
    throw std::logic_error("identity expands to zero but differs at a sample point");
  }
  if (!v.symbolic && points > 0 && v.agreeing_points == points) {
    throw std::logic_error("identity differs symbolically but no sample point witnesses it");
  }
  return v;
}

bool verify(IdentityName name, unsigned n) { return verify_detailed(name, n).symbolic; }

}  // namespace entwit::polyid
