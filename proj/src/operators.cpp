#include "entwit/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "entwit/error.hpp"

namespace entwit {
namespace {

constexpr Complex kI{0.0, 1.0};

void require_cutoff(std::size_t cutoff, const char* what) {
  if (cutoff < 2) throw std::invalid_argument(std::string(what) + ": cutoff must be at least 2");
}

}  // namespace

ComplexMatrix annihilation(std::size_t cutoff) {
  require_cutoff(cutoff, "annihilation");
  ComplexMatrix a({cutoff});
  for (std::size_t n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

ComplexMatrix creation(std::size_t cutoff) { return annihilation(cutoff).adjoint(); }

QuadraturePair quadratures(std::size_t cutoff) {
  require_cutoff(cutoff, "quadratures");
  const ComplexMatrix a = annihilation(cutoff);
  const ComplexMatrix ad = a.adjoint();
  const double s = 1.0 / std::sqrt(2.0);
  return {(a + ad) * Complex{s, 0.0}, (a - ad) * (Complex{s, 0.0} / kI), cutoff};
}

SpinOps spin_ops() {
  return {
      ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}),
      ComplexMatrix::from_rows({{0.0, -kI}, {kI, 0.0}}),
      ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}),
      ComplexMatrix::identity({2}),
  };
}

ComplexMatrix rotated_spin(double theta) {
  const SpinOps s = spin_ops();
  return s.sx * Complex{std::cos(theta), 0.0} + s.sy * Complex{std::sin(theta), 0.0};
}

BlockSpin block_spin(std::size_t cutoff) {
  require_cutoff(cutoff, "block_spin");
  if (cutoff % 2 != 0) throw std::invalid_argument("block_spin: cutoff must be even so every level is paired");
  BlockSpin b{ComplexMatrix({cutoff}), ComplexMatrix({cutoff}), ComplexMatrix({cutoff})};
  for (std::size_t lo = 0; lo < cutoff; lo += 2) {
    const std::size_t hi = lo + 1;
    b.x(lo, hi) = 1.0;
    b.x(hi, lo) = 1.0;
    b.y(lo, hi) = -kI;
    b.y(hi, lo) = kI;
    b.z(lo, lo) = 1.0;
    b.z(hi, hi) = -1.0;
  }
  return b;
}

ComplexMatrix builtin_operator(std::string_view name, std::size_t dim) {
  if (name == "sx" || name == "sy" || name == "sz" || name == "s0") {
    if (dim != 2) throw DimensionMismatch("operator '" + std::string(name) + "' needs a two-level factor");
    const SpinOps s = spin_ops();
    if (name == "sx") return s.sx;
    if (name == "sy") return s.sy;
    if (name == "sz") return s.sz;
    return s.s0;
  }
  if (name == "x") return quadratures(dim).x;
  if (name == "p") return quadratures(dim).p;
  if (name == "blockx") return block_spin(dim).x;
  if (name == "blocky") return block_spin(dim).y;
  if (name == "blockz") return block_spin(dim).z;
  throw std::invalid_argument("unknown operator '" + std::string(name) + "'");
}

}  // namespace entwit
