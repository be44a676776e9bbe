#pragma once

// Observables used by the entanglement conditions: truncated bosonic mode
// operators, Pauli-like two-level operators and their block generalization.

#include <cstddef>
#include <string_view>

#include "entwit/hilbert.hpp"

namespace entwit {

// Lowering operator on the Fock levels 0..D-1: entries sqrt(n) at (n-1, n).
ComplexMatrix annihilation(std::size_t cutoff);
ComplexMatrix creation(std::size_t cutoff);

// x = (a + a^dagger)/sqrt(2), p = (a - a^dagger)/(i sqrt(2)), so [x, p] = i away
// from the truncation edge (the last Fock level).
struct QuadraturePair {
  ComplexMatrix x;
  ComplexMatrix p;
  std::size_t dim = 0;
};

QuadraturePair quadratures(std::size_t cutoff);

// s_x = |0><1| + |1><0|, s_y = -i(|0><1| - |1><0|), s_z = |0><0| - |1><1|, s_0 = 1.
struct SpinOps {
  ComplexMatrix sx;
  ComplexMatrix sy;
  ComplexMatrix sz;
  ComplexMatrix s0;
};

SpinOps spin_ops();

// s_x cos(theta) + s_y sin(theta); squares to the identity.
ComplexMatrix rotated_spin(double theta);

// Pauli-like operators repeated on each level pair (2n, 2n+1) of an even cutoff.
struct BlockSpin {
  ComplexMatrix x;
  ComplexMatrix y;
  ComplexMatrix z;
};

BlockSpin block_spin(std::size_t cutoff);

// Named single-factor operator of the given dimension: sx, sy, sz, s0 (dim 2),
// x, p (any cutoff >= 2), blockx, blocky, blockz (even cutoff).
// Throws std::invalid_argument for unknown names or unsupported dimensions.
ComplexMatrix builtin_operator(std::string_view name, std::size_t dim);

}  // namespace entwit
