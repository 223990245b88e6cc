#pragma once

#include "heisenkep/exactalg/diffop.hpp"

namespace heisenkep {

/// Minimal monic operator annihilating all k-fold products of solutions of L.  Built from
/// the derivatives of y^k in the monomial basis of Sym^k; the order is found, not assumed.
/// Throws std::invalid_argument for k < 1.
DiffOperator sym_power(const DiffOperator& L, int k);

}  // namespace heisenkep
