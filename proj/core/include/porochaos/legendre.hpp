#pragma once

#include <span>

#include "porochaos/multi_index.hpp"

namespace porochaos {

/// Orthonormal Legendre polynomial psi_k(x) = sqrt(2k+1) P_k(x), normalized so
/// that int_{-1}^{1} psi_j psi_k dx/2 = delta_jk. Evaluated by the three-term
/// recurrence; total function on the reals.
double legendre_1d(int degree, double x);

/// Tensor-product basis value phi_k(xi) = prod_i psi_{k_i}(xi_i).
/// Throws std::invalid_argument on dimension mismatch.
double eval_basis(const MultiIndex& k, std::span<const double> xi);

}  // namespace porochaos
