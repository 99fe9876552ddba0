#include "porochaos/legendre.hpp"

#include <cmath>
#include <stdexcept>

namespace porochaos {

double legendre_1d(int degree, double x) {
  if (degree < 0) throw std::invalid_argument("legendre_1d: negative degree");
  // P_{k+1} = ((2k+1) x P_k - k P_{k-1}) / (k+1)
  double pkm1 = 1.0;
  if (degree == 0) return 1.0;
  double pk = x;
  for (int k = 1; k < degree; ++k) {
    const double pkp1 = ((2.0 * k + 1.0) * x * pk - k * pkm1) / (k + 1.0);
    pkm1 = pk;
    pk = pkp1;
  }
  return std::sqrt(2.0 * degree + 1.0) * pk;
}

double eval_basis(const MultiIndex& k, std::span<const double> xi) {
  if (k.dim() != static_cast<int>(xi.size()))
    throw std::invalid_argument("eval_basis: dimension mismatch between index and point");
  double v = 1.0;
  for (int i = 0; i < k.dim(); ++i) v *= legendre_1d(k[i], xi[static_cast<std::size_t>(i)]);
  return v;
}

}  // namespace porochaos
