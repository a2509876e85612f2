#pragma once

#include <vector>

#include "utid/exact.hpp"
#include "utid/ut4.hpp"

namespace utid {

/// Coefficients of the pumped product B(sigma, t) = B_sigma(1)^t ... B_sigma(m)^t:
///   d = t^2 D + t sum D_i,  e = t^2 E + t sum E_i,  f = t^3 F + t^2 G + t sum F_i.
struct SigmaStats {
  Rational D, E, F, G;
};

/// Per-factor linear terms, i.e. the (1,3), (2,4), (1,4) entries of log(B):
///   D = d - ab/2,  E = e - bc/2,  F = f - (ae + dc)/2 + abc/3.
struct ElementStats {
  Rational D, E, F;
};

SigmaStats sigma_stats(const std::vector<Matrix>& factors, const Permutation& sigma);

ElementStats element_stats(const Matrix& m);

ElementStats sum_element_stats(const std::vector<Matrix>& factors);

/// Closed-form B(sigma, t). t = 0 gives the identity.
Matrix pumped_product(const std::vector<Matrix>& factors, const Permutation& sigma, const BigInt& t);

/// Same, with statistics already computed for the list.
Matrix pumped_product(const SigmaStats& s, const ElementStats& linear, const Vec3<BigInt>& phi0_sum,
                      const BigInt& t);

/// alpha*eps - kappa*delta for direction (alpha, beta, kappa) and generator (.., delta, eps, ..).
BigInt gamma(const Vec3<BigInt>& direction, const Matrix& m);

}  // namespace utid
