#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace utid {

namespace mp = boost::multiprecision;

// Expression templates are off so that Eigen sees plain value types.
using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

using IntMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<BigInt, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline BigInt numerator(const Rational& q) { return mp::numerator(q); }
inline BigInt denominator(const Rational& q) { return mp::denominator(q); }

bool is_integer(const Rational& q);

/// Exact conversion; throws std::domain_error when q has a denominator.
BigInt to_integer(const Rational& q);

template <typename Derived>
RatMatrix to_rational(const Eigen::MatrixBase<Derived>& m) {
  RatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

/// Row rank by fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);

template <typename Derived>
std::size_t rank(const Eigen::MatrixBase<Derived>& m) {
  return rank(to_rational(m));
}

/// Basis of the right kernel {x : m x = 0}; empty iff the kernel is trivial.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Least common multiple of the denominators of v (1 for an empty vector).
BigInt common_denominator(const RatVector& v);

/// Integer multiple of v with coprime entries and first nonzero entry positive.
/// Throws std::domain_error("no direction") for the zero vector.
IntVector primitive_integer_vector(const RatVector& v);

/// Multiplies by the common denominator and divides by the gcd, keeping signs.
IntVector scale_to_coprime_integers(const RatVector& v);

std::string to_string(const Rational& q);

}  // namespace utid
