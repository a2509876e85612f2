#include "utid/exact.hpp"

#include <stdexcept>
#include <utility>

namespace utid {

bool is_integer(const Rational& q) { return denominator(q) == 1; }

BigInt to_integer(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("non-integral rational " + to_string(q));
  return numerator(q);
}

std::string to_string(const Rational& q) { return q.str(); }

BigInt common_denominator(const RatVector& v) {
  BigInt l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = mp::lcm(l, denominator(v(i)));
  return l;
}

std::size_t rank(const RatMatrix& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  IntMatrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    BigInt l = 1;
    for (Eigen::Index j = 0; j < cols; ++j) l = mp::lcm(l, denominator(m(i, j)));
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = numerator(m(i, j)) * (l / denominator(m(i, j)));
  }

  BigInt prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
    Eigen::Index p = r;
    while (p < rows && a(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j)
        a(i, j) = (a(r, col) * a(i, j) - a(i, col) * a(r, j)) / prev;
      a(i, col) = 0;
    }
    prev = a(r, col);
    ++r;
  }
  return static_cast<std::size_t>(r);
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  RatMatrix a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
    Eigen::Index p = r;
    while (p < rows && a(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Rational inv = Rational(1) / a(r, col);
    for (Eigen::Index j = col; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, col) == 0) continue;
      const Rational factor = a(i, col);
      for (Eigen::Index j = col; j < cols; ++j) a(i, j) -= factor * a(r, j);
    }
    pivot_cols.push_back(col);
    ++r;
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<RatVector> basis;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RatVector v = RatVector::Constant(cols, Rational(0));
    v(free) = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      v(pivot_cols[k]) = -a(static_cast<Eigen::Index>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

IntVector scale_to_coprime_integers(const RatVector& v) {
  const BigInt l = common_denominator(v);
  IntVector out(v.size());
  BigInt g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out(i) = numerator(v(i)) * (l / denominator(v(i)));
    g = mp::gcd(g, out(i));
  }
  if (g > 1)
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) /= g;
  return out;
}

IntVector primitive_integer_vector(const RatVector& v) {
  Eigen::Index first = 0;
  while (first < v.size() && v(first) == 0) ++first;
  if (first == v.size()) throw std::domain_error("no direction");
  IntVector out = scale_to_coprime_integers(v);
  if (out(first) < 0) out = -out;
  return out;
}

}  // namespace utid
