#include "utid/cone_lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace utid {

std::optional<RatVector> solve_nonneg(const RatMatrix& A, const RatVector& b) {
  const Eigen::Index m = A.rows(), n = A.cols();
  if (b.size() != m) throw std::invalid_argument("solve_nonneg: dimension mismatch");
  if (m == 0) return RatVector::Constant(n, Rational(0));

  // Columns: n originals, m artificials, rhs. Last row holds reduced costs.
  const Eigen::Index rhs = n + m;
  RatMatrix T = RatMatrix::Constant(m + 1, n + m + 1, Rational(0));
  for (Eigen::Index i = 0; i < m; ++i) {
    const bool flip = b(i) < 0;
    for (Eigen::Index j = 0; j < n; ++j) T(i, j) = flip ? Rational(-A(i, j)) : A(i, j);
    T(i, n + i) = 1;
    T(i, rhs) = flip ? Rational(-b(i)) : b(i);
  }
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < m; ++i) T(m, j) -= T(i, j);
  for (Eigen::Index i = 0; i < m; ++i) T(m, rhs) -= T(i, rhs);

  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

  for (;;) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + m; ++j)
      if (T(m, j) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    Rational best;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (T(i, enter) <= 0) continue;
      Rational ratio = T(i, rhs) / T(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase-1 objective is bounded below by zero, so a ratio row always exists.
    if (leave < 0) throw std::logic_error("solve_nonneg: unbounded phase-1 objective");

    const Rational pivot = T(leave, enter);
    for (Eigen::Index j = 0; j <= rhs; ++j) T(leave, j) /= pivot;
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leave || T(i, enter) == 0) continue;
      const Rational factor = T(i, enter);
      for (Eigen::Index j = 0; j <= rhs; ++j)
        if (T(leave, j) != 0) T(i, j) -= factor * T(leave, j);
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  if (T(m, rhs) != 0) return std::nullopt;
  RatVector x = RatVector::Constant(n, Rational(0));
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto v = basis[static_cast<std::size_t>(i)];
    if (v < n) x(v) = T(i, rhs);
  }
  return x;
}

IntMatrix clear_row_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) l = mp::lcm(l, denominator(m(i, j)));
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = numerator(m(i, j)) * (l / denominator(m(i, j)));
  }
  return out;
}

std::optional<ExponentVector> feasible_nonneg(const IntMatrix& M, const std::vector<std::size_t>& forced) {
  const Eigen::Index rows = M.rows(), k = M.cols();
  if (k == 0) return std::nullopt;
  for (auto f : forced)
    if (f >= static_cast<std::size_t>(k)) throw std::out_of_range("feasible_nonneg: forced index");

  RatMatrix A;
  RatVector b;
  if (forced.empty()) {
    // Homogeneous: normalise with sum(l) = 1.
    A = RatMatrix::Constant(rows + 1, k, Rational(0));
    b = RatVector::Constant(rows + 1, Rational(0));
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < k; ++j) A(i, j) = Rational(M(i, j));
    for (Eigen::Index j = 0; j < k; ++j) A(rows, j) = 1;
    b(rows) = 1;
  } else {
    // l_f = 1 + y_f for forced f, so M y = -sum_f M_f.
    A = to_rational(M);
    b = RatVector::Constant(rows, Rational(0));
    for (auto f : forced)
      for (Eigen::Index i = 0; i < rows; ++i) b(i) -= Rational(M(i, static_cast<Eigen::Index>(f)));
  }
  auto x = solve_nonneg(A, b);
  if (!x) return std::nullopt;
  for (auto f : forced) (*x)(static_cast<Eigen::Index>(f)) += 1;
  const IntVector scaled = scale_to_coprime_integers(*x);
  ExponentVector out(static_cast<std::size_t>(k));
  for (Eigen::Index j = 0; j < k; ++j) out[static_cast<std::size_t>(j)] = scaled(j);
  return out;
}

std::optional<ExponentVector> feasible_nonneg(const IntMatrix& M, std::optional<std::size_t> forced) {
  std::vector<std::size_t> f;
  if (forced) f.push_back(*forced);
  return feasible_nonneg(M, f);
}

SupportSet support(const IntMatrix& M) {
  const auto k = static_cast<std::size_t>(M.cols());
  std::vector<bool> in(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    if (in[i]) continue;
    auto l = feasible_nonneg(M, std::optional<std::size_t>(i));
    if (!l) continue;
    for (std::size_t j = 0; j < k; ++j)
      if ((*l)[j] != 0) in[j] = true;
  }
  SupportSet out;
  for (std::size_t i = 0; i < k; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::optional<ExponentVector> full_support_solution(const IntMatrix& M) {
  const SupportSet s = support(M);
  if (s.empty()) return std::nullopt;
  auto l = feasible_nonneg(M, s);
  if (!l) throw std::logic_error("full_support_solution: support union not realisable");
  return l;
}

SupportSet lineality_filter(const IntMatrix& generators) {
  const RatMatrix A = to_rational(generators);
  SupportSet kept;
  for (Eigen::Index i = 0; i < generators.cols(); ++i) {
    RatVector b = -A.col(i);
    if (solve_nonneg(A, b)) kept.push_back(static_cast<std::size_t>(i));
  }
  return kept;
}

std::size_t cone_dim(const IntMatrix& generators) {
  if (lineality_filter(generators).size() != static_cast<std::size_t>(generators.cols()))
    throw std::domain_error("cone not a linear space");
  return rank(generators);
}

bool is_nonneg_solution(const IntMatrix& M, const ExponentVector& l) {
  if (static_cast<Eigen::Index>(l.size()) != M.cols()) return false;
  bool nonzero = false;
  for (const auto& x : l) {
    if (x < 0) return false;
    if (x != 0) nonzero = true;
  }
  if (!nonzero) return false;
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    BigInt s = 0;
    for (Eigen::Index j = 0; j < M.cols(); ++j) s += M(i, j) * l[static_cast<std::size_t>(j)];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace utid
