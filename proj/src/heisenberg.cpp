#include "utid/heisenberg.hpp"

#include <sstream>
#include <stdexcept>

#include "utid/cone_lp.hpp"

namespace utid {

namespace {

BigInt dot(const IntVector& u, const IntVector& v) {
  BigInt s = 0;
  for (Eigen::Index i = 0; i < u.size(); ++i) s += u(i) * v(i);
  return s;
}

// Corner coefficient W with corner(B(sigma,t)) = t^2 W + t sum Z, for zero-sum letters.
Rational drift(const std::vector<HeisGenerator>& letters, const Permutation& sigma) {
  const auto n = static_cast<Eigen::Index>(letters.front().n());
  IntVector prefix = IntVector::Constant(n, BigInt(0));
  BigInt pairs = 0, diag = 0;
  for (std::size_t pos = 0; pos < sigma.size(); ++pos) {
    const auto& h = letters[sigma[pos]];
    pairs += dot(prefix, h.y);
    diag += dot(h.x, h.y);
    prefix += h.x;
  }
  return Rational(pairs) + Rational(diag, 2);
}

}  // namespace

HeisGenerator HeisGenerator::identity(std::size_t n) {
  HeisGenerator h;
  h.x = IntVector::Constant(static_cast<Eigen::Index>(n), BigInt(0));
  h.y = h.x;
  h.z = 0;
  return h;
}

bool HeisGenerator::is_identity() const {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x(i) != 0 || y(i) != 0) return false;
  return z == 0;
}

bool operator==(const HeisGenerator& p, const HeisGenerator& q) {
  return p.x.size() == q.x.size() && p.x == q.x && p.y == q.y && p.z == q.z;
}

HeisGenerator heis(std::vector<BigInt> x, std::vector<BigInt> y, BigInt z) {
  if (x.size() != y.size()) throw std::invalid_argument("heis: x and y differ in length");
  HeisGenerator h;
  h.x.resize(static_cast<Eigen::Index>(x.size()));
  h.y.resize(static_cast<Eigen::Index>(y.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    h.x(static_cast<Eigen::Index>(i)) = x[i];
    h.y(static_cast<Eigen::Index>(i)) = y[i];
  }
  h.z = std::move(z);
  return h;
}

HeisGenerator mul(const HeisGenerator& p, const HeisGenerator& q) {
  if (p.n() != q.n()) throw std::invalid_argument("heisenberg: mixed n");
  HeisGenerator r;
  r.x = p.x + q.x;
  r.y = p.y + q.y;
  r.z = p.z + q.z + dot(p.x, q.y);
  return r;
}

HeisGenerator product_of_word(const std::vector<HeisGenerator>& gens, const Word& w) {
  if (w.empty()) throw std::invalid_argument("empty word");
  if (w.front() >= gens.size()) throw std::out_of_range("generator index out of range");
  HeisGenerator acc = HeisGenerator::identity(gens[w.front()].n());
  for (auto i : w) {
    if (i >= gens.size()) throw std::out_of_range("generator index out of range");
    acc = mul(acc, gens[i]);
  }
  return acc;
}

HeisDecision decide_identity_heisenberg(const std::vector<HeisGenerator>& gens) {
  HeisDecision out;
  const std::size_t k = gens.size();
  if (k == 0) {
    out.trace = "empty-generator-set";
    return out;
  }
  const std::size_t n = gens.front().n();
  for (const auto& g : gens)
    if (g.n() != n || static_cast<std::size_t>(g.y.size()) != n)
      throw std::invalid_argument("heisenberg: mixed n");

  const auto kk = static_cast<Eigen::Index>(k);
  const auto nn = static_cast<Eigen::Index>(n);
  IntMatrix lin(2 * nn, kk);
  for (Eigen::Index j = 0; j < kk; ++j)
    for (Eigen::Index r = 0; r < nn; ++r) {
      lin(r, j) = gens[static_cast<std::size_t>(j)].x(r);
      lin(nn + r, j) = gens[static_cast<std::size_t>(j)].y(r);
    }

  const SupportSet supp = support(lin);
  std::ostringstream tr;
  tr << "support={";
  for (std::size_t i = 0; i < supp.size(); ++i) tr << (i ? "," : "") << supp[i] + 1;
  tr << "}";
  if (supp.empty()) {
    out.trace = "heisenberg-no-zero-sum-combination " + tr.str();
    return out;
  }

  // Drift test on pairs inside the support.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  for (std::size_t s = 0; s < supp.size() && !pair; ++s)
    for (std::size_t t = s + 1; t < supp.size() && !pair; ++t) {
      const auto& gi = gens[supp[s]];
      const auto& gj = gens[supp[t]];
      if (dot(gi.x, gj.y) != dot(gj.x, gi.y)) pair = std::make_pair(supp[s], supp[t]);
    }

  if (!pair) {
    IntMatrix ext(2 * nn + 1, kk);
    ext.topRows(2 * nn) = lin;
    for (Eigen::Index j = 0; j < kk; ++j) {
      const auto& g = gens[static_cast<std::size_t>(j)];
      ext(2 * nn, j) = 2 * g.z - dot(g.x, g.y);
    }
    auto ell = feasible_nonneg(ext);
    if (!ell) {
      out.trace = "heisenberg-no-balanced-solution " + tr.str();
      return out;
    }
    out.reachable = true;
    out.witness = sorted_word(*ell);
    out.trace = "heisenberg-balanced-solution " + tr.str();
    return out;
  }

  auto ell = full_support_solution(lin);
  if (!ell) throw std::logic_error("heisenberg: support without solution");
  const Word base = sorted_word(*ell);
  std::vector<HeisGenerator> letters;
  std::vector<Word> parts;
  for (auto i : base) {
    letters.push_back(gens[i]);
    parts.push_back(Word{i});
  }
  const std::size_t m = base.size();
  std::size_t u = m, v = m;
  for (std::size_t pos = 0; pos < m; ++pos) {
    if (base[pos] == pair->first && u == m) u = pos;
    if (base[pos] == pair->second && v == m) v = pos;
  }
  Permutation sigma = leading_pair(m, u, v);
  Rational w = drift(letters, sigma);
  if (w == 0) {
    sigma = leading_pair(m, v, u);
    w = drift(letters, sigma);
  }
  if (w == 0) throw std::logic_error("heisenberg: pair swap left the drift at zero");
  Permutation plus = w > 0 ? sigma : sigma.reversed();
  Permutation minus = plus.reversed();

  Rational zsum = 0;
  for (const auto& h : letters) zsum += Rational(h.z) - Rational(dot(h.x, h.y), 2);
  const Rational wp = drift(letters, plus), wm = drift(letters, minus);

  for (BigInt t = 1;; t *= 2) {
    const Rational tq(t);
    const BigInt cp = to_integer(tq * tq * wp + tq * zsum);
    const BigInt cm = to_integer(tq * tq * wm + tq * zsum);
    Word wit;
    if (cp == 0) {
      wit = pumped_word(parts, plus, t);
    } else if (cm == 0) {
      wit = pumped_word(parts, minus, t);
    } else if (cp > 0 && cm < 0) {
      const BigInt g = mp::gcd(cp, cm);
      append_power(wit, pumped_word(parts, plus, t), -cm / g);
      append_power(wit, pumped_word(parts, minus, t), cp / g);
    } else {
      if (t > BigInt(1) << 40) throw std::logic_error("heisenberg: pumping did not separate signs");
      continue;
    }
    out.reachable = true;
    out.witness = std::move(wit);
    std::ostringstream os;
    os << "heisenberg-drift-pumping " << tr.str() << " pair=(" << pair->first + 1 << ","
       << pair->second + 1 << ") t=" << t;
    out.trace = os.str();
    return out;
  }
}

std::vector<HeisGenerator> h3_from_ut4(const std::vector<Matrix>& gens) {
  std::vector<HeisGenerator> out;
  for (const auto& g : gens) {
    if (g.c != 0) throw std::invalid_argument("h3_from_ut4: generator with nonzero (3,4) entry");
    out.push_back(heis({g.a}, {g.b}, g.d));
  }
  return out;
}

std::vector<HeisGenerator> h5_embed(const std::vector<Matrix>& gens) {
  std::vector<HeisGenerator> out;
  for (const auto& g : gens) {
    if (g.b != 0) throw std::invalid_argument("h5_embed: generator with nonzero (2,3) entry");
    out.push_back(heis({g.a, g.d}, {g.e, g.c}, g.f));
  }
  return out;
}

}  // namespace utid
