#include "utid/stats.hpp"
#include "utid/ut4.hpp"

#include <sstream>
#include <stdexcept>

namespace utid {

std::vector<BigInt> exponent_vector(const Word& w, std::size_t k) {
  std::vector<BigInt> ell(k, BigInt(0));
  for (auto i : w) {
    if (i >= k) throw std::out_of_range("generator index out of range");
    ell[i] += 1;
  }
  return ell;
}

Word sorted_word(const std::vector<BigInt>& ell) {
  Word w;
  for (std::size_t i = 0; i < ell.size(); ++i) {
    if (ell[i] < 0) throw std::invalid_argument("negative exponent");
    const auto n = ell[i].convert_to<std::size_t>();
    w.insert(w.end(), n, i);
  }
  return w;
}

void append_power(Word& out, const Word& w, const BigInt& n) {
  if (n < 0) throw std::invalid_argument("append_power: negative exponent");
  if (w.empty() || n == 0) return;
  const BigInt total = BigInt(out.size()) + BigInt(w.size()) * n;
  if (total > BigInt(kMaxWordLength)) throw std::length_error("witness word too long");
  const auto reps = n.convert_to<std::size_t>();
  out.reserve(total.convert_to<std::size_t>());
  for (std::size_t r = 0; r < reps; ++r) out.insert(out.end(), w.begin(), w.end());
}

Word pumped_word(const std::vector<Word>& parts, const Permutation& sigma, const BigInt& t) {
  if (sigma.size() != parts.size() || !sigma.valid())
    throw std::invalid_argument("pumped_word: permutation does not match parts");
  Word out;
  for (std::size_t pos = 0; pos < sigma.size(); ++pos) append_power(out, parts[sigma[pos]], t);
  return out;
}

Permutation Permutation::identity(std::size_t m) {
  Permutation p;
  p.map.resize(m);
  std::iota(p.map.begin(), p.map.end(), std::size_t{0});
  return p;
}

Permutation Permutation::reversed() const {
  Permutation p{map};
  std::reverse(p.map.begin(), p.map.end());
  return p;
}

bool Permutation::valid() const {
  std::vector<bool> seen(map.size(), false);
  for (auto i : map) {
    if (i >= map.size() || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

std::vector<Permutation> all_permutations(std::size_t m) {
  std::vector<Permutation> out;
  Permutation p = Permutation::identity(m);
  do out.push_back(p);
  while (std::next_permutation(p.map.begin(), p.map.end()));
  return out;
}

Permutation leading_pair(std::size_t m, std::size_t u, std::size_t v) {
  if (u >= m || v >= m || u == v) throw std::invalid_argument("leading_pair: bad indices");
  Permutation p;
  p.map = {u, v};
  for (std::size_t i = 0; i < m; ++i)
    if (i != u && i != v) p.map.push_back(i);
  return p;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "UT(" << m.a << "," << m.b << "," << m.c << ";" << m.d << "," << m.e << "," << m.f << ")";
  return os.str();
}

SigmaStats sigma_stats(const std::vector<Matrix>& factors, const Permutation& sigma) {
  if (sigma.size() != factors.size() || !sigma.valid())
    throw std::invalid_argument("sigma_stats: permutation does not match factor list");
  // Integer numerators: D2 = 2D, E2 = 2E, F6 = 6F, G2 = 2G.
  BigInt pa = 0, pb = 0, pd = 0, pab = 0, pab_pairs = 0;
  BigInt d_pairs = 0, e_pairs = 0, triple = 0, half_terms = 0, g_pairs = 0, g_half = 0;
  BigInt diag_ab = 0, diag_bc = 0, diag_abc = 0, diag_g = 0;
  for (std::size_t pos = 0; pos < sigma.size(); ++pos) {
    const Matrix& x = factors[sigma[pos]];
    triple += pab_pairs * x.c;
    half_terms += pab * x.c + pa * x.b * x.c;
    g_pairs += pa * x.e + pd * x.c;
    g_half += pa * x.b * x.c + pab * x.c;
    d_pairs += pa * x.b;
    e_pairs += pb * x.c;
    pab_pairs += pa * x.b;
    pa += x.a;
    pb += x.b;
    pd += x.d;
    pab += x.a * x.b;
    diag_ab += x.a * x.b;
    diag_bc += x.b * x.c;
    diag_abc += x.a * x.b * x.c;
    diag_g += x.a * x.e + x.d * x.c - x.a * x.b * x.c;
  }
  SigmaStats s;
  s.D = Rational(d_pairs) + Rational(diag_ab, 2);
  s.E = Rational(e_pairs) + Rational(diag_bc, 2);
  s.F = Rational(triple) + Rational(half_terms, 2) + Rational(diag_abc, 6);
  s.G = Rational(g_pairs) - Rational(g_half, 2) + Rational(diag_g, 2);
  return s;
}

ElementStats element_stats(const Matrix& m) {
  ElementStats s;
  s.D = Rational(m.d) - Rational(m.a * m.b, 2);
  s.E = Rational(m.e) - Rational(m.b * m.c, 2);
  s.F = Rational(m.f) - Rational(m.a * m.e + m.d * m.c, 2) + Rational(m.a * m.b * m.c, 3);
  return s;
}

ElementStats sum_element_stats(const std::vector<Matrix>& factors) {
  ElementStats total{0, 0, 0};
  for (const auto& m : factors) {
    const auto s = element_stats(m);
    total.D += s.D;
    total.E += s.E;
    total.F += s.F;
  }
  return total;
}

namespace {
BigInt integral(const Rational& q, const char* what) {
  if (!is_integer(q))
    throw std::logic_error(std::string("internal invariant violation: non-integral ") + what);
  return numerator(q);
}
}  // namespace

Matrix pumped_product(const SigmaStats& s, const ElementStats& linear, const Vec3<BigInt>& phi0_sum,
                      const BigInt& t) {
  const Rational tq(t);
  const Rational t2 = tq * tq;
  Matrix out;
  out.a = t * phi0_sum(0);
  out.b = t * phi0_sum(1);
  out.c = t * phi0_sum(2);
  out.d = integral(t2 * s.D + tq * linear.D, "d entry");
  out.e = integral(t2 * s.E + tq * linear.E, "e entry");
  out.f = integral(t2 * tq * s.F + t2 * s.G + tq * linear.F, "f entry");
  return out;
}

Matrix pumped_product(const std::vector<Matrix>& factors, const Permutation& sigma, const BigInt& t) {
  if (t < 0) throw std::invalid_argument("pumped_product: negative t");
  if (factors.empty()) throw std::invalid_argument("pumped_product: empty factor list");
  Vec3<BigInt> sum(BigInt(0), BigInt(0), BigInt(0));
  for (const auto& m : factors) sum += phi0(m);
  return pumped_product(sigma_stats(factors, sigma), sum_element_stats(factors), sum, t);
}

BigInt gamma(const Vec3<BigInt>& direction, const Matrix& m) {
  return direction(0) * m.e - direction(2) * m.d;
}

}  // namespace utid
