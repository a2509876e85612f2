#include "utid/engine.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "utid/cone_lp.hpp"
#include "utid/heisenberg.hpp"
#include "utid/oracle.hpp"
#include "utid/stats.hpp"

namespace utid {

Verdict& DecisionTriple::operator[](Target t) {
  switch (t) {
    case Target::identity: return identity;
    case Target::u2: return u2;
    case Target::u10: return u10;
  }
  throw std::invalid_argument("bad target");
}

const Verdict& DecisionTriple::operator[](Target t) const {
  return const_cast<DecisionTriple&>(*this)[t];
}

namespace {

constexpr std::array<Target, 3> kTargets{Target::identity, Target::u2, Target::u10};

struct Need {
  bool id = false, u2 = false, u10 = false;
  static Need all() { return {true, true, true}; }
  bool operator[](Target t) const {
    return t == Target::identity ? id : t == Target::u2 ? u2 : u10;
  }
};

std::string str(const BigInt& x) { return x.str(); }

std::string str(const Vec3<BigInt>& v) {
  return "(" + str(v(0)) + "," + str(v(1)) + "," + str(v(2)) + ")";
}

std::string str(const SupportSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

Verdict yes(Word w, std::string rule) { return Verdict{true, std::move(w), std::move(rule)}; }
Verdict no(std::string rule) { return Verdict{false, {}, std::move(rule)}; }
Verdict implied(const Verdict& finer, Target from) {
  return Verdict{true, finer.witness, std::string("implied-by-") + name(from)};
}

IntMatrix system(std::size_t rows, const GeneratorSet& G, const std::function<BigInt(std::size_t, std::size_t)>& entry) {
  IntMatrix M(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(G.size()));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t i = 0; i < G.size(); ++i) M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) = entry(r, i);
  return M;
}

IntMatrix phi0_columns(const GeneratorSet& G) {
  return system(3, G, [&](std::size_t r, std::size_t i) { return phi0(G[i])(static_cast<Eigen::Index>(r)); });
}

// 2*Delta_i, 2*E_i, 6*Phi_i: integer rows of the per-generator linear terms.
BigInt twice_delta(const Matrix& m) { return 2 * m.d - m.a * m.b; }
BigInt twice_eps(const Matrix& m) { return 2 * m.e - m.b * m.c; }
BigInt six_phi(const Matrix& m) { return 6 * m.f - 3 * (m.a * m.e + m.d * m.c) + 2 * m.a * m.b * m.c; }

Verdict linear_verdict(const IntMatrix& M, const std::string& yes_rule, const std::string& no_rule) {
  auto ell = feasible_nonneg(M);
  if (!ell) return no(no_rule);
  return yes(sorted_word(*ell), yes_rule);
}

GeneratorSet restrict_to(const GeneratorSet& G, const SupportSet& S) {
  GeneratorSet out;
  for (auto i : S) out.push_back(G[i]);
  return out;
}

Word lift(const Word& w, const SupportSet& S) {
  Word out;
  out.reserve(w.size());
  for (auto i : w) out.push_back(S[i]);
  return out;
}

Verdict lift(const Verdict& v, const SupportSet& S) {
  Verdict out = v;
  out.witness = lift(v.witness, S);
  return out;
}

BigInt cross_norm2(const Vec3<BigInt>& u, const Vec3<BigInt>& v) {
  const Vec3<BigInt> c = u.cross(v);
  return c.dot(c);
}

// --- pumping ---------------------------------------------------------------

struct Pumped {
  std::vector<Matrix> values;
  std::vector<Word> words;
  Permutation sigma;
  SigmaStats stats;
  ElementStats linear;
  Vec3<BigInt> sum;

  Pumped(std::vector<Matrix> v, std::vector<Word> w, Permutation s)
      : values(std::move(v)), words(std::move(w)), sigma(std::move(s)) {
    stats = sigma_stats(values, sigma);
    linear = sum_element_stats(values);
    sum = Vec3<BigInt>(BigInt(0), BigInt(0), BigInt(0));
    for (const auto& m : values) sum += phi0(m);
  }
  Matrix at(const BigInt& t) const { return pumped_product(stats, linear, sum, t); }
  Word word(const BigInt& t) const { return pumped_word(words, sigma, t); }
};

const BigInt kMaxPumpingT = BigInt(1) << 40;

template <typename F>
auto double_until(const char* what, F&& f) -> decltype(f(BigInt(1))) {
  for (BigInt t = 1; t <= kMaxPumpingT; t *= 2)
    if (auto r = f(t)) return r;
  throw std::logic_error(std::string("internal invariant violation: pumping never succeeded in ") + what);
}

// Nonnegative integer combination of tau-vectors (restricted to coords) that vanishes.
std::optional<Word> cancel(const std::vector<std::pair<const Pumped*, BigInt>>& items, std::array<bool, 3> coords) {
  std::vector<Vec3<BigInt>> taus;
  for (const auto& [p, t] : items) {
    const Matrix q = p->at(t);
    if (!in_u1(q)) throw std::logic_error("internal invariant violation: pumped element outside U1");
    taus.push_back(tau(q));
  }
  std::vector<Eigen::Index> rows;
  for (Eigen::Index r = 0; r < 3; ++r)
    if (coords[static_cast<std::size_t>(r)]) rows.push_back(r);
  IntMatrix M(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(items.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < items.size(); ++j)
      M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = taus[j](rows[r]);
  auto x = feasible_nonneg(M);
  if (!x) return std::nullopt;
  Word w;
  for (std::size_t j = 0; j < items.size(); ++j)
    if ((*x)[j] != 0) append_power(w, items[j].first->word(items[j].second), (*x)[j]);
  return w;
}

// A word whose product lies in U1, with its tau-vector.
struct Piece {
  Word word;
  Vec3<BigInt> tau;
};

// Distinct U1 products of short words, found breadth-first over products.
void short_u1_words(const GeneratorSet& G, std::vector<Piece>& out) {
  constexpr std::size_t kMaxLen = 8, kMaxStates = 3000;
  std::set<std::array<BigInt, 6>> seen;
  std::vector<std::pair<Word, Matrix>> frontier{{Word{}, Matrix{}}}, next;
  for (std::size_t len = 1; len <= kMaxLen && !frontier.empty(); ++len) {
    next.clear();
    for (const auto& [w, m] : frontier)
      for (std::size_t g = 0; g < G.size(); ++g) {
        const Matrix p = mul(m, G[g]);
        if (!seen.insert({p.a, p.b, p.c, p.d, p.e, p.f}).second) continue;
        if (seen.size() > kMaxStates) return;
        Word pw = w;
        pw.push_back(g);
        if (in_u1(p)) out.push_back({pw, tau(p)});
        next.emplace_back(std::move(pw), p);
      }
    frontier.swap(next);
  }
}

// U1 products of shuffled orderings of a zero-sum exponent vector and small multiples.
void shuffled_u1_words(const GeneratorSet& G, const ExponentVector& ell, std::vector<Piece>& out) {
  constexpr std::size_t kSamples = 400, kMaxLetters = 1024;
  Word base = sorted_word(ell);
  if (base.size() > kMaxLetters) return;
  std::set<std::array<BigInt, 6>> seen;
  std::mt19937_64 rng(0x5eed);
  for (std::size_t copies = 1; copies <= 4 && copies * base.size() <= kMaxLetters; copies *= 2) {
    Word w;
    for (std::size_t c = 0; c < copies; ++c) w.insert(w.end(), base.begin(), base.end());
    for (std::size_t k = 0; k < kSamples; ++k) {
      std::shuffle(w.begin(), w.end(), rng);
      const Matrix p = product_of_word(G, w);
      if (!seen.insert({p.a, p.b, p.c, p.d, p.e, p.f}).second) continue;
      out.push_back({w, tau(p)});
    }
  }
}

BigInt to_big(__int128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  BigInt out = BigInt(static_cast<std::uint64_t>(u >> 64));
  out <<= 64;
  out += BigInt(static_cast<std::uint64_t>(u));
  return neg ? BigInt(-out) : out;
}

// A nonnegative integer combination of pieces.
struct Combination {
  std::vector<std::size_t> idx;
  std::vector<BigInt> coef;
  BigInt cost;  // total word length
};

// Up to limit pieces worth enumerating: the LP vertex support, the piece best
// aligned with each of a fixed set of directions, then the shortest pieces.
std::vector<std::size_t> select_candidates(const std::vector<Piece>& pieces, const std::vector<Eigen::Index>& rows,
                                           const std::vector<std::size_t>& lp_support, std::size_t limit) {
  const BigInt bound = BigInt(1) << 40;
  std::vector<std::size_t> usable;
  std::vector<std::array<double, 3>> unit(pieces.size());
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    bool ok = true;
    double norm = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const BigInt& x = pieces[j].tau(rows[i]);
      if (abs(x) >= bound) ok = false;
      unit[j][i] = x.convert_to<double>();
      norm += unit[j][i] * unit[j][i];
    }
    if (!ok || norm == 0) continue;
    for (std::size_t i = 0; i < rows.size(); ++i) unit[j][i] /= std::sqrt(norm);
    usable.push_back(j);
  }
  std::vector<std::size_t> out;
  auto add = [&](std::size_t j) {
    if (out.size() < limit && std::find(out.begin(), out.end(), j) == out.end()) out.push_back(j);
  };
  for (auto j : lp_support)
    if (std::find(usable.begin(), usable.end(), j) != usable.end()) add(j);
  // Directions with entries in {-1, 0, 1}.
  const std::size_t r = rows.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::array<double, 3> dir{};
    std::size_t c = code;
    bool nonzero = false;
    for (std::size_t i = 0; i < r; ++i, c /= 3) {
      dir[i] = static_cast<double>(c % 3) - 1.0;
      nonzero = nonzero || dir[i] != 0;
    }
    if (!nonzero) continue;
    double best = -2;
    std::size_t arg = 0;
    for (auto j : usable) {
      double dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += dir[i] * unit[j][i];
      if (dot > best) {
        best = dot;
        arg = j;
      }
    }
    if (best > -2) add(arg);
  }
  std::vector<std::size_t> by_length = usable;
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](std::size_t x, std::size_t y) { return pieces[x].word.size() < pieces[y].word.size(); });
  for (auto j : by_length) add(j);
  return out;
}

// Cheapest nonnegative integer combination of pieces whose tau vanishes on
// coords, by total word length. Candidates: the LP vertex and the strictly
// positive cofactor kernels of (r+1)-subsets of the selected pieces.
std::optional<Combination> cheapest_cancellation(const std::vector<Piece>& pieces, std::array<bool, 3> coords) {
  constexpr std::size_t kMaxExact = 64;
  if (pieces.empty()) return std::nullopt;
  std::vector<Eigen::Index> rows;
  for (Eigen::Index r = 0; r < 3; ++r)
    if (coords[static_cast<std::size_t>(r)]) rows.push_back(r);
  const std::size_t r = rows.size(), n = pieces.size();
  IntMatrix M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j)
      M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = pieces[j].tau(rows[i]);
  const auto x = feasible_nonneg(M);
  if (!x) return std::nullopt;

  Combination best;
  for (std::size_t j = 0; j < n; ++j)
    if ((*x)[j] != 0) {
      best.idx.push_back(j);
      best.coef.push_back((*x)[j]);
      best.cost += (*x)[j] * pieces[j].word.size();
    }

  const std::vector<std::size_t> cand = select_candidates(pieces, rows, best.idx, kMaxExact);
  const std::size_t c = cand.size();
  std::vector<std::array<__int128, 3>> v(c);
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t i = 0; i < r; ++i) v[j][i] = pieces[cand[j]].tau(rows[i]).convert_to<long long>();
  // r x r minors of the candidate columns, indexed by sorted index tuples.
  std::vector<__int128> minor(r == 1 ? c : r == 2 ? c * c : c * c * c, 0);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> __int128& {
    return r == 1 ? minor[i] : r == 2 ? minor[i * c + j] : minor[(i * c + j) * c + k];
  };
  for (std::size_t i = 0; i < c; ++i) {
    if (r == 1) at(i, 0, 0) = v[i][0];
    for (std::size_t j = i + 1; j < c && r >= 2; ++j) {
      if (r == 2) at(i, j, 0) = v[i][0] * v[j][1] - v[i][1] * v[j][0];
      for (std::size_t k = j + 1; k < c && r == 3; ++k)
        at(i, j, k) = v[i][0] * (v[j][1] * v[k][2] - v[j][2] * v[k][1]) -
                      v[j][0] * (v[i][1] * v[k][2] - v[i][2] * v[k][1]) +
                      v[k][0] * (v[i][1] * v[j][2] - v[i][2] * v[j][1]);
    }
  }
  auto g128 = [](__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  __int128 best_small = -1;
  std::array<std::size_t, 4> small_idx{};
  std::array<__int128, 4> small_coef{};
  auto offer = [&](const std::array<std::size_t, 4>& ids, const std::array<__int128, 4>& ks) {
    bool pos = true, neg = true;
    for (std::size_t i = 0; i <= r; ++i) {
      pos = pos && ks[i] > 0;
      neg = neg && ks[i] < 0;
    }
    if (!pos && !neg) return;
    __int128 g = 0;
    for (std::size_t i = 0; i <= r; ++i) g = g128(g, ks[i]);
    __int128 cost = 0;
    std::array<__int128, 4> q{};
    for (std::size_t i = 0; i <= r; ++i) {
      q[i] = (neg ? -ks[i] : ks[i]) / g;
      if (q[i] > (__int128(1) << 80)) return;
      cost += q[i] * static_cast<__int128>(pieces[cand[ids[i]]].word.size());
    }
    if (best_small < 0 || cost < best_small) {
      best_small = cost;
      small_idx = ids;
      small_coef = q;
    }
  };
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i + 1; j < c; ++j) {
      if (r == 1) {
        offer({i, j, 0, 0}, {at(j, 0, 0), -at(i, 0, 0), 0, 0});
        continue;
      }
      for (std::size_t k = j + 1; k < c; ++k) {
        if (r == 2) {
          offer({i, j, k, 0}, {at(j, k, 0), -at(i, k, 0), at(i, j, 0), 0});
          continue;
        }
        for (std::size_t l = k + 1; l < c; ++l)
          offer({i, j, k, l}, {at(j, k, l), -at(i, k, l), at(i, j, l), -at(i, j, k)});
      }
    }
  if (best_small >= 0 && to_big(best_small) < best.cost) {
    best.idx.clear();
    best.coef.clear();
    for (std::size_t i = 0; i <= r; ++i) {
      best.idx.push_back(cand[small_idx[i]]);
      best.coef.push_back(to_big(small_coef[i]));
    }
    best.cost = to_big(best_small);
  }
  return best;
}

// Appends g_{o(1)}^{t n_1} ... for orderings o of the parts of ell, whole or
// split into nearly equal blocks per generator.
void pumped_pieces(const GeneratorSet& G, const ExponentVector& ell, long t, std::vector<Piece>& out) {
  constexpr std::size_t kOrders = 24;
  std::mt19937_64 rng(0xfeed + static_cast<std::uint64_t>(t));
  BigInt most = 0;
  for (const auto& x : ell) most = std::max(most, x);
  for (long split : {1, 2, 3, 4, 6, 8, 12, 16, 24, 32}) {
    if (split > 1 && BigInt(split) > most * t) break;
    std::vector<std::pair<std::size_t, BigInt>> parts;
    for (std::size_t i = 0; i < ell.size(); ++i) {
      if (ell[i] == 0) continue;
      const BigInt q = ell[i] / split;
      BigInt rest = ell[i];
      for (long s = 0; s + 1 < split; ++s) {
        if (q != 0) parts.emplace_back(i, q);
        rest -= q;
      }
      parts.emplace_back(i, rest);
    }
    std::vector<std::vector<std::pair<std::size_t, BigInt>>> orders;
    auto o = parts;
    if (split == 1 && parts.size() <= 4) {
      std::sort(o.begin(), o.end());
      do orders.push_back(o);
      while (std::next_permutation(o.begin(), o.end()));
    } else {
      for (std::size_t k = 0; k < kOrders; ++k) {
        std::shuffle(o.begin(), o.end(), rng);
        orders.push_back(o);
      }
    }
    for (const auto& ord : orders) {
      Piece pc;
      Matrix m;
      for (const auto& [i, n] : ord) {
        const BigInt e = n * t;
        m = mul(m, power(G[i], e.convert_to<std::uint64_t>()));
        append_power(pc.word, Word{i}, e);
      }
      pc.tau = tau(m);
      out.push_back(std::move(pc));
    }
  }
}

// Cheap zero combination of U1 pieces: short words and shuffles first, then
// pumped products for growing t, one level past the first success. Nothing
// when every combination found exceeds the compact length budget.
std::optional<Word> compact_cancel(const GeneratorSet& G, const ExponentVector& ell, std::array<bool, 3> coords) {
  constexpr std::size_t kMaxCompactWitness = kMaxWordLength / 4, kMaxItemLetters = std::size_t{1} << 16;
  std::vector<Piece> pool;
  short_u1_words(G, pool);
  shuffled_u1_words(G, ell, pool);
  std::optional<Combination> best = cheapest_cancellation(pool, coords);
  BigInt letters = 0;
  for (const auto& x : ell) letters += x;
  if (!(best && best->cost <= 64)) {
    int extra = -1;
    for (long t : {1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64}) {
      if (letters * t > BigInt(kMaxItemLetters) || extra == 0) break;
      pumped_pieces(G, ell, t, pool);
      auto c = cheapest_cancellation(pool, coords);
      if (c && (!best || c->cost < best->cost)) best = std::move(c);
      if (best && best->cost <= BigInt(kMaxCompactWitness)) extra = extra < 0 ? 1 : extra - 1;
    }
  }
  if (!best || best->cost > BigInt(kMaxCompactWitness)) return std::nullopt;
  Word w;
  for (std::size_t i = 0; i < best->idx.size(); ++i) append_power(w, pool[best->idx[i]].word, best->coef[i]);
  return w;
}

bool positively_spans(const std::vector<IntVector>& vs, Eigen::Index dim) {
  IntMatrix M(dim, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) M.col(static_cast<Eigen::Index>(j)) = vs[j];
  if (rank(M) != static_cast<std::size_t>(dim)) return false;
  std::vector<std::size_t> all(vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) all[j] = j;
  return feasible_nonneg(M, all).has_value();
}

IntVector as_vec(const Vec2<BigInt>& v) {
  IntVector out(2);
  out << v(0), v(1);
  return out;
}

// Letters of a base word, one part per letter.
struct Letters {
  Word base;
  std::vector<Matrix> values;
  std::vector<Word> words;

  Letters(const GeneratorSet& G, Word w) : base(std::move(w)) {
    for (auto i : base) {
      values.push_back(G[i]);
      words.push_back(Word{i});
    }
  }
  std::size_t first(std::size_t gen) const {
    for (std::size_t s = 0; s < base.size(); ++s)
      if (base[s] == gen) return s;
    throw std::logic_error("letter not present in base word");
  }
};

// Ordering of the base letters with nonzero statistic, chosen among the two
// orderings that put generators i, j first.
template <typename Stat>
Permutation nonzero_leading_pair(const Letters& L, std::size_t i, std::size_t j, Stat&& nonzero) {
  const std::size_t u = L.first(i), v = L.first(j), m = L.base.size();
  Permutation s = leading_pair(m, u, v);
  if (nonzero(sigma_stats(L.values, s))) return s;
  s = leading_pair(m, v, u);
  if (nonzero(sigma_stats(L.values, s))) return s;
  throw std::logic_error("internal invariant violation: pair swap left statistic at zero");
}

// --- the recursive solver --------------------------------------------------

class Solver {
 public:
  DecisionTriple solve(const GeneratorSet& G, Need need);
  DecisionTriple dim0(const GeneratorSet& G, Need need);
  DecisionTriple dim1(const GeneratorSet& G, const Vec3<BigInt>& dir, const std::vector<BigInt>& rho, Need need);
  DecisionTriple dim2(const GeneratorSet& G, const Vec3<BigInt>& normal, Need need);
  DecisionTriple dim3(const GeneratorSet& G, Need need);

 private:
  Word drift_witness(const GeneratorSet& G, const std::vector<BigInt>& rho, const std::vector<BigInt>& gam,
                     const IntMatrix& lambda, CaseTrace& trace);
  Word d_pumping_witness(const GeneratorSet& G, CaseTrace& trace);
  Word four_vector_witness(const GeneratorSet& G, const IntMatrix& l0, CaseTrace& trace);
  DecisionTriple plane_oblique(const GeneratorSet& G, const Vec3<BigInt>& normal, Need need);
  DecisionTriple plane_b_zero(const GeneratorSet& G, Need need);
  DecisionTriple plane_kappa_zero(const GeneratorSet& G, Need need);
  DecisionTriple plane_alpha_zero(const GeneratorSet& G, Need need);
};

// Fills u2/u10 from finer yes-verdicts.
void close_upward(DecisionTriple& out, Need need) {
  if (need.u2 && !out.u2.reachable && out.identity.reachable) out.u2 = implied(out.identity, Target::identity);
  if (need.u10 && !out.u10.reachable) {
    if (out.u2.reachable) out.u10 = implied(out.u2, Target::u2);
    else if (out.identity.reachable) out.u10 = implied(out.identity, Target::identity);
  }
}

DecisionTriple Solver::solve(const GeneratorSet& G, Need need) {
  DecisionTriple out;
  out.trace.step = "decide k=" + std::to_string(G.size());
  if (G.empty()) {
    for (auto t : kTargets)
      if (need[t]) out[t] = no("empty-generator-set");
    return out;
  }
  const IntMatrix gens = phi0_columns(G);
  const SupportSet kept = lineality_filter(gens);
  if (kept.size() < G.size()) {
    out.trace.facts.push_back("lineality-filter kept=" + str(kept));
    DecisionTriple child = solve(restrict_to(G, kept), need);
    for (auto t : kTargets)
      if (need[t]) out[t] = lift(child[t], kept);
    out.trace.children.push_back(std::move(child.trace));
    return out;
  }
  const std::size_t dim = rank(gens);
  out.trace.facts.push_back("cone-dim=" + std::to_string(dim));
  DecisionTriple sub;
  switch (dim) {
    case 0: sub = dim0(G, need); break;
    case 1: {
      Vec3<BigInt> dir;
      std::vector<BigInt> rho;
      for (const auto& m : G) {
        if (phi0(m) != Vec3<BigInt>::Zero()) {
          RatVector v(3);
          v << Rational(m.a), Rational(m.b), Rational(m.c);
          const IntVector p = primitive_integer_vector(v);
          dir = Vec3<BigInt>(p(0), p(1), p(2));
          break;
        }
      }
      Eigen::Index c = 0;
      while (dir(c) == 0) ++c;
      for (const auto& m : G) rho.push_back(phi0(m)(c) / dir(c));
      sub = dim1(G, dir, rho, need);
      break;
    }
    case 2: sub = dim2(G, plane_normal(G), need); break;
    default: sub = dim3(G, need); break;
  }
  for (auto t : kTargets)
    if (need[t]) out[t] = sub[t];
  out.trace.children.push_back(std::move(sub.trace));
  return out;
}

DecisionTriple Solver::dim0(const GeneratorSet& G, Need need) {
  for (const auto& m : G)
    if (!in_u1(m)) throw std::invalid_argument("case_dim0: generator outside U1");
  DecisionTriple out;
  out.trace.step = "dim0: abelian U1, linear systems on (d,e,f)";
  auto rows = [&](std::size_t n) {
    return system(n, G, [&](std::size_t r, std::size_t i) { return tau(G[i])(static_cast<Eigen::Index>(r)); });
  };
  if (need.id) out.identity = linear_verdict(rows(3), "dim0-linear-solution", "dim0-no-zero-sum-d-e-f");
  if (need.u2 && !out.identity.reachable)
    out.u2 = linear_verdict(rows(2), "dim0-linear-solution", "dim0-no-zero-sum-d-e");
  if (need.u10 && !out.identity.reachable && !out.u2.reachable)
    out.u10 = linear_verdict(rows(1), "dim0-linear-solution", "dim0-no-zero-sum-d");
  close_upward(out, need);
  return out;
}

DecisionTriple Solver::dim1(const GeneratorSet& G, const Vec3<BigInt>& dir, const std::vector<BigInt>& rho,
                            Need need) {
  if (rho.size() != G.size()) throw std::invalid_argument("case_dim1: rho size mismatch");
  for (std::size_t i = 0; i < G.size(); ++i)
    if (phi0(G[i]) != Vec3<BigInt>(dir * rho[i])) throw std::invalid_argument("case_dim1: phi0 not along direction");
  DecisionTriple out;
  out.trace.step = "dim1: direction=" + str(dir);

  const IntMatrix u10_sys = system(2, G, [&](std::size_t r, std::size_t i) { return r == 0 ? rho[i] : twice_delta(G[i]); });
  const IntMatrix lambda = system(3, G, [&](std::size_t r, std::size_t i) {
    return r == 0 ? rho[i] : r == 1 ? twice_delta(G[i]) : twice_eps(G[i]);
  });

  if (need.id) {
    const SupportSet S = support(lambda);
    out.trace.facts.push_back("support(Lambda)=" + str(S));
    if (S.empty()) {
      out.identity = no("dim1-lambda-empty");
    } else if (S.size() < G.size()) {
      DecisionTriple child = solve(restrict_to(G, S), Need{true, false, false});
      out.identity = lift(child.identity, S);
      out.trace.children.push_back(std::move(child.trace));
    } else {
      std::vector<BigInt> gam;
      for (const auto& m : G) gam.push_back(gamma(dir, m));
      bool balanced = true;
      for (std::size_t i = 0; i < G.size() && balanced; ++i)
        for (std::size_t j = i + 1; j < G.size() && balanced; ++j)
          if (rho[i] * gam[j] != rho[j] * gam[i]) balanced = false;
      if (balanced) {
        IntMatrix ext(4, static_cast<Eigen::Index>(G.size()));
        ext.topRows(3) = lambda;
        for (std::size_t i = 0; i < G.size(); ++i) ext(3, static_cast<Eigen::Index>(i)) = six_phi(G[i]);
        out.identity = linear_verdict(ext, "dim1-balanced-solution", "dim1-no-balanced-solution");
      } else {
        out.identity = yes(drift_witness(G, rho, gam, lambda, out.trace), "dim1-drift-pumping");
      }
    }
  }
  if (need.u2 && !out.identity.reachable)
    out.u2 = linear_verdict(lambda, "dim1-linear-solution", "dim1-linear-system-infeasible");
  if (need.u10 && !out.identity.reachable && !out.u2.reachable)
    out.u10 = linear_verdict(u10_sys, "dim1-linear-solution", "dim1-linear-system-infeasible");
  close_upward(out, need);
  return out;
}

Word Solver::drift_witness(const GeneratorSet& G, const std::vector<BigInt>& rho, const std::vector<BigInt>& gam,
                           const IntMatrix& lambda, CaseTrace& trace) {
  auto ell = full_support_solution(lambda);
  if (!ell) throw std::logic_error("internal invariant violation: empty Lambda in drift case");
  if (auto w = compact_cancel(G, *ell, {true, true, true})) {
    trace.facts.push_back("drift: compact cancellation length=" + std::to_string(w->size()));
    return *w;
  }
  std::size_t pi = 0, pj = 0;
  bool found = false;
  for (std::size_t i = 0; i < G.size() && !found; ++i)
    for (std::size_t j = i + 1; j < G.size() && !found; ++j)
      if (rho[i] * gam[j] != rho[j] * gam[i]) {
        pi = i;
        pj = j;
        found = true;
      }
  const Letters L(G, sorted_word(*ell));
  const Permutation s = nonzero_leading_pair(L, pi, pj, [](const SigmaStats& st) { return st.G != 0; });
  const Pumped p(L.values, L.words, s), q(L.values, L.words, s.reversed());
  BigInt used;
  auto w = double_until("dim1 drift", [&](const BigInt& t) {
    used = t;
    return cancel({{&p, t}, {&q, t}}, {true, true, true});
  });
  trace.facts.push_back("drift pair=(" + std::to_string(pi + 1) + "," + std::to_string(pj + 1) + ") t=" + str(used));
  return *w;
}

Vec3<BigInt> plane_normal_impl(const GeneratorSet& G) {
  RatMatrix rows(static_cast<Eigen::Index>(G.size()), 3);
  for (std::size_t i = 0; i < G.size(); ++i) {
    rows(static_cast<Eigen::Index>(i), 0) = Rational(G[i].a);
    rows(static_cast<Eigen::Index>(i), 1) = Rational(G[i].b);
    rows(static_cast<Eigen::Index>(i), 2) = Rational(G[i].c);
  }
  const auto K = kernel_basis(rows);
  if (K.size() != 1) throw std::invalid_argument("plane_normal: phi0 images do not span a plane");
  const IntVector p = primitive_integer_vector(K.front());
  return Vec3<BigInt>(p(0), p(1), p(2));
}

DecisionTriple Solver::dim2(const GeneratorSet& G, const Vec3<BigInt>& normal, Need need) {
  for (const auto& m : G)
    if (normal.dot(phi0(m)) != 0) throw std::invalid_argument("case_dim2: generator off the plane");
  const int zeros = (normal(0) == 0) + (normal(1) == 0) + (normal(2) == 0);
  DecisionTriple out;
  if (zeros <= 1) out = plane_oblique(G, normal, need);
  else if (normal(0) == 0 && normal(2) == 0) out = plane_b_zero(G, need);
  else if (normal(0) == 0 && normal(1) == 0) out = plane_kappa_zero(G, need);
  else out = plane_alpha_zero(G, need);
  out.trace.step = "dim2: normal=" + str(normal) + "; " + out.trace.step;
  return out;
}

DecisionTriple Solver::plane_oblique(const GeneratorSet& G, const Vec3<BigInt>& normal, Need need) {
  DecisionTriple out;
  out.trace.step = "at most one zero in the normal";
  const BigInt& p = normal(0);
  const BigInt& r = normal(2);
  const IntMatrix L = phi0_columns(G);
  IntMatrix l0(4, static_cast<Eigen::Index>(G.size()));
  l0.topRows(3) = L;
  for (std::size_t i = 0; i < G.size(); ++i)
    l0(3, static_cast<Eigen::Index>(i)) = p * twice_delta(G[i]) - r * twice_eps(G[i]);

  if (need.id || need.u2) {
    const SupportSet S = support(l0);
    out.trace.facts.push_back("support(L0)=" + str(S));
    if (S.empty()) {
      if (need.id) out.identity = no("plane-L0-empty");
      if (need.u2) out.u2 = no("plane-L0-empty");
    } else if (S.size() < G.size()) {
      DecisionTriple child = solve(restrict_to(G, S), Need{need.id, need.u2, false});
      if (need.id) out.identity = lift(child.identity, S);
      if (need.u2) out.u2 = lift(child.u2, S);
      out.trace.children.push_back(std::move(child.trace));
    } else {
      Word w = four_vector_witness(G, l0, out.trace);
      if (need.id) out.identity = yes(w, "plane-four-vector-pumping");
      if (need.u2) out.u2 = yes(std::move(w), "plane-four-vector-pumping");
    }
  }
  if (need.u10 && !out.identity.reachable && !out.u2.reachable) {
    if (r != 0) {
      out.u10 = yes(d_pumping_witness(G, out.trace), "plane-d-pumping");
    } else {
      IntMatrix sys(4, static_cast<Eigen::Index>(G.size()));
      sys.topRows(3) = L;
      for (std::size_t i = 0; i < G.size(); ++i) sys(3, static_cast<Eigen::Index>(i)) = twice_delta(G[i]);
      out.u10 = linear_verdict(sys, "plane-L0-solution", "plane-L0-empty");
    }
  }
  close_upward(out, need);
  return out;
}

Word Solver::d_pumping_witness(const GeneratorSet& G, CaseTrace& trace) {
  auto ell = full_support_solution(phi0_columns(G));
  if (!ell || std::any_of(ell->begin(), ell->end(), [](const BigInt& x) { return x == 0; }))
    throw std::logic_error("internal invariant violation: supp(L) is not full");
  if (auto w = compact_cancel(G, *ell, {true, false, false})) {
    trace.facts.push_back("d-pumping: compact cancellation length=" + std::to_string(w->size()));
    return *w;
  }
  std::size_t pi = 0, pj = 0;
  bool found = false;
  for (std::size_t i = 0; i < G.size() && !found; ++i)
    for (std::size_t j = i + 1; j < G.size() && !found; ++j)
      if (G[i].a * G[j].b != G[j].a * G[i].b) {
        pi = i;
        pj = j;
        found = true;
      }
  if (!found) throw std::logic_error("internal invariant violation: no pair with a_i b_j != a_j b_i");
  const Letters Ls(G, sorted_word(*ell));
  const Permutation s = nonzero_leading_pair(Ls, pi, pj, [](const SigmaStats& st) { return st.D != 0; });
  const Pumped P(Ls.values, Ls.words, s), Q(Ls.values, Ls.words, s.reversed());
  BigInt used;
  auto w = double_until("d pumping", [&](const BigInt& t) {
    used = t;
    return cancel({{&P, t}, {&Q, t}}, {true, false, false});
  });
  trace.facts.push_back("d-pumping t=" + str(used));
  return *w;
}

Word Solver::four_vector_witness(const GeneratorSet& G, const IntMatrix& l0, CaseTrace& trace) {
  auto ell = full_support_solution(l0);
  if (!ell || std::any_of(ell->begin(), ell->end(), [](const BigInt& x) { return x == 0; }))
    throw std::logic_error("internal invariant violation: supp(L0) is not full");
  if (auto w = compact_cancel(G, *ell, {true, true, true})) {
    trace.facts.push_back("four-vector: compact cancellation length=" + std::to_string(w->size()));
    return *w;
  }

  // Step 1: two pumped products whose (d,e) parts point both ways along the line.
  std::size_t pi = 0, pj = 0;
  bool found = false;
  for (std::size_t i = 0; i < G.size() && !found; ++i)
    for (std::size_t j = i + 1; j < G.size() && !found; ++j)
      if (G[i].a * G[j].b != G[j].a * G[i].b || G[i].b * G[j].c != G[j].b * G[i].c) {
        pi = i;
        pj = j;
        found = true;
      }
  if (!found) throw std::logic_error("internal invariant violation: (D,E) identically zero");
  const Letters Ls(G, sorted_word(*ell));
  const Permutation s1 =
      nonzero_leading_pair(Ls, pi, pj, [](const SigmaStats& st) { return st.D != 0 || st.E != 0; });
  const Pumped P1(Ls.values, Ls.words, s1), P2(Ls.values, Ls.words, s1.reversed());
  const BigInt t0 = *double_until("plane step 1", [&](const BigInt& t) -> std::optional<BigInt> {
    const Vec2<BigInt> u = phi1(P1.at(t)), v = phi1(P2.at(t));
    if (u == Vec2<BigInt>::Zero() || v == Vec2<BigInt>::Zero() || u.dot(v) >= 0) return std::nullopt;
    return t;
  });

  // Step 2: three products with zero phi0-sum spanning the plane, pumped towards +-f.
  found = false;
  for (std::size_t i = 0; i < G.size() && !found; ++i)
    for (std::size_t j = i + 1; j < G.size() && !found; ++j)
      if (cross_norm2(phi0(G[i]), phi0(G[j])) != 0) {
        pi = i;
        pj = j;
        found = true;
      }
  if (!found) throw std::logic_error("internal invariant violation: no independent pair in a plane");
  ExponentVector ell3 = *ell;
  ell3[pi] -= 1;
  ell3[pj] -= 1;
  const Word b3 = sorted_word(ell3);
  const std::vector<Matrix> parts{G[pi], G[pj], product_of_word(G, b3)};
  const std::vector<Word> part_words{Word{pi}, Word{pj}, b3};
  std::optional<Permutation> splus, sminus;
  for (const auto& s : all_permutations(3)) {
    const Rational F = sigma_stats(parts, s).F;
    if (F > 0 && !splus) splus = s;
    if (F < 0 && !sminus) sminus = s;
  }
  if (!splus || !sminus) throw std::logic_error("internal invariant violation: no sign-opposite F orderings");
  const Pumped P3(parts, part_words, *splus), P4(parts, part_words, *sminus);

  BigInt t1;
  auto w = double_until("plane step 2", [&](const BigInt& t) {
    t1 = t;
    return cancel({{&P1, t0}, {&P2, t0}, {&P3, t}, {&P4, t}}, {true, true, true});
  });
  trace.facts.push_back("four-vector t0=" + str(t0) + " t1=" + str(t1));
  return *w;
}

DecisionTriple Solver::plane_b_zero(const GeneratorSet& G, Need need) {
  DecisionTriple out;
  out.trace.step = "b = 0: H5 embedding";
  if (need.id) {
    const HeisDecision h = decide_identity_heisenberg(h5_embed(G));
    out.trace.facts.push_back("h5: " + h.trace);
    const std::string rule = "h5-" + h.trace.substr(0, h.trace.find(' '));
    out.identity = h.reachable ? yes(*h.witness, rule) : no(rule);
  }
  if (need.u2 && !out.identity.reachable) {
    const IntMatrix sys = system(4, G, [&](std::size_t r, std::size_t i) {
      const Matrix& m = G[i];
      return r == 0 ? m.a : r == 1 ? m.c : r == 2 ? m.d : m.e;
    });
    out.u2 = linear_verdict(sys, "b-zero-linear-solution", "b-zero-linear-system-infeasible");
  }
  if (need.u10 && !out.identity.reachable && !out.u2.reachable) {
    const IntMatrix sys = system(3, G, [&](std::size_t r, std::size_t i) {
      const Matrix& m = G[i];
      return r == 0 ? m.a : r == 1 ? m.c : m.d;
    });
    out.u10 = linear_verdict(sys, "b-zero-linear-solution", "b-zero-linear-system-infeasible");
  }
  close_upward(out, need);
  return out;
}

DecisionTriple Solver::plane_kappa_zero(const GeneratorSet& G, Need need) {
  DecisionTriple out;
  out.trace.step = "c = 0: derived set";
  if (need.id || need.u2) {
    const GeneratorSet D = derive_prime_corrected(G);
    DecisionTriple child = solve(D, Need{false, need.id, need.u2});
    out.trace.facts.push_back("identity -> u2 and u2 -> u10 on UT(b,a,e;ab-d,f,0)");
    if (need.id) {
      out.identity = child.u2;
      out.identity.rule = "derived-set:" + child.u2.rule;
    }
    if (need.u2) {
      out.u2 = child.u10;
      out.u2.rule = "derived-set:" + child.u10.rule;
    }
    out.trace.children.push_back(std::move(child.trace));
  }
  if (need.u10 && !out.identity.reachable && !out.u2.reachable) {
    const HeisDecision h = decide_identity_heisenberg(h3_from_ut4(G));
    out.trace.facts.push_back("h3: " + h.trace);
    const std::string rule = "h3-" + h.trace.substr(0, h.trace.find(' '));
    out.u10 = h.reachable ? yes(*h.witness, rule) : no(rule);
  }
  close_upward(out, need);
  return out;
}

DecisionTriple Solver::plane_alpha_zero(const GeneratorSet& G, Need need) {
  DecisionTriple out;
  out.trace.step = "a = 0: anti-involution";
  if (need.id || need.u2) {
    GeneratorSet R;
    for (const auto& m : G) R.push_back(anti_involution(m));
    DecisionTriple child = solve(R, Need{need.id, need.u2, false});
    for (auto t : {Target::identity, Target::u2}) {
      if (!need[t]) continue;
      out[t] = child[t];
      std::reverse(out[t].witness.begin(), out[t].witness.end());
      out[t].rule = "anti-involution:" + child[t].rule;
    }
    out.trace.children.push_back(std::move(child.trace));
  }
  if (need.u10 && !out.identity.reachable && !out.u2.reachable) {
    const IntMatrix sys = system(3, G, [&](std::size_t r, std::size_t i) {
      const Matrix& m = G[i];
      return r == 0 ? m.b : r == 1 ? m.c : m.d;
    });
    out.u10 = linear_verdict(sys, "a-zero-linear-solution", "a-zero-linear-system-infeasible");
  }
  close_upward(out, need);
  return out;
}

DecisionTriple Solver::dim3(const GeneratorSet& G, Need need) {
  DecisionTriple out;
  out.trace.step = "dim3: pumped products span R^3";
  const std::size_t k = G.size();
  std::array<std::size_t, 3> tri{};
  bool found = false;
  for (std::size_t i = 0; i < k && !found; ++i)
    for (std::size_t j = i + 1; j < k && !found; ++j)
      for (std::size_t l = j + 1; l < k && !found; ++l)
        if (phi0(G[i]).dot(phi0(G[j]).cross(phi0(G[l]))) != 0) {
          tri = {i, j, l};
          found = true;
        }
  if (!found) throw std::invalid_argument("case_dim3: phi0 images do not span R^3");
  auto ell = full_support_solution(phi0_columns(G));
  if (!ell || std::any_of(ell->begin(), ell->end(), [](const BigInt& x) { return x == 0; }))
    throw std::invalid_argument("case_dim3: cone is not a linear space");
  if (auto w = compact_cancel(G, *ell, {true, true, true})) {
    out.trace.facts.push_back("compact cancellation length=" + std::to_string(w->size()));
    for (auto t : kTargets)
      if (need[t]) out[t] = yes(*w, "dim3-compact-cancellation");
    return out;
  }
  ExponentVector ell4 = *ell;
  for (auto i : tri) ell4[i] -= 1;
  const Word b4 = sorted_word(ell4);
  const std::vector<Matrix> parts{G[tri[0]], G[tri[1]], G[tri[2]], product_of_word(G, b4)};
  const std::vector<Word> words{Word{tri[0]}, Word{tri[1]}, Word{tri[2]}, b4};

  const auto perms = all_permutations(4);
  std::vector<SigmaStats> st;
  for (const auto& s : perms) st.push_back(sigma_stats(parts, s));
  std::optional<std::pair<std::size_t, std::size_t>> de_pair;
  for (std::size_t x = 0; x < perms.size() && !de_pair; ++x)
    for (std::size_t y = x + 1; y < perms.size() && !de_pair; ++y)
      if (st[x].D * st[y].E != st[y].D * st[x].E) de_pair = std::make_pair(x, y);
  std::optional<std::size_t> fplus, fminus;
  for (std::size_t x = 0; x < perms.size(); ++x) {
    if (st[x].F > 0 && !fplus) fplus = x;
    if (st[x].F < 0 && !fminus) fminus = x;
  }
  if (!de_pair || !fplus || !fminus)
    throw std::logic_error("internal invariant violation: degenerate statistics in dim 3");

  const Pumped P1(parts, words, perms[de_pair->first]), P2(parts, words, perms[de_pair->second]);
  const Pumped P3(parts, words, perms[de_pair->first].reversed()), P4(parts, words, perms[de_pair->second].reversed());
  const Pumped Pp(parts, words, perms[*fplus]), Pm(parts, words, perms[*fminus]);

  const BigInt t0 = *double_until("dim3 step 1", [&](const BigInt& t) -> std::optional<BigInt> {
    std::vector<IntVector> vs{as_vec(phi1(P1.at(t))), as_vec(phi1(P2.at(t))), as_vec(phi1(P3.at(t))),
                              as_vec(phi1(P4.at(t)))};
    if (!positively_spans(vs, 2)) return std::nullopt;
    return t;
  });
  BigInt t1;
  auto w = double_until("dim3 step 2", [&](const BigInt& t) {
    t1 = t;
    return cancel({{&P1, t0}, {&P2, t0}, {&P3, t0}, {&P4, t0}, {&Pp, t}, {&Pm, t}}, {true, true, true});
  });
  out.trace.facts.push_back("t0=" + str(t0) + " t1=" + str(t1));
  for (auto t : kTargets)
    if (need[t]) out[t] = yes(*w, "dim3-spanning-pumping");
  return out;
}

}  // namespace

Vec3<BigInt> plane_normal(const GeneratorSet& G) { return plane_normal_impl(G); }

GeneratorSet derive_prime(const GeneratorSet& G) {
  GeneratorSet out;
  for (const auto& m : G) {
    if (m.c != 0) throw std::invalid_argument("derive_prime: nonzero (3,4) entry");
    out.push_back(Matrix{m.b, m.a, m.e, m.d, m.f, 0});
  }
  return out;
}

GeneratorSet derive_double_prime(const GeneratorSet& G) {
  GeneratorSet out;
  for (const auto& m : G) {
    if (m.e != 0) throw std::invalid_argument("derive_double_prime: nonzero (2,4) entry");
    out.push_back(Matrix{m.b, m.a, m.f, m.d, 0, 0});
  }
  return out;
}

GeneratorSet derive_prime_corrected(const GeneratorSet& G) {
  GeneratorSet out;
  for (const auto& m : G) {
    if (m.c != 0) throw std::invalid_argument("derive_prime_corrected: nonzero (3,4) entry");
    out.push_back(Matrix{m.b, m.a, m.e, m.a * m.b - m.d, m.f, 0});
  }
  return out;
}

bool verify_decision(const GeneratorSet& G, const DecisionTriple& result) {
  for (auto t : kTargets) {
    const Verdict& v = result[t];
    if (!v.reachable) continue;
    if (v.witness.empty()) return false;
    for (auto i : v.witness)
      if (i >= G.size()) return false;
    if (!meets(product_of_word(G, v.witness), t)) return false;
  }
  if (result.identity.reachable && !result.u2.reachable) return false;
  if (result.u2.reachable && !result.u10.reachable) return false;
  return true;
}

namespace {
DecisionTriple checked(const GeneratorSet& G, DecisionTriple d) {
  if (!verify_decision(G, d)) throw std::logic_error("internal invariant violation: witness failed verification");
  return d;
}
}  // namespace

DecisionTriple decide(const GeneratorSet& G, std::size_t shorten_len) {
  DecisionTriple out = Solver().solve(G, Need::all());
  if (shorten_len > 0 && (out.identity.reachable || out.u2.reachable || out.u10.reachable)) {
    SearchBudget budget;
    budget.max_len = shorten_len;
    budget.max_states = 20000;
    std::optional<SearchResult> res;
    try {
      res = bfs_search(G, budget);
    } catch (const std::overflow_error&) {
      // entries too large for the 64-bit search; keep the constructed words
    }
    for (auto t : kTargets) {
      Verdict& v = out[t];
      if (res && v.reachable && (*res)[t] && (*res)[t]->size() < v.witness.size()) {
        out.trace.facts.push_back(std::string("shortened ") + name(t) + " witness " + std::to_string(v.witness.size()) +
                                  " -> " + std::to_string((*res)[t]->size()));
        v.witness = *(*res)[t];
        v.rule += "+shortened";
      }
    }
  }
  return checked(G, std::move(out));
}

DecisionTriple case_dim0(const GeneratorSet& G) { return checked(G, Solver().dim0(G, Need::all())); }

DecisionTriple case_dim1(const GeneratorSet& G, const Vec3<BigInt>& direction, const std::vector<BigInt>& rhos) {
  return checked(G, Solver().dim1(G, direction, rhos, Need::all()));
}

DecisionTriple case_dim2(const GeneratorSet& G, const Vec3<BigInt>& normal) {
  return checked(G, Solver().dim2(G, normal, Need::all()));
}

DecisionTriple case_dim3(const GeneratorSet& G) { return checked(G, Solver().dim3(G, Need::all())); }

std::string render_trace(const CaseTrace& trace, int indent) {
  std::ostringstream os;
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  os << pad << trace.step << "\n";
  for (const auto& f : trace.facts) os << pad << "  - " << f << "\n";
  for (const auto& c : trace.children) os << render_trace(c, indent + 1);
  return os.str();
}

}  // namespace utid
