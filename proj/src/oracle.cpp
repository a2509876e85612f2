#include "utid/oracle.hpp"

#include <array>
#include <random>
#include <unordered_set>

namespace utid {

std::optional<Word>& SearchResult::operator[](Target t) {
  switch (t) {
    case Target::identity: return identity;
    case Target::u2: return u2;
    case Target::u10: return u10;
  }
  throw std::invalid_argument("bad target");
}

const std::optional<Word>& SearchResult::operator[](Target t) const {
  return const_cast<SearchResult&>(*this)[t];
}

namespace {

using State = std::array<std::int64_t, 6>;

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : s) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

State pack(const UT4<SafeInt>& m) { return {m.a.v, m.b.v, m.c.v, m.d.v, m.e.v, m.f.v}; }
UT4<SafeInt> unpack(const State& s) { return {s[0], s[1], s[2], s[3], s[4], s[5]}; }

struct Node {
  std::uint32_t parent;
  std::uint32_t letter;
};

constexpr std::uint32_t kRoot = 0xffffffffU;

Word path(const std::vector<Node>& nodes, std::uint32_t idx) {
  Word w;
  for (auto i = idx; i != kRoot; i = nodes[i].parent) w.push_back(nodes[i].letter);
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

SearchResult bfs_search(const GeneratorSet& G, const SearchBudget& budget) {
  if (budget.max_len == 0 || budget.max_states == 0) throw std::invalid_argument("bfs_search: empty budget");
  SearchResult res;
  if (G.empty()) {
    res.exhaustive = true;
    res.depth = budget.max_len;
    return res;
  }
  std::vector<UT4<SafeInt>> gens;
  for (const auto& m : G) {
    auto conv = [](const BigInt& x) {
      if (x > BigInt(std::int64_t{1} << 40) || x < -BigInt(std::int64_t{1} << 40))
        throw std::overflow_error("bfs_search: entry too large");
      return SafeInt(x.convert_to<std::int64_t>());
    };
    gens.push_back({conv(m.a), conv(m.b), conv(m.c), conv(m.d), conv(m.e), conv(m.f)});
  }

  std::vector<Node> nodes;
  std::unordered_set<State, StateHash> seen;
  std::vector<std::pair<std::uint32_t, State>> frontier, next;

  auto record = [&](std::uint32_t idx, const UT4<SafeInt>& m) {
    const SubgroupClass c = classify(m);
    for (auto t : {Target::identity, Target::u2, Target::u10})
      if (!res[t] && meets(c, t)) res[t] = path(nodes, idx);
  };
  auto done = [&] { return res.identity && res.u2 && res.u10; };

  frontier.push_back({kRoot, pack(UT4<SafeInt>{})});
  for (std::size_t len = 1; len <= budget.max_len; ++len) {
    next.clear();
    for (const auto& [idx, st] : frontier) {
      const UT4<SafeInt> cur = unpack(st);
      for (std::uint32_t g = 0; g < gens.size(); ++g) {
        const UT4<SafeInt> prod = mul(cur, gens[g]);
        const State key = pack(prod);
        if (!seen.insert(key).second) continue;
        if (seen.size() > budget.max_states) {
          res.states = seen.size();
          res.depth = len - 1;
          return res;
        }
        nodes.push_back({idx, g});
        const auto me = static_cast<std::uint32_t>(nodes.size() - 1);
        record(me, prod);
        next.push_back({me, key});
      }
    }
    res.depth = len;
    if (done()) break;
    frontier.swap(next);
    if (frontier.empty()) break;
  }
  res.states = seen.size();
  res.exhaustive = true;
  return res;
}

std::optional<Word> bfs_search(const GeneratorSet& G, Target target, const SearchBudget& budget) {
  return bfs_search(G, budget)[target];
}

GeneratorSet random_instance(std::size_t k, long bound, std::uint64_t seed) {
  if (k == 0) throw std::invalid_argument("random_instance: k must be positive");
  if (bound < 1) throw std::invalid_argument("random_instance: bound must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  GeneratorSet G;
  for (std::size_t i = 0; i < k; ++i)
    G.push_back(Matrix{dist(rng), dist(rng), dist(rng), dist(rng), dist(rng), dist(rng)});
  return G;
}

const char* name(Family f) {
  switch (f) {
    case Family::uniform: return "uniform";
    case Family::kappa_zero: return "kappa-zero";
    case Family::b_zero: return "b-zero";
    case Family::alpha_zero: return "alpha-zero";
    case Family::collinear: return "collinear";
    case Family::u1_only: return "u1-only";
    case Family::zero_sum_closed: return "zero-sum-closed";
  }
  return "?";
}

GeneratorSet random_family_instance(Family f, std::size_t k, long bound, std::uint64_t seed) {
  GeneratorSet G = random_instance(k, bound, seed);
  if (f == Family::uniform) return G;
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  std::uniform_int_distribution<long> dist(-bound, bound);
  switch (f) {
    case Family::kappa_zero:
      for (auto& m : G) m.c = 0;
      break;
    case Family::b_zero:
      for (auto& m : G) m.b = 0;
      break;
    case Family::alpha_zero:
      for (auto& m : G) m.a = 0;
      break;
    case Family::collinear: {
      long da = dist(rng), db = dist(rng), dc = dist(rng);
      if (da == 0 && db == 0 && dc == 0) da = 1;
      for (auto& m : G) {
        const long r = dist(rng);
        m.a = da * r;
        m.b = db * r;
        m.c = dc * r;
      }
      break;
    }
    case Family::u1_only:
      for (auto& m : G) m.a = m.b = m.c = 0;
      return G;
    default: break;
  }
  // Close the phi0 images to a zero sum so the lineality filter keeps something.
  if (k >= 2) {
    Matrix& last = G.back();
    last.a = last.b = last.c = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      last.a -= G[i].a;
      last.b -= G[i].b;
      last.c -= G[i].c;
    }
  }
  return G;
}

std::string PropertyReport::line() const {
  std::string s = lemma + " " + std::to_string(trials) + " " + std::to_string(failures);
  for (auto x : failing_seeds) s += " " + std::to_string(x);
  return s;
}

}  // namespace utid
