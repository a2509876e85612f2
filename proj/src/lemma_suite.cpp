#include <functional>
#include <random>

#include "utid/oracle.hpp"
#include "utid/stats.hpp"

namespace utid {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Matrix random_matrix(Rng& rng, long bound) {
  return Matrix{uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound),
                uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
}

// m random factors whose a, b, c columns each sum to zero.
std::vector<Matrix> zero_sum_list(Rng& rng, std::size_t m, long bound) {
  std::vector<Matrix> B;
  for (std::size_t i = 0; i < m; ++i) B.push_back(random_matrix(rng, bound));
  Matrix& last = B.back();
  last.a = last.b = last.c = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    last.a -= B[i].a;
    last.b -= B[i].b;
    last.c -= B[i].c;
  }
  return B;
}

Permutation random_permutation(Rng& rng, std::size_t m) {
  Permutation p = Permutation::identity(m);
  std::shuffle(p.map.begin(), p.map.end(), rng);
  return p;
}

// Literal t-fold repetition with dense 4x4 products.
Matrix repeated_dense(const std::vector<Matrix>& B, const Permutation& s, long t) {
  Eigen::Matrix<BigInt, 4, 4> acc = Eigen::Matrix<BigInt, 4, 4>::Identity();
  for (std::size_t pos = 0; pos < s.size(); ++pos) {
    const auto dense = to_dense(B[s[pos]]);
    for (long r = 0; r < t; ++r) acc = (acc * dense).eval();
  }
  return from_dense(acc);
}

// Sets a, b, c of each factor from the given rows.
void set_phi0(std::vector<Matrix>& B, const std::vector<std::array<BigInt, 3>>& v) {
  for (std::size_t i = 0; i < B.size(); ++i) {
    B[i].a = v[i][0];
    B[i].b = v[i][1];
    B[i].c = v[i][2];
  }
}

bool all_F_zero(const std::vector<Matrix>& B) {
  for (const auto& s : all_permutations(B.size()))
    if (sigma_stats(B, s).F != 0) return false;
  return true;
}

bool any_f_zero_condition(const std::vector<Matrix>& B) {
  bool a0 = true, b0 = true, c0 = true;
  IntMatrix M(3, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    a0 = a0 && B[i].a == 0;
    b0 = b0 && B[i].b == 0;
    c0 = c0 && B[i].c == 0;
    M(0, static_cast<Eigen::Index>(i)) = B[i].a;
    M(1, static_cast<Eigen::Index>(i)) = B[i].b;
    M(2, static_cast<Eigen::Index>(i)) = B[i].c;
  }
  return a0 || b0 || c0 || rank(M) <= 1;
}

struct Harness {
  std::uint64_t seed;
  std::size_t trials;
  std::vector<PropertyReport> reports;

  void run(const std::string& id, std::size_t n, const std::function<bool(Rng&)>& trial) {
    PropertyReport r;
    r.lemma = id;
    const std::uint64_t base = seed ^ std::hash<std::string>{}(id);
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t s = base + k;
      Rng rng(s);
      ++r.trials;
      bool ok = false;
      try {
        ok = trial(rng);
      } catch (const std::exception&) {
        ok = false;
      }
      if (!ok) {
        ++r.failures;
        r.failing_seeds.push_back(s);
      }
    }
    reports.push_back(std::move(r));
  }
};

}  // namespace

std::vector<PropertyReport> check_lemma_suite(std::uint64_t seed, std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("check_lemma_suite: trials must be positive");
  Harness h{seed, trials, {}};

  h.run("pumped-closed-form", trials, [](Rng& rng) {
    const auto m = static_cast<std::size_t>(uniform(rng, 1, 4));
    std::vector<Matrix> B;
    for (std::size_t i = 0; i < m; ++i) B.push_back(random_matrix(rng, 3));
    const Permutation s = random_permutation(rng, m);
    const long t = uniform(rng, 0, 5);
    return pumped_product(B, s, BigInt(t)) == repeated_dense(B, s, t);
  });

  h.run("product-closed-form", trials, [](Rng& rng) {
    const auto len = static_cast<std::size_t>(uniform(rng, 1, 6));
    std::vector<Matrix> xs;
    for (std::size_t i = 0; i < len; ++i) xs.push_back(random_matrix(rng, 4));
    Matrix fold;
    for (const auto& x : xs) fold = mul(fold, x);
    return product_closed_form<BigInt>(xs) == fold;
  });

  h.run("reversal-negates-D-E", trials, [](Rng& rng) {
    const auto m = static_cast<std::size_t>(uniform(rng, 2, 6));
    const auto B = zero_sum_list(rng, m, 3);
    const Permutation s = random_permutation(rng, m);
    const SigmaStats x = sigma_stats(B, s), y = sigma_stats(B, s.reversed());
    return y.D == -x.D && y.E == -x.E;
  });

  for (std::size_t m : {3, 4}) {
    h.run("F-permutation-sum-zero-m" + std::to_string(m), trials, [m](Rng& rng) {
      const auto B = zero_sum_list(rng, m, 3);
      Rational total = 0;
      for (const auto& s : all_permutations(m)) total += sigma_stats(B, s).F;
      return total == 0;
    });
  }

  h.run("plane-D-E-proportional", trials, [](Rng& rng) {
    const auto m = static_cast<std::size_t>(uniform(rng, 2, 5));
    auto B = zero_sum_list(rng, m, 3);
    BigInt p, r;
    if (uniform(rng, 0, 1) == 0) {
      // All b vanish; p and r arbitrary.
      for (auto& x : B) x.b = 0;
      p = uniform(rng, -3, 3);
      r = uniform(rng, -3, 3);
    } else {
      // phi0 images in the plane p a + q b + r c = 0, spanned by u and w.
      p = uniform(rng, -3, 3);
      const BigInt q = uniform(rng, -3, 3);
      r = uniform(rng, -3, 3);
      if (p == 0 && q == 0 && r == 0) r = 1;
      Vec3<BigInt> n(p, q, r), u, w;
      // Two kernel vectors of n (possibly dependent; any combination stays in the plane).
      u = n.cross(Vec3<BigInt>(BigInt(1), BigInt(0), BigInt(0)));
      if (u == Vec3<BigInt>::Zero()) u = n.cross(Vec3<BigInt>(BigInt(0), BigInt(1), BigInt(0)));
      w = n.cross(u);
      std::vector<std::array<BigInt, 3>> v(m);
      Vec3<BigInt> sum = Vec3<BigInt>::Zero();
      for (std::size_t i = 0; i + 1 < m; ++i) {
        Vec3<BigInt> x = BigInt(uniform(rng, -2, 2)) * u + BigInt(uniform(rng, -2, 2)) * w;
        v[i] = {x(0), x(1), x(2)};
        sum += x;
      }
      v[m - 1] = {-sum(0), -sum(1), -sum(2)};
      set_phi0(B, v);
    }
    for (const auto& s : all_permutations(m)) {
      const SigmaStats st = sigma_stats(B, s);
      if (Rational(p) * st.D != Rational(r) * st.E) return false;
    }
    return true;
  });

  // Forward direction of the four-condition characterisation for m = 4.
  const std::array<std::string, 4> f_zero_ids{"F-zero-a-zero", "F-zero-b-zero", "F-zero-c-zero", "F-zero-collinear"};
  for (std::size_t cond = 0; cond < 4; ++cond) {
    h.run(f_zero_ids[cond], std::max<std::size_t>(trials, 200), [cond](Rng& rng) {
      auto B = zero_sum_list(rng, 4, 3);
      if (cond < 3) {
        for (auto& x : B) (cond == 0 ? x.a : cond == 1 ? x.b : x.c) = 0;
      } else {
        const Vec3<BigInt> dir(uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3));
        std::vector<std::array<BigInt, 3>> v(4);
        long total = 0;
        for (std::size_t i = 0; i < 4; ++i) {
          const long s = i < 3 ? uniform(rng, -3, 3) : -total;
          total += s;
          v[i] = {dir(0) * s, dir(1) * s, dir(2) * s};
        }
        set_phi0(B, v);
      }
      return all_F_zero(B);
    });
  }

  // Reverse direction: tuples violating all four conditions must have some F != 0.
  h.run("F-nonzero-otherwise", trials, [](Rng& rng) {
    for (;;) {
      auto B = zero_sum_list(rng, 4, 2);
      if (any_f_zero_condition(B)) continue;
      return !all_F_zero(B);
    }
  });

  // Collinear zero-sum factors: D = E = F = 0 and
  // G_sigma = 1/2 sum_{i<j} (r_si G_sj - r_sj G_si) with G_i = a e_i - c d_i.
  h.run("G-collinear-formula", trials, [](Rng& rng) {
    const auto m = static_cast<std::size_t>(uniform(rng, 2, 6));
    const Vec3<BigInt> dir(uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3));
    std::vector<Matrix> B;
    std::vector<BigInt> rs;
    BigInt total = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const BigInt r = i + 1 < m ? BigInt(uniform(rng, -3, 3)) : BigInt(-total);
      total += r;
      rs.push_back(r);
      B.push_back(Matrix{dir(0) * r, dir(1) * r, dir(2) * r, uniform(rng, -3, 3), uniform(rng, -3, 3),
                         uniform(rng, -3, 3)});
    }
    const Permutation s = random_permutation(rng, m);
    const SigmaStats st = sigma_stats(B, s);
    if (st.D != 0 || st.E != 0 || st.F != 0) return false;
    Rational expected = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        const Matrix& x = B[s[i]];
        const Matrix& y = B[s[j]];
        const BigInt gx = dir(0) * x.e - dir(2) * x.d, gy = dir(0) * y.e - dir(2) * y.d;
        expected += Rational(rs[s[i]] * gy - rs[s[j]] * gx, 2);
      }
    return st.G == expected;
  });

  return h.reports;
}

}  // namespace utid
