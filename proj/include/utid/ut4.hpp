#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "utid/exact.hpp"

namespace utid {

template <typename S>
using Vec2 = Eigen::Matrix<S, 2, 1>;
template <typename S>
using Vec3 = Eigen::Matrix<S, 3, 1>;

/// Unitriangular 4x4 matrix
///   [1 a d f]
///   [0 1 b e]
///   [0 0 1 c]
///   [0 0 0 1]
template <typename S>
struct UT4 {
  S a{0}, b{0}, c{0}, d{0}, e{0}, f{0};

  static UT4 identity() { return UT4{}; }

  friend bool operator==(const UT4& x, const UT4& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d && x.e == y.e && x.f == y.f;
  }
};

using Matrix = UT4<BigInt>;

template <typename S>
UT4<S> mul(const UT4<S>& x, const UT4<S>& y) {
  return UT4<S>{x.a + y.a,
                x.b + y.b,
                x.c + y.c,
                x.d + y.d + x.a * y.b,
                x.e + y.e + x.b * y.c,
                x.f + y.f + x.a * y.e + x.d * y.c};
}

template <typename S>
UT4<S> operator*(const UT4<S>& x, const UT4<S>& y) {
  return mul(x, y);
}

template <typename S>
UT4<S> inverse(const UT4<S>& m) {
  return UT4<S>{-m.a,
                -m.b,
                -m.c,
                m.a * m.b - m.d,
                m.b * m.c - m.e,
                m.a * m.e + m.d * m.c - m.f - m.a * m.b * m.c};
}

template <typename S>
UT4<S> power(UT4<S> base, std::uint64_t n) {
  UT4<S> acc;
  while (n) {
    if (n & 1U) acc = mul(acc, base);
    n >>= 1U;
    if (n) base = mul(base, base);
  }
  return acc;
}

/// Product of m factors by the closed form
///   d = sum d_i + sum_{i<j} a_i b_j,  e = sum e_i + sum_{i<j} b_i c_j,
///   f = sum f_i + sum_{i<j<k} a_i b_j c_k + sum_{i<j} (a_i e_j + d_i c_j).
template <typename S>
UT4<S> product_closed_form(std::span<const UT4<S>> xs) {
  S sa{0}, sb{0}, sc{0}, sd{0}, se{0}, sf{0};
  S ab{0}, bc{0}, abc{0}, cross{0};
  for (const auto& x : xs) {
    abc = abc + ab * x.c;
    cross = cross + sa * x.e + sd * x.c;
    ab = ab + sa * x.b;
    bc = bc + sb * x.c;
    sa = sa + x.a;
    sb = sb + x.b;
    sc = sc + x.c;
    sd = sd + x.d;
    se = se + x.e;
    sf = sf + x.f;
  }
  return UT4<S>{sa, sb, sc, sd + ab, se + bc, sf + abc + cross};
}

template <typename S>
Eigen::Matrix<S, 4, 4> to_dense(const UT4<S>& m) {
  Eigen::Matrix<S, 4, 4> out;
  out << S(1), m.a, m.d, m.f,
         S(0), S(1), m.b, m.e,
         S(0), S(0), S(1), m.c,
         S(0), S(0), S(0), S(1);
  return out;
}

/// Throws std::invalid_argument if the matrix is not unitriangular.
template <typename S>
UT4<S> from_dense(const Eigen::Matrix<S, 4, 4>& m) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j <= i; ++j)
      if (m(i, j) != S(i == j ? 1 : 0)) throw std::invalid_argument("not unitriangular");
  return UT4<S>{m(0, 1), m(1, 2), m(2, 3), m(0, 2), m(1, 3), m(0, 3)};
}

template <typename S>
UT4<S> anti_involution(const UT4<S>& m) {
  return UT4<S>{m.c, m.b, m.a, m.e, m.d, m.f};
}

template <typename S>
bool in_u1(const UT4<S>& m) {
  return m.a == S(0) && m.b == S(0) && m.c == S(0);
}

enum class SubgroupClass { General, U1, U10, U2, Identity };

/// The three reachability targets, ordered from finest to coarsest.
enum class Target { identity, u2, u10 };

inline const char* name(Target t) {
  switch (t) {
    case Target::identity: return "identity";
    case Target::u2: return "u2";
    case Target::u10: return "u10";
  }
  return "?";
}

inline const char* name(SubgroupClass c) {
  switch (c) {
    case SubgroupClass::General: return "General";
    case SubgroupClass::U1: return "U1";
    case SubgroupClass::U10: return "U10";
    case SubgroupClass::U2: return "U2";
    case SubgroupClass::Identity: return "Identity";
  }
  return "?";
}

template <typename S>
SubgroupClass classify(const UT4<S>& m) {
  if (!in_u1(m)) return SubgroupClass::General;
  if (m.d != S(0)) return SubgroupClass::U1;
  if (m.e != S(0)) return SubgroupClass::U10;
  if (m.f != S(0)) return SubgroupClass::U2;
  return SubgroupClass::Identity;
}

/// True when class c is at least as fine as the target (Identity < U2 < U10).
inline bool meets(SubgroupClass c, Target t) {
  switch (t) {
    case Target::identity: return c == SubgroupClass::Identity;
    case Target::u2: return c == SubgroupClass::Identity || c == SubgroupClass::U2;
    case Target::u10:
      return c == SubgroupClass::Identity || c == SubgroupClass::U2 || c == SubgroupClass::U10;
  }
  return false;
}

template <typename S>
bool meets(const UT4<S>& m, Target t) {
  return meets(classify(m), t);
}

template <typename S>
Vec3<S> phi0(const UT4<S>& m) {
  return Vec3<S>(m.a, m.b, m.c);
}

template <typename S>
Vec2<S> phi1(const UT4<S>& m) {
  if (!in_u1(m)) throw std::domain_error("not in U1");
  return Vec2<S>(m.d, m.e);
}

template <typename S>
Vec3<S> tau(const UT4<S>& m) {
  if (!in_u1(m)) throw std::domain_error("not in U1");
  return Vec3<S>(m.d, m.e, m.f);
}

/// Generator indices, 0-based internally.
using Word = std::vector<std::size_t>;

template <typename S>
UT4<S> product_of_word(std::span<const UT4<S>> gens, const Word& w) {
  if (w.empty()) throw std::invalid_argument("empty word");
  UT4<S> acc;
  for (auto i : w) {
    if (i >= gens.size()) throw std::out_of_range("generator index out of range");
    acc = mul(acc, gens[i]);
  }
  return acc;
}

template <typename S>
UT4<S> product_of_word(const std::vector<UT4<S>>& gens, const Word& w) {
  return product_of_word(std::span<const UT4<S>>(gens), w);
}

/// ell[j] = multiplicity of letter j in w.
std::vector<BigInt> exponent_vector(const Word& w, std::size_t k);

/// Letters in index order with the given multiplicities.
Word sorted_word(const std::vector<BigInt>& ell);

/// Witness words longer than this are refused with std::length_error.
inline constexpr std::size_t kMaxWordLength = std::size_t{1} << 26;

/// Appends n copies of w to out.
void append_power(Word& out, const Word& w, const BigInt& n);

/// sigma[i] = which factor sits at position i (0-based).
struct Permutation {
  std::vector<std::size_t> map;

  static Permutation identity(std::size_t m);
  std::size_t size() const { return map.size(); }
  std::size_t operator[](std::size_t i) const { return map[i]; }
  /// Same factors in the opposite order.
  Permutation reversed() const;
  bool valid() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

std::vector<Permutation> all_permutations(std::size_t m);

/// Word of parts[sigma(1)]^t ... parts[sigma(m)]^t.
Word pumped_word(const std::vector<Word>& parts, const Permutation& sigma, const BigInt& t);

/// Permutation placing factors u and v first (in that order), the rest in index order.
Permutation leading_pair(std::size_t m, std::size_t u, std::size_t v);

std::string to_string(const Matrix& m);

}  // namespace utid
