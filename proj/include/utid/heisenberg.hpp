#pragma once

#include <optional>
#include <string>
#include <vector>

#include "utid/exact.hpp"
#include "utid/ut4.hpp"

namespace utid {

/// Element of H_{2n+1}:
///   [1 x^T z]
///   [0 I_n y]
///   [0 0   1]
struct HeisGenerator {
  IntVector x, y;
  BigInt z = 0;

  std::size_t n() const { return static_cast<std::size_t>(x.size()); }
  static HeisGenerator identity(std::size_t n);
  bool is_identity() const;
  friend bool operator==(const HeisGenerator&, const HeisGenerator&);
};

HeisGenerator heis(std::vector<BigInt> x, std::vector<BigInt> y, BigInt z);

HeisGenerator mul(const HeisGenerator& p, const HeisGenerator& q);

HeisGenerator product_of_word(const std::vector<HeisGenerator>& gens, const Word& w);

struct HeisDecision {
  bool reachable = false;
  std::optional<Word> witness;
  std::string trace;
};

/// Decides whether the identity lies in the semigroup generated by gens (n = 1 or 2).
/// Throws std::invalid_argument on mixed n.
HeisDecision decide_identity_heisenberg(const std::vector<HeisGenerator>& gens);

/// (x, y, z) = (alpha, beta, delta). Requires kappa = 0 for every generator.
std::vector<HeisGenerator> h3_from_ut4(const std::vector<Matrix>& gens);

/// UT(a,0,c;d,e,f) -> x = (a,d), y = (e,c), z = f. Requires b = 0 for every generator.
std::vector<HeisGenerator> h5_embed(const std::vector<Matrix>& gens);

}  // namespace utid
