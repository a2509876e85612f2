#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "utid/engine.hpp"
#include "utid/ut4.hpp"

namespace utid {

/// 64-bit integer that throws std::overflow_error instead of wrapping.
struct SafeInt {
  std::int64_t v = 0;

  constexpr SafeInt() = default;
  constexpr SafeInt(std::int64_t x) : v(x) {}  // NOLINT(google-explicit-constructor)

  friend SafeInt operator+(SafeInt x, SafeInt y) {
    std::int64_t r;
    if (__builtin_add_overflow(x.v, y.v, &r)) throw std::overflow_error("SafeInt overflow");
    return r;
  }
  friend SafeInt operator-(SafeInt x, SafeInt y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x.v, y.v, &r)) throw std::overflow_error("SafeInt overflow");
    return r;
  }
  friend SafeInt operator*(SafeInt x, SafeInt y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x.v, y.v, &r)) throw std::overflow_error("SafeInt overflow");
    return r;
  }
  SafeInt operator-() const { return SafeInt(0) - *this; }
  friend bool operator==(SafeInt x, SafeInt y) { return x.v == y.v; }
  friend bool operator!=(SafeInt x, SafeInt y) { return x.v != y.v; }
};

struct SearchBudget {
  std::size_t max_len = 10;
  std::size_t max_states = 4'000'000;
};

struct SearchResult {
  std::optional<Word> identity, u2, u10;  // shortest words per target
  bool exhaustive = false;  // state cap not hit: each missing target is absent up to max_len
  std::size_t states = 0;
  std::size_t depth = 0;  // longest word length fully examined

  std::optional<Word>& operator[](Target t);
  const std::optional<Word>& operator[](Target t) const;
};

/// Breadth-first search over words, deduplicating by the product.
/// Stops early once all three targets are hit.
SearchResult bfs_search(const GeneratorSet& G, const SearchBudget& budget);

/// Shortest word whose product meets target, or nothing within the budget.
std::optional<Word> bfs_search(const GeneratorSet& G, Target target, const SearchBudget& budget);

/// Entries uniform in [-bound, bound]. Throws std::invalid_argument for k = 0 or bound < 1.
GeneratorSet random_instance(std::size_t k, long bound, std::uint64_t seed);

enum class Family { uniform, kappa_zero, b_zero, alpha_zero, collinear, u1_only, zero_sum_closed };

const char* name(Family f);

/// Instances biased towards the degenerate branches of the case analysis.
GeneratorSet random_family_instance(Family f, std::size_t k, long bound, std::uint64_t seed);

struct PropertyReport {
  std::string lemma;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::vector<std::uint64_t> failing_seeds;

  /// "lemma-id trials failures [seed...]"
  std::string line() const;
};

std::vector<PropertyReport> check_lemma_suite(std::uint64_t seed, std::size_t trials);

}  // namespace utid
