#pragma once

#include <string>
#include <vector>

#include "utid/exact.hpp"
#include "utid/ut4.hpp"

namespace utid {

using GeneratorSet = std::vector<Matrix>;

struct Verdict {
  bool reachable = false;
  Word witness;      // 0-based letters; nonempty iff reachable
  std::string rule;  // construction used (yes) or the rule that excludes the target (no)
};

struct CaseTrace {
  std::string step;
  std::vector<std::string> facts;
  std::vector<CaseTrace> children;
};

struct DecisionTriple {
  Verdict identity, u2, u10;
  CaseTrace trace;

  Verdict& operator[](Target t);
  const Verdict& operator[](Target t) const;
};

/// Decides all three problems. Every yes-witness is re-multiplied before returning;
/// a failing witness throws std::logic_error. When shorten_len > 0 a bounded
/// breadth-first search replaces yes-witnesses by shortest words of length at
/// most shorten_len where one exists; verdicts are unaffected.
DecisionTriple decide(const GeneratorSet& G, std::size_t shorten_len = 6);

/// Case entry points. Each assumes the cone of phi0 images is a linear space
/// of the stated dimension (generators not kept by the lineality filter are a
/// precondition violation) and decides all three problems.
DecisionTriple case_dim0(const GeneratorSet& G);
DecisionTriple case_dim1(const GeneratorSet& G, const Vec3<BigInt>& direction, const std::vector<BigInt>& rhos);
DecisionTriple case_dim2(const GeneratorSet& G, const Vec3<BigInt>& normal);
DecisionTriple case_dim3(const GeneratorSet& G);

/// UT(a,b,0;d,e,f) -> UT(b,a,e;d,f,0), the coordinate shuffle as stated.
GeneratorSet derive_prime(const GeneratorSet& G);
/// UT(a,b,c;d,0,f) -> UT(b,a,f;d,0,0), the coordinate shuffle as stated.
GeneratorSet derive_double_prime(const GeneratorSet& G);
/// UT(a,b,0;d,e,f) -> UT(b,a,e;ab-d,f,0). For every word w the product over the
/// image has d' = a(w)b(w) - d(w) and e' = f(w), so identity(G) == u2(image) and
/// u2(G) == u10(image) word for word.
GeneratorSet derive_prime_corrected(const GeneratorSet& G);

/// Witness words multiply into their classes and identity => u2 => u10 holds.
bool verify_decision(const GeneratorSet& G, const DecisionTriple& result);

/// Primitive normal of a rank-2 set of phi0 images.
Vec3<BigInt> plane_normal(const GeneratorSet& G);

std::string render_trace(const CaseTrace& trace, int indent = 0);

}  // namespace utid
