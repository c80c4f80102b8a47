#pragma once

#include <string>
#include <vector>

#include "cupkernel/expr.hpp"
#include "cupkernel/numeric.hpp"
#include "cupkernel/pipeline.hpp"
#include "cupkernel/polyring.hpp"

namespace cupkernel::testing {

template <CoefficientRing C>
C random_coeff(SplitMix64& rng);

template <>
inline F2 random_coeff<F2>(SplitMix64& rng) {
  return F2{static_cast<unsigned long>(rng.next_below(2))};
}

template <>
inline ZZ random_coeff<ZZ>(SplitMix64& rng) {
  return ZZ(rng.next_int(-20, 20));
}

template <>
inline QQ random_coeff<QQ>(SplitMix64& rng) {
  return QQ(rng.next_int(-12, 12), rng.next_int(1, 9));
}

template <CoefficientRing C>
GradedPolynomial<C> random_poly(const PolyRingPtr& ring, SplitMix64& rng, unsigned maxdeg,
                                unsigned terms) {
  GradedPolynomial<C> p(ring);
  for (unsigned t = 0; t < terms; ++t) {
    std::vector<uint32_t> exps(ring->nvars(), 0);
    for (unsigned i = 0; i < ring->nvars(); ++i) {
      unsigned cap = maxdeg / ring->var(i).degree;
      exps[i] = static_cast<uint32_t>(rng.next_below(cap + 1));
    }
    if (ring->weighted_degree(exps) > maxdeg) continue;
    p.add_term(ring->monomial(std::move(exps)), random_coeff<C>(rng));
  }
  return p;
}

/// Parse a polynomial expression in the given ring (subtraction allowed for
/// integer-like coefficients; harmless to allow everywhere in tests).
template <CoefficientRing C>
GradedPolynomial<C> poly_of(const PolyRingPtr& ring, const std::string& text) {
  PolyEvalContext<C> ctx{ring};
  return evaluate(*parse_expression(text, true), ctx);
}

/// Shared pipeline fixture; built once per test binary.
inline const Section3Context& section3() {
  static Section3Context ctx = Section3Context::build(20);
  return ctx;
}

}  // namespace cupkernel::testing
