#pragma once

#include "knotlab/diagram.hpp"
#include "knotlab/laurent.hpp"

namespace knotlab::skein {

inline constexpr int kDefaultCrossingLimit = 24;

// Kauffman bracket by exact state sum over all 2^c smoothings; orientation is
// ignored.  Throws std::length_error past the crossing limit.
LaurentPoly kauffman_bracket(const Diagram& d, int crossing_limit = kDefaultCrossingLimit);

// V(K;t) = (-A^3)^{-w(D)} <D> with A = t^{-1/4}.
LaurentPoly jones_V(const Diagram& d, int crossing_limit = kDefaultCrossingLimit);

// J2 normalization: satisfies q J2(L+) - q^-1 J2(L-) = (q^1/2 - q^-1/2) J2(L0)
// with J2(unknot) = 1.  Obtained from V by t -> q^-1 together with the sign
// (-1)^(components-1).
LaurentPoly jones_J2(const Diagram& d, int crossing_limit = kDefaultCrossingLimit);

// Oriented smoothing of crossing index k (the L0 of a skein triple).
Diagram smooth_crossing(const Diagram& d, int k);

// Crossing index k reversed (over/under swapped) -- the L-/L+ partner.
Diagram flip_crossing(const Diagram& d, int k);

// Shipped diagrams (chirality fixed so that jones_J2 matches the N=2
// specializations of the closed-form colored Jones sums).
Diagram paper_trefoil();
Diagram paper_fig8();

}  // namespace knotlab::skein
