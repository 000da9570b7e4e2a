#pragma once

#include "knotlab/bigfloat.hpp"

namespace knotlab::geom {

// Principal-branch dilogarithm Li2(z) = -int_0^z log(1-w)/w dw, branch cut
// (1, oo).  On the cut the value is the limit from below (Im z -> 0^-).
// Maclaurin series on |z| <= 1/2, inversion for |z| >= 2, reflection for
// |1-z| <= 1/2, and the Bernoulli expansion in w = -log z on the remaining
// annulus.
BigComplex li2(const BigComplex& z);

// B_{2k} at the current working precision (exact rational recurrence,
// cached).
BigReal bernoulli_2k(unsigned k);

}  // namespace knotlab::geom
