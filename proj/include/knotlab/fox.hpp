#pragma once

#include "knotlab/laurent.hpp"
#include "knotlab/trace_poly.hpp"

namespace knotlab::charvar {

// Alexander polynomial from the two-bridge presentation <x, y | omega x = y omega>:
// Fox derivative of the relator omega x omega^-1 y^-1 with respect to x,
// abelianized (x, y -> t), then normalized so that Delta(1) = 1 and
// Delta(t) = Delta(t^-1).  Exponents may be half-integers after centering.
skein::LaurentPoly fox_alexander(const TwoBridgePresentation& p);

// Delta(K; e^theta) as a complex number.
BigComplex alexander_at(const skein::LaurentPoly& delta, const BigComplex& t);

}  // namespace knotlab::charvar
