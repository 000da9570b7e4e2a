#pragma once

#include "knotlab/bigfloat.hpp"

namespace knotlab::asym {

// Gamma function at working precision for complex z (Stirling series with
// argument shifting; reflection for Re z < 1/2).  Throws std::domain_error
// at the poles.
BigComplex gamma_fn(const BigComplex& z);

}  // namespace knotlab::asym
