#pragma once

#include "knotlab/bigfloat.hpp"
#include "knotlab/bundle.hpp"

namespace knotlab::geom {

// H(u) = -{ab(u + 2 pi i) - 2 pi i}^2 / (4ab) on the growth regime.
BigComplex torus_H(int a, int b, const BigComplex& u);

// v(u) = -ab(u + 2 pi i).
BigComplex torus_v(int a, int b, const BigComplex& u);

// f(u) + H(0) = -2 pi^2 + pi^2/(ab) + ab pi^2 - (1/2) ab u pi i.  H(0) is
// left symbolic for torus knots, so callers compare modulo pi^2 and H(0).
BigComplex torus_f_plus_H0(int a, int b, const BigComplex& u);

// Dubois-Kashaev Chern-Simons value of rho_{k,l}, normalized to the
// (mu, lambda) basis: [u/(4 pi i), v(u)/(4 pi i);
//   exp(pi i (l a d + eps k b c)^2/(2ab) + ab u/4)], requiring ad - bc = 1.
CSBundleElement torus_cs_bundle(int a, int b, int c, int d, int k, int l, const BigComplex& u,
                                int eps = -1);

// Raw Proposition form [u/(4 pi i), 1/2 - ab u/(4 pi i);
//   exp(2 pi i ((lad + eps kbc)^2/(4ab) - u/(8 pi i)))]; equals the
// normalized element after the half-integer beta shift (ab+1)/2.
CSBundleElement torus_cs_bundle_raw(int a, int b, int c, int d, int k, int l, const BigComplex& u,
                                    int eps = -1);

// beta -> beta - h with the induced z-factor (h may be a half-integer; this
// is the PSL(2,C) allowance used by the normalization).
CSBundleElement shift_beta(const CSBundleElement& e, const BigReal& h);

// ftilde(u) = (2 pi / i) log z of the normalized bundle element, with the
// square reduced mod 4ab so the constant lands in [0, 4 pi^2):
// ftilde = pi^2 ((lad - kbc)^2 mod 4ab)/(ab) - (1/2) ab u pi i,
// (c, d) from the extended gcd.
BigComplex torus_ftilde(int a, int b, int k, int l, const BigComplex& u);

// solve a d - b c = 1
std::pair<int, int> torus_cd(int a, int b);

}  // namespace knotlab::geom
