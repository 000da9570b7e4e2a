#pragma once

#include "knotlab/bigfloat.hpp"
#include "knotlab/branches.hpp"

namespace knotlab::geom {

struct SurgeryCoeff {
    int p = 1, q = 1;   // p u + q v(u) = 2 pi i
    int r = -1, s = 0;  // p s - q r = 1
};

void validate_coeffs(const SurgeryCoeff& c);

// H(u) = Li2(e^{-phi(u)-u}) - Li2(e^{phi(u)-u}) + u phi(u).
BigComplex H_fig8(const BigComplex& u);

// theta-parametrized companion on the standard arccosh branch:
// Htilde(theta) = Li2(e^{-phit-theta}) - Li2(e^{phit-theta}) + theta phit.
BigComplex Htilde_fig8(const BigComplex& theta);

// dH/du = 2 log(1 - e^{-phi(u)-u}) + phi(u) + u.
BigComplex dH_fig8(const BigComplex& u);

// v(u) = 2 dH/du - 2 pi i.
BigComplex v_fig8(const BigComplex& u);

// dv/du (analytic, via phi' = sinh u / sinh phi).
BigComplex dv_fig8(const BigComplex& u);

BigComplex H0_fig8();  // H(0) = i Vol(E)

// f(u) = H(u) - H(0) - pi i u - u v(u)/4.
BigComplex f_fig8(const BigComplex& u);

// Vol(E_u) = Im H(u) - pi Re u - (1/2) Re(u) Im v(u).
BigReal vol_cone_fig8(const BigComplex& u);

// CS(E_u) mod pi^2, representative in [0, pi^2), for real |u| > arccosh(3/2).
// Computed as Re f(u) + (pi/2) Im(r u + s v(u)); on the branch of H and v
// that solves the surgery equation this reproduces the SnapPea checkpoints
// (the displayed -Re f form lands on the mod-pi^2 negative).
BigReal cs_cone_fig8(const BigReal& u, const SurgeryCoeff& coeffs = {});

// Newton solve of p u + q v(u) = 2 pi i.
BigComplex surgery_solve(int p, int q, const BigComplex& seed);

// length(gamma) = -(1/2pi) Im(u conj(v(u))) and -r u - s v(u).
std::pair<BigReal, BigComplex> core_geodesic(const BigComplex& u, const SurgeryCoeff& coeffs);

}  // namespace knotlab::geom
