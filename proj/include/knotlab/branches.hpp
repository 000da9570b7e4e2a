#pragma once

#include "knotlab/bigfloat.hpp"

namespace knotlab::geom {

enum class BranchTag { vc, std_branch };

// Principal square root except on the negative real axis, where the value
// continues from Im -> 0^- (so sqrt(-r) = -i sqrt(r)).  The deformation
// family of the figure-eight reaches the cut of sqrt(1 - x^2) exactly on the
// real rays |u| > arccosh(3/2); this side keeps H, v and the surgery
// equation p u + q v(u) = 2 pi i consistent with the paper's checkpoints.
BigComplex sqrt_lower(const BigComplex& z);

// arccosh(x) = log(x - i sqrt(1 - x^2)) + 2 pi i, log cut (-oo, 0).
BigComplex arccosh_vc(const BigComplex& x);

// usual branch: arccosh(x) > 0 for real x > 1.
BigComplex arccosh_std(const BigComplex& x);

// phi(u) = arccosh(cosh(u) - 1/2) on the requested branch.
BigComplex phi(const BigComplex& u, BranchTag tag = BranchTag::vc);

}  // namespace knotlab::geom
