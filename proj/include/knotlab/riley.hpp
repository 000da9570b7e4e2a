#pragma once

#include "knotlab/bigfloat.hpp"
#include "knotlab/words.hpp"

#include <utility>

namespace knotlab::charvar {

struct Matrix2 {
    BigComplex a, b, c, d;  // row-major [[a, b], [c, d]]

    static Matrix2 identity();
    Matrix2 operator*(const Matrix2& o) const;
    Matrix2 inverse() const;  // assumes det ~ 1 (SL2): adjugate / det
    BigComplex det() const { return a * d - b * c; }
    BigComplex trace() const { return a + d; }
};

BigReal matrix_distance(const Matrix2& m1, const Matrix2& m2);

enum class Branch { plus, minus };
inline int branch_sign(Branch b) { return b == Branch::plus ? +1 : -1; }

struct RepParams {
    BigComplex m;
    BigComplex d;
    Branch branch = Branch::plus;
};

// rho(x) = [[m^1/2, 1], [0, m^-1/2]], rho(y) = [[m^1/2, 0], [-d, m^-1/2]]
// with the principal square root.
std::pair<Matrix2, Matrix2> riley_rep(const RepParams& params);

// Ordered product of rho(x)^{+-1}, rho(y)^{+-1} along the word.  Inputs must
// be unimodular to tolerance.
Matrix2 eval_word(const Matrix2& xmat, const Matrix2& ymat, const GroupWord& w);

// The figure-eight d-equation d^2 + d(3-m-m^-1) + 3-m-m^-1 = 0:
// d = (m + m^-1 - 3 +- sqrt((m+m^-1+1)(m+m^-1-3)))/2, principal sqrt.
BigComplex fig8_d(const BigComplex& m, Branch branch);
RepParams fig8_rep(const BigComplex& m, Branch branch);

// ell(m) = (m^2-m-2-m^-1+m^-2)/2 +- ((m-m^-1)/2) sqrt((m+m^-1+1)(m+m^-1-3)).
// The branch matches fig8_rep: rho_{m,branch}(lambda) has ell_branch(m) in
// its (1,1) slot.
BigComplex fig8_longitude_eigen(const BigComplex& m, Branch branch);

// Vieta-corrected A-polynomial residual ell + ell^-1 - (m^2-m-2-m^-1+m^-2);
// vanishes at (ell_{+-}(m), m).  (The printed equation has the middle sign
// flipped; the two ell branches sum to the middle polynomial and multiply
// to 1.)
BigComplex apoly_residual(const BigComplex& ell, const BigComplex& m);

// Trefoil: d = m + m^-1 - 1 (unique); longitude eigenvalues -m^{-+3}.
RepParams trefoil_rep(const BigComplex& m);

// Cinquefoil: d = m + m^-1 - (1 +- sqrt 5)/2; longitude eigenvalues -m^{-+5}.
RepParams cinquefoil_rep(const BigComplex& m, Branch branch);

// Dubois-Kashaev component traces (2 cos(k pi/a), 2 cos(l pi/b)) for
// 1 <= k <= a-1, 1 <= l <= b-1, k = l (mod 2).
std::pair<BigComplex, BigComplex> torus_component_traces(int a, int b, int k, int l);

}  // namespace knotlab::charvar
