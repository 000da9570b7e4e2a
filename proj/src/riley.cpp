#include "knotlab/riley.hpp"

#include <numeric>
#include <stdexcept>

namespace knotlab::charvar {

Matrix2 Matrix2::identity() {
    return {BigComplex(1), BigComplex(0), BigComplex(0), BigComplex(1)};
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Matrix2 Matrix2::inverse() const {
    BigComplex dt = det();
    if (dt == 0) throw std::domain_error("singular matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

BigReal matrix_distance(const Matrix2& m1, const Matrix2& m2) {
    BigReal r = abs(m1.a - m2.a);
    r = std::max(r, abs(m1.b - m2.b));
    r = std::max(r, abs(m1.c - m2.c));
    r = std::max(r, abs(m1.d - m2.d));
    return r;
}

std::pair<Matrix2, Matrix2> riley_rep(const RepParams& params) {
    if (params.m == 0) throw std::domain_error("m = 0");
    BigComplex r = sqrt(params.m);
    BigComplex ri = BigComplex(1) / r;
    Matrix2 x{r, BigComplex(1), BigComplex(0), ri};
    Matrix2 y{r, BigComplex(0), -params.d, ri};
    BigReal tol = default_tolerance();
    if (abs(x.det() - 1) > tol || abs(y.det() - 1) > tol)
        throw std::domain_error("representation matrices are not unimodular");
    return {x, y};
}

Matrix2 eval_word(const Matrix2& xmat, const Matrix2& ymat, const GroupWord& w) {
    BigReal tol = default_tolerance();
    if (abs(xmat.det() - 1) > tol || abs(ymat.det() - 1) > tol)
        throw std::domain_error("eval_word inputs must be unimodular");
    Matrix2 xinv = xmat.inverse(), yinv = ymat.inverse();
    Matrix2 m = Matrix2::identity();
    for (Letter l : w.letters()) {
        switch (l) {
            case +1: m = m * xmat; break;
            case -1: m = m * xinv; break;
            case +2: m = m * ymat; break;
            case -2: m = m * yinv; break;
        }
    }
    return m;
}

namespace {

BigComplex fig8_discriminant_root(const BigComplex& m) {
    BigComplex s = m + BigComplex(1) / m;
    return sqrt((s + 1) * (s - 3));
}

}  // namespace

BigComplex fig8_d(const BigComplex& m, Branch branch) {
    if (m == 0) throw std::domain_error("m = 0");
    BigComplex s = m + BigComplex(1) / m;
    return (s - 3 + BigReal(branch_sign(branch)) * fig8_discriminant_root(m)) / 2;
}

RepParams fig8_rep(const BigComplex& m, Branch branch) {
    return {m, fig8_d(m, branch), branch};
}

BigComplex fig8_longitude_eigen(const BigComplex& m, Branch branch) {
    if (m == 0) throw std::domain_error("m = 0");
    BigComplex mi = BigComplex(1) / m;
    BigComplex p = (m * m - m - 2 - mi + mi * mi) / 2;
    return p + BigReal(branch_sign(branch)) * (m - mi) / 2 * fig8_discriminant_root(m);
}

BigComplex apoly_residual(const BigComplex& ell, const BigComplex& m) {
    if (ell == 0 || m == 0) throw std::domain_error("ell, m must be nonzero");
    BigComplex mi = BigComplex(1) / m;
    return ell + BigComplex(1) / ell - (m * m - m - 2 - mi + mi * mi);
}

RepParams trefoil_rep(const BigComplex& m) {
    if (m == 0) throw std::domain_error("m = 0");
    return {m, m + BigComplex(1) / m - 1, Branch::plus};
}

RepParams cinquefoil_rep(const BigComplex& m, Branch branch) {
    if (m == 0) throw std::domain_error("m = 0");
    BigReal root5 = sqrt(BigReal(5));
    BigComplex d = m + BigComplex(1) / m - (1 + BigReal(branch_sign(branch)) * root5) / 2;
    return {m, d, branch};
}

std::pair<BigComplex, BigComplex> torus_component_traces(int a, int b, int k, int l) {
    if (a <= 1 || b <= 1 || std::gcd(a, b) != 1)
        throw std::invalid_argument("need coprime a, b > 1");
    if (!(1 <= k && k <= a - 1 && 1 <= l && l <= b - 1))
        throw std::invalid_argument("need 1 <= k <= a-1 and 1 <= l <= b-1");
    if ((k - l) % 2 != 0) throw std::invalid_argument("need k = l (mod 2)");
    BigReal pi = const_pi();
    return {BigComplex(2 * cos(pi * k / a)), BigComplex(2 * cos(pi * l / b))};
}

}  // namespace knotlab::charvar
