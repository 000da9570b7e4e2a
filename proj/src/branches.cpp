#include "knotlab/branches.hpp"

namespace knotlab::geom {

BigComplex sqrt_lower(const BigComplex& z) {
    if (z.imag() == 0 && z.real() < 0) {
        BigReal root = sqrt(-z.real());
        return BigComplex(BigReal(0), -root);
    }
    return sqrt(z);
}

BigComplex arccosh_vc(const BigComplex& x) {
    BigComplex s = sqrt_lower(BigComplex(1) - x * x);
    BigReal two_pi = 2 * const_pi();
    return log(x - imag_unit() * s) + BigComplex(BigReal(0), two_pi);
}

BigComplex arccosh_std(const BigComplex& x) {
    return log(x + sqrt(x - 1) * sqrt(x + 1));
}

BigComplex phi(const BigComplex& u, BranchTag tag) {
    BigComplex x = cosh(u) - BigReal(1) / 2;
    return tag == BranchTag::vc ? arccosh_vc(x) : arccosh_std(x);
}

}  // namespace knotlab::geom
