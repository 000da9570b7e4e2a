#include "knotlab/bigfloat.hpp"

namespace knotlab {

BigReal const_pi() {
    BigReal p;  // constructed at current default precision
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

BigReal default_tolerance(unsigned slack) {
    unsigned d = current_precision();
    int e = (d > slack) ? -static_cast<int>(d - slack) : -1;
    return pow(BigReal(10), e);
}

bool is_close(const BigComplex& a, const BigComplex& b, const BigReal& tol) {
    return abs(a - b) < tol;
}

std::string to_string(const BigReal& x, unsigned digits) {
    if (digits == 0) digits = current_precision();
    return x.str(digits);
}

std::string to_string(const BigComplex& z, unsigned digits) {
    return to_string(z.real(), digits) + (z.imag() < 0 ? " - " : " + ") +
           to_string(abs(z.imag()), digits) + "i";
}

}  // namespace knotlab
