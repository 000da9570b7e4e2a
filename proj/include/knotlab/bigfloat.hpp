#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/complex_adaptor.hpp>

#include <string>

namespace knotlab {

namespace mp = boost::multiprecision;

// Arbitrary-precision real/complex values.  Precision (decimal digits) is a
// thread-local default picked up at construction time; the exponent range is
// effectively unbounded, so e^{O(N)} intermediates are representable.
using BigReal = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using BigComplex = mp::number<mp::complex_adaptor<mp::mpfr_float_backend<0>>, mp::et_off>;

inline unsigned current_precision() { return BigReal::default_precision(); }

// RAII default-precision switch.  All values a computation creates while the
// guard is alive carry the guarded precision; inputs captured earlier must be
// re-rounded (or recomputed) explicitly.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits)
        : saved_(BigReal::default_precision()) {
        BigReal::default_precision(digits);
    }
    ~PrecisionGuard() { BigReal::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

// pi recomputed at the current working precision (never padded from a cache
// of lower precision).
BigReal const_pi();

inline BigComplex imag_unit() { return BigComplex(BigReal(0), BigReal(1)); }

inline BigReal to_precision(const BigReal& x, unsigned digits) {
    BigReal r = x;
    r.precision(digits);
    return r;
}

inline BigComplex to_precision(const BigComplex& z, unsigned digits) {
    return BigComplex(to_precision(z.real(), digits), to_precision(z.imag(), digits));
}

// Comparison tolerance 10^-(precision-slack) at the current precision.
BigReal default_tolerance(unsigned slack = 10);

bool is_close(const BigComplex& a, const BigComplex& b, const BigReal& tol);

std::string to_string(const BigReal& x, unsigned digits = 0);
std::string to_string(const BigComplex& z, unsigned digits = 0);

}  // namespace knotlab
