#include "knotlab/gamma.hpp"

#include "knotlab/dilog.hpp"

#include <cmath>
#include <stdexcept>

namespace knotlab::asym {

namespace {

// log Gamma(w) = (w - 1/2) log w - w + log(2 pi)/2
//                + sum_k B_{2k} / (2k (2k-1) w^{2k-1}),  Re w large
BigComplex log_gamma_stirling(const BigComplex& w, const BigReal& tol) {
    BigReal pi = knotlab::const_pi();
    BigComplex s = (w - BigReal(1) / 2) * log(w) - w + log(2 * pi) / 2;
    BigComplex w2 = w * w;
    BigComplex wpow = w;  // w^{2k-1} at k=1
    BigComplex prev_term;
    for (unsigned k = 1; k < 1000; ++k) {
        BigComplex term = geom::bernoulli_2k(k) / (BigReal(2 * k) * BigReal(2 * k - 1) * wpow);
        s += term;
        if (abs(term) < tol) return s;
        if (k > 2 && abs(term) > abs(prev_term))
            throw std::runtime_error("Stirling series diverging; shift insufficient");
        prev_term = term;
        wpow *= w2;
    }
    throw std::runtime_error("Stirling series did not converge");
}

}  // namespace

BigComplex gamma_fn(const BigComplex& z) {
    if (z.imag() == 0 && z.real() <= 0 && z.real() == floor(z.real()))
        throw std::domain_error("gamma pole at nonpositive integer");

    const unsigned caller = current_precision();
    PrecisionGuard guard(caller + 15);
    const BigComplex zz = to_precision(z, caller + 15);
    const BigReal tol = pow(BigReal(10), -static_cast<int>(caller + 12));
    const BigReal pi = const_pi();

    BigComplex result;
    if (zz.real() < BigReal(1) / 2) {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
        BigComplex s = sin(pi * zz);
        result = pi / (s * gamma_fn(BigComplex(1) - zz));
    } else {
        // shift until Stirling converges at the target precision
        double need = 0.4 * (caller + 15) + 10;
        long n = std::max<long>(0, static_cast<long>(std::ceil(need - static_cast<double>(zz.real()))));
        BigComplex w = zz + BigReal(n);
        BigComplex lg = log_gamma_stirling(w, tol);
        BigComplex denom = 1;
        for (long i = 0; i < n; ++i) denom *= (zz + BigReal(i));
        result = exp(lg) / denom;
    }
    return to_precision(result, caller);
}

}  // namespace knotlab::asym
