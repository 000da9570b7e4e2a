#include "knotlab/cjones.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace knotlab::cjones {

KnotTag KnotTag::torus(int a, int b) {
    if (a <= 1 || b <= 1 || std::gcd(a, b) != 1)
        throw std::invalid_argument("torus knot parameters must be coprime and > 1");
    return {Torus, a, b};
}

BigComplex cjones_fig8(int N, const BigComplex& q) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    if (q == 0) throw std::domain_error("q = 0");
    const BigComplex w = exp(log(q) / 2);  // principal q^{1/2}
    const BigComplex wi = BigComplex(1) / w;
    // running powers q^{(N-j)/2} and q^{(N+j)/2}, updated incrementally
    BigComplex a = pow(w, N), ai = BigComplex(1) / a;
    BigComplex b = a, bi = ai;
    BigComplex sum = 1, prod = 1;
    for (int j = 1; j < N; ++j) {
        a *= wi;
        ai *= w;
        b *= w;
        bi *= wi;
        prod *= (a - ai) * (b - bi);
        sum += prod;
    }
    return sum;
}

BigComplex cjones_trefoil(int N, const BigComplex& q) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    if (q == 0) throw std::domain_error("q = 0");
    const BigComplex qi = BigComplex(1) / q;
    BigComplex qmN = 1;  // q^{-N}
    for (int i = 0; i < N; ++i) qmN *= qi;
    BigComplex sum = 1, prod = 1, tk = 1;
    BigComplex qjmN = qmN * q;  // q^{j-N} starting at j=1
    for (int k = 1; k < N; ++k) {
        prod *= (BigComplex(1) - qjmN);
        qjmN *= q;
        tk *= qmN;
        sum += tk * prod;
    }
    return qmN * q * sum;  // q^{1-N} * sum
}

unsigned required_digits(int N, const BigComplex& theta, unsigned base) {
    if (base == 0) base = std::max(50u, current_precision());
    // terms reach e^{N |Re theta|} with heavy cancellation whenever
    // |q| != 1, in either direction
    double re = std::abs(static_cast<double>(theta.real()));
    if (re <= 0 || N <= 0) return base;
    double extra = 0.7 * N * re / std::log(10.0);
    return base + static_cast<unsigned>(std::ceil(extra));
}

namespace {

BigComplex fig8_at_theta(int N, const BigComplex& theta) {
    const BigComplex w = exp(theta / (2 * N));  // q^{1/2}
    const BigComplex wi = BigComplex(1) / w;
    BigComplex a = exp(theta / 2), ai = BigComplex(1) / a;  // q^{N/2}
    BigComplex b = a, bi = ai;
    BigComplex sum = 1, prod = 1;
    for (int j = 1; j < N; ++j) {
        a *= wi;
        ai *= w;
        b *= w;
        bi *= wi;
        prod *= (a - ai) * (b - bi);
        sum += prod;
    }
    return sum;
}

BigComplex trefoil_at_theta(int N, const BigComplex& theta) {
    const BigComplex q = exp(theta / N);
    const BigComplex qmN = exp(-theta);
    BigComplex sum = 1, prod = 1, tk = 1;
    BigComplex qjmN = qmN * q;
    for (int k = 1; k < N; ++k) {
        prod *= (BigComplex(1) - qjmN);
        qjmN *= q;
        tk *= qmN;
        sum += tk * prod;
    }
    return qmN * q * sum;
}

}  // namespace

BigComplex eval_at_theta(const KnotTag& knot, int N, const BigComplex& theta) {
    if (N < 2) throw std::invalid_argument("N must be >= 2");
    bool trefoil = (knot.kind == KnotTag::Trefoil) ||
                   (knot.kind == KnotTag::Torus && knot.a == 2 && knot.b == 3) ||
                   (knot.kind == KnotTag::Torus && knot.a == 3 && knot.b == 2);
    if (!trefoil && knot.kind == KnotTag::Torus)
        throw std::invalid_argument("no closed-form colored Jones sum for this torus knot");

    const unsigned caller_digits = current_precision();
    const unsigned work = required_digits(N, theta, std::max(50u, caller_digits));
    PrecisionGuard guard(work);
    const BigComplex th = to_precision(theta, work);
    BigComplex result = trefoil ? trefoil_at_theta(N, th) : fig8_at_theta(N, th);
    return to_precision(result, caller_digits);
}

JSequence jsequence(const KnotTag& knot, const BigComplex& theta, int n_min, int n_max,
                    int stride) {
    if (!(2 <= n_min && n_min < n_max)) throw std::invalid_argument("need 2 <= N_min < N_max");
    if (stride < 1) throw std::invalid_argument("stride must be >= 1");
    JSequence seq;
    seq.knot = knot;
    seq.theta = theta;
    for (int N = n_min; N <= n_max; N += stride)
        seq.values.emplace_back(N, eval_at_theta(knot, N, theta));
    return seq;
}

}  // namespace knotlab::cjones
