#include "knotlab/torus_geom.hpp"

#include <numeric>
#include <stdexcept>

namespace knotlab::geom {

namespace {

void check_ab(int a, int b) {
    if (a <= 1 || b <= 1 || std::gcd(a, b) != 1)
        throw std::invalid_argument("need coprime a, b > 1");
}

void check_kl(int a, int b, int k, int l) {
    if (!(1 <= k && k <= a - 1 && 1 <= l && l <= b - 1) || (k - l) % 2 != 0)
        throw std::invalid_argument("(k, l) outside the component index range");
}

BigComplex two_pi_i() { return BigComplex(BigReal(0), 2 * const_pi()); }

}  // namespace

BigComplex torus_H(int a, int b, const BigComplex& u) {
    check_ab(a, b);
    BigComplex w = BigReal(a * b) * (u + two_pi_i()) - two_pi_i();
    return -w * w / BigReal(4 * a * b);
}

BigComplex torus_v(int a, int b, const BigComplex& u) {
    check_ab(a, b);
    return -BigReal(a * b) * (u + two_pi_i());
}

BigComplex torus_f_plus_H0(int a, int b, const BigComplex& u) {
    check_ab(a, b);
    BigReal pi = const_pi();
    BigReal pi2 = pi * pi;
    return BigComplex(-2 * pi2 + pi2 / (a * b) + a * b * pi2) -
           BigReal(a * b) / 2 * u * BigComplex(BigReal(0), pi);
}

CSBundleElement torus_cs_bundle(int a, int b, int c, int d, int k, int l, const BigComplex& u,
                                int eps) {
    check_ab(a, b);
    check_kl(a, b, k, l);
    if (a * d - b * c != 1) throw std::invalid_argument("need a d - b c = 1");
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +-1");
    long s = static_cast<long>(l) * a * d + static_cast<long>(eps) * k * b * c;
    long s2 = ((s * s) % (4 * a * b) + 4 * a * b) % (4 * a * b);
    BigReal pi = const_pi();
    BigComplex four_pi_i(BigReal(0), 4 * pi);
    BigComplex zexp = BigComplex(BigReal(0), pi) * BigReal(s2) / BigReal(2 * a * b) +
                      BigReal(a * b) * u / 4;
    return {u / four_pi_i, torus_v(a, b, u) / four_pi_i, exp(zexp)};
}

CSBundleElement torus_cs_bundle_raw(int a, int b, int c, int d, int k, int l, const BigComplex& u,
                                    int eps) {
    check_ab(a, b);
    check_kl(a, b, k, l);
    if (a * d - b * c != 1) throw std::invalid_argument("need a d - b c = 1");
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +-1");
    long s = static_cast<long>(l) * a * d + static_cast<long>(eps) * k * b * c;
    BigReal pi = const_pi();
    BigComplex four_pi_i(BigReal(0), 4 * pi);
    BigComplex eight_pi_i(BigReal(0), 8 * pi);
    BigComplex zexp = two_pi_i() * (BigReal(s) * BigReal(s) / BigReal(4 * a * b) - u / eight_pi_i);
    return {u / four_pi_i, BigReal(1) / 2 - BigReal(a * b) * u / four_pi_i, exp(zexp)};
}

CSBundleElement shift_beta(const CSBundleElement& e, const BigReal& h) {
    return {e.alpha, e.beta - h, e.z * exp(two_pi_i() * h * e.alpha)};
}

std::pair<int, int> torus_cd(int a, int b) {
    check_ab(a, b);
    // extended Euclid for a d - b c = 1
    for (int c = -b; c <= b; ++c) {
        long num = 1 + static_cast<long>(b) * c;
        if (num % a == 0) return {c, static_cast<int>(num / a)};
    }
    throw std::logic_error("extended gcd failed");
}

BigComplex torus_ftilde(int a, int b, int k, int l, const BigComplex& u) {
    check_ab(a, b);
    check_kl(a, b, k, l);
    auto [c, d] = torus_cd(a, b);
    long s = static_cast<long>(l) * a * d - static_cast<long>(k) * b * c;  // eps = -1
    long s2 = ((s * s) % (4 * a * b) + 4 * a * b) % (4 * a * b);
    BigReal pi = const_pi();
    return BigComplex(pi * pi * BigReal(s2) / BigReal(a * b)) -
           BigReal(a * b) / 2 * u * BigComplex(BigReal(0), pi);
}

}  // namespace knotlab::geom
