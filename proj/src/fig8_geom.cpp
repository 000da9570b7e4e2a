#include "knotlab/fig8_geom.hpp"

#include "knotlab/dilog.hpp"

#include <numeric>
#include <stdexcept>

namespace knotlab::geom {

void validate_coeffs(const SurgeryCoeff& c) {
    if (std::gcd(c.p, c.q) != 1) throw std::invalid_argument("gcd(p, q) must be 1");
    if (c.p * c.s - c.q * c.r != 1) throw std::invalid_argument("need p s - q r = 1");
}

BigComplex H_fig8(const BigComplex& u) {
    BigComplex p = phi(u, BranchTag::vc);
    return li2(exp(-p - u)) - li2(exp(p - u)) + u * p;
}

BigComplex Htilde_fig8(const BigComplex& theta) {
    BigComplex p = phi(theta, BranchTag::std_branch);
    return li2(exp(-p - theta)) - li2(exp(p - theta)) + theta * p;
}

BigComplex dH_fig8(const BigComplex& u) {
    BigComplex p = phi(u, BranchTag::vc);
    return 2 * log(BigComplex(1) - exp(-p - u)) + p + u;
}

BigComplex v_fig8(const BigComplex& u) {
    BigReal two_pi = 2 * const_pi();
    return 2 * dH_fig8(u) - BigComplex(BigReal(0), two_pi);
}

BigComplex dv_fig8(const BigComplex& u) {
    BigComplex p = phi(u, BranchTag::vc);
    BigComplex sp = sinh(p);
    if (abs(sp) < default_tolerance(0))
        throw std::domain_error("dv/du singular at a branch point of phi");
    BigComplex pprime = sinh(u) / sp;
    BigComplex E = exp(-p - u);
    return 4 * E * (pprime + 1) / (BigComplex(1) - E) + 2 * pprime + 2;
}

BigComplex H0_fig8() { return H_fig8(BigComplex(0)); }

BigComplex f_fig8(const BigComplex& u) {
    BigReal pi = const_pi();
    return H_fig8(u) - H0_fig8() - BigComplex(BigReal(0), pi) * u - u * v_fig8(u) / 4;
}

BigReal vol_cone_fig8(const BigComplex& u) {
    BigComplex H = H_fig8(u);
    BigComplex v = v_fig8(u);
    BigReal pi = const_pi();
    return H.imag() - pi * u.real() - u.real() * v.imag() / 2;
}

namespace {

BigReal wrap_mod(const BigReal& x, const BigReal& modulus) {
    BigReal r = fmod(x, modulus);
    if (r < 0) r += modulus;
    return r;
}

}  // namespace

BigReal cs_cone_fig8(const BigReal& u, const SurgeryCoeff& coeffs) {
    validate_coeffs(coeffs);
    BigReal pi = const_pi();
    BigReal cusp = acosh(BigReal(3) / 2);
    if (abs(u) <= cusp)
        throw std::domain_error("u inside the cusp segment |u| <= arccosh(3/2)");
    BigComplex uu(u);
    BigComplex f = f_fig8(uu);
    BigComplex v = v_fig8(uu);
    BigReal cs = f.real() + pi / 2 * (BigReal(coeffs.r) * uu + BigReal(coeffs.s) * v).imag();
    return wrap_mod(cs, pi * pi);
}

BigComplex surgery_solve(int p, int q, const BigComplex& seed) {
    if (std::gcd(p, q) != 1) throw std::invalid_argument("gcd(p, q) must be 1");
    BigReal two_pi = 2 * const_pi();
    const BigComplex target(BigReal(0), two_pi);
    const BigReal tol = default_tolerance(10);
    auto g = [&](const BigComplex& u) { return BigReal(p) * u + BigReal(q) * v_fig8(u) - target; };

    BigComplex u = seed;
    BigComplex gu = g(u);
    for (int iter = 0; iter < 100; ++iter) {
        if (abs(gu) < tol) return u;
        BigComplex deriv = BigReal(p) + BigReal(q) * dv_fig8(u);
        if (abs(deriv) < BigReal("1e-30")) throw std::runtime_error("Jacobian vanished");
        BigComplex step = gu / deriv;
        // damping: halve until |g| decreases
        BigComplex unew = u - step;
        BigComplex gnew = g(unew);
        for (int damp = 0; damp < 12 && abs(gnew) >= abs(gu); ++damp) {
            step /= 2;
            unew = u - step;
            gnew = g(unew);
        }
        u = unew;
        gu = gnew;
    }
    if (abs(gu) < tol) return u;
    throw std::runtime_error("surgery Newton did not converge in 100 iterations");
}

std::pair<BigReal, BigComplex> core_geodesic(const BigComplex& u, const SurgeryCoeff& coeffs) {
    validate_coeffs(coeffs);
    BigComplex v = v_fig8(u);
    BigReal two_pi = 2 * const_pi();
    BigReal length = -(u * conj(v)).imag() / two_pi;
    BigComplex torsion_comb = -BigReal(coeffs.r) * u - BigReal(coeffs.s) * v;
    return {length, torsion_comb};
}

}  // namespace knotlab::geom
