#include "knotlab/conjectures.hpp"

#include "knotlab/fox.hpp"
#include "knotlab/gamma.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotlab::asym {

namespace {

int default_stride(int lo, int hi, int max_points = 168) {
    int span = hi - lo;
    return std::max(1, span / max_points);
}

charvar::TwoBridgePresentation presentation_for(const cjones::KnotTag& knot) {
    using cjones::KnotTag;
    switch (knot.kind) {
        case KnotTag::Fig8: return charvar::TwoBridgePresentation::fig8();
        case KnotTag::Trefoil: return charvar::TwoBridgePresentation::trefoil();
        case KnotTag::Torus:
            if ((knot.a == 2 && knot.b == 3) || (knot.a == 3 && knot.b == 2))
                return charvar::TwoBridgePresentation::trefoil();
            if ((knot.a == 2 && knot.b == 5) || (knot.a == 5 && knot.b == 2))
                return charvar::TwoBridgePresentation::cinquefoil();
            throw std::invalid_argument("no shipped presentation for this torus knot");
    }
    throw std::logic_error("bad knot tag");
}

}  // namespace

ConjectureReport check_exp_regime(const cjones::KnotTag& knot, const BigComplex& theta,
                                  const BigComplex& predicted_H, int n_max, const BigReal& tol,
                                  int stride) {
    int lo = n_max - n_max / 3;
    if (stride <= 0) stride = default_stride(lo, n_max);
    auto seq = cjones::jsequence(knot, theta, lo, n_max, stride);
    GrowthFit fit = fit_growth(seq);

    ConjectureReport rep;
    rep.knot = knot;
    rep.theta = theta;
    rep.predicted = predicted_H;
    rep.measured = theta * fit.Lambda;
    rep.abs_error = abs(rep.measured - rep.predicted);
    rep.tolerance = tol;
    rep.verdict = rep.abs_error <= tol;
    rep.window = fit.window;
    rep.detail = "exp regime: theta*Lambda vs predicted H";
    return rep;
}

ConjectureReport check_limit_regime(const cjones::KnotTag& knot, const BigComplex& theta,
                                    int n_max, const BigReal& tol) {
    auto delta = charvar::fox_alexander(presentation_for(knot));
    BigComplex dval = charvar::alexander_at(delta, exp(theta));
    if (abs(dval) < tol)
        throw std::domain_error("Alexander polynomial vanishes at e^theta (regime boundary)");

    ConjectureReport rep;
    rep.knot = knot;
    rep.theta = theta;
    rep.predicted = BigComplex(1) / dval;
    rep.measured = cjones::eval_at_theta(knot, n_max, theta);
    rep.abs_error = abs(rep.measured - rep.predicted);
    rep.tolerance = tol;
    rep.verdict = rep.abs_error <= tol;
    rep.window = {n_max, n_max};
    rep.detail = "limit regime: J_Nmax vs 1/Delta(e^theta)";
    return rep;
}

ConjectureReport check_poly_regime(const cjones::KnotTag& knot, const BigComplex& theta,
                                   int n_max, const BigReal& tol) {
    BigReal pi = const_pi();
    BigReal rho_pred;
    BigComplex const_pred;
    if (knot.kind == cjones::KnotTag::Fig8) {
        rho_pred = BigReal(2) / 3;
        BigReal ach = acosh(BigReal(3) / 2);
        const_pred = gamma_fn(BigComplex(BigReal(1) / 3)) / pow(BigComplex(3 * ach), BigComplex(rho_pred));
    } else {
        int a = (knot.kind == cjones::KnotTag::Trefoil) ? 2 : knot.a;
        int b = (knot.kind == cjones::KnotTag::Trefoil) ? 3 : knot.b;
        rho_pred = BigReal(1) / 2;
        BigReal mag = sin(pi / a) * sin(pi / b) / (sqrt(BigReal(2)) * sin(pi / (a * b)));
        // theta = +- 2 pi i/(ab) carries phase e^{-+ pi i/4}
        BigReal sgn = (theta.imag() >= 0) ? BigReal(-1) : BigReal(1);
        const_pred = BigComplex(mag) * exp(BigComplex(BigReal(0), sgn * pi / 4));
    }

    int lo = n_max - n_max / 3;
    int stride = default_stride(lo, n_max, 120);
    auto seq = cjones::jsequence(knot, theta, lo, n_max, stride);
    GrowthFit fit = fit_power_law(seq);

    // leading constant from the tail, at the predicted exponent
    const auto& [Ntail, Jtail] = seq.values.back();
    BigComplex const_meas = Jtail / BigComplex(pow(BigReal(Ntail), rho_pred));

    BigReal rho_err = abs(fit.rho - rho_pred);
    BigReal mag_err = abs(abs(const_meas) - abs(const_pred)) / abs(const_pred);
    BigReal phase_err = abs(arg(const_meas / const_pred));

    ConjectureReport rep;
    rep.knot = knot;
    rep.theta = theta;
    rep.predicted = const_pred;
    rep.measured = const_meas;
    rep.abs_error = std::max({rho_err, mag_err, phase_err});
    rep.tolerance = tol;
    rep.verdict = rep.abs_error <= tol;
    rep.window = fit.window;
    rep.detail = "poly regime: rho=" + to_string(fit.rho, 8) + " (want " + to_string(rho_pred, 8) +
                 "), tail constant at N=" + std::to_string(Ntail);
    return rep;
}

}  // namespace knotlab::asym
