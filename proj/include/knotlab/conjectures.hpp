#pragma once

#include "knotlab/cjones.hpp"
#include "knotlab/fit.hpp"

#include <string>

namespace knotlab::asym {

struct ConjectureReport {
    cjones::KnotTag knot;
    BigComplex theta;
    BigComplex predicted;
    BigComplex measured;
    BigReal abs_error;
    BigReal tolerance;
    bool verdict = false;
    std::pair<int, int> window{0, 0};
    std::string detail;  // human-readable note (regime, extracted exponent, ...)
};

// exponential regimes: measured = theta * Lambda from fit_growth, compared
// with the predicted H value of the respective theorem.
ConjectureReport check_exp_regime(const cjones::KnotTag& knot, const BigComplex& theta,
                                  const BigComplex& predicted_H, int n_max, const BigReal& tol,
                                  int stride = 0);

// convergence regimes: measured = J_{Nmax}, predicted = 1/Delta(K; e^theta).
ConjectureReport check_limit_regime(const cjones::KnotTag& knot, const BigComplex& theta,
                                    int n_max, const BigReal& tol);

// polynomial regimes at the Alexander-zero points: fits the exponent rho with
// the two-parameter power law and extracts the leading constant from the tail
// J_N / N^{rho_predicted}; abs_error = max(|rho - rho*|, |C - C*|/|C*|,
// phase error).
ConjectureReport check_poly_regime(const cjones::KnotTag& knot, const BigComplex& theta,
                                   int n_max, const BigReal& tol);

}  // namespace knotlab::asym
