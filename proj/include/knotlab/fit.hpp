#pragma once

#include "knotlab/bigfloat.hpp"
#include "knotlab/cjones.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace knotlab::asym {

struct GrowthFit {
    BigComplex Lambda;  // coefficient of N in log J_N
    BigReal rho;        // coefficient of log N (from the real-part fit)
    BigComplex c;       // constant term
    BigReal residual;   // RMS of the fit residuals over the window
    std::pair<int, int> window;
};

// complex logs of the sequence values, argument-unwound continuously in N
std::vector<BigComplex> unwound_logs(const cjones::JSequence& seq, int n_lo, int n_hi);

// least squares for log J_N ~ N Lambda + rho log N + c over the window
// (defaults to the top third of the sequence).  Needs >= 6 points, nonzero
// values, and a full-rank design.
GrowthFit fit_growth(const cjones::JSequence& seq,
                     std::optional<std::pair<int, int>> window = std::nullopt);

// two-parameter variant log J_N ~ rho log N + c (polynomial regimes)
GrowthFit fit_power_law(const cjones::JSequence& seq,
                        std::optional<std::pair<int, int>> window = std::nullopt);

}  // namespace knotlab::asym
