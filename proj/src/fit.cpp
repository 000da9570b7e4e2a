#include "knotlab/fit.hpp"

#include <stdexcept>

namespace knotlab::asym {

namespace {

// Solve the small normal-equation system A^T A x = A^T y by Gaussian
// elimination with partial pivoting.
std::vector<BigReal> least_squares(const std::vector<std::vector<BigReal>>& rows,
                                   const std::vector<BigReal>& y) {
    const std::size_t n = rows.size(), m = rows[0].size();
    std::vector<std::vector<BigReal>> M(m, std::vector<BigReal>(m + 1, BigReal(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t r = 0; r < n; ++r) M[i][j] += rows[r][i] * rows[r][j];
        for (std::size_t r = 0; r < n; ++r) M[i][m] += rows[r][i] * y[r];
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if (abs(M[r][col]) > abs(M[piv][col])) piv = r;
        if (abs(M[piv][col]) < BigReal("1e-300"))
            throw std::domain_error("rank-deficient design matrix");
        std::swap(M[col], M[piv]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col) continue;
            BigReal f = M[r][col] / M[col][col];
            for (std::size_t cc = col; cc <= m; ++cc) M[r][cc] -= f * M[col][cc];
        }
    }
    std::vector<BigReal> x(m);
    for (std::size_t i = 0; i < m; ++i) x[i] = M[i][m] / M[i][i];
    return x;
}

std::pair<int, int> resolve_window(const cjones::JSequence& seq,
                                   std::optional<std::pair<int, int>> window) {
    if (seq.values.empty()) throw std::invalid_argument("empty sequence");
    if (window) {
        int lo = window->first, hi = window->second;
        if (lo > hi || lo < seq.values.front().first || hi > seq.values.back().first)
            throw std::invalid_argument("window outside the sequence range");
        return *window;
    }
    // default: top third of the sequence
    std::size_t start = seq.values.size() - seq.values.size() / 3;
    if (start >= seq.values.size()) start = 0;
    return {seq.values[start].first, seq.values.back().first};
}

GrowthFit fit_with_columns(const cjones::JSequence& seq,
                           std::optional<std::pair<int, int>> window, bool with_N) {
    auto [lo, hi] = resolve_window(seq, window);
    std::vector<BigComplex> logs = unwound_logs(seq, lo, hi);
    std::vector<std::vector<BigReal>> rows;
    std::vector<BigReal> re, im;
    std::size_t idx = 0;
    for (auto& [N, val] : seq.values) {
        if (N < lo || N > hi) continue;
        std::vector<BigReal> row;
        if (with_N) row.push_back(BigReal(N));
        row.push_back(log(BigReal(N)));
        row.push_back(BigReal(1));
        rows.push_back(std::move(row));
        re.push_back(logs[idx].real());
        im.push_back(logs[idx].imag());
        ++idx;
    }
    if (rows.size() < 6) throw std::invalid_argument("need at least 6 points in the window");

    auto cre = least_squares(rows, re);
    auto cim = least_squares(rows, im);

    GrowthFit fit;
    fit.window = {lo, hi};
    std::size_t off = with_N ? 1 : 0;
    fit.Lambda = with_N ? BigComplex(cre[0], cim[0]) : BigComplex(0);
    fit.rho = cre[off];
    fit.c = BigComplex(cre[off + 1], cim[off + 1]);

    BigReal ss = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        BigReal pre = 0, pim = 0;
        for (std::size_t j = 0; j < rows[r].size(); ++j) {
            pre += rows[r][j] * cre[j];
            pim += rows[r][j] * cim[j];
        }
        ss += (pre - re[r]) * (pre - re[r]) + (pim - im[r]) * (pim - im[r]);
    }
    fit.residual = sqrt(ss / BigReal(static_cast<unsigned>(rows.size())));
    return fit;
}

}  // namespace

std::vector<BigComplex> unwound_logs(const cjones::JSequence& seq, int n_lo, int n_hi) {
    std::vector<BigComplex> out;
    BigReal two_pi = 2 * const_pi();
    bool have_prev = false;
    BigReal prev_im(0);
    for (auto& [N, val] : seq.values) {
        if (N < n_lo || N > n_hi) continue;
        if (val == 0) throw std::domain_error("zero value in fit window at N=" + std::to_string(N));
        BigComplex L = log(val);
        if (have_prev) {
            BigReal k = floor((prev_im - L.imag()) / two_pi + BigReal(1) / 2);
            L += BigComplex(BigReal(0), two_pi * k);
        }
        prev_im = L.imag();
        have_prev = true;
        out.push_back(L);
    }
    return out;
}

GrowthFit fit_growth(const cjones::JSequence& seq, std::optional<std::pair<int, int>> window) {
    return fit_with_columns(seq, window, true);
}

GrowthFit fit_power_law(const cjones::JSequence& seq, std::optional<std::pair<int, int>> window) {
    return fit_with_columns(seq, window, false);
}

}  // namespace knotlab::asym
