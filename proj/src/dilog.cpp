#include "knotlab/dilog.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace knotlab::geom {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// B_0, B_1, B_2, ... by the defining recurrence sum_{j<=n} C(n+1,j) B_j = 0.
std::vector<Rational>& bernoulli_table() {
    static std::vector<Rational> table{Rational(1), Rational(-1, 2)};
    return table;
}
std::mutex bernoulli_mutex;

Rational bernoulli_exact(unsigned n) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    auto& tab = bernoulli_table();
    while (tab.size() <= n) {
        unsigned m = static_cast<unsigned>(tab.size());
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        Rational sum = 0;
        boost::multiprecision::cpp_int binom = 1;  // C(m+1, 0)
        for (unsigned j = 0; j < m; ++j) {
            sum += Rational(binom) * tab[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        tab.push_back(-sum / Rational(m + 1));
    }
    return tab[n];
}

BigReal rational_to_real(const Rational& r) {
    BigReal num(numerator(r).str());
    BigReal den(denominator(r).str());
    return num / den;
}

// principal log except on (-oo, 0), where the +i pi side is taken (the
// image of the cut (1, oo) under the transformations used below, approached
// from Im z -> 0^-).  Avoids the signed-zero flip from negating +0.
BigComplex log_cut_above(const BigComplex& w) {
    if (w.imag() == 0 && w.real() < 0)
        return BigComplex(log(-w.real()), const_pi());
    return log(w);
}

BigComplex li2_series(const BigComplex& z, const BigReal& tol) {
    BigComplex sum = 0, zk = 1;
    for (unsigned k = 1; k < 100000; ++k) {
        zk *= z;
        BigComplex term = zk / (BigReal(k) * BigReal(k));
        sum += term;
        if (abs(term) < tol) return sum;
    }
    throw std::runtime_error("li2 series did not converge");
}

// Li2(e^-w) = pi^2/6 + w(log w - 1) - w^2/4
//             + sum_{k>=1} B_{2k} w^{2k+1} / (2k (2k+1) (2k)!)
// for |w| < 2 pi; principal log w.
BigComplex li2_logexp(const BigComplex& w, const BigReal& pi2_6, const BigReal& tol) {
    if (w == 0) return BigComplex(pi2_6);
    BigComplex sum = pi2_6 + w * (log_cut_above(w) - 1) - w * w / 4;
    BigComplex w2 = w * w;
    BigComplex wpow = w * w2;      // w^{2k+1} at k=1
    BigReal fact = 2;              // (2k)! at k=1
    for (unsigned k = 1; k < 20000; ++k) {
        BigComplex term = bernoulli_2k(k) * wpow / (BigReal(2 * k) * BigReal(2 * k + 1) * fact);
        sum += term;
        if (abs(term) < tol) return sum;
        wpow *= w2;
        fact *= BigReal(2 * k + 1) * BigReal(2 * k + 2);
    }
    throw std::runtime_error("li2 log expansion did not converge");
}

}  // namespace

BigReal bernoulli_2k(unsigned k) { return rational_to_real(bernoulli_exact(2 * k)); }

BigComplex li2(const BigComplex& z) {
    const unsigned caller = current_precision();
    PrecisionGuard guard(caller + 15);
    const BigComplex zz = to_precision(z, caller + 15);
    const BigReal tol = pow(BigReal(10), -static_cast<int>(caller + 12));
    const BigReal pi = const_pi();
    const BigReal pi2_6 = pi * pi / 6;

    BigComplex result;
    const BigReal r = abs(zz);
    if (zz == 0) {
        result = 0;
    } else if (r <= BigReal(1) / 2) {
        result = li2_series(zz, tol);
    } else if (r >= 2) {
        // Li2(z) = -Li2(1/z) - pi^2/6 - log^2(-z)/2
        BigComplex lz = log_cut_above(-zz);
        result = -li2_series(BigComplex(1) / zz, tol) - pi2_6 - lz * lz / 2;
    } else if (abs(BigComplex(1) - zz) <= BigReal(1) / 2) {
        // Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z)
        BigComplex omz = BigComplex(1) - zz;
        BigComplex tail = (omz == 0) ? BigComplex(0) : li2_series(omz, tol);
        BigComplex cross = (omz == 0) ? BigComplex(0) : log(zz) * log_cut_above(omz);
        result = pi2_6 - cross - tail;
    } else {
        result = li2_logexp(-log(zz), pi2_6, tol);
    }
    return to_precision(result, caller);
}

}  // namespace knotlab::geom
