#include "knotlab/bundle.hpp"

#include "knotlab/fig8_geom.hpp"

#include <optional>
#include <stdexcept>

namespace knotlab::geom {

namespace {

BigComplex two_pi_i() { return BigComplex(BigReal(0), 2 * const_pi()); }

long round_to_long(const BigReal& x) {
    return static_cast<long>(floor(x + BigReal(1) / 2));
}

// find integers (j,k) with x^j y^k e1 = e2 on the (alpha, beta) part
std::optional<std::pair<long, long>> char_match(const CSBundleElement& e1,
                                                const CSBundleElement& e2, const BigReal& tol) {
    BigComplex da = e2.alpha - e1.alpha;
    BigComplex db = e2.beta - e1.beta;
    long j = round_to_long(da.real());
    long k = round_to_long(db.real());
    if (abs(da - BigReal(j)) > tol) return std::nullopt;
    if (abs(db - BigReal(k)) > tol) return std::nullopt;
    return std::make_pair(j, k);
}

}  // namespace

CSBundleElement bundle_act(BundleGen g, const CSBundleElement& e) {
    if (e.z == 0) throw std::invalid_argument("z must be nonzero");
    switch (g) {
        case BundleGen::x:
            return {e.alpha + 1, e.beta, e.z * exp(two_pi_i() * e.beta)};
        case BundleGen::y:
            return {e.alpha, e.beta + 1, e.z * exp(-two_pi_i() * e.alpha)};
        case BundleGen::b:
            return {-e.alpha, -e.beta, e.z};
    }
    throw std::logic_error("bad generator");
}

CSBundleElement bundle_translate(const CSBundleElement& e, long j, long k) {
    // x^j then y^k; the two translations commute
    BigComplex z = e.z * exp(two_pi_i() * BigReal(j) * e.beta) *
                   exp(-two_pi_i() * BigReal(k) * (e.alpha + BigReal(j)));
    return {e.alpha + BigReal(j), e.beta + BigReal(k), z};
}

bool bundle_eq(const CSBundleElement& e1, const CSBundleElement& e2) {
    return bundle_eq(e1, e2, default_tolerance());
}

bool bundle_eq(const CSBundleElement& e1, const CSBundleElement& e2, const BigReal& tol) {
    if (e1.z == 0 || e2.z == 0) throw std::invalid_argument("z must be nonzero");
    for (bool flip : {false, true}) {
        CSBundleElement target = flip ? bundle_act(BundleGen::b, e2) : e2;
        auto jk = char_match(e1, target, tol);
        if (!jk) continue;
        CSBundleElement moved = bundle_translate(e1, jk->first, jk->second);
        if (abs(moved.z - target.z) <= tol * abs(target.z)) return true;
    }
    return false;
}

BigComplex cs_glue(const CSBundleElement& e1, const CSBundleElement& e2) {
    if (e1.z == 0 || e2.z == 0) throw std::invalid_argument("z must be nonzero");
    const BigReal tol = default_tolerance();
    for (bool flip : {false, true}) {
        CSBundleElement target = flip ? bundle_act(BundleGen::b, e2) : e2;
        auto jk = char_match(e1, target, tol);
        if (!jk) continue;
        // express e2 over e1's representative before multiplying
        CSBundleElement moved = bundle_translate(target, -jk->first, -jk->second);
        return e1.z * moved.z;
    }
    throw std::invalid_argument("boundary characters do not match (beyond the G-orbit)");
}

CSBundleElement cs_kk_fig8(const BigComplex& u) {
    BigComplex four_pi_i = BigComplex(BigReal(0), 4 * const_pi());
    BigComplex i_over_2pi = imag_unit() / (2 * const_pi());
    return {u / four_pi_i, v_fig8(u) / four_pi_i, exp(i_over_2pi * f_fig8(u))};
}

}  // namespace knotlab::geom
