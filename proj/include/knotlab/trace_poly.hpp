#pragma once

#include "knotlab/bigfloat.hpp"
#include "knotlab/words.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace knotlab::charvar {

// Bivariate integer polynomial in xi = tr rho(x) = tr rho(y) and
// eta = tr rho(xy).
class TracePoly {
public:
    using Key = std::pair<int, int>;  // (xi power, eta power)

    TracePoly() = default;
    static TracePoly constant(std::int64_t c);
    static TracePoly xi();
    static TracePoly eta();

    TracePoly operator+(const TracePoly& o) const;
    TracePoly operator-(const TracePoly& o) const;
    TracePoly operator-() const;
    TracePoly operator*(const TracePoly& o) const;
    bool operator==(const TracePoly& o) const { return terms_ == o.terms_; }

    void add_term(std::int64_t c, int xi_pow, int eta_pow);
    std::int64_t coeff(int xi_pow, int eta_pow) const;
    const std::map<Key, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BigComplex eval(const BigComplex& xi, const BigComplex& eta) const;
    std::string str() const;  // e.g. "eta^2 - xi^2*eta + 2*xi^2 - 2"

private:
    std::map<Key, std::int64_t> terms_;
};

// P_w with tr rho(w) = P_w(xi, eta) for every SL(2,C) representation sending
// both generators to matrices of equal trace (the two-bridge setting).
// Recursive reduction on the trace identities with a memo cache.
TracePoly trace_poly(const GroupWord& w);

struct TwoBridgePresentation {
    GroupWord omega;      // alternating word x^{+-1} y^{+-1} ... of even length
    GroupWord longitude;  // peripheral longitude in x, y

    static TwoBridgePresentation fig8();
    static TwoBridgePresentation trefoil();
    static TwoBridgePresentation cinquefoil();
};

// F(xi,eta) = sum_{i=0}^{k} (-1)^i P_{omega^(i)} over the nested subwords
// (P of the empty word is 1).
TracePoly riley_F(const TwoBridgePresentation& p);

// (2 + eta - xi^2) F(xi, eta): abelian factor times the non-abelian part.
TracePoly char_variety_poly(const TwoBridgePresentation& p);

}  // namespace knotlab::charvar
