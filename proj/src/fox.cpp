#include "knotlab/fox.hpp"

#include <stdexcept>

namespace knotlab::charvar {

using skein::LaurentPoly;
using skein::VarTag;

LaurentPoly fox_alexander(const TwoBridgePresentation& p) {
    // relator R = omega x omega^-1 y^-1 from omega x = y omega
    GroupWord relator = p.omega * GroupWord::parse("x") * p.omega.inverse() *
                        GroupWord::parse("Y");

    // d/dx letter by letter: x at abelianized prefix t^s contributes +t^s,
    // x^-1 contributes -t^{s-1}; y-letters contribute nothing.
    LaurentPoly D(VarTag::t);
    std::int64_t s = 0;  // exponent sum of the prefix
    for (Letter l : relator.letters()) {
        if (l == +1) D.add_term(+1, 4 * s);
        if (l == -1) D.add_term(-1, 4 * (s - 1));
        s += (l > 0) ? +1 : -1;
    }
    if (D.is_zero()) throw std::domain_error("degenerate presentation: zero Fox determinant");

    // center the exponent span, then fix the overall sign by Delta(1) = 1
    auto lo = D.terms().begin()->first;
    auto hi = D.terms().rbegin()->first;
    LaurentPoly shift = LaurentPoly::term(1, -(lo + hi) / 2, VarTag::t);
    if ((lo + hi) % 2 != 0)
        throw std::domain_error("degenerate presentation: exponent span not centerable");
    LaurentPoly delta = shift * D;

    std::int64_t at_one = 0;
    for (auto& [e, c] : delta.terms()) at_one += c;
    if (at_one == 0) throw std::domain_error("degenerate presentation: Delta(1) = 0");
    if (at_one < 0) delta = -delta;
    at_one = std::abs(at_one);
    if (at_one != 1) throw std::domain_error("presentation does not normalize to Delta(1) = 1");
    if (!(delta == delta.mirror()))
        throw std::domain_error("Fox determinant is not palindromic");
    return delta;
}

BigComplex alexander_at(const LaurentPoly& delta, const BigComplex& t) {
    return delta.eval(t);
}

}  // namespace knotlab::charvar
