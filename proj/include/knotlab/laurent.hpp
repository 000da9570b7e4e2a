#pragma once

#include "knotlab/bigfloat.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace knotlab::skein {

enum class VarTag { A, t, q };

// Exact Laurent polynomial in one variable with quarter-integer exponents.
// Exponents are stored scaled by 4 (so X^(e/4) has key e); coefficients are
// 64-bit integers with overflow checking.  All arithmetic is exact.
class LaurentPoly {
public:
    using Exp = std::int64_t;
    using Coeff = std::int64_t;

    LaurentPoly() = default;
    explicit LaurentPoly(VarTag tag) : tag_(tag) {}

    static LaurentPoly term(Coeff c, Exp quarter_exp, VarTag tag = VarTag::A);
    static LaurentPoly one(VarTag tag = VarTag::A) { return term(1, 0, tag); }

    void add_term(Coeff c, Exp quarter_exp);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly pow(unsigned n) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Coeff coeff(Exp quarter_exp) const;
    const std::map<Exp, Coeff>& terms() const { return terms_; }
    VarTag tag() const { return tag_; }
    void set_tag(VarTag t) { tag_ = t; }

    // exponent e -> e * num / den; throws if any result is non-integral
    LaurentPoly map_exponents(std::int64_t num, std::int64_t den, VarTag new_tag) const;
    // variable inversion X -> X^-1
    LaurentPoly mirror() const;

    BigComplex eval(const BigComplex& x) const;

    // canonical ascending-exponent form "c*t^(n)" / "c*t^(n/2)" / "c*t^(n/4)"
    std::string str() const;

private:
    std::map<Exp, Coeff> terms_;
    VarTag tag_ = VarTag::A;
};

}  // namespace knotlab::skein
