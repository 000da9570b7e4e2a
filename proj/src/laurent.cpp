#include "knotlab/laurent.hpp"

#include <stdexcept>

namespace knotlab::skein {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("LaurentPoly coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("LaurentPoly coefficient overflow");
    return r;
}

const char* tag_name(VarTag t) {
    switch (t) {
        case VarTag::A: return "A";
        case VarTag::t: return "t";
        case VarTag::q: return "q";
    }
    return "?";
}

}  // namespace

LaurentPoly LaurentPoly::term(Coeff c, Exp e, VarTag tag) {
    LaurentPoly p(tag);
    p.add_term(c, e);
    return p;
}

void LaurentPoly::add_term(Coeff c, Exp e) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(c, e);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(-c, e);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(tag_);
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r(tag_);
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) r.add_term(checked_mul(c1, c2), e1 + e2);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly r = one(tag_);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
}

LaurentPoly::Coeff LaurentPoly::coeff(Exp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::map_exponents(std::int64_t num, std::int64_t den, VarTag new_tag) const {
    LaurentPoly r(new_tag);
    for (auto& [e, c] : terms_) {
        std::int64_t scaled = checked_mul(e, num);
        if (scaled % den != 0)
            throw std::domain_error("exponent substitution leaves the quarter-integer lattice");
        r.terms_.emplace(scaled / den, c);
    }
    return r;
}

LaurentPoly LaurentPoly::mirror() const {
    LaurentPoly r(tag_);
    for (auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

BigComplex LaurentPoly::eval(const BigComplex& x) const {
    if (x == 0) throw std::domain_error("LaurentPoly::eval at 0");
    BigComplex s = 0;
    BigComplex lx = log(x);
    for (auto& [e, c] : terms_) {
        BigComplex p = exp(lx * (BigReal(e) / 4));
        s += p * BigReal(c);
    }
    return s;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    const char* v = tag_name(tag_);
    for (auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += std::to_string(c);
        if (e != 0) {
            out += "*";
            out += v;
            out += "^(";
            if (e % 4 == 0) out += std::to_string(e / 4);
            else if (e % 2 == 0) out += std::to_string(e / 2) + "/2";
            else out += std::to_string(e) + "/4";
            out += ")";
        }
    }
    return out;
}

}  // namespace knotlab::skein
