#include "knotlab/trace_poly.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace knotlab::charvar {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("TracePoly overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("TracePoly overflow");
    return r;
}

}  // namespace

TracePoly TracePoly::constant(std::int64_t c) {
    TracePoly p;
    p.add_term(c, 0, 0);
    return p;
}

TracePoly TracePoly::xi() {
    TracePoly p;
    p.add_term(1, 1, 0);
    return p;
}

TracePoly TracePoly::eta() {
    TracePoly p;
    p.add_term(1, 0, 1);
    return p;
}

void TracePoly::add_term(std::int64_t c, int xp, int ep) {
    if (c == 0) return;
    Key k{xp, ep};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t TracePoly::coeff(int xp, int ep) const {
    auto it = terms_.find({xp, ep});
    return it == terms_.end() ? 0 : it->second;
}

TracePoly TracePoly::operator+(const TracePoly& o) const {
    TracePoly r = *this;
    for (auto& [k, c] : o.terms_) r.add_term(c, k.first, k.second);
    return r;
}

TracePoly TracePoly::operator-(const TracePoly& o) const {
    TracePoly r = *this;
    for (auto& [k, c] : o.terms_) r.add_term(-c, k.first, k.second);
    return r;
}

TracePoly TracePoly::operator-() const {
    TracePoly r;
    for (auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

TracePoly TracePoly::operator*(const TracePoly& o) const {
    TracePoly r;
    for (auto& [k1, c1] : terms_)
        for (auto& [k2, c2] : o.terms_)
            r.add_term(checked_mul(c1, c2), k1.first + k2.first, k1.second + k2.second);
    return r;
}

BigComplex TracePoly::eval(const BigComplex& xi, const BigComplex& eta) const {
    BigComplex s = 0;
    for (auto& [k, c] : terms_) {
        BigComplex t = BigReal(c);
        for (int i = 0; i < k.first; ++i) t *= xi;
        for (int i = 0; i < k.second; ++i) t *= eta;
        s += t;
    }
    return s;
}

std::string TracePoly::str() const {
    if (terms_.empty()) return "0";
    // eta-degree first, then xi-degree, both descending
    std::vector<std::pair<Key, std::int64_t>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](auto& a, auto& b) {
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first > b.first.first;
    });
    std::string out;
    for (auto& [k, c] : items) {
        std::int64_t cc = c;
        if (out.empty()) {
            if (cc < 0) {
                out += "-";
                cc = -cc;
            }
        } else {
            out += (cc < 0) ? " - " : " + ";
            if (cc < 0) cc = -cc;
        }
        std::string mono;
        if (k.first > 0) mono += (k.first == 1) ? "xi" : "xi^" + std::to_string(k.first);
        if (k.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += (k.second == 1) ? "eta" : "eta^" + std::to_string(k.second);
        }
        if (mono.empty())
            out += std::to_string(cc);
        else if (cc == 1)
            out += mono;
        else
            out += std::to_string(cc) + "*" + mono;
    }
    return out;
}

namespace {

// canonical key: lexicographically least among cyclic rotations of w and of
// its reversed inverse (trace is invariant under both)
std::string canonical_key(const std::vector<Letter>& w) {
    auto best_rotation = [](const std::vector<Letter>& v) {
        std::string best;
        for (std::size_t s = 0; s < v.size(); ++s) {
            std::string cand;
            cand.reserve(v.size());
            for (std::size_t i = 0; i < v.size(); ++i)
                cand += static_cast<char>('a' + 3 + v[(s + i) % v.size()]);
            if (best.empty() || cand < best) best = cand;
        }
        return best;
    };
    if (w.empty()) return "";
    std::vector<Letter> inv(w.rbegin(), w.rend());
    for (Letter& l : inv) l = -l;
    std::string a = best_rotation(w), b = best_rotation(inv);
    return std::min(a, b);
}

TracePoly trace_poly_impl(std::vector<Letter> w);

std::map<std::string, TracePoly>& memo() {
    static std::map<std::string, TracePoly> m;
    return m;
}
std::mutex memo_mutex;

TracePoly memoized(const std::vector<Letter>& w) {
    // free + cyclic reduction first; both are trace-invariant
    std::vector<Letter> r = GroupWord(w).cyclically_reduced().letters();
    std::string key = canonical_key(r);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo().find(key);
        if (it != memo().end()) return it->second;
    }
    TracePoly p = trace_poly_impl(r);
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo().emplace(std::move(key), p);
    return p;
}

// tr of a cyclically reduced word, by the identities
//   tr(AB) = tr(A)tr(B) - tr(A^-1 B),   tr(A^-1) = tr(A)
// with base cases tr(1) = 2, tr(x) = tr(y) = xi, tr(xy) = eta,
// tr(x y^-1) = xi^2 - eta.  Callers pass cyclically reduced words.
TracePoly trace_poly_impl(std::vector<Letter> w) {
    const std::size_t n = w.size();
    if (n == 0) return TracePoly::constant(2);
    if (n == 1) return TracePoly::xi();
    if (n == 2) {
        Letter a = w[0], b = w[1];
        if (a == b)  // tr(g^2) = xi^2 - 2
            return TracePoly::xi() * TracePoly::xi() - TracePoly::constant(2);
        if (std::abs(a) != std::abs(b)) {
            // xy-type if signs agree (or both inverted), x y^-1-type otherwise
            bool same_sign = (a > 0) == (b > 0);
            if (same_sign) return TracePoly::eta();
            return TracePoly::xi() * TracePoly::xi() - TracePoly::eta();
        }
        // a == -b cannot survive cyclic reduction
    }

    // remove an inverse letter: tr(A g^-1) = xi tr(A) - tr(g A)
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] < 0) {
            std::vector<Letter> rot(w.begin() + i + 1, w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + i + 1);  // inverse letter last
            std::vector<Letter> A(rot.begin(), rot.end() - 1);
            Letter g = static_cast<Letter>(-rot.back());
            std::vector<Letter> gA;
            gA.push_back(g);
            gA.insert(gA.end(), A.begin(), A.end());
            return TracePoly::xi() * memoized(A) - memoized(gA);
        }
    }

    // positive word: split a doubled letter, tr(ggv) = xi tr(gv) - tr(v)
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] == w[(i + 1) % n]) {
            std::vector<Letter> rot;
            for (std::size_t k = 0; k < n; ++k) rot.push_back(w[(i + k) % n]);
            std::vector<Letter> gv(rot.begin() + 1, rot.end());
            std::vector<Letter> v(rot.begin() + 2, rot.end());
            return TracePoly::xi() * memoized(gv) - memoized(v);
        }
    }

    // cyclically alternating positive word = (xy)^k up to rotation:
    // Chebyshev-style recursion tr(h^k) = eta tr(h^{k-1}) - tr(h^{k-2})
    if (n % 2 != 0) throw std::logic_error("unreachable word shape in trace_poly");
    std::size_t k = n / 2;
    TracePoly t0 = TracePoly::constant(2), t1 = TracePoly::eta();
    for (std::size_t i = 2; i <= k; ++i) {
        TracePoly t2 = TracePoly::eta() * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    return (k == 0) ? t0 : t1;
}

}  // namespace

TracePoly trace_poly(const GroupWord& w) { return memoized(w.letters()); }

TwoBridgePresentation TwoBridgePresentation::fig8() {
    return {GroupWord::parse("xYXy"), GroupWord::parse("xYxyXXyxYX")};
}

TwoBridgePresentation TwoBridgePresentation::trefoil() {
    return {GroupWord::parse("xy"), GroupWord::parse("yxxyXXXX")};
}

TwoBridgePresentation TwoBridgePresentation::cinquefoil() {
    return {GroupWord::parse("xyxy"), GroupWord::parse("yxyxYxyxyXXXXXXX")};
}

TracePoly riley_F(const TwoBridgePresentation& p) {
    const auto& om = p.omega.letters();
    const std::size_t len = om.size();
    if (len == 0 || len % 2 != 0)
        throw std::invalid_argument("omega must have even positive length");
    for (std::size_t i = 0; i < len; ++i) {
        bool want_x = (i % 2 == 0);
        if ((std::abs(om[i]) == 1) != want_x)
            throw std::invalid_argument("omega must alternate x- and y-letters");
    }
    const std::size_t k = len / 2;
    TracePoly F;
    for (std::size_t i = 0; i <= k; ++i) {
        TracePoly Pi = (2 * i == len) ? TracePoly::constant(1) : trace_poly(p.omega.strip(i));
        F = (i % 2 == 0) ? F + Pi : F - Pi;
    }
    return F;
}

TracePoly char_variety_poly(const TwoBridgePresentation& p) {
    TracePoly abelian = TracePoly::constant(2) + TracePoly::eta() - TracePoly::xi() * TracePoly::xi();
    return abelian * riley_F(p);
}

}  // namespace knotlab::charvar
