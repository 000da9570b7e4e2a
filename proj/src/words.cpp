#include "knotlab/words.hpp"

#include <stdexcept>

namespace knotlab::charvar {

void GroupWord::reduce(std::vector<Letter>& v) {
    std::vector<Letter> out;
    out.reserve(v.size());
    for (Letter l : v) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    v = std::move(out);
}

GroupWord::GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
    reduce(letters_);
}

GroupWord GroupWord::parse(const std::string& text) {
    std::vector<Letter> v;
    for (char ch : text) {
        switch (ch) {
            case 'x': v.push_back(+1); break;
            case 'X': v.push_back(-1); break;
            case 'y': v.push_back(+2); break;
            case 'Y': v.push_back(-2); break;
            case ' ':
            case '\t': break;
            default: throw std::invalid_argument(std::string("bad word character: ") + ch);
        }
    }
    return GroupWord(std::move(v));
}

GroupWord GroupWord::inverse() const {
    std::vector<Letter> v(letters_.rbegin(), letters_.rend());
    for (Letter& l : v) l = -l;
    GroupWord w;
    w.letters_ = std::move(v);  // reversal of a reduced word is reduced
    return w;
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
    std::vector<Letter> v = letters_;
    v.insert(v.end(), o.letters_.begin(), o.letters_.end());
    return GroupWord(std::move(v));
}

GroupWord GroupWord::strip(std::size_t i) const {
    if (2 * i > letters_.size()) throw std::out_of_range("strip past word length");
    GroupWord w;
    w.letters_.assign(letters_.begin() + i, letters_.end() - i);
    reduce(w.letters_);
    return w;
}

GroupWord GroupWord::cyclically_reduced() const {
    std::vector<Letter> v = letters_;
    std::size_t lo = 0, hi = v.size();
    while (hi - lo >= 2 && v[lo] == -v[hi - 1]) {
        ++lo;
        --hi;
    }
    GroupWord w;
    w.letters_.assign(v.begin() + lo, v.begin() + hi);
    return w;
}

std::string GroupWord::str() const {
    std::string s;
    for (Letter l : letters_) {
        switch (l) {
            case +1: s += 'x'; break;
            case -1: s += 'X'; break;
            case +2: s += 'y'; break;
            case -2: s += 'Y'; break;
        }
    }
    return s;
}

}  // namespace knotlab::charvar
