#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace knotlab::charvar {

// Letters of the free group on x, y: +1 = x, -1 = x^-1, +2 = y, -2 = y^-1.
using Letter = std::int8_t;

// Freely reduced word over {x, x^-1, y, y^-1}.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> letters);

    // "xYXy" or "x Y X y": lowercase = generator, uppercase = inverse.
    static GroupWord parse(const std::string& text);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    GroupWord inverse() const;
    GroupWord operator*(const GroupWord& o) const;  // concatenate + reduce
    // drop the first i and the last i letters (no reduction re-run needed)
    GroupWord strip(std::size_t i) const;

    // conjugation-invariant reduction (strip matching first/last pairs)
    GroupWord cyclically_reduced() const;

    bool operator==(const GroupWord& o) const { return letters_ == o.letters_; }
    std::string str() const;

private:
    std::vector<Letter> letters_;
    static void reduce(std::vector<Letter>& v);
};

}  // namespace knotlab::charvar
