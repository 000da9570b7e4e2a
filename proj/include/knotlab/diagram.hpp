#pragma once

#include <string>
#include <vector>

namespace knotlab::skein {

// One crossing of a planar-diagram code.  Arc labels are listed
// counterclockwise starting from the incoming under-strand, so the
// under-strand runs arcs[0] -> arcs[2].  The over-strand occupies arcs[1] and
// arcs[3]; sign +1 means it is oriented arcs[3] -> arcs[1] (rotating the
// over arrow counterclockwise by 90 degrees gives the under arrow), sign -1
// the reverse.
struct Crossing {
    int id = 0;
    int sign = +1;
    int arcs[4] = {0, 0, 0, 0};
};

struct Diagram {
    std::vector<Crossing> crossings;
    std::vector<int> arc_labels;   // sorted, each label used exactly twice
    int free_loops = 0;            // crossingless circle components ('O')

    int crossing_count() const { return static_cast<int>(crossings.size()); }
};

// Text format: whitespace-separated tokens, each `X+[a,b,c,d]`, `X-[a,b,c,d]`
// or `O` (a crossingless circle).  The empty string is the round unknot.
// Throws std::invalid_argument on malformed tokens, arcs not used exactly
// twice, or orientations inconsistent with the crossing signs.
Diagram parse_pd(const std::string& text);

// Sum of crossing signs.
int writhe(const Diagram& d);

// Number of link components (follows arcs through crossings).
int component_count(const Diagram& d);

// All crossings reversed (mirror image).
Diagram mirror_diagram(const Diagram& d);

std::string to_pd_string(const Diagram& d);

}  // namespace knotlab::skein
