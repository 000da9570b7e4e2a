#include "knotlab/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace knotlab::skein {

namespace {

// slot roles implied by the sign convention: under-in=0, under-out=2,
// over-in/out = (3,1) for positive crossings, (1,3) for negative ones.
void heads_and_tails(const Crossing& c, int heads[2], int tails[2]) {
    heads[0] = c.arcs[0];
    tails[0] = c.arcs[2];
    if (c.sign > 0) {
        heads[1] = c.arcs[3];
        tails[1] = c.arcs[1];
    } else {
        heads[1] = c.arcs[1];
        tails[1] = c.arcs[3];
    }
}

}  // namespace

Diagram parse_pd(const std::string& text) {
    Diagram d;
    std::istringstream in(text);
    std::string tok;
    int next_id = 0;
    while (in >> tok) {
        if (tok == "O") {
            ++d.free_loops;
            continue;
        }
        if (tok.size() < 10 || tok[0] != 'X' || (tok[1] != '+' && tok[1] != '-') ||
            tok[2] != '[' || tok.back() != ']')
            throw std::invalid_argument("malformed PD token: " + tok);
        Crossing c;
        c.id = next_id++;
        c.sign = (tok[1] == '+') ? +1 : -1;
        std::string body = tok.substr(3, tok.size() - 4);
        std::replace(body.begin(), body.end(), ',', ' ');
        std::istringstream nums(body);
        for (int i = 0; i < 4; ++i) {
            if (!(nums >> c.arcs[i]) || c.arcs[i] <= 0)
                throw std::invalid_argument("malformed PD token: " + tok);
        }
        std::string rest;
        if (nums >> rest) throw std::invalid_argument("malformed PD token: " + tok);
        d.crossings.push_back(c);
    }

    // empty text = round unknot
    if (d.crossings.empty() && d.free_loops == 0 && !text.empty()) {
        // tokens consumed but none parsed cannot happen; empty-ish input only
    }
    if (d.crossings.empty() && d.free_loops == 0) d.free_loops = 1;

    std::map<int, int> head_count, tail_count;
    for (const auto& c : d.crossings) {
        int heads[2], tails[2];
        heads_and_tails(c, heads, tails);
        for (int h : heads) ++head_count[h];
        for (int t : tails) ++tail_count[t];
    }
    std::set<int> labels;
    for (auto& [a, n] : head_count) labels.insert(a);
    for (auto& [a, n] : tail_count) labels.insert(a);
    for (int a : labels) {
        int uses = head_count[a] + tail_count[a];
        if (uses != 2)
            throw std::invalid_argument("arc " + std::to_string(a) + " used " +
                                        std::to_string(uses) + " times (want 2)");
        if (head_count[a] != 1 || tail_count[a] != 1)
            throw std::invalid_argument("arc " + std::to_string(a) +
                                        " orientation inconsistent with crossing signs");
    }
    d.arc_labels.assign(labels.begin(), labels.end());
    return d;
}

int writhe(const Diagram& d) {
    int w = 0;
    for (const auto& c : d.crossings) w += c.sign;
    return w;
}

int component_count(const Diagram& d) {
    std::map<int, int> next;  // incoming arc -> outgoing arc at the same strand
    for (const auto& c : d.crossings) {
        next[c.arcs[0]] = c.arcs[2];
        if (c.sign > 0)
            next[c.arcs[3]] = c.arcs[1];
        else
            next[c.arcs[1]] = c.arcs[3];
    }
    std::set<int> seen;
    int comps = d.free_loops;
    for (auto& [a0, unused] : next) {
        if (seen.count(a0)) continue;
        ++comps;
        int a = a0;
        while (!seen.count(a)) {
            seen.insert(a);
            a = next.at(a);
        }
    }
    return comps;
}

Diagram mirror_diagram(const Diagram& d) {
    Diagram m;
    m.free_loops = d.free_loops;
    for (const auto& c : d.crossings) {
        Crossing f;
        f.id = c.id;
        if (c.sign > 0) {
            f.sign = -1;  // X+[a,b,c,d] -> X-[d,a,b,c]
            f.arcs[0] = c.arcs[3];
            f.arcs[1] = c.arcs[0];
            f.arcs[2] = c.arcs[1];
            f.arcs[3] = c.arcs[2];
        } else {
            f.sign = +1;  // X-[a,b,c,d] -> X+[b,c,d,a]
            f.arcs[0] = c.arcs[1];
            f.arcs[1] = c.arcs[2];
            f.arcs[2] = c.arcs[3];
            f.arcs[3] = c.arcs[0];
        }
        m.crossings.push_back(f);
    }
    std::set<int> labels;
    for (const auto& c : m.crossings)
        for (int a : c.arcs) labels.insert(a);
    m.arc_labels.assign(labels.begin(), labels.end());
    return m;
}

std::string to_pd_string(const Diagram& d) {
    std::string out;
    for (const auto& c : d.crossings) {
        if (!out.empty()) out += " ";
        out += (c.sign > 0) ? "X+[" : "X-[";
        for (int i = 0; i < 4; ++i) {
            out += std::to_string(c.arcs[i]);
            out += (i < 3) ? "," : "]";
        }
    }
    for (int i = 0; i < d.free_loops; ++i) {
        if (!out.empty()) out += " ";
        out += "O";
    }
    return out;
}

}  // namespace knotlab::skein
