#include "knotlab/bracket.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace knotlab::skein {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

LaurentPoly kauffman_bracket(const Diagram& d, int crossing_limit) {
    const int n = d.crossing_count();
    if (n > crossing_limit)
        throw std::length_error("diagram has " + std::to_string(n) +
                                " crossings, state-sum limit is " +
                                std::to_string(crossing_limit));

    std::map<int, int> arc_index;
    for (std::size_t i = 0; i < d.arc_labels.size(); ++i) arc_index[d.arc_labels[i]] = static_cast<int>(i);
    const int na = static_cast<int>(d.arc_labels.size());

    // accumulate state multiplicities per (A-count minus B-count, loop count)
    std::map<std::pair<int, int>, long long> cells;
    const std::uint64_t nstates = 1ull << n;
    for (std::uint64_t state = 0; state < nstates; ++state) {
        UnionFind uf(na);
        int a_minus_b = 0;
        for (int i = 0; i < n; ++i) {
            const auto& c = d.crossings[i];
            int s0 = arc_index[c.arcs[0]], s1 = arc_index[c.arcs[1]];
            int s2 = arc_index[c.arcs[2]], s3 = arc_index[c.arcs[3]];
            if ((state >> i & 1) == 0) {  // A-smoothing: (0,1),(2,3)
                ++a_minus_b;
                uf.unite(s0, s1);
                uf.unite(s2, s3);
            } else {  // B-smoothing: (1,2),(3,0)
                --a_minus_b;
                uf.unite(s1, s2);
                uf.unite(s3, s0);
            }
        }
        std::set<int> roots;
        for (int i = 0; i < na; ++i) roots.insert(uf.find(i));
        int nu = static_cast<int>(roots.size()) + d.free_loops;
        ++cells[{a_minus_b, nu}];
    }

    LaurentPoly loop_poly(VarTag::A);  // -A^2 - A^-2
    loop_poly.add_term(-1, 8);
    loop_poly.add_term(-1, -8);

    if (n == 0) {
        // nu = free_loops (>= 1 for the round unknot)
        return loop_poly.pow(static_cast<unsigned>(d.free_loops - 1));
    }

    LaurentPoly total(VarTag::A);
    std::map<int, LaurentPoly> loop_pows;
    for (auto& [key, mult] : cells) {
        auto [diff, nu] = key;
        auto it = loop_pows.find(nu);
        if (it == loop_pows.end())
            it = loop_pows.emplace(nu, loop_poly.pow(static_cast<unsigned>(nu - 1))).first;
        total = total + LaurentPoly::term(mult, 4 * diff, VarTag::A) * it->second;
    }
    return total;
}

LaurentPoly jones_V(const Diagram& d, int crossing_limit) {
    LaurentPoly br = kauffman_bracket(d, crossing_limit);
    int w = writhe(d);
    // (-A^3)^{-w}: exponent -3w, sign (-1)^w
    LaurentPoly norm = LaurentPoly::term((w % 2 == 0) ? 1 : -1, -12 * w, VarTag::A);
    LaurentPoly normalized = norm * br;
    return normalized.map_exponents(-1, 4, VarTag::t);  // A = t^{-1/4}
}

LaurentPoly jones_J2(const Diagram& d, int crossing_limit) {
    LaurentPoly V = jones_V(d, crossing_limit);
    int comps = component_count(d);
    LaurentPoly J = V.map_exponents(-1, 1, VarTag::q);  // t -> q^-1
    if (comps % 2 == 0) J = -J;
    return J;
}

Diagram smooth_crossing(const Diagram& d, int k) {
    if (k < 0 || k >= d.crossing_count()) throw std::out_of_range("crossing index");
    const Crossing& c = d.crossings[k];
    // oriented reconnection: (a,b),(d,c) for +, (a,d),(b,c) for -
    std::map<int, int> glue;
    auto link = [&](int x, int y) {
        glue[x] = y;
        glue[y] = x;
    };
    // resolve via union-find over labels
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
        parent.emplace(x, x);
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    if (c.sign > 0) {
        unite(c.arcs[0], c.arcs[1]);
        unite(c.arcs[3], c.arcs[2]);
    } else {
        unite(c.arcs[0], c.arcs[3]);
        unite(c.arcs[1], c.arcs[2]);
    }

    Diagram out;
    out.free_loops = d.free_loops;
    std::set<int> used;
    for (int i = 0; i < d.crossing_count(); ++i) {
        if (i == k) continue;
        Crossing cc = d.crossings[i];
        for (int j = 0; j < 4; ++j) {
            cc.arcs[j] = find(cc.arcs[j]);
            used.insert(cc.arcs[j]);
        }
        out.crossings.push_back(cc);
    }
    // glued pairs that touch no remaining crossing close into free circles
    std::set<int> loop_roots;
    for (int slot : {0, 1, 2, 3}) {
        int r = find(c.arcs[slot]);
        if (!used.count(r)) loop_roots.insert(r);
    }
    out.free_loops += static_cast<int>(loop_roots.size());
    return parse_pd(to_pd_string(out));  // revalidates and fills arc_labels
}

Diagram flip_crossing(const Diagram& d, int k) {
    if (k < 0 || k >= d.crossing_count()) throw std::out_of_range("crossing index");
    Diagram out = d;
    Crossing& c = out.crossings[k];
    Crossing f = c;
    if (c.sign > 0) {
        f.sign = -1;
        f.arcs[0] = c.arcs[3];
        f.arcs[1] = c.arcs[0];
        f.arcs[2] = c.arcs[1];
        f.arcs[3] = c.arcs[2];
    } else {
        f.sign = +1;
        f.arcs[0] = c.arcs[1];
        f.arcs[1] = c.arcs[2];
        f.arcs[2] = c.arcs[3];
        f.arcs[3] = c.arcs[0];
    }
    c = f;
    return out;
}

Diagram paper_trefoil() {
    return parse_pd("X+[4,2,5,1] X+[6,4,1,3] X+[2,6,3,5]");
}

Diagram paper_fig8() {
    return parse_pd("X+[4,2,5,1] X+[8,6,1,5] X-[6,3,7,4] X-[2,7,3,8]");
}

}  // namespace knotlab::skein
