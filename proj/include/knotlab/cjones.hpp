#pragma once

#include "knotlab/bigfloat.hpp"

#include <vector>

namespace knotlab::cjones {

struct KnotTag {
    enum Kind { Fig8, Trefoil, Torus } kind = Fig8;
    int a = 0, b = 0;  // torus parameters, coprime and > 1

    static KnotTag fig8() { return {Fig8, 0, 0}; }
    static KnotTag trefoil() { return {Trefoil, 0, 0}; }
    static KnotTag torus(int a, int b);
    bool operator==(const KnotTag& o) const { return kind == o.kind && a == o.a && b == o.b; }
};

struct JSequence {
    KnotTag knot;
    BigComplex theta;
    std::vector<std::pair<int, BigComplex>> values;  // (N, J_N), N strictly increasing
};

// J_N(E;q) = sum_{k=0}^{N-1} prod_{j=1}^{k} (q^{(N-j)/2}-q^{-(N-j)/2})(q^{(N+j)/2}-q^{-(N+j)/2})
// Half powers use the principal log of q.
BigComplex cjones_fig8(int N, const BigComplex& q);

// J_N(T;q) = q^{1-N} sum_{k=0}^{N-1} q^{-kN} prod_{j=1}^{k} (1-q^{j-N})
BigComplex cjones_trefoil(int N, const BigComplex& q);

// J_N(K; exp(theta/N)) with the working precision raised to at least
// 50 + 0.7*N*max(0, Re theta)/ln 10 digits, so that the e^{O(N)} intermediate
// terms keep full relative precision through the cancellation.  Half powers
// are exp(x*theta/(2N)) directly (no branch ambiguity).
BigComplex eval_at_theta(const KnotTag& knot, int N, const BigComplex& theta);

unsigned required_digits(int N, const BigComplex& theta, unsigned base = 0);

JSequence jsequence(const KnotTag& knot, const BigComplex& theta, int n_min, int n_max,
                    int stride = 1);

}  // namespace knotlab::cjones
